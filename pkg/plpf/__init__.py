from plpf.configuration.config import Config
from plpf.configuration.logging_config import configure_logging
from plpf.container import Container


def create_app(test_config: dict | None = None) -> Container:
    """
    Build the dependency container used by the CLI: configure logging, create the
    service singletons and wire them into the command module.
    test_config may override LOG_LEVEL.
    """
    level = (test_config or {}).get("LOG_LEVEL") or Config.LOG_LEVEL
    configure_logging(level)

    container = Container()
    container.wire(modules=["plpf.cli"])
    return container
