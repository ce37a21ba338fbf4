import logging
from functools import wraps
from typing import Union, Callable, Type


def log_calls(layer: str):
    """
    Decorator factory that logs method and function calls for a given logging layer.

    It wraps all public, class, and static methods of a class, as well as standalone functions.

    Args:
        layer (str): The logger name to use (e.g., "plpf.cli", "plpf.services").

    Returns:
        A decorator that can be applied to classes or functions.
    """
    def decorator(obj: Union[Type, Callable]) -> Union[Type, Callable]:
        if isinstance(obj, type):
            cls_name = obj.__name__
            for name, attr in list(vars(obj).items()):
                # skip private and dunder methods (including __init__)
                if name.startswith("_"):
                    continue

                if isinstance(attr, staticmethod):
                    wrapped = _wrap(attr.__func__, layer, f"{cls_name}.{name}")
                    setattr(obj, name, staticmethod(wrapped))

                elif isinstance(attr, classmethod):
                    wrapped = _wrap(attr.__func__, layer, f"{cls_name}.{name}")
                    setattr(obj, name, classmethod(wrapped))

                elif callable(attr):
                    setattr(obj, name, _wrap(attr, layer, f"{cls_name}.{name}"))

            return obj

        if callable(obj):
            return _wrap(obj, layer, obj.__name__)

        return obj

    return decorator


def _wrap(func: Callable, layer: str, full_name: str) -> Callable:
    """
    Wrap a function or method to log on entry and on failure.

    Args:
        func (Callable): The function to wrap (unbound for methods).
        layer (str): Logger name for emitting logs.
        full_name (str): Name shown in the log line, e.g. "GeometryServiceImpl.sample_plp".

    Returns:
        A wrapped callable that logs calls and re-raises exceptions.
    """
    logger = logging.getLogger(layer)
    level = get_log_level(layer)

    @wraps(func)
    def wrapped(*args, **kwargs):
        if logger.isEnabledFor(level):
            logger.log(level, "%s() called.", full_name)
        try:
            return func(*args, **kwargs)
        except Exception as e:
            logger.error("%s() failed with %s: %s", full_name, type(e).__name__, e)
            raise

    return wrapped


def get_log_level(layer: str) -> int:
    """
    Determine default logging level based on layer name.

    INFO if "cli" or "experiment" appears in layer, otherwise DEBUG.
    Sampling and analytic services are called once per Monte Carlo trial, so they log at DEBUG.
    """
    ll = layer.lower()
    if "cli" in ll or "experiment" in ll:
        return logging.INFO
    return logging.DEBUG
