"""
Centralized logging configuration using dictConfig,
plus decorator to auto-log method/function calls.
"""
import logging
import logging.config

LOGGING = {
  "version": 1,
  "disable_existing_loggers": False,   # ← critical!
  "formatters": {
    "default": {"format": "%(asctime)s %(levelname)-5s %(name)s: %(message)s", "datefmt": "%H:%M:%S"}
  },
  "handlers": {
    "console": {
      "class": "logging.StreamHandler",
      "formatter": "default",
      "stream": "ext://sys.stderr",
      "level": "DEBUG"
    }
  },
  "loggers": {
    "plpf": {
      "level": "INFO",
      "propagate": True
    },
    "plpf.cli": {
      "level": "NOTSET",
      "propagate": True    # so after handling, it passes to "plpf"
    },
    "plpf.services": {
        "level": "NOTSET",
        "propagate": True
    },
    "plpf.util": {
        "level": "NOTSET",
        "propagate": True
    },
    "joblib": {
        "level": "WARNING"
    }
  },
  "root": {
    "level": "WARNING",
    "handlers": ["console"]
  }
}

def configure_logging(level: str = "INFO"):
    config = dict(LOGGING)
    config["loggers"] = dict(LOGGING["loggers"])
    config["loggers"]["plpf"] = {**LOGGING["loggers"]["plpf"], "level": level.upper()}
    logging.config.dictConfig(config)
