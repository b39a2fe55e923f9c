import os
from typing import Any

ENVVAR_PREFIX = "TORSION_GALOIS"


class DefaultConfig:
    PROBE_BOUND = 100_000
    NUMERIC_MAX_ITERATIONS = 1000
    NUMERIC_STEP_TOLERANCE = 1e-12
    NUMERIC_RESIDUAL_TOLERANCE = 1e-8
    THREADS = os.cpu_count() or 1
    LOG_LEVEL = "WARNING"


class Config(dict):
    def from_object(self, obj: object) -> None:
        for key in dir(obj):
            if key.isupper():
                self[key] = getattr(obj, key)

    @property
    def root_options(self) -> dict[str, Any]:
        """Keyword arguments of `numeric_roots`."""
        return {
            "max_iterations": self["NUMERIC_MAX_ITERATIONS"],
            "step_tolerance": self["NUMERIC_STEP_TOLERANCE"],
            "residual_tolerance": self["NUMERIC_RESIDUAL_TOLERANCE"],
        }


def load_config(**overrides: Any) -> Config:
    """Defaults, then explicit overrides (None values are ignored)."""
    config = Config()
    config.from_object(DefaultConfig)
    config.update({key.upper(): value for key, value in overrides.items() if value is not None})
    if config["THREADS"] < 1:
        config["THREADS"] = 1
    return config


LOGGING_CONFIG: dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "default": {"format": "%(levelname)s %(name)s: %(message)s"},
    },
    "handlers": {
        "default": {
            "class": "logging.StreamHandler",
            "formatter": "default",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        "torsion_galois": {"handlers": ["default"], "level": "WARNING", "propagate": False},
    },
}
