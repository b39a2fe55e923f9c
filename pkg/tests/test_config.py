from tests import config
from torsion_galois.config import LOGGING_CONFIG, Config, DefaultConfig, load_config


def test_config():
    c = Config()
    c.from_object(config)
    assert c["PROBE_BOUND"] == 2000
    assert c["THREADS"] == 2
    assert "lowercase_is_ignored" not in c.keys()


def test_load_config():
    c = load_config(threads=None, log_level="debug")
    assert c["PROBE_BOUND"] == DefaultConfig.PROBE_BOUND
    assert c["LOG_LEVEL"] == "debug"
    assert c["THREADS"] == DefaultConfig.THREADS

    assert load_config(threads=0)["THREADS"] == 1
    assert load_config(probe_bound=42)["PROBE_BOUND"] == 42


def test_root_options():
    c = load_config(numeric_max_iterations=5, numeric_step_tolerance=None)
    assert c.root_options == {
        "max_iterations": 5,
        "step_tolerance": DefaultConfig.NUMERIC_STEP_TOLERANCE,
        "residual_tolerance": DefaultConfig.NUMERIC_RESIDUAL_TOLERANCE,
    }


def test_logging_config():
    assert LOGGING_CONFIG["loggers"]["torsion_galois"]["handlers"] == ["default"]
    assert LOGGING_CONFIG["handlers"]["default"]["stream"] == "ext://sys.stderr"
