"""
Pytest Configuration and Fixtures
Provides shared test fixtures and configuration for the test suite.
"""

import logging
import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from lifted_ctl.bench.generators import gen_mn, gen_vending_machine
from lifted_ctl.logic.ctl import parse_formula
from lifted_ctl.utils.config import VENDING_MODEL_PATH
from lifted_ctl.utils.logging_config import LAYER_LOGGERS

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def vending():
    """Vending machine FTS with features c and f."""
    return gen_vending_machine()


@pytest.fixture
def vending_space(vending):
    """All four vending machine configurations."""
    return vending.space


@pytest.fixture
def phi1():
    """Every path eventually reaches r."""
    return parse_formula("A[!r U r]")


@pytest.fixture
def phi2():
    """Some path eventually reaches r."""
    return parse_formula("E[!r U r]")


@pytest.fixture
def mn():
    """Factory for the M_n tree family."""
    return gen_mn


@pytest.fixture
def vending_model_path():
    """Path of the bundled vending machine model file."""
    return VENDING_MODEL_PATH


@pytest.fixture
def elevator_model_path():
    """Model with a restricted configuration space and two initial states."""
    return FIXTURES_DIR / "elevator.fts"


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Undo handlers installed by CLI runs so later tests log normally."""
    yield
    root = logging.getLogger('lifted_ctl')
    root.handlers.clear()
    root.propagate = True
    root.setLevel(logging.NOTSET)
    for name in LAYER_LOGGERS:
        logging.getLogger(name).setLevel(logging.NOTSET)


# Pytest configuration
def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: mark test as a unit test"
    )
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "slow: mark test as slow running"
    )
