"""Test configuration: project import path and shared operating points / data sets."""

import sys
from pathlib import Path

import pytest

# Insert the project root into sys.path before any project imports.
PROJECT_ROOT = Path(__file__).resolve().parents[1]
project_root_str = str(PROJECT_ROOT)
if project_root_str not in sys.path:
    sys.path.insert(0, project_root_str)

from chfkit.dataset import synth_generate  # noqa: E402
from chfkit.types import OperatingPoint  # noqa: E402


@pytest.fixture
def reference_op() -> OperatingPoint:
    """Mid-envelope point used for hand-checked values (7 MPa is a table node)."""

    return OperatingPoint(d_he=0.0152, length=2.0, pressure=7.0, mass_flux=2000.0, dh_sub_in=100.0)


@pytest.fixture(scope="session")
def synthetic_577():
    return synth_generate(seed=7, n=577)


@pytest.fixture(scope="session")
def synthetic_small():
    return synth_generate(seed=3, n=60)
