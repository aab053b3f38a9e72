import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lamina import bundled_database_path, dimensionless, load_materials
from lamina.material import PolarParameters


@pytest.fixture(scope="session")
def records():
    return load_materials(bundled_database_path())


@pytest.fixture(scope="session")
def tabulated_materials():
    """Dimensionless materials built from the tabulated polar moduli."""
    from reference_data import POLAR_MODULI

    return [dimensionless(PolarParameters(*row)) for row in POLAR_MODULI]
