import pytest

from hfpss.engine import compute
from hfpss.targets import Target


@pytest.fixture(scope="session")
def computed_all():
    """Full pipeline results for all five targets on their default windows."""
    return {t: compute(t) for t in Target}


@pytest.fixture(scope="session")
def computed_c2(computed_all):
    return computed_all[Target.C2]


@pytest.fixture(scope="session")
def computed_c2_v0(computed_all):
    return computed_all[Target.C2_V0]


@pytest.fixture(scope="session")
def computed_c6(computed_all):
    return computed_all[Target.C6]


@pytest.fixture(scope="session")
def computed_c6_v0(computed_all):
    return computed_all[Target.C6_V0]


@pytest.fixture(scope="session")
def computed_c6_y(computed_all):
    return computed_all[Target.C6_Y]
