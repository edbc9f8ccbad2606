import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from superbgg.algebra import build_algebra, build_parabolic, wt
from superbgg.modules import build_irrep


@pytest.fixture(scope="session")
def gl21():
    return build_algebra("gl", 2, 1)


@pytest.fixture(scope="session")
def gl12():
    return build_algebra("gl", 1, 2)


@pytest.fixture(scope="session")
def osp12():
    return build_algebra("osp", 1, 1)


@pytest.fixture(scope="session")
def osp46():
    return build_algebra("osp", 4, 3)


@pytest.fixture(scope="session")
def gl21_borel(gl21):
    return build_parabolic(gl21, [])


@pytest.fixture(scope="session")
def gl12_borel(gl12):
    return build_parabolic(gl12, [])


@pytest.fixture(scope="session")
def osp12_borel(osp12):
    return build_parabolic(osp12, [])


@pytest.fixture(scope="session")
def osp46_sec7(osp46):
    """Maximal parabolic at the first node: l = cosp(2|6)."""
    return build_parabolic(osp46, [1, 2, 3, 4])


@pytest.fixture(scope="session")
def gl21_natural(gl21):
    return build_irrep(gl21, wt(1, 0, 0))


@pytest.fixture(scope="session")
def gl12_natural(gl12):
    return build_irrep(gl12, wt(1, 0, 0))


@pytest.fixture(scope="session")
def osp46_natural(osp46):
    return build_irrep(osp46, wt(1, 0, 0, 0, 0))
