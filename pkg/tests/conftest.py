import pytest

from rightlcm.sampling import SampleSpec
from rightlcm.systems import (
    free_shift,
    gauss_system,
    toeplitz_shift,
    trivial_over_abelian,
    trivial_over_free,
    z_times,
)


@pytest.fixture(scope="session")
def z23():
    return z_times(2, 3)


@pytest.fixture(scope="session")
def z_signed():
    return z_times(-1, 2, 3)


@pytest.fixture(scope="session")
def gauss():
    return gauss_system()


@pytest.fixture(scope="session")
def t2_shift():
    return toeplitz_shift(2)


@pytest.fixture(scope="session")
def f2_shift():
    return free_shift(2, 2)


@pytest.fixture(scope="session")
def f2_trivial():
    return trivial_over_free(2)


@pytest.fixture(scope="session")
def n2_trivial():
    return trivial_over_abelian(2)


@pytest.fixture(scope="session")
def all_systems(z23, z_signed, gauss, t2_shift, f2_shift):
    return {
        "Z|2,3>": z23,
        "Z|-1,2,3>": z_signed,
        "Zi|1+i,3>": gauss,
        "T2-shift": t2_shift,
        "F2-shift": f2_shift,
    }


@pytest.fixture
def small_spec():
    return SampleSpec(p_radius=2, g_count=16, pair_count=50, vector_count=8, seed=11)
