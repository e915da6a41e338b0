import numpy as np
import pytest
from hypothesis import settings

from statediscrim import DiscriminationProblem, random_density

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def random_hermitian(dim, rng):
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (a + a.conj().T)


def random_psd(dim, rank, rng):
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    return g @ g.conj().T


def pure(psi):
    psi = np.asarray(psi, dtype=complex)
    psi = psi / np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_problem(seed, dim_min=2, dim_max=6):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(dim_min, dim_max + 1))
    r1, r2 = rng.integers(1, dim + 1, size=2)
    s1, s2 = rng.integers(0, 2**32, size=2)
    return DiscriminationProblem(
        random_density(dim, int(r1), int(s1)),
        random_density(dim, int(r2), int(s2)),
        float(rng.uniform(0.01, 0.99)),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
