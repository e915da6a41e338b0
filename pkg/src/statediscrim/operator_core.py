"""Dense Hermitian operator utilities.

Operators are plain ``numpy`` complex arrays. Functions that accept a
"Hermitian operator" symmetrize their input as ``(M + M^dagger)/2`` after
checking it is Hermitian to within tolerance, so downstream code never sees
asymmetric round-off.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, NotHermitian, NotPositiveSemidefinite, TraceNotOne

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "SpectralDecomposition",
    "as_hermitian",
    "validate_density",
    "spectral_decompose",
    "trace_norm",
    "psd_sqrt",
    "random_density",
    "random_pure",
]


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used by validation and post-condition checks.

    ``psd`` is the magnitude of the eigenvalue floor: eigenvalues down to
    ``-psd`` are accepted as round-off. ``reconstruction`` is a Frobenius
    error relative to the norm of the input.
    """

    hermiticity: float = 1e-10
    trace: float = 1e-10
    psd: float = 1e-10
    reconstruction: float = 1e-10


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending eigenvalues and matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def projector(self, mask: np.ndarray) -> np.ndarray:
        """Orthogonal projector onto the eigenvectors selected by ``mask``."""
        v = self.eigenvectors[:, mask]
        return v @ v.conj().T


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_hermitian(m, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Check ``m`` is square and Hermitian, and return its symmetrized copy."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite entries")
    deviation = float(np.max(np.abs(m - m.conj().T)))
    if deviation > tol.hermiticity:
        raise NotHermitian(
            f"hermiticity violated: max |M - M^dagger| = {deviation:.3e} > {tol.hermiticity:.1e}"
        )
    return 0.5 * (m + m.conj().T)


def validate_density(m, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate a density matrix and return it symmetrized and read-only.

    Raises
    ------
    NotHermitian, TraceNotOne, NotPositiveSemidefinite
        Naming the violated invariant and the measured deviation.
    """
    h = as_hermitian(m, tol)
    tr = float(np.trace(h).real)
    if abs(tr - 1.0) > tol.trace:
        raise TraceNotOne(f"trace is {tr:.12g}, deviates from 1 by {abs(tr - 1.0):.3e}")
    lam_min = float(_eigvalsh(h)[0])
    if lam_min < -tol.psd:
        raise NotPositiveSemidefinite(
            f"minimum eigenvalue {lam_min:.3e} is below -{tol.psd:.1e}"
        )
    return _frozen(h)


def _eigvalsh(h: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc


def spectral_decompose(h, tol: Tolerances = DEFAULT_TOL) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian operator.

    Eigenvalues come out ascending. Each eigenvector is rephased so that its
    largest-magnitude component (first one on ties) is real and positive.
    """
    h = as_hermitian(h, tol)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc

    idx = np.argmax(np.abs(v), axis=0)
    pivots = v[idx, np.arange(v.shape[1])]
    v = v * (pivots.conj() / np.abs(pivots))

    dec = SpectralDecomposition(_frozen(w), _frozen(v))
    scale = max(1.0, float(np.linalg.norm(h)))
    err = float(np.linalg.norm(dec.reconstruct() - h)) / scale
    if err > tol.reconstruction:
        raise ConvergenceFailure(f"eigendecomposition reconstruction error {err:.3e}")
    return dec


def trace_norm(h, tol: Tolerances = DEFAULT_TOL) -> float:
    """Sum of absolute eigenvalues of a Hermitian operator."""
    return float(np.sum(np.abs(_eigvalsh(as_hermitian(h, tol)))))


def psd_sqrt(h, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Principal square root of a positive-semidefinite operator.

    Eigenvalues in ``[-tol.psd, 0)`` are clamped to zero before the root.
    """
    dec = spectral_decompose(h, tol)
    lam_min = float(dec.eigenvalues[0])
    if lam_min < -tol.psd:
        raise NotPositiveSemidefinite(
            f"minimum eigenvalue {lam_min:.3e} is below -{tol.psd:.1e}"
        )
    v = dec.eigenvectors
    root = (v * np.sqrt(np.clip(dec.eigenvalues, 0.0, None))) @ v.conj().T
    return 0.5 * (root + root.conj().T)


def _complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_density(dim: int, rank: int, seed) -> np.ndarray:
    """Random density matrix of the given rank from the Ginibre ensemble.

    Draws a ``dim x rank`` matrix ``G`` of standard complex normal entries and
    returns ``G G^dagger / Tr(G G^dagger)``. Same seed, same output.
    """
    if dim < 1 or not 1 <= rank <= dim:
        raise ValueError(f"need 1 <= rank <= dim, got dim={dim}, rank={rank}")
    rng = np.random.default_rng(seed)
    g = _complex_normal(rng, (dim, rank))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    return validate_density(rho)


def random_pure(dim: int, seed) -> np.ndarray:
    """Haar-random unit state vector."""
    if dim < 1:
        raise ValueError(f"dim must be positive, got {dim}")
    rng = np.random.default_rng(seed)
    psi = _complex_normal(rng, dim)
    return psi / np.linalg.norm(psi)
