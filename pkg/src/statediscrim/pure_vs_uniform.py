"""Closed-form discrimination of a pure state from a uniform mixture.

State 1 is ``|psi><psi|`` (prior ``eta1``), state 2 is ``I_d / d`` on a
``d``-dimensional subspace ``H_d`` (prior ``eta2 = 1 - eta1``). The only
geometric parameter is the norm of the projection of ``psi`` onto ``H_d``,
called ``parallel_norm`` here.

Throughout, ``a = eta1`` and ``b = eta2 / d`` (the prior of each mixture
component).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BasisNotOrthonormal
from .minimum_error import DiscriminationProblem

__all__ = [
    "PureVsUniformScenario",
    "FilteringRegime",
    "FilteringResult",
    "parallel_norm_of",
    "lambda_spectrum_analytic",
    "min_error_analytic",
    "failure_analytic",
    "embed_scenario",
    "equal_prior_specials",
]


@dataclass(frozen=True)
class PureVsUniformScenario:
    d: int
    parallel_norm: float
    eta1: float

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d!r}")
        if not 0.0 <= self.parallel_norm <= 1.0:
            raise ValueError(f"parallel_norm must lie in [0, 1], got {self.parallel_norm!r}")
        if not 0.0 <= self.eta1 <= 1.0:
            raise ValueError(f"eta1 must lie in [0, 1], got {self.eta1!r}")
        object.__setattr__(self, "d", int(self.d))

    @property
    def eta2(self) -> float:
        return 1.0 - self.eta1

    @property
    def component_prior(self) -> float:
        return self.eta2 / self.d


class FilteringRegime(enum.Enum):
    GENERALIZED = "Generalized"
    VON_NEUMANN_PROJECT_PSI_PERP = "VonNeumannProjectPsiPerp"
    VON_NEUMANN_PROJECT_MIXTURE_SUPPORT = "VonNeumannProjectMixtureSupport"


@dataclass(frozen=True)
class FilteringResult:
    q_failure: float
    regime: FilteringRegime


def parallel_norm_of(psi, basis, tol: float = 1e-10) -> float:
    """Norm of the projection of ``psi`` onto the span of ``basis``.

    ``basis`` is a sequence of orthonormal vectors (or a matrix whose columns
    are those vectors).
    """
    psi = np.asarray(psi, dtype=complex).ravel()
    if isinstance(basis, np.ndarray) and basis.ndim == 2:
        u = basis.astype(complex)
    else:
        u = np.column_stack([np.asarray(b, dtype=complex).ravel() for b in basis])
    if u.shape[0] != psi.shape[0]:
        raise ValueError(f"basis vectors have length {u.shape[0]}, psi has {psi.shape[0]}")
    if abs(np.linalg.norm(psi) - 1.0) > tol:
        raise ValueError(f"psi is not normalized (norm {np.linalg.norm(psi):.12g})")
    gram_err = float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))))
    if gram_err > tol:
        raise BasisNotOrthonormal(f"basis Gram matrix deviates from identity by {gram_err:.3e}")
    return float(np.linalg.norm(u.conj().T @ psi))


def _discriminant_root(a: float, b: float, n: float) -> float:
    # (a+b)^2 - 4ab n^2 written as a sum of non-negative terms
    return math.sqrt((a - b) ** 2 + 4.0 * a * b * (1.0 - n) * (1.0 + n))


def lambda_spectrum_analytic(s: PureVsUniformScenario) -> np.ndarray:
    """Eigenvalues of ``eta2*rho2 - eta1*rho1`` on the ``d+1`` dimensional span, ascending."""
    a, b = s.eta1, s.component_prior
    root = _discriminant_root(a, b, s.parallel_norm)
    lam = np.concatenate(([0.5 * (b - a - root), 0.5 * (b - a + root)], np.full(s.d - 1, b)))
    return np.sort(lam)


def min_error_analytic(s: PureVsUniformScenario) -> float:
    """Closed-form minimum error probability.

    Evaluated as ``2ab n^2 / (a + b + sqrt((a+b)^2 - 4ab n^2))``, the
    rationalized form of ``(a + b - sqrt(...)) / 2``, which avoids
    cancellation for small ``n``.
    """
    a, b, n = s.eta1, s.component_prior, s.parallel_norm
    denom = a + b + _discriminant_root(a, b, n)
    if denom == 0.0:
        return 0.0
    return 2.0 * a * b * n * n / denom


def failure_analytic(s: PureVsUniformScenario) -> FilteringResult:
    """Minimum failure probability of unambiguous filtering of ``psi`` from the mixture.

    Conditions are tested in the order: projective onto ``psi``'s complement,
    projective onto the mixture support, then generalized. At a branch
    boundary neighbouring lines agree, so the order only fixes the label.
    ``parallel_norm == 0`` gives ``Q_F = 0`` labelled generalized.
    """
    a, b, n = s.eta1, s.component_prior, s.parallel_norm
    n2 = n * n
    if n == 0.0:
        return FilteringResult(0.0, FilteringRegime.GENERALIZED)
    # conditions multiplied through by eta1 to stay finite at eta1 = 0
    if b * n2 >= a:
        return FilteringResult(a + b * n2, FilteringRegime.VON_NEUMANN_PROJECT_PSI_PERP)
    if b <= a * n2:
        return FilteringResult(a * n2 + b, FilteringRegime.VON_NEUMANN_PROJECT_MIXTURE_SUPPORT)
    return FilteringResult(2.0 * math.sqrt(a * b) * n, FilteringRegime.GENERALIZED)


def embed_scenario(s: PureVsUniformScenario) -> DiscriminationProblem:
    """Explicit ``(d+1)``-dimensional matrices for a scenario.

    Basis order is ``(v0, u1, ..., ud)`` with ``v0`` orthogonal to the mixture
    support; the parallel part of ``psi`` lies along ``u1``.
    """
    dim = s.d + 1
    n = s.parallel_norm
    psi = np.zeros(dim, dtype=complex)
    psi[0] = math.sqrt(max(1.0 - n * n, 0.0))
    psi[1] = n
    rho1 = np.outer(psi, psi.conj())
    rho2 = np.diag(np.concatenate(([0.0], np.full(s.d, 1.0 / s.d)))).astype(complex)
    return DiscriminationProblem(rho1, rho2, s.eta1, s.eta2)


def equal_prior_specials(d: int, parallel_norm: float) -> tuple[float, float]:
    """``(P_E, Q_F)`` when ``psi`` and every mixture component are equally likely.

    That is ``eta1 = eta2/d = 1/(d+1)``.
    """
    s = PureVsUniformScenario(d, parallel_norm, 1.0 / (d + 1))
    n = s.parallel_norm
    # (1 - sqrt(1 - n^2)) rationalized
    p_error = n * n / ((d + 1) * (1.0 + math.sqrt(1.0 - n * n)))
    q_failure = 2.0 * n / (d + 1)
    return p_error, q_failure
