"""Fidelity-based lower bounds on the unambiguous-discrimination failure rate.

For two mixed states the optimal failure probability ``Q_F`` has no general
closed form; this module evaluates the fidelity lower bounds and checks them
against the minimum error probability, ``P_E <= Q_L / 2 <= Q_F / 2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, DimensionMismatch, NotPositiveSemidefinite
from .minimum_error import DiscriminationProblem, helstrom_min_error
from .operator_core import DEFAULT_TOL, Tolerances, psd_sqrt, spectral_decompose

__all__ = [
    "Branch",
    "BoundReport",
    "fidelity",
    "fidelity_measurement_basis",
    "failure_lower_bound_QL",
    "failure_lower_bound_branch",
    "check_half_inequality",
]


class Branch(enum.Enum):
    GEOMETRIC_MEAN = "GeometricMean"
    ARITHMETIC_MEAN = "ArithmeticMean"


@dataclass(frozen=True)
class BoundReport:
    fidelity: float
    q_lower_overall: float
    q_lower_branch: float
    branch: Branch
    p_error: float
    half_inequality_margin: float


def _resolution(lam: np.ndarray) -> float:
    # eigenvalues this small are indistinguishable from zero for a dense eigensolver
    return 16 * lam.shape[0] * np.finfo(float).eps * max(float(np.max(np.abs(lam))), 1.0)


def _resolved_spectrum(rho, tol: Tolerances) -> tuple[np.ndarray, np.ndarray]:
    dec = spectral_decompose(rho, tol)
    lam = dec.eigenvalues
    if lam[0] < -tol.psd:
        raise NotPositiveSemidefinite(f"minimum eigenvalue {lam[0]:.3e} is below -{tol.psd:.1e}")
    keep = lam > _resolution(lam)
    return lam[keep], dec.eigenvectors[:, keep]


def psd_factor(rho, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Factor ``F`` with ``rho = F F^dagger``, one column per resolvable eigenvalue.

    Eigenvalues below the eigensolver resolution are dropped rather than
    square-rooted, so a rank-deficient state does not pick up spurious
    ``sqrt(eps)`` components in its null space.
    """
    lam, v = _resolved_spectrum(rho, tol)
    return v * np.sqrt(lam)


def fidelity(rho1, rho2, tol: Tolerances = DEFAULT_TOL) -> float:
    """Root fidelity ``Tr sqrt(sqrt(rho2) rho1 sqrt(rho2))``.

    Equals ``|<psi1|psi2>|`` for pure states (not its square). With
    ``rho_i = F_i F_i^dagger``, the eigenvalues of ``sqrt(rho2) rho1 sqrt(rho2)``
    are the squared singular values of ``F1^dagger F2``, so the fidelity is
    the sum of those singular values.
    """
    rho1 = np.asarray(rho1, dtype=complex)
    rho2 = np.asarray(rho2, dtype=complex)
    if rho1.shape != rho2.shape:
        raise DimensionMismatch(f"rho1 is {rho1.shape}, rho2 is {rho2.shape}")
    f1 = psd_factor(rho1, tol)
    f2 = psd_factor(rho2, tol)
    if f1.shape[1] == 0 or f2.shape[1] == 0:
        return 0.0
    try:
        sv = np.linalg.svd(f1.conj().T @ f2, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    return float(np.sum(sv))


def fidelity_measurement_basis(rho1, rho2, tol: Tolerances = DEFAULT_TOL) -> tuple[float, np.ndarray]:
    """Fidelity as ``sum_l sqrt(<l|rho1|l><l|rho2|l>)`` in the optimal basis.

    The basis ``{|l>}`` diagonalizes
    ``rho2^{-1/2} (sqrt(rho2) rho1 sqrt(rho2))^{1/2} rho2^{-1/2}``, which needs
    ``rho2`` invertible. Returns the value and the basis (as columns).
    """
    s = psd_sqrt(rho2, tol)
    dec2 = spectral_decompose(rho2, tol)
    if dec2.eigenvalues[0] <= 0.0:
        raise NotPositiveSemidefinite("rho2 must be full rank for the measurement-basis form")
    v = dec2.eigenvectors
    s_inv = (v / np.sqrt(dec2.eigenvalues)) @ v.conj().T
    lam, w = _resolved_spectrum(s @ rho1 @ s, tol)
    inner = (w * np.sqrt(lam)) @ w.conj().T
    basis = spectral_decompose(s_inv @ inner @ s_inv, tol).eigenvectors
    r = np.einsum("il,ij,jl->l", basis.conj(), rho1, basis).real
    s_l = np.einsum("il,ij,jl->l", basis.conj(), rho2, basis).real
    # <l|rho1|l> vanishes exactly where rho1 is singular; drop round-off there
    r = np.where(r > _resolution(r), r, 0.0)
    return float(np.sum(np.sqrt(r * s_l))), basis


def failure_lower_bound_QL(p: DiscriminationProblem, tol: Tolerances = DEFAULT_TOL) -> float:
    """Overall lower bound ``2 sqrt(eta1 eta2) F`` on the failure probability."""
    return 2.0 * np.sqrt(p.eta1 * p.eta2) * fidelity(p.rho1, p.rho2, tol)


def _branch_bound(eta1: float, eta2: float, fid: float) -> tuple[float, Branch]:
    eta_min, eta_max = min(eta1, eta2), max(eta1, eta2)
    # eta_max >= 1/2, so the ratio is always defined
    if np.sqrt(eta_min / eta_max) >= fid:
        return 2.0 * np.sqrt(eta1 * eta2) * fid, Branch.GEOMETRIC_MEAN
    return eta_min + eta_max * fid**2, Branch.ARITHMETIC_MEAN


def failure_lower_bound_branch(
    p: DiscriminationProblem, tol: Tolerances = DEFAULT_TOL
) -> tuple[float, Branch]:
    """Two-branch lower bound on the failure probability.

    Geometric-mean form ``2 sqrt(eta1 eta2) F`` while
    ``sqrt(eta_min/eta_max) >= F`` (ties included), otherwise the
    arithmetic-mean form ``eta_min + eta_max F^2``.
    """
    return _branch_bound(p.eta1, p.eta2, fidelity(p.rho1, p.rho2, tol))


def check_half_inequality(p: DiscriminationProblem, tol: Tolerances = DEFAULT_TOL) -> BoundReport:
    fid = fidelity(p.rho1, p.rho2, tol)
    q_l = 2.0 * np.sqrt(p.eta1 * p.eta2) * fid
    q_branch, branch = _branch_bound(p.eta1, p.eta2, fid)
    p_e = helstrom_min_error(p, tol).p_error
    return BoundReport(
        fidelity=fid,
        q_lower_overall=float(q_l),
        q_lower_branch=float(q_branch),
        branch=branch,
        p_error=p_e,
        half_inequality_margin=float(q_l / 2.0 - p_e),
    )
