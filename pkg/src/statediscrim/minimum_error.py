"""Minimum-error discrimination of two mixed states.

The optimal measurement is read off the spectrum of the weighted difference
``Lambda = eta2*rho2 - eta1*rho1``: project onto its negative eigenspace to
guess state 1, onto the rest to guess state 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidDetectionPair, InvalidPriors
from .operator_core import (
    DEFAULT_TOL,
    Tolerances,
    as_hermitian,
    spectral_decompose,
    validate_density,
)

__all__ = [
    "Strategy",
    "DiscriminationProblem",
    "DetectionPair",
    "HelstromResult",
    "weighted_difference",
    "error_probability",
    "helstrom_min_error",
    "classify_strategy",
    "zero_threshold",
    "random_detection_pair",
]

PRIOR_SUM_TOL = 1e-12


class Strategy(enum.Enum):
    PROJECTIVE_MEASUREMENT = "ProjectiveMeasurement"
    ALWAYS_GUESS_STATE1 = "AlwaysGuessState1"
    ALWAYS_GUESS_STATE2 = "AlwaysGuessState2"


@dataclass(frozen=True)
class DiscriminationProblem:
    """Two density matrices with their prior probabilities.

    ``eta2`` defaults to ``1 - eta1``. Both states are validated on
    construction.
    """

    rho1: np.ndarray
    rho2: np.ndarray
    eta1: float
    eta2: float | None = None

    def __post_init__(self):
        eta1 = float(self.eta1)
        eta2 = 1.0 - eta1 if self.eta2 is None else float(self.eta2)
        for name, eta in (("eta1", eta1), ("eta2", eta2)):
            if not 0.0 <= eta <= 1.0:
                raise InvalidPriors(f"{name} = {eta!r} is not a probability")
        if abs(eta1 + eta2 - 1.0) > PRIOR_SUM_TOL:
            raise InvalidPriors(f"priors sum to {eta1 + eta2!r}, not 1")
        rho1 = validate_density(self.rho1)
        rho2 = validate_density(self.rho2)
        if rho1.shape != rho2.shape:
            raise DimensionMismatch(f"rho1 is {rho1.shape}, rho2 is {rho2.shape}")
        object.__setattr__(self, "rho1", rho1)
        object.__setattr__(self, "rho2", rho2)
        object.__setattr__(self, "eta1", eta1)
        object.__setattr__(self, "eta2", eta2)

    @property
    def dim(self) -> int:
        return self.rho1.shape[0]

    def swapped(self) -> "DiscriminationProblem":
        return DiscriminationProblem(self.rho2, self.rho1, self.eta2, self.eta1)


@dataclass(frozen=True)
class DetectionPair:
    """Two-outcome POVM ``(pi1, pi2)``; outcome j means "guess state j"."""

    pi1: np.ndarray
    pi2: np.ndarray

    def validate(self, tol: Tolerances = DEFAULT_TOL) -> None:
        """Raise :class:`InvalidDetectionPair` unless both are PSD and sum to identity."""
        if self.pi1.shape != self.pi2.shape or self.pi1.ndim != 2:
            raise DimensionMismatch(
                f"detection operators have shapes {self.pi1.shape} and {self.pi2.shape}"
            )
        for name, op in (("pi1", self.pi1), ("pi2", self.pi2)):
            lam_min = float(np.linalg.eigvalsh(as_hermitian(op, tol))[0])
            if lam_min < -tol.psd:
                raise InvalidDetectionPair(f"{name} has eigenvalue {lam_min:.3e} < 0")
        n = self.pi1.shape[0]
        err = float(np.linalg.norm(self.pi1 + self.pi2 - np.eye(n)))
        if err > tol.reconstruction * max(1.0, np.sqrt(n)):
            raise InvalidDetectionPair(f"pi1 + pi2 deviates from identity by {err:.3e}")


@dataclass(frozen=True)
class HelstromResult:
    p_error: float
    detection: DetectionPair
    lambda_spectrum: np.ndarray
    strategy: Strategy


def weighted_difference(p: DiscriminationProblem) -> np.ndarray:
    """``eta2*rho2 - eta1*rho1``."""
    return p.eta2 * p.rho2 - p.eta1 * p.rho1


def error_probability(
    p: DiscriminationProblem, d: DetectionPair, tol: Tolerances = DEFAULT_TOL
) -> float:
    """Probability of a wrong guess, ``eta1 Tr(rho1 pi2) + eta2 Tr(rho2 pi1)``."""
    if d.pi1.shape != (p.dim, p.dim) or d.pi2.shape != (p.dim, p.dim):
        raise DimensionMismatch(
            f"detection operators {d.pi1.shape}/{d.pi2.shape} vs problem dim {p.dim}"
        )
    d.validate(tol)
    value = p.eta1 * np.trace(p.rho1 @ d.pi2).real + p.eta2 * np.trace(p.rho2 @ d.pi1).real
    return float(np.clip(value, 0.0, 1.0))


def zero_threshold(spectrum: np.ndarray) -> float:
    """Scale-aware cutoff below which an eigenvalue of Lambda counts as zero."""
    return 1e-12 * (1.0 + float(np.sum(np.abs(spectrum))))


def classify_strategy(spectrum, zero_threshold: float) -> Strategy:
    """Decide whether measuring helps, from the spectrum of Lambda.

    With no eigenvalue below ``-zero_threshold`` the best guess is always
    state 2; with none above ``+zero_threshold``, always state 1. An all-zero
    spectrum falls in the first case.
    """
    spectrum = np.asarray(spectrum, dtype=float)
    if not np.any(spectrum < -zero_threshold):
        return Strategy.ALWAYS_GUESS_STATE2
    if not np.any(spectrum > zero_threshold):
        return Strategy.ALWAYS_GUESS_STATE1
    return Strategy.PROJECTIVE_MEASUREMENT


def helstrom_min_error(
    p: DiscriminationProblem, tol: Tolerances = DEFAULT_TOL
) -> HelstromResult:
    """Minimum error probability and the optimal detection operators.

    ``pi1`` projects onto the eigenvectors of Lambda with negative eigenvalue,
    ``pi2`` onto everything else. Zero-eigenvalue eigenvectors go to ``pi2``,
    except when no positive eigenvalue exists, in which case they go to
    ``pi1`` so that always guessing state 1 means ``pi2 = 0``.
    """
    dec = spectral_decompose(weighted_difference(p), tol)
    lam = dec.eigenvalues
    thr = zero_threshold(lam)
    strategy = classify_strategy(lam, thr)

    if strategy is Strategy.ALWAYS_GUESS_STATE1:
        guess1 = lam <= thr
    else:
        guess1 = lam < -thr
    pi1 = dec.projector(guess1)
    pi2 = dec.projector(~guess1)

    p_error = 0.5 * (1.0 - float(np.sum(np.abs(lam))))
    p_error = float(np.clip(p_error, 0.0, 0.5))
    return HelstromResult(p_error, DetectionPair(pi1, pi2), lam, strategy)


def random_detection_pair(dim: int, rng: np.random.Generator) -> DetectionPair:
    """Random two-outcome POVM: ``pi1 = E``, ``pi2 = I - E`` with ``0 <= E <= I``.

    ``E`` is a random Hermitian matrix whose eigenvalues are clamped into
    ``[0, 1]``, so both projective and non-projective pairs occur.
    """
    a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    h = 0.5 * (a + a.conj().T)
    w, v = np.linalg.eigh(h)
    e = (v * np.clip(w, 0.0, 1.0)) @ v.conj().T
    e = 0.5 * (e + e.conj().T)
    return DetectionPair(e, np.eye(dim) - e)
