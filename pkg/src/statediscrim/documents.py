"""JSON problem documents.

Schema::

    {"dim": n,
     "rho1": [[[re, im], ...], ...],   # n x n
     "rho2": [[[re, im], ...], ...],
     "eta1": x}

Floats are written with Python's shortest round-trip repr, so
serialize -> deserialize is bit-exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DiscriminationError
from .minimum_error import DiscriminationProblem


class DocumentError(DiscriminationError):
    """Malformed problem document."""


@dataclass(frozen=True)
class ProblemDocument:
    dim: int
    rho1: np.ndarray
    rho2: np.ndarray
    eta1: float

    @classmethod
    def from_problem(cls, p: DiscriminationProblem) -> "ProblemDocument":
        return cls(p.dim, np.array(p.rho1), np.array(p.rho2), p.eta1)

    def to_problem(self) -> DiscriminationProblem:
        return DiscriminationProblem(self.rho1, self.rho2, self.eta1)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "rho1": matrix_to_pairs(self.rho1),
            "rho2": matrix_to_pairs(self.rho2),
            "eta1": float(self.eta1),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ProblemDocument":
        for key in ("dim", "rho1", "rho2", "eta1"):
            if key not in data:
                raise DocumentError(f"missing field {key!r}")
        dim, eta1 = data["dim"], data["eta1"]
        rho1 = pairs_to_matrix(data["rho1"])
        rho2 = pairs_to_matrix(data["rho2"])
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise DocumentError(f"dim must be a positive integer, got {dim!r}")
        if not isinstance(eta1, (int, float)) or isinstance(eta1, bool):
            raise DocumentError(f"eta1 must be a number, got {eta1!r}")
        for name, m in (("rho1", rho1), ("rho2", rho2)):
            if m.shape != (dim, dim):
                raise DocumentError(f"{name} has shape {m.shape}, expected ({dim}, {dim})")
        return cls(dim, rho1, rho2, float(eta1))

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> "ProblemDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from None
        if not isinstance(data, dict):
            raise DocumentError("document must be a JSON object")
        return cls.from_dict(data)


def matrix_to_pairs(m: np.ndarray) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def pairs_to_matrix(rows) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"matrix is not a nested array of [re, im] pairs: {exc}") from None
    if arr.ndim != 3 or arr.shape[2] != 2:
        raise DocumentError(f"matrix must be n x n [re, im] pairs, got array shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def load_problem(path) -> DiscriminationProblem:
    """Read and validate a problem document; ``OSError`` propagates for I/O failures."""
    text = Path(path).read_text()
    return ProblemDocument.loads(text).to_problem()


def save_problem(p: DiscriminationProblem, path) -> None:
    Path(path).write_text(ProblemDocument.from_problem(p).dumps() + "\n")
