"""Parameter sweeps over the pure-vs-uniform problem and randomized inequality campaigns."""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .documents import ProblemDocument
from .minimum_error import DiscriminationProblem
from .operator_core import random_density
from .pure_vs_uniform import (
    FilteringRegime,
    PureVsUniformScenario,
    failure_analytic,
    min_error_analytic,
)
from .unambiguous_bounds import check_half_inequality

MARGIN_SLACK = 1e-10
CSV_HEADER = ("param", "p_error", "q_failure", "regime")


class SweepMode(enum.Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    CUSTOM = "custom"


@dataclass(frozen=True)
class Grid:
    start: float = 0.0
    stop: float = 1.0
    steps: int = 101

    def points(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)


@dataclass(frozen=True)
class SweepSpec:
    """A one-dimensional sweep.

    ``sweep_over`` is ``"overlap"`` (the parallel norm, with ``fixed`` = eta1)
    or ``"eta1"`` (with ``fixed`` = parallel norm).
    """

    mode: SweepMode
    d: int
    fixed: float
    sweep_over: str
    grid: Grid = field(default_factory=Grid)

    def __post_init__(self):
        if self.sweep_over not in ("overlap", "eta1"):
            raise ValueError(f"sweep_over must be 'overlap' or 'eta1', got {self.sweep_over!r}")
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        if not 0.0 <= self.fixed <= 1.0:
            raise ValueError(f"fixed parameter {self.fixed} outside [0, 1]")
        g = self.grid
        if g.steps < 1 or not (0.0 <= g.start <= 1.0 and 0.0 <= g.stop <= 1.0):
            raise ValueError(f"grid {g} outside [0, 1] or has no points")

    @classmethod
    def for_mode(cls, mode: SweepMode | str, steps: int = 101, **custom) -> "SweepSpec":
        """Figure presets fix ``d = 3``; ``custom`` takes ``d``, ``fixed``, ``sweep_over``."""
        mode = SweepMode(mode)
        grid = Grid(custom.pop("start", 0.0), custom.pop("stop", 1.0), steps)
        if mode is SweepMode.FIG1:
            return cls(mode, 3, 0.25, "overlap", grid)
        if mode is SweepMode.FIG2:
            return cls(mode, 3, 1.0, "eta1", grid)
        if mode is SweepMode.FIG3:
            return cls(mode, 3, 0.5, "eta1", grid)
        return cls(mode, grid=grid, **custom)

    def scenario(self, x: float) -> PureVsUniformScenario:
        if self.sweep_over == "overlap":
            return PureVsUniformScenario(self.d, x, self.fixed)
        return PureVsUniformScenario(self.d, self.fixed, x)


@dataclass(frozen=True)
class SweepRow:
    param: float
    p_error: float
    q_failure: float
    regime: FilteringRegime


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    rows = []
    for x in spec.grid.points():
        x = float(x)
        s = spec.scenario(x)
        f = failure_analytic(s)
        rows.append(SweepRow(x, min_error_analytic(s), f.q_failure, f.regime))
    return rows


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def sweep_csv(rows: list[SweepRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow((_fmt(r.param), _fmt(r.p_error), _fmt(r.q_failure), r.regime.value))
    return buf.getvalue()


@dataclass(frozen=True)
class EnsembleReport:
    """Summary of a randomized ``P_E <= Q_L/2`` campaign.

    ``violations`` counts trials with margin below ``-MARGIN_SLACK``;
    ``branch_violations`` counts trials where the two-branch bound fell
    below ``Q_L`` by more than 1e-12.
    """

    trials: int
    dims: tuple[int, int]
    seed: int
    min_margin: float
    violations: int
    branch_violations: int
    worst_case: ProblemDocument

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "dims": list(self.dims),
            "seed": self.seed,
            "min_margin": self.min_margin,
            "violations": self.violations,
            "branch_violations": self.branch_violations,
            "worst_case": self.worst_case.to_dict(),
        }


def draw_trial(seed: int, index: int, dim_min: int, dim_max: int, pure: bool = False) -> DiscriminationProblem:
    """The random problem used as trial ``index`` of a campaign.

    The generator is seeded from ``(seed, index)`` so each trial can be
    replayed on its own and the campaign does not depend on execution order.
    """
    rng = np.random.default_rng((seed, index))
    dim = int(rng.integers(dim_min, dim_max + 1))
    if pure:
        r1 = r2 = 1
    else:
        r1, r2 = (int(r) for r in rng.integers(1, dim + 1, size=2))
    eta1 = 0.0
    while eta1 == 0.0:
        eta1 = float(rng.random())
    s1, s2 = (int(x) for x in rng.integers(0, 2**63 - 1, size=2))
    return DiscriminationProblem(random_density(dim, r1, s1), random_density(dim, r2, s2), eta1)


def run_random_check(
    trials: int, dim_min: int, dim_max: int, seed: int, pure: bool = False
) -> EnsembleReport:
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if not 2 <= dim_min <= dim_max:
        raise ValueError(f"need 2 <= dim_min <= dim_max, got {dim_min}, {dim_max}")
    min_margin = math.inf
    worst = None
    violations = branch_violations = 0
    for i in range(trials):
        p = draw_trial(seed, i, dim_min, dim_max, pure)
        rep = check_half_inequality(p)
        if rep.half_inequality_margin < -MARGIN_SLACK:
            violations += 1
        if rep.q_lower_branch < rep.q_lower_overall - 1e-12:
            branch_violations += 1
        if rep.half_inequality_margin < min_margin:
            min_margin = rep.half_inequality_margin
            worst = p
    return EnsembleReport(
        trials=trials,
        dims=(dim_min, dim_max),
        seed=seed,
        min_margin=min_margin,
        violations=violations,
        branch_violations=branch_violations,
        worst_case=ProblemDocument.from_problem(worst),
    )
