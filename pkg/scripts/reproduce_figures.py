"""Write the three figure sweeps as CSV files and print a short summary.

    python scripts/reproduce_figures.py [OUTDIR] [--steps N]
"""

import argparse
from pathlib import Path

from statediscrim.experiments import SweepSpec, run_sweep, sweep_csv


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("outdir", nargs="?", default="figures")
    parser.add_argument("--steps", type=int, default=101)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for mode in ("fig1", "fig2", "fig3"):
        rows = run_sweep(SweepSpec.for_mode(mode, args.steps))
        path = outdir / f"{mode}.csv"
        path.write_text(sweep_csv(rows))
        gap = min(r.q_failure - 2 * r.p_error for r in rows)
        peak = max(rows, key=lambda r: r.p_error)
        print(f"{mode}: {len(rows)} rows -> {path}  max P_E={peak.p_error:.6f} at {peak.param:.3f}  min(Q_F-2P_E)={gap:.3e}")


if __name__ == "__main__":
    main()
