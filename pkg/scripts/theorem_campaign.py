"""Randomized check of P_E <= Q_L/2 over several seeds and dimension ranges."""

import argparse
import time

from statediscrim.experiments import run_random_check


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    args = parser.parse_args()

    for dims in ((2, 2), (2, 8), (9, 16)):
        for seed in args.seeds:
            t = time.perf_counter()
            for pure in (False, True):
                rep = run_random_check(args.trials, *dims, seed=seed, pure=pure)
                print(
                    f"dims {dims[0]:>2}-{dims[1]:<2} seed {seed} {'pure ' if pure else 'mixed'}  "
                    f"min margin {rep.min_margin:.3e}  violations {rep.violations}  "
                    f"branch violations {rep.branch_violations}"
                )
            print(f"  ({time.perf_counter() - t:.1f} s)")


if __name__ == "__main__":
    main()
