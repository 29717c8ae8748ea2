#!/usr/bin/env python3
"""Print the Kirchhoff index (n = 1..15) and spanning-tree count (n = 1..12)
tables next to the published values, flagging any disagreement."""
import argparse

from chainspectra import closed_forms as cf
from chainspectra.reference import KF_TABLE, TAU_TABLE


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--precision", type=int, default=2)
    args = p.parse_args()

    print(f"{'G':>5} {'Kf exact':>42} {'Kf':>12} {'published':>10}")
    for n, ref in KF_TABLE.items():
        kf = cf.kirchhoff(n)
        shown = cf.round_half_away(kf, args.precision)
        flag = "" if abs(cf.round_half_away(kf, 2) - ref) <= 0.01 else "  <-- discrepancy"
        print(f"{'L_' + str(n):>5} {cf.fraction_str(kf):>42} {str(shown):>12} {str(ref):>10}{flag}")
    print()
    print(f"{'G':>5} {'tau':>20} {'published':>20}")
    for n, ref in TAU_TABLE.items():
        tau = cf.complexity(n)
        flag = "" if tau == ref else "  <-- discrepancy"
        print(f"{'L_' + str(n):>5} {tau:>20} {ref:>20}{flag}")


if __name__ == "__main__":
    main()
