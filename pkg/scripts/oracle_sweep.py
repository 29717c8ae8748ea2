#!/usr/bin/env python3
"""Time each route to Kf and tau as n grows; closed forms vs matrix oracles."""
import argparse
import time

from chainspectra import closed_forms as cf
from chainspectra import oracles
from chainspectra.graph import build_chain


def timed(fn, *a):
    t0 = time.perf_counter()
    out = fn(*a)
    return out, time.perf_counter() - t0


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--resistance-max", type=int, default=oracles.DEFAULT_RESISTANCE_CAP)
    args = p.parse_args()

    print("n  kf_closed[s]  kf_resist[s]  kf_spec[s]  tau_closed[s]  tau_mtt[s]  tau_cp[s]  agree")
    for n in range(1, args.max_n + 1):
        g = build_chain(n)
        kf, t_kf = timed(cf.kirchhoff, n)
        if n <= args.resistance_max:
            kr, t_kr = timed(oracles.kirchhoff_by_resistance, g)
        else:
            kr, t_kr = kf, float("nan")
        ks, t_ks = timed(oracles.kirchhoff_by_spectrum, g)
        tau, t_tau = timed(cf.complexity, n)
        tm, t_tm = timed(oracles.spanning_trees_mtt, g)
        tc, t_tc = timed(oracles.spanning_trees_spectral, g)
        agree = kr == kf and abs(ks - float(kf)) < 1e-8 * float(kf) and tau == tm == tc
        print(f"{n:<2} {t_kf:12.5f} {t_kr:13.5f} {t_ks:11.5f} {t_tau:14.5f} {t_tm:11.5f} {t_tc:10.5f}  {agree}")


if __name__ == "__main__":
    main()
