#!/usr/bin/env python3
"""Estimate convergence abscissas for the built-in coefficient rules and
print them next to their known values.

The sigma_u column is a bracket [sigma_c_est, sigma_a_est]; the estimators
never claim the uniform-convergence line itself, only its enclosure.
"""

import argparse
import time
from dataclasses import dataclass

from dirichlet_ops import (
    bracket_sigma_u,
    eta_rule,
    moebius_rule,
    ones_rule,
    sigma_a_estimate,
    sigma_c_estimate,
    zeta_shift_rule,
)


@dataclass
class TableConfig:
    N: int = 10**5
    probe_epsilon: float = 0.5


def rules():
    return (ones_rule(), eta_rule(), moebius_rule(), zeta_shift_rule(2))


def fmt_known(value) -> str:
    return f"{value:+.2f}" if value is not None else "   ?"


def run(cfg: TableConfig) -> None:
    print(f"N = {cfg.N}")
    header = f"{'rule':<14} {'sigma_c':>20} {'sigma_a':>20} {'sigma_u bracket':>22}"
    print(header)
    print("-" * len(header))
    t0 = time.perf_counter()
    for rule in rules():
        known = rule.known_abscissas or {}
        sc = sigma_c_estimate(rule, cfg.N)
        sa = sigma_a_estimate(rule, cfg.N)
        br = bracket_sigma_u(rule, cfg.N, [cfg.probe_epsilon])
        lo, hi = br.sigma_u_bracket
        sc_txt = f"{sc.value:+.3f}±{sc.uncertainty:.3f} ({fmt_known(known.get('sigma_c'))})"
        sa_txt = f"{sa.value:+.3f}±{sa.uncertainty:.3f} ({fmt_known(known.get('sigma_a'))})"
        print(f"{rule.tag:<14} {sc_txt:>20} {sa_txt:>20} {f'[{lo:+.3f}, {hi:+.3f}]':>22}")
    print(f"elapsed {time.perf_counter() - t0:.2f}s")


def main() -> None:
    cfg = TableConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=cfg.N, dest="N")
    ap.add_argument("--probe-epsilon", type=float, default=cfg.probe_epsilon)
    args = ap.parse_args()
    run(TableConfig(N=args.N, probe_epsilon=args.probe_epsilon))


if __name__ == "__main__":
    main()
