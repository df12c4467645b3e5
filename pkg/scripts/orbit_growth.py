#!/usr/bin/env python3
"""Track the normalized iterate size (1/k)|T^k f| in the epsilon-weighted
coefficient norm for the standard witnesses:

  differentiation at 3^{-s}   (grows like (log 3)^k / k),
  integration at 2^{-s}       (grows like (1/log 2)^k / k),
  differentiation at 2^{-s}   (decays like (log 2)^k / k).

Writes one CSV per case (k,value) and prints the diagnostic verdicts and
fitted growth rates next to their closed-form targets.
"""

import argparse
import csv
import math
from dataclasses import dataclass
from pathlib import Path

from dirichlet_ops import (
    derivative_multiplier,
    ergodicity_diagnostic,
    integration_multiplier,
    monomial,
)


@dataclass
class OrbitConfig:
    epsilon: float = 0.1
    k_max: int = 40
    out_dir: str = "orbit_csv"


CASES = (
    ("diff_at_3", derivative_multiplier, 3, math.log(math.log(3.0))),
    ("int_at_2", integration_multiplier, 2, math.log(1.0 / math.log(2.0))),
    ("diff_at_2", derivative_multiplier, 2, math.log(math.log(2.0))),
)


def run(cfg: OrbitConfig) -> None:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    print(f"epsilon = {cfg.epsilon}, k_max = {cfg.k_max}")
    print(f"{'case':<10} {'verdict':<13} {'fitted rate':>12} {'target rate':>12}")
    for name, make, index, target in CASES:
        report = ergodicity_diagnostic(make(), monomial(index), cfg.epsilon, cfg.k_max)
        path = out_dir / f"{name}.csv"
        with path.open("w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "value"])
            for k, v in report.samples:
                w.writerow([k, repr(v)])
        print(f"{name:<10} {report.verdict:<13} {report.fitted_rate:>12.4f} {target:>12.4f}")
    print(f"csv written to {out_dir}/")


def main() -> None:
    cfg = OrbitConfig()
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--epsilon", type=float, default=cfg.epsilon)
    ap.add_argument("--k-max", type=int, default=cfg.k_max)
    ap.add_argument("--out-dir", default=cfg.out_dir)
    args = ap.parse_args()
    run(OrbitConfig(epsilon=args.epsilon, k_max=args.k_max, out_dir=args.out_dir))


if __name__ == "__main__":
    main()
