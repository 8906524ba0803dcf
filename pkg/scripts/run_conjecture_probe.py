#!/usr/bin/env python3
"""Probe the equivariant gp vacuum-expectation construction.

For each strict partition in range, the two proven routes (T-operator word
and Cauchy-kernel solve) are compared exactly, and the candidate fermionic
state's expectation value is compared against them monomial by monomial.
The per-monomial match counts are what make a near-miss visible.

Usage:
    python3 scripts/run_conjecture_probe.py --max-size 4 --degree 5 \
        --beta-order 5 --out conjecture_report.json
"""

import argparse
import json
import sys

from kfun.report import RunConfig, serialize, summarize
from kfun.suites import suite_conjecture


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--beta-order", type=int, default=5)
    ap.add_argument("--yvars", type=int, default=4)
    ap.add_argument("--timings", action="store_true")
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    cfg = RunConfig(command="conjecture", beta_order=args.beta_order,
                    degree=args.degree, max_size=args.max_size, ny=args.yvars,
                    timings=args.timings)
    reports = suite_conjecture(cfg)
    payload = serialize(reports, timings=args.timings)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)

    counts = summarize(reports)
    vev_rows = [r for r in reports if r.identity.endswith("vev-equivariant")]
    agree = sum(1 for r in vev_rows if r.status == "pass")
    print(f"reference routes: {counts}", file=sys.stderr)
    print(f"conjectural state agreed on {agree}/{len(vev_rows)} partitions",
          file=sys.stderr)
    for r in vev_rows:
        w = r.witness or {}
        if "monomials" in w:
            print(f"  lambda={tuple(r.inputs['lambda'])}: "
                  f"{w['matching']}/{w['monomials']} monomials match",
                  file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
