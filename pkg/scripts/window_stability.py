#!/usr/bin/env python3
"""Re-run a verification suite at enlarged truncation caps.

Truncated arithmetic can turn a real discrepancy into a silent pass when the
difference lives just above the cap. This script runs the named suite at the
base caps and again at (beta_order + 2, degree + 1); both runs must pass,
and any status change between them is reported.

Usage:
    python3 scripts/window_stability.py duality --beta-order 4 --max-size 3
"""

import argparse
import json
import sys

from kfun.report import RunConfig, summarize
from kfun.suites import SUITES


def run(name, cfg):
    reports = SUITES[name](cfg)
    by_key = {(r.identity, json.dumps(r.inputs, sort_keys=True)): r.status
              for r in reports}
    return by_key, summarize(reports)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("suite", choices=sorted(SUITES))
    ap.add_argument("--beta-order", type=int, default=3)
    ap.add_argument("--degree", type=int, default=4)
    ap.add_argument("--max-size", type=int, default=3)
    ap.add_argument("--mode", default="symbolic",
                    choices=["symbolic", "randomized"])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    base = RunConfig(beta_order=args.beta_order, degree=args.degree,
                     max_size=args.max_size, mode=args.mode, seed=args.seed)
    wide = RunConfig(beta_order=args.beta_order + 2, degree=args.degree + 1,
                     max_size=args.max_size, mode=args.mode, seed=args.seed)

    lo, lo_sum = run(args.suite, base)
    hi, hi_sum = run(args.suite, wide)
    print(f"base caps: {lo_sum}", file=sys.stderr)
    print(f"wide caps: {hi_sum}", file=sys.stderr)

    changed = [(k, lo[k], hi.get(k)) for k in lo if lo[k] != hi.get(k, lo[k])]
    for key, s_lo, s_hi in changed:
        print(f"STATUS CHANGED {key[0]} {key[1]}: {s_lo} -> {s_hi}")
    ok = not changed and lo_sum["fail"] == 0 and hi_sum["fail"] == 0
    print("stable" if ok else "NOT STABLE", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
