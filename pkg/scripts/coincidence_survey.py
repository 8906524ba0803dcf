#!/usr/bin/env python3
"""Survey the expansion-coefficient routes over a box of strict partitions.

Every admissible pair (lambda, mu) with mu inside the given box is evaluated
at seeded random rational parameter values through all available routes
(Jacobi-Trudi determinant, its transpose-dual, the Grothendieck-polynomial
formula where in scope, and the linear solve), and disagreements are listed.

Usage:
    python3 scripts/coincidence_survey.py --box 5,4,3,2,1 --beta-order 6 \
        --samples 3 --seed 11
"""

import argparse
import random
import sys
from fractions import Fraction

from kfun.coeff import ScopeError, coincidence_routes
from kfun.combinat import strict_partitions
from kfun.rings import PolyRing, TruncationProfile


def sample_values(rng, n):
    """Distinct nonzero rationals (the solve route needs them distinct)."""
    pool = [Fraction(a, b) for a in range(1, 20) for b in (2, 3, 5, 7)]
    vals = rng.sample(pool, n)
    return [v if rng.random() < 0.5 else -v for v in vals]


def subpartitions(mu, box):
    for lam in strict_partitions(sum(mu)):
        if len(lam) == len(mu) and all(a <= b for a, b in zip(lam, mu)):
            yield lam


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--box", default="5,4,3,2,1")
    ap.add_argument("--beta-order", type=int, default=6)
    ap.add_argument("--samples", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    box = tuple(int(p) for p in args.box.split(",") if p)
    ring = PolyRing(TruncationProfile(args.beta_order))
    rng = random.Random(args.seed)
    nvals = box[0] + 1

    mus = [mu for mu in strict_partitions(sum(box)) if mu
           and len(mu) <= len(box) and all(a <= b for a, b in zip(mu, box))]
    pairs = checked = disagreements = 0
    for mu in mus:
        for lam in subpartitions(mu, box):
            pairs += 1
            for _ in range(args.samples):
                bv = sample_values(rng, nvals)
                cv = sample_values(rng, nvals)
                try:
                    routes = coincidence_routes(lam, mu, ring,
                                                bvals=bv, cvals=cv)
                except ScopeError:
                    continue
                checked += 1
                vals = list(routes.values())
                if any(v != vals[0] for v in vals[1:]):
                    disagreements += 1
                    print(f"DISAGREE lambda={lam} mu={mu}: "
                          + ", ".join(f"{k}={v}" for k, v in routes.items()))
    print(f"{pairs} admissible pairs, {checked} sampled evaluations, "
          f"{disagreements} disagreements", file=sys.stderr)
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
