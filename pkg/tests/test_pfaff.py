"""Pfaffians: algebraic identities and the pairwise gq formula."""

import random
from fractions import Fraction

from kfun.gfun import extract_gq
from kfun.pfaff import SkewMatrix, gq_pfaffian, knuth_check, pfaffian
from kfun.rings import PolyRing, TruncationProfile

K = 2


def _random_skew(size, ring, rng):
    A = SkewMatrix(size, ring)
    for i in range(size):
        for j in range(i + 1, size):
            A.upper[(i, j)] = ring.rational(Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return A


def _det(rows, ring):
    n = len(rows)
    if n == 0:
        return ring.one()
    out = ring.zero()
    import itertools
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if not seen[i]:
                j, c = i, 0
                while not seen[j]:
                    seen[j] = True
                    j = perm[j]
                    c += 1
                if c % 2 == 0:
                    sign = -sign
        term = ring.one()
        for i in range(n):
            term = term * rows[i][perm[i]]
        out = out + sign * term
    return out


def test_pfaffian_squares_to_determinant():
    ring = PolyRing(TruncationProfile(K))
    rng = random.Random(11)
    for size in (2, 4):
        A = _random_skew(size, ring, rng)
        rows = [[ring.zero()] * size for _ in range(size)]
        for (i, j), v in A.upper.items():
            rows[i][j] = v
            rows[j][i] = -v
        assert pfaffian(A) * pfaffian(A) == _det(rows, ring)


def test_pfaffian_block_form():
    # pf of a direct sum of 2x2 blocks is the product of the entries
    ring = PolyRing(TruncationProfile(K), nb=2)
    b1, b2 = ring.gens("b", 2)
    A = SkewMatrix(4, ring)
    A.upper[(0, 1)] = b1
    A.upper[(2, 3)] = b2
    assert pfaffian(A) == b1 * b2


def test_gq_pfaffian_matches_extraction():
    ring = PolyRing(TruncationProfile(K, {"y": 4}), nb=2, ny=2)
    for lam in [(1,), (2, 1), (3, 1), (3, 2, 1)]:
        assert gq_pfaffian(lam, ring) == extract_gq(lam, ring)


def test_knuth_identity_random_instance():
    ring = PolyRing(TruncationProfile(K, {"y": 3}), nb=2, ny=2)
    rng = random.Random(5)
    lam = (3, 1)
    fc = []
    for i in range(2):
        d = {0: ring.one()}
        for e in range(-lam[i] - 1, 2):
            if rng.random() < 0.6:
                d[e] = ring.rational(rng.randint(-2, 2)) + ring.beta() * rng.randint(-1, 1)
        fc.append(d)
    lhs, rhs = knuth_check(lam, fc, ring)
    assert lhs == rhs
