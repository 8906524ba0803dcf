"""Route agreement for the function families at small caps."""

from fractions import Fraction

from kfun.combinat import strict_partitions
from kfun.gfun import (
    GXEvaluator,
    build_by_T,
    direct_sym,
    extract_gq,
    extract_GX,
    gx_at_points,
    kernel_solve,
)
from kfun.rings import PolyRing, TruncationProfile

K = 2


def test_polynomial_families_match_series_extraction():
    ring = PolyRing(TruncationProfile(K, {"x": 4}), nb=2, nx=2)
    for fam in ("GP", "GQ"):
        for lam in [(1,), (2,), (2, 1), (3, 1)]:
            direct = direct_sym(fam, lam, ring, 2)
            assert direct == extract_GX(fam, lam, ring)


def test_series_families_match_operator_route():
    ring = PolyRing(TruncationProfile(K, {"y": 3}), nb=4, ny=2)
    for lam in [(1,), (2,), (2, 1), (3,)]:
        assert extract_gq(lam, ring) == build_by_T("gq", lam, ring)


def test_kernel_solve_agrees_with_operator_route():
    for lam in [(1,), (2, 1)]:
        ring = PolyRing(TruncationProfile(K, {"y": 3}), nb=max(lam[0], 2), ny=2)
        assert kernel_solve("gp", lam, ring) == build_by_T("gp", lam, ring)


def test_point_evaluation_matches_substitution():
    nb = 3
    ring = PolyRing(TruncationProfile(K), nb=nb, nx=2)
    pring = PolyRing(TruncationProfile(K))
    xv = [Fraction(1, 2), Fraction(-1, 3)]
    bv = [Fraction(2, 5), Fraction(1, 7), Fraction(3, 4)]
    sub = {f"x{i+1}": ring.rational(xv[i]) for i in range(2)}
    sub.update({f"b{i+1}": ring.rational(bv[i]) for i in range(nb)})
    for fam in ("GP", "GQ"):
        for lam in [(1,), (2, 1), (3, 2)]:
            direct = direct_sym(fam, lam, ring, 2).substitute(sub).convert(pring)
            assert direct == gx_at_points(fam, lam, xv, bv, pring)


def test_evaluator_diagonal_nonzero():
    ev = GXEvaluator("GQ", 3, K)
    for lam in strict_partitions(4, max_len=3, max_part=3):
        if lam:
            assert not ev.at(lam, lam).is_zero()
