"""Coefficient layer: determinant, descent, solve, and the contour form."""

from fractions import Fraction

import pytest

from kfun.coeff import (
    ScopeError,
    cgq_solve,
    coincidence_routes,
    contour_identity,
    d_lambda,
    double_grothendieck,
    factorial_groth_jt,
    groth_coefficient,
    jt_coefficient,
    pi_op,
    rename,
)
from kfun.combinat import Permutation
from kfun.rings import PolyRing, TruncationProfile, ominus, unit_inverse

K = 2
RING = PolyRing(TruncationProfile(K), nb=3, nc=3)


def test_d_lambda_prefactor():
    one = RING.one()
    beta = RING.beta()
    b1 = RING.var("b1")
    assert d_lambda((1,), RING) == one
    assert d_lambda((2,), RING) == one + beta * b1
    with pytest.raises(ValueError):
        d_lambda((9,), RING, alphabet="b")


def test_jt_coefficient_base_cases():
    # single box over single box: the basic difference quotient
    val = jt_coefficient((1,), (2,), RING)
    b1 = RING.var("b1")
    c1 = RING.var("c1")
    assert val == ominus(b1, c1)
    # mismatched lengths vanish
    log = []
    assert jt_coefficient((1,), (2, 1), RING, reason_log=log).is_zero()
    assert log
    # diagonal is d_lam(b)/d_lam(c)
    diag = jt_coefficient((2,), (2,), RING)
    expected = d_lambda((2,), RING) * unit_inverse(d_lambda((2,), RING, alphabet="c"))
    assert diag == expected


def test_pi_operator_algebra():
    b1, b2 = RING.gens("b", 2)
    f = b1 * b1 * b2 + RING.beta() * b1
    # pi^2 = -beta pi
    once = pi_op(f, 1)
    assert pi_op(once, 1) == -RING.beta() * once


def test_double_grothendieck_stability():
    w = Permutation((2, 1, 3))
    assert double_grothendieck(w, 2, RING) == double_grothendieck(w, 3, RING)


def test_groth_matches_jt_on_small_grid():
    for lam, mu in [((1,), (2,)), ((2,), (3,)), ((2, 1), (3, 2))]:
        assert groth_coefficient(lam, mu, RING) == jt_coefficient(lam, mu, RING)
    with pytest.raises(ScopeError):
        groth_coefficient((2,), (1,), RING)


def test_solve_route_symbolic():
    mu = (3, 1)
    ring = PolyRing(TruncationProfile(K), nb=3, nc=3)
    sol = cgq_solve(mu, ring)
    for lam in [(1,), (2, 1), (3, 1)]:
        if len(lam) == len(mu):
            assert sol[lam] == jt_coefficient(lam, mu, ring)


def test_coincidence_routes_numeric():
    ring = PolyRing(TruncationProfile(K))
    bv = [Fraction(1, 2), Fraction(-1, 3), Fraction(2, 5), Fraction(1, 7)]
    cv = [Fraction(3, 4), Fraction(-2, 7), Fraction(1, 5), Fraction(4, 9)]
    routes = coincidence_routes((2, 1), (3, 2), ring, bvals=bv, cvals=cv)
    vals = list(routes.values())
    for v in vals[1:]:
        assert v == vals[0]


def test_contour_identity_small():
    ring = PolyRing(TruncationProfile(K), nb=2, nc=2)
    for A, B, m, n, d in [(0, 0, 1, 0, 0), (1, -1, 2, 1, 1), (-2, 2, 3, 2, 0)]:
        lhs, rhs = contour_identity(A, B, m, n, d, ring)
        assert lhs == rhs


def test_factorial_groth_determinant_form():
    ring = PolyRing(TruncationProfile(K), nb=3, nc=4)
    for eta, r in [((), 1), ((1,), 1), ((2, 1), 2)]:
        lhs, rhs = factorial_groth_jt(eta, r, ring)
        assert lhs == rhs


def test_rename_is_ring_morphism_on_samples():
    src = PolyRing(TruncationProfile(K), nb=2)
    tgt = PolyRing(TruncationProfile(K), nc=2)
    mapping = {f"b{i}": tgt.var(f"c{i}") for i in (1, 2)}
    b1, b2 = src.gens("b", 2)
    f = b1 + src.beta() * b2
    g = b1 * b2
    assert rename(f * g, tgt, mapping) == rename(f, tgt, mapping) * rename(g, tgt, mapping)
    assert rename(f + g, tgt, mapping) == rename(f, tgt, mapping) + rename(g, tgt, mapping)
