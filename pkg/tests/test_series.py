"""Windowed bivariate Laurent series: products, extraction, boundaries."""

from kfun.rings import PolyRing, TruncationProfile, complete_sym
from kfun.series import TSeries, cross_ratio, geometric, poly_in_var, product, unit_inverse_in_var

RING = PolyRing(TruncationProfile(2), nb=2, nc=2)
WIN = [(-3, 5), (-3, 5)]


def test_geometric_expands_rational_factor():
    # 1/(1 - w^{-1} b) = sum_k w^{-k} b^k inside the window
    b = RING.var("b1")
    s = geometric(RING, WIN, 1, b, -1)
    # multiplying back by (1 - w^{-1} b) leaves 1 up to window boundary
    t = poly_in_var(RING, WIN, 1, {0: RING.one(), -1: -b})
    prod = s * t
    assert prod.extract((0, 0)) == RING.one()
    for k in range(1, 3):
        assert prod.extract((0, -k)).is_zero()


def test_cross_ratio_against_its_defining_fraction():
    # s = (z0 (-) z1)/(z1 (+) z0): multiply back by the denominator and
    # compare with the numerator series (z0 - z1)(1 + beta z1)^{-1}
    beta = RING.beta()
    s = cross_ratio(RING, WIN, 0, 1)
    denom = TSeries(RING, WIN)
    denom.add_term((1, 0), RING.one())
    denom.add_term((0, 1), RING.one())
    denom.add_term((1, 1), beta)
    lhs = s * denom
    diff = TSeries(RING, WIN)
    diff.add_term((1, 0), RING.one())
    diff.add_term((0, 1), -RING.one())
    rhs = diff * unit_inverse_in_var(RING, WIN, 1, beta, 1)
    for a in range(-1, 2):
        for b in range(0, 3):
            assert lhs.extract((a, b)) == rhs.extract((a, b))


def test_product_of_geometrics_gives_complete_homogeneous():
    bs = RING.gens("b", 2)
    factors = [geometric(RING, WIN, 0, b, 1) for b in bs]
    s = product(factors)
    for k in range(0, 4):
        assert s.extract((k, 0)) == complete_sym(k, bs, RING)


def test_boundary_log_records_window_exit():
    b = RING.var("b1")
    s = geometric(RING, WIN, 1, b, -1)
    log = []
    s.extract((0, -5), boundary_log=log)
    # the requested exponent sits on the truncated edge
    assert log


def test_unit_inverse_in_var():
    beta = RING.beta()
    f = poly_in_var(RING, WIN, 0, {0: RING.one(), 1: beta})
    s = unit_inverse_in_var(RING, WIN, 0, beta, 1)
    prod = f * s
    assert prod.extract((0, 0)) == RING.one()
    assert prod.extract((1, 0)).is_zero()
    assert prod.extract((2, 0)).is_zero()
