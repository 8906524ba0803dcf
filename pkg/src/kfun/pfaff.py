"""Pfaffians and the coefficient-extraction route to gq via Pfaffians.

The central combinatorial fact: for an even number of series factors, the
multivariate coefficient extraction of prod_i G^i(u_i) against the
antisymmetric kernel prod_{i<j}(u_j - u_i)/(u_j (+) u_i) factors into a
Pfaffian of pairwise two-variable extractions.  Specializing the factors
to dressed one-row gq series yields the Pfaffian formula for gq_lam(y|b).
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import strict
from .rings import PolyRing, TPoly, binomial, complete_sym, unit_inverse
from .series import TSeries, cross_ratio, poly_in_var


class SkewMatrix:
    """Even-size skew-symmetric matrix given by its upper triangle."""

    __slots__ = ("size", "upper", "ring")

    def __init__(self, size: int, ring: PolyRing, upper=None):
        if size % 2 != 0:
            raise ValueError("size must be even")
        self.size = size
        self.ring = ring
        self.upper = {} if upper is None else upper

    def set(self, i, j, poly: TPoly):
        if not (0 <= i < j < self.size):
            raise ValueError("upper triangle only")
        self.upper[(i, j)] = poly

    def get(self, i, j) -> TPoly:
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.upper.get((i, j), self.ring.zero())
        return -self.upper.get((j, i), self.ring.zero())


def pfaffian_from_pairs(pair: dict, size: int, ring: PolyRing) -> TPoly:
    """Pfaffian from the dict {(i, j): entry, i < j}; expansion along the
    first remaining row, memoized on the active index subset."""
    if size % 2 != 0:
        raise ValueError("size must be even")
    cache = {}

    def pf(active: tuple) -> TPoly:
        if not active:
            return ring.one()
        if active in cache:
            return cache[active]
        i = active[0]
        acc = ring.zero()
        sign = 1
        for t in range(1, len(active)):
            j = active[t]
            a = pair.get((i, j))
            if a is not None and not a.is_zero():
                rest = active[1:t] + active[t + 1:]
                sub = pf(rest)
                term = a * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        cache[active] = acc
        return acc

    return pf(tuple(range(size)))


def pfaffian(A: SkewMatrix) -> TPoly:
    return pfaffian_from_pairs(A.upper, A.size, A.ring)


# -- the pairwise kernel ---------------------------------------------------

def u_cross_series(ring, windows, small: int, big: int) -> TSeries:
    """(u_big - u_small)/(u_big (+) u_small) expanded for
    |u_small| >> |u_big|^... no: for the u-ordering, the later (big) index
    dominates; equals cross_ratio * (1 + beta*u_small)."""
    s = cross_ratio(ring, windows, big, small)
    lin = poly_in_var(ring, windows, small, {0: ring.one(), 1: ring.beta()})
    return s * lin


def knuth_pair_extract(Gi: TSeries, Gj: TSeries, lam_i: int, lam_j: int) -> TPoly:
    """[u_i^{-lam_i} u_j^{-lam_j}] G^i(u_i) G^j(u_j) (u_j-u_i)/(u_j (+) u_i)
    for a 2-variable pair (variable 0 = i, variable 1 = j)."""
    ring = Gi.ring
    windows = Gi.windows
    prod = Gi * Gj * u_cross_series(ring, windows, 0, 1)
    return prod.extract((-lam_i, -lam_j))


def knuth_check(lam, factor_coeffs, ring: PolyRing, slack=2):
    """Compare both sides of the extraction identity for the supplied
    factor series; returns (lhs, rhs).

    ``factor_coeffs``: list of dicts {exponent: TPoly}, one per part.
    """
    lam = strict(lam)
    r = len(lam)
    if r % 2 != 0:
        raise ValueError("even length required")
    lo = min(min(c) for c in factor_coeffs)
    hi = max(max(c) for c in factor_coeffs)
    K = ring.beta_order

    # left side: full r-variable product, projected variable by variable
    windows = [(lo * r - lam_i - slack, hi * r + K + slack) for lam_i in lam]
    acc = None
    for i in range(r):
        cur = windows[i:]
        f = poly_in_var(ring, cur, 0, factor_coeffs[i])
        acc = f if acc is None else acc * f
        for j in range(i + 1, r):
            acc = acc * u_cross_series(ring, cur, 0, j - i)
        acc = acc.project(0, -lam[i])
    lhs = acc.extract(())

    # right side: Pfaffian of the pairwise extractions
    pair = {}
    for i in range(r):
        for j in range(i + 1, r):
            w2 = [(lo * 2 - lam[i] - slack, hi * 2 + K + slack),
                  (lo * 2 - lam[j] - slack, hi * 2 + K + slack)]
            Gi = poly_in_var(ring, w2, 0, factor_coeffs[i])
            Gj = poly_in_var(ring, w2, 1, factor_coeffs[j])
            pair[(i, j)] = knuth_pair_extract(Gi, Gj, lam[i], lam[j])
    rhs = pfaffian_from_pairs(pair, r, ring)
    return lhs, rhs


# -- Pfaffian formula for gq ----------------------------------------------

def a_coeffs(ring: PolyRing, i: int, j: int, pmin: int, pmax: int, qmax: int, widen=0):
    """Coefficients a^{i,j}_{p,q} of z_i^p z_j^q in
    (1+beta z_i)^{1-i} (1+beta z_j)^{1-j} (z_i - z_j)/(z_i (+) z_j),
    expanded with z_j small (q >= 0, p >= -q).  1-based i < j."""
    K = ring.beta_order
    beta = ring.beta()
    windows = [(pmin - 1 - widen, max(pmax, K) + 1 + widen), (0, qmax + widen)]
    # cross factor with z_i big: (z_i - z_j)/(z_i (+) z_j) = cross * (1+beta z_j)
    s = cross_ratio(ring, windows, 0, 1)
    s = s * poly_in_var(ring, windows, 1, {0: ring.one(), 1: beta})
    for var, power in ((0, i - 1), (1, j - 1)):
        if power == 0:
            continue
        # (1 + beta z)^{-power} expanded binomially, finite by beta-nilpotency
        coeffs = {k: ring.rational(binomial(-power, k)) * beta ** k for k in range(K + 1)}
        s = s * poly_in_var(ring, windows, var, coeffs)
    out = {}
    for q in range(0, qmax + 1):
        for p in range(pmin, max(pmax, K) + 1):
            v = s.extract((p, q))
            if not v.is_zero():
                out[(p, q)] = v
    return out


def gq_dressed_coeff(ring: PolyRing, k: int, m: int, gq_list) -> TPoly:
    """gq^{(k)}_m = prod_{j<k}(1+beta b_j) sum_j h_j(b_1..b_k) gq_{m+j},
    for any integer m.  The j-sum is finite because gq_N vanishes beyond
    the ring's y-cap + beta-order; for m < 0 the value is genuinely
    nonzero (it starts with h_{-m}(b))."""
    bs = ring.padded_gens("b", k)
    pref = ring.one()
    for b in bs[:-1]:
        pref = pref * (ring.one() + ring.beta() * b)
    acc = ring.zero()
    for j in range(max(0, -m), len(gq_list) - m):
        g = gq_list[m + j]
        if g.is_zero():
            continue
        hj = complete_sym(j, bs, ring) if k >= 1 else (ring.one() if j == 0 else ring.zero())
        if not hj.is_zero():
            acc = acc + hj * g
    return pref * acc


def gq_list_dressed(ring: PolyRing, k: int, mmax: int, gq_list) -> list:
    """[gq^{(k)}_0, ..., gq^{(k)}_mmax]:
    gq^{(k)}_m = prod_{j<k}(1+beta b_j) sum_j h_j(b_1..b_k) gq_{m+j}."""
    if k == 0:
        return [gq_list[m] if m < len(gq_list) else ring.zero() for m in range(mmax + 1)]
    bs = ring.padded_gens("b", k)
    pref = ring.one()
    for b in bs[:-1]:
        pref = pref * (ring.one() + ring.beta() * b)
    out = []
    for m in range(mmax + 1):
        acc = ring.zero()
        for j in range(0, len(gq_list) - m):
            g = gq_list[m + j]
            if g.is_zero():
                continue
            hj = complete_sym(j, bs, ring)
            if not hj.is_zero():
                acc = acc + hj * g
        out.append(pref * acc)
    return out


def pair_entry_series(ring: PolyRing, li, lj, pos_i, pos_j, gq_list, pad=2) -> TPoly:
    """[z_i^{li} z_j^{lj}] of gq^{(li)}(z_i) gq^{(lj)}(z_j) times the
    position-dressed kernel (1+beta z_i)^{1-i}(1+beta z_j)^{1-j}
    (z_i - z_j)/(z_i (+) z_j), expanded with z_j small."""
    from .gfun import _gq_row_series

    K = ring.beta_order
    beta = ring.beta()
    D = ring.profile.cap("y")
    M = D + K + pad
    windows = [(li - M, M), (lj - M, M)]
    bs = ring.padded_gens("b", max(li, lj, 1))

    def dressing(wins, var, pos):
        coeffs = {k: ring.rational(binomial(-(pos - 1), k)) * beta ** k for k in range(K + 1)}
        return poly_in_var(ring, wins, var, coeffs)

    # all factors touching the small variable first, then project it away
    prod = _gq_row_series(ring, windows, 1, lj, gq_list, bs)
    if pos_j > 1:
        prod = prod * dressing(windows, 1, pos_j)
    prod = prod * cross_ratio(ring, windows, 0, 1)
    prod = prod * poly_in_var(ring, windows, 1, {0: ring.one(), 1: beta})
    prod = prod.project(1, lj)
    prod = prod * _gq_row_series(ring, [windows[0]], 0, li, gq_list, bs)
    if pos_i > 1:
        prod = prod * dressing([windows[0]], 0, pos_i)
    return prod.extract((li,))


def pair_entry_sum(ring: PolyRing, li, lj, pos_i, pos_j, gq_list, full_region=True, extra=0) -> TPoly:
    """The entry as the double sum over a-coefficients.

    With ``full_region`` the sum runs over the kernel's whole support
    within the window (q >= 0, -q <= p <= 2K+extra), using the
    negative-index dressed coefficients; this agrees with
    ``pair_entry_series``.  With full_region=False the sum is cut at
    q <= lj, p <= li -- the region displayed alongside the formula --
    which discards genuinely nonzero negative-index contributions and
    is kept only so tests can document the discrepancy.
    """
    K = ring.beta_order
    D = ring.profile.cap("y")
    if full_region:
        qmax = lj + D + K + extra
        pmax = 2 * K + extra
    else:
        qmax = lj
        pmax = li
    a = a_coeffs(ring, pos_i, pos_j, -qmax, pmax, qmax, widen=extra)
    entry = ring.zero()
    cache = {}

    def dressed(k, m):
        if (k, m) not in cache:
            cache[(k, m)] = gq_dressed_coeff(ring, k, m, gq_list)
        return cache[(k, m)]

    for (p, q), apq in a.items():
        if q > qmax or p < -q or p > pmax:
            continue
        gim = dressed(li, li - p)
        if gim.is_zero():
            continue
        gjm = dressed(lj, lj - q)
        if gjm.is_zero():
            continue
        entry = entry + apq * gim * gjm
    return entry


def gq_pfaffian(lam, ring: PolyRing, pad=2) -> TPoly:
    """gq_lam(y|b) as the Pfaffian of pairwise two-variable extractions.

    Entries are computed by windowed series extraction (the sound
    realization of the pairwise coefficient formula; the naive finite
    sum bounds drop nonzero negative-index terms, see pair_entry_sum).
    """
    from .gfun import gq_one_row_list

    lam = strict(lam)
    if not lam:
        return ring.one()
    r = len(lam)
    rp = r if r % 2 == 0 else r + 1
    parts = lam + (0,) * (rp - r)
    D = ring.profile.cap("y")
    if D is None:
        raise ValueError("y-cap required")
    gq_list = gq_one_row_list(ring, D + ring.beta_order + pad)
    pair = {}
    for i in range(rp):
        for j in range(i + 1, rp):
            pair[(i, j)] = pair_entry_series(ring, parts[i], parts[j], i + 1, j + 1, gq_list, pad=pad)
    return pfaffian_from_pairs(pair, rp, ring)
