"""Truncated multivariate Laurent series with polynomial coefficients.

A ``TSeries`` is a finite window of a Laurent expansion in a tuple of
auxiliary variables (z1..zr or u1..ur), with coefficients in a
``PolyRing``.  Each variable carries an exponent window [lo, hi]; terms
falling outside any window are dropped during multiplication.  Every
generating-function coefficient extraction in this package reduces to
building the factors of a product as TSeries in a fixed expansion
direction and reading off one coefficient.

The windows are part of the computation's truncation contract: the
acceptance harness re-runs extractions with widened windows and checks
the answers are unchanged, and ``extract`` flags reads near a window
boundary.
"""

from __future__ import annotations

from fractions import Fraction

from .rings import PolyRing, TPoly, oplus, ominus, unit_inverse


class WindowTouch(Warning):
    pass


class TSeries:
    """terms: dict mapping exponent tuples (ints, may be negative) to TPoly."""

    __slots__ = ("ring", "nvars", "windows", "terms")

    def __init__(self, ring: PolyRing, windows, terms=None):
        self.ring = ring
        self.windows = tuple((int(lo), int(hi)) for lo, hi in windows)
        self.nvars = len(self.windows)
        self.terms = {} if terms is None else terms

    def _inside(self, exp) -> bool:
        for e, (lo, hi) in zip(exp, self.windows):
            if e < lo or e > hi:
                return False
        return True

    @classmethod
    def constant(cls, ring, windows, poly: TPoly) -> "TSeries":
        s = cls(ring, windows)
        if not poly.is_zero():
            s.terms[(0,) * len(s.windows)] = poly
        return s

    @classmethod
    def one(cls, ring, windows) -> "TSeries":
        return cls.constant(ring, windows, ring.one())

    def add_term(self, exp, poly: TPoly):
        exp = tuple(exp)
        if poly.is_zero() or not self._inside(exp):
            return
        cur = self.terms.get(exp)
        if cur is None:
            self.terms[exp] = poly
        else:
            cur = cur + poly
            if cur.is_zero():
                del self.terms[exp]
            else:
                self.terms[exp] = cur

    def __add__(self, other: "TSeries") -> "TSeries":
        out = TSeries(self.ring, self.windows, dict(self.terms))
        for e, p in other.terms.items():
            out.add_term(e, p)
        return out

    def __mul__(self, other) -> "TSeries":
        if isinstance(other, TPoly):
            out = TSeries(self.ring, self.windows)
            for e, p in self.terms.items():
                out.add_term(e, p * other)
            return out
        out = TSeries(self.ring, self.windows)
        terms = out.terms
        inside = out._inside
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for e1, p1 in a.items():
            for e2, p2 in b.items():
                exp = tuple(map(int.__add__, e1, e2))
                if not inside(exp):
                    continue
                v = p1 * p2
                if v.is_zero():
                    continue
                cur = terms.get(exp)
                if cur is None:
                    terms[exp] = v
                else:
                    cur = cur + v
                    if cur.is_zero():
                        del terms[exp]
                    else:
                        terms[exp] = cur
        return out

    def extract(self, exp, boundary_log=None) -> TPoly:
        """Read one coefficient; optionally record boundary proximity."""
        exp = tuple(exp)
        if boundary_log is not None:
            for e, (lo, hi) in zip(exp, self.windows):
                if e - lo <= 0 or hi - e <= 0:
                    boundary_log.append((exp, self.windows))
                    break
        return self.terms.get(exp, self.ring.zero())

    def project(self, var_index: int, value: int) -> "TSeries":
        """Fix one series variable to a single exponent and drop it.

        Used after all factors involving that variable have been
        multiplied in; shrinks the series by one dimension.
        """
        windows = self.windows[:var_index] + self.windows[var_index + 1:]
        out = TSeries(self.ring, windows)
        for e, p in self.terms.items():
            if e[var_index] == value:
                out.add_term(e[:var_index] + e[var_index + 1:], p)
        return out


# -- factor builders ------------------------------------------------------
#
# Conventions: the series variables are ordered so that earlier variables
# are "large" (expansions are in ratios later/earlier).  Builders place a
# univariate or bivariate factor into the full r-variable window grid.


def _univar(ring, windows, i, coeffs: dict) -> TSeries:
    s = TSeries(ring, windows)
    r = len(windows)
    for k, p in coeffs.items():
        exp = [0] * r
        exp[i] = k
        s.add_term(exp, p)
    return s


def geometric(ring, windows, i, ratio_poly: TPoly, power_sign: int) -> TSeries:
    """1/(1 - a*z^s) = sum_k a^k z^{s*k} for s = power_sign (+1 or -1)."""
    lo, hi = windows[i]
    kmax = hi if power_sign > 0 else -lo
    coeffs = {}
    acc = ring.one()
    for k in range(0, kmax + 1):
        if acc.is_zero():
            break
        coeffs[power_sign * k] = acc
        acc = acc * ratio_poly
    return _univar(ring, windows, i, coeffs)


def poly_in_var(ring, windows, i, coeffs: dict) -> TSeries:
    """Finite Laurent polynomial sum_k coeffs[k] * z_i^k."""
    return _univar(ring, windows, i, coeffs)


def unit_inverse_in_var(ring, windows, i, w_poly: TPoly, sign: int, const=1) -> TSeries:
    """(const + w*z_i^sign)^{-1} expanded in powers of z_i^sign.

    Finite only when w carries beta or capped-variable content, or when
    the window cuts it; both are sound under the window contract.
    """
    c = Fraction(const)
    lo, hi = windows[i]
    kmax = hi if sign > 0 else -lo
    coeffs = {}
    acc = ring.rational(1 / c)
    ratio = w_poly * (-1 / c)
    for k in range(0, kmax + 1):
        if acc.is_zero():
            break
        coeffs[sign * k] = acc
        acc = acc * ratio
    return _univar(ring, windows, i, coeffs)


def cross_ratio(ring, windows, big: int, small: int) -> TSeries:
    """(z_big (-) z_small) / (z_small (+) z_big), expanded for
    |z_small| << |z_big|.

    Factored form: (1 - t) * (1 + beta*z_small)^{-1} * (1 + t*(1+beta*z_big))^{-1}
    with t = z_small / z_big.  Exponents produced: z_big <= 0 (plus up to K
    positive from the beta tail), z_small >= 0.
    """
    beta = ring.beta()
    r = len(windows)
    lo_b, hi_b = windows[big]
    lo_s, hi_s = windows[small]
    kmax = min(-lo_b + ring.beta_order, hi_s)

    # (1 + t(1+beta z_big))^{-1} = sum_k (-1)^k t^k (1+beta z_big)^k
    out = TSeries(ring, windows)
    from math import comb as _comb
    for k in range(0, kmax + 1):
        # (1+beta z_big)^k = sum_j C(k,j) beta^j z_big^j
        for j in range(0, min(k, ring.beta_order) + 1):
            exp = [0] * r
            exp[small] = k
            exp[big] = -k + j
            coeff = ring.rational(Fraction((-1) ** k * _comb(k, j))) * beta ** j
            out.add_term(exp, coeff)
    # multiply by (1 - t)
    lin = TSeries(ring, windows)
    lin.add_term((0,) * r, ring.one())
    e = [0] * r
    e[small] = 1
    e[big] = -1
    lin.add_term(e, -ring.one())
    out = out * lin
    # multiply by (1 + beta z_small)^{-1}
    inv = unit_inverse_in_var(ring, windows, small, beta, +1)
    return out * inv


def product(factors) -> TSeries:
    acc = None
    for f in factors:
        acc = f if acc is None else acc * f
    return acc
