"""Exact truncated polynomial arithmetic.

All computation in this package happens inside ``PolyRing``: a sparse
multivariate polynomial ring over the rationals in a distinguished
nilpotent variable ``beta`` (``beta**(K+1) == 0``) together with four
variable families ``b``, ``c``, ``x``, ``y``, each of which may carry a
total-degree cap.  Working modulo the ideal generated by ``beta**(K+1)``
and the over-cap monomials keeps every quantity finite while remaining
exact: an identity verified at caps (K, D) is an exact statement about
the corresponding truncation of the untruncated objects.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Mapping, Optional, Sequence

FAMILIES = ("b", "c", "x", "y")


@dataclass(frozen=True)
class TruncationProfile:
    """Truncation contract: beta is nilpotent of order K+1, and each
    variable family may have a total-degree cap (absent = uncapped)."""

    beta_order: int
    degree_caps: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.beta_order < 0:
            raise ValueError("beta_order must be non-negative")
        object.__setattr__(self, "degree_caps", dict(self.degree_caps))

    def cap(self, family: str) -> Optional[int]:
        return self.degree_caps.get(family)

    def meet(self, other: "TruncationProfile") -> "TruncationProfile":
        """Pointwise minimum of two profiles (the coarser truncation)."""
        caps = {}
        for fam in FAMILIES:
            a, b = self.cap(fam), other.cap(fam)
            if a is None:
                if b is not None:
                    caps[fam] = b
            elif b is None:
                caps[fam] = a
            else:
                caps[fam] = min(a, b)
        return TruncationProfile(min(self.beta_order, other.beta_order), caps)

    def widen(self, extra_beta=0, **extra_caps) -> "TruncationProfile":
        caps = dict(self.degree_caps)
        for fam, extra in extra_caps.items():
            if fam in caps:
                caps[fam] += extra
        return TruncationProfile(self.beta_order + extra_beta, caps)


class PolyRing:
    """Polynomial ring Q[beta, b_*, c_*, x_*, y_*] / truncation ideal.

    Variables are ordered (beta, b1..b_nb, c1..c_nc, x1..x_nx, y1..y_ny);
    exponent vectors are plain tuples in that order.
    """

    def __init__(self, profile: TruncationProfile, nb=0, nc=0, nx=0, ny=0):
        self.profile = profile
        self.counts = {"b": nb, "c": nc, "x": nx, "y": ny}
        names = ["beta"]
        self.family_index = {}
        for fam in FAMILIES:
            start = len(names)
            n = self.counts[fam]
            names.extend(f"{fam}{i}" for i in range(1, n + 1))
            self.family_index[fam] = tuple(range(start, start + n))
        self.vars = tuple(names)
        self.nvars = len(names)
        self.var_pos = {v: i for i, v in enumerate(names)}
        self._zero_exp = (0,) * self.nvars
        # caps as (index tuple, cap) pairs, checked on every stored monomial
        self._caps = [
            (self.family_index[fam], cap)
            for fam in FAMILIES
            if (cap := profile.cap(fam)) is not None and self.counts[fam] > 0
        ]
        self.beta_order = profile.beta_order

    # -- constructors ---------------------------------------------------
    def zero(self) -> "TPoly":
        return TPoly(self, {})

    def one(self) -> "TPoly":
        return TPoly(self, {self._zero_exp: Fraction(1)})

    def rational(self, q) -> "TPoly":
        q = Fraction(q)
        if q == 0:
            return self.zero()
        return TPoly(self, {self._zero_exp: q})

    def var(self, name: str) -> "TPoly":
        i = self.var_pos[name]
        exp = [0] * self.nvars
        exp[i] = 1
        return TPoly(self, {tuple(exp): Fraction(1)})

    def beta(self) -> "TPoly":
        return self.var("beta")

    def gens(self, family: str, n: Optional[int] = None) -> list:
        n = self.counts[family] if n is None else n
        return [self.var(f"{family}{i}") for i in range(1, n + 1)]

    def padded_gens(self, family: str, n: int) -> list:
        """First n entries of the family, with zeros past the ring's
        symbolic supply (finitely supported parameter sequences)."""
        k = self.counts[family]
        return [self.var(f"{family}{i}") if i <= k else self.zero() for i in range(1, n + 1)]

    def admissible(self, exp) -> bool:
        if exp[0] > self.beta_order:
            return False
        for idx, cap in self._caps:
            if sum(exp[i] for i in idx) > cap:
                return False
        return True

    def coerce(self, value) -> "TPoly":
        if isinstance(value, TPoly):
            if value.ring is not self:
                return value.convert(self)
            return value
        return self.rational(value)

    def with_profile(self, profile: TruncationProfile) -> "PolyRing":
        return PolyRing(profile, **{f"n{f}": self.counts[f] for f in FAMILIES})


class TPoly:
    """Immutable sparse polynomial: dict from exponent tuple to Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basics ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.ring.vars == other.ring.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.rational(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.ring.vars, exp)
                if e
            )
            bits.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(bits)

    # -- ring operations -------------------------------------------------
    def _check(self, other) -> "TPoly":
        other = self.ring.coerce(other)
        if other.ring.vars != self.ring.vars:
            raise ValueError("profile/ring mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            v = out.get(exp)
            if v is None:
                out[exp] = c
            else:
                v = v + c
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return TPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    @staticmethod
    def _int_scaled(terms):
        """(lcm of denominators, terms scaled to ints).  Coefficients may be
        ints or Fractions; ints expose numerator/denominator too."""
        den = 1
        for c in terms.values():
            d = c.denominator
            if d != 1:
                den = den * d // gcd(den, d)
        return den, {e: c.numerator * (den // c.denominator)
                     for e, c in terms.items()}

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            q = other.numerator if other.denominator == 1 else Fraction(other)
            return TPoly(self.ring, {e: c * q for e, c in self.terms.items()})
        other = self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero()
        if len(a) > len(b):
            a, b = b, a
        ring = self.ring
        K = ring.beta_order
        caps = ring._caps
        # scale both factors to integer coefficients: the accumulation loop
        # then runs on plain ints, with one renormalization at the end
        la, a = self._int_scaled(a)
        lb, b = self._int_scaled(b)
        nv = ring.nvars
        # pack exponents into single ints (strides wide enough for any sum
        # appearing in this product); the hot loop is then pure int work
        amax = [0] * nv
        bmax = [0] * nv
        for e in a:
            for i in range(1, nv):
                if e[i] > amax[i]:
                    amax[i] = e[i]
        for e in b:
            for i in range(1, nv):
                if e[i] > bmax[i]:
                    bmax[i] = e[i]
        strides = [0] * nv
        s = 1
        for i in range(nv - 1, 0, -1):
            strides[i] = s
            s *= amax[i] + bmax[i] + 1
        beta_stride = s

        single = len(caps) == 1
        if single:
            (cap_idx, cap_lim), = caps

        def layers(terms):
            by_beta = {}
            for e, c in terms.items():
                p = 0
                for i in range(1, nv):
                    v = e[i]
                    if v:
                        p += v * strides[i]
                if single:
                    d = sum(e[i] for i in cap_idx)
                elif caps:
                    d = tuple(sum(e[i] for i in idx) for idx, _ in caps)
                else:
                    d = 0
                by_beta.setdefault(e[0], []).append((p, d, c))
            if single:
                for lst in by_beta.values():
                    lst.sort(key=lambda t: t[1])
            return by_beta

        alayers = layers(a)
        blayers = layers(b)
        out = {}
        get = out.get
        lims = tuple(cap for _, cap in caps)
        ncaps = len(caps)
        for k1, arow in alayers.items():
            for k2, brow in blayers.items():
                if k1 + k2 > K:
                    continue
                base = (k1 + k2) * beta_stride
                if single:
                    for p1, d1, c1 in arow:
                        rem = cap_lim - d1
                        q1 = base + p1
                        for p2, d2, c2 in brow:
                            if d2 > rem:
                                break
                            key = q1 + p2
                            out[key] = get(key, 0) + c1 * c2
                elif caps:
                    for p1, d1, c1 in arow:
                        q1 = base + p1
                        for p2, d2, c2 in brow:
                            ok = True
                            for t in range(ncaps):
                                if d1[t] + d2[t] > lims[t]:
                                    ok = False
                                    break
                            if ok:
                                key = q1 + p2
                                out[key] = get(key, 0) + c1 * c2
                else:
                    for p1, _, c1 in arow:
                        q1 = base + p1
                        for p2, _, c2 in brow:
                            key = q1 + p2
                            out[key] = get(key, 0) + c1 * c2
        lab = la * lb
        res = {}
        for p, v in out.items():
            if not v:
                continue
            if lab != 1:
                v = v // lab if v % lab == 0 else Fraction(v, lab)
            e = [0] * nv
            e[0], rest = divmod(p, beta_stride)
            for i in range(1, nv):
                e[i], rest = divmod(rest, strides[i])
            res[tuple(e)] = v
        return TPoly(ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power; use unit_inverse")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            n >>= 1
            if base_needed and n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        raise TypeError("use exact_divide for polynomial division")

    # -- queries ---------------------------------------------------------
    def constant_term(self) -> Fraction:
        return self.terms.get(self.ring._zero_exp, Fraction(0))

    def degree(self, family: str) -> int:
        idx = self.ring.family_index[family]
        if not self.terms:
            return 0
        return max(sum(e[i] for i in idx) for e in self.terms)

    def beta_degree(self) -> int:
        return max((e[0] for e in self.terms), default=0)

    def coefficient_of(self, name: str, power: int) -> "TPoly":
        """Coefficient of var**power (a polynomial in the other variables,
        returned inside the same ring)."""
        i = self.ring.var_pos[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return TPoly(self.ring, out)

    def substitute(self, assignment: Mapping[str, "TPoly"]) -> "TPoly":
        """Substitute polynomials (or rationals) for the named variables."""
        ring = self.ring
        values = {ring.var_pos[k]: ring.coerce(v) for k, v in assignment.items()}
        pow_cache = {}

        def power(i, e):
            key = (i, e)
            if key not in pow_cache:
                pow_cache[key] = values[i] ** e
            return pow_cache[key]

        out = ring.zero()
        for exp, c in self.terms.items():
            rest = list(exp)
            factors = []
            for i in values:
                if exp[i]:
                    factors.append(power(i, exp[i]))
                    rest[i] = 0
            term = TPoly(ring, {tuple(rest): c})
            for f in factors:
                term = term * f
            out = out + term
        return out

    def convert(self, target: PolyRing) -> "TPoly":
        """Map into another ring by variable name; truncates to the target
        profile.  Raises if a variable with positive exponent is missing."""
        out = {}
        positions = []
        for i, v in enumerate(self.ring.vars):
            positions.append(target.var_pos.get(v))
        for exp, c in self.terms.items():
            new = [0] * target.nvars
            for i, e in enumerate(exp):
                if not e:
                    continue
                j = positions[i]
                if j is None:
                    raise ValueError(f"variable {self.ring.vars[i]} missing in target ring")
                new[j] = e
            t = tuple(new)
            if target.admissible(t):
                out[t] = out.get(t, Fraction(0)) + c
        return TPoly(target, {e: c for e, c in out.items() if c})

    def truncate(self, profile: TruncationProfile) -> "TPoly":
        """Truncate to a coarser profile (stays in a ring with that profile)."""
        ring = self.ring.with_profile(profile)
        return TPoly(ring, {e: c for e, c in self.terms.items() if ring.admissible(e)})

    def map_coefficients(self, fn) -> "TPoly":
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v:
                out[e] = v
        return TPoly(self.ring, out)

    # -- JSON wire format -------------------------------------------------
    def to_json_dict(self) -> dict:
        terms = [
            {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
            for e, c in sorted(self.terms.items())
        ]
        return {"vars": list(self.ring.vars), "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict, ring: PolyRing) -> "TPoly":
        if list(ring.vars) != list(data["vars"]):
            raise ValueError("variable list mismatch")
        terms = {}
        for t in data["terms"]:
            exp = tuple(t["exp"])
            c = Fraction(int(t["num"]), int(t["den"]))
            if c and ring.admissible(exp):
                terms[exp] = c
        return TPoly(ring, terms)


# -- K-theoretic formal group law ----------------------------------------

def oplus(a: TPoly, b) -> TPoly:
    """a (+) b = a + b + beta*a*b."""
    b = a.ring.coerce(b)
    return a + b + a.ring.beta() * a * b


def unit_inverse(v: TPoly) -> TPoly:
    """Inverse of u + beta*w with u a nonzero rational, exact mod beta^(K+1)."""
    u = v.constant_term()
    beta_free = all(e[0] == 0 or not any(e[1:]) for e in v.terms)
    # require v = u + (terms with positive beta power or positive variable
    # degree that vanish when raised to K+1)... the nilpotent part must be
    # beta-divisible for the geometric series to terminate.
    if u == 0:
        raise ValueError("not a unit: constant term is zero")
    ring = v.ring
    rest = v - ring.rational(u)
    if any(e[0] == 0 for e in rest.terms):
        raise ValueError("not a unit of the form u + beta*w")
    # v^{-1} = u^{-1} sum_k (-rest/u)^k, finite since rest is beta-divisible
    uinv = Fraction(1) / u
    acc = ring.one()
    term = ring.one()
    for _ in range(ring.beta_order):
        term = term * rest * (-uinv)
        if term.is_zero():
            break
        acc = acc + term
    return acc * uinv


def ominus(a: TPoly, b) -> TPoly:
    """a (-) b = (a - b) / (1 + beta*b), expanded under beta-nilpotency."""
    b = a.ring.coerce(b)
    ring = a.ring
    return (a - b) * unit_inverse(ring.one() + ring.beta() * b)


def oneg(a: TPoly) -> TPoly:
    """(-) a = 0 (-) a."""
    return ominus(a.ring.zero(), a)


# -- symmetric polynomial helpers ----------------------------------------

def elem_sym(j: int, alphabet: Sequence[TPoly], ring: PolyRing) -> TPoly:
    """Elementary symmetric polynomial e_j of the alphabet."""
    if j < 0 or j > len(alphabet):
        return ring.zero()
    if j == 0:
        return ring.one()
    # column DP: e[k] after adding each entry
    e = [ring.one()] + [ring.zero()] * j
    for a in alphabet:
        a = ring.coerce(a)
        for k in range(j, 0, -1):
            e[k] = e[k] + e[k - 1] * a
    return e[j]


def complete_sym(j: int, alphabet: Sequence[TPoly], ring: PolyRing) -> TPoly:
    """Complete homogeneous symmetric polynomial h_j of the alphabet."""
    if j < 0:
        return ring.zero()
    if j == 0:
        return ring.one()
    h = [ring.one()] + [ring.zero()] * j
    for a in alphabet:
        a = ring.coerce(a)
        for k in range(1, j + 1):
            h[k] = h[k] + h[k - 1] * a
    return h[j]


def supersym_h(p: int, bs: Sequence[TPoly], cs: Sequence[TPoly], ring: PolyRing) -> TPoly:
    """Coefficient of t^p in prod_j (1 - c_j t) / prod_i (1 - b_i t).

    This is the two-alphabet complete function appearing in the
    Jacobi-Trudi entries; it vanishes for p < 0.
    """
    if p < 0:
        return ring.zero()
    # h-layer of the b's convolved with signed e-layers of the c's
    out = ring.zero()
    for j in range(0, min(p, len(cs)) + 1):
        ej = elem_sym(j, cs, ring)
        if ej.is_zero():
            continue
        hp = complete_sym(p - j, bs, ring)
        if hp.is_zero():
            continue
        out = out + (ej * hp if j % 2 == 0 else -(ej * hp))
    return out


def factorial_power(x: TPoly, k: int, bs: Sequence[TPoly], kind: str) -> TPoly:
    """K-theoretic factorial powers.

    kind "A":  [x|b]^k  = (x(-)b_1)...(x(-)b_k)          (k >= 0)
    kind "GQ": [[x|b]]^k = (x(+)x)(x(-)b_1)...(x(-)b_{k-1})  (k >= 1)
    kind "GP": x * [x|b]^{k-1}                            (k >= 1)
    """
    ring = x.ring
    if kind == "A":
        if k < 0:
            raise ValueError("k must be >= 0 for kind A")
        if k > len(bs):
            raise ValueError("alphabet too short")
        out = ring.one()
        for j in range(k):
            out = out * ominus(x, bs[j])
        return out
    if k < 1:
        raise ValueError("k must be >= 1 for kinds GQ/GP")
    if k - 1 > len(bs):
        raise ValueError("alphabet too short")
    if kind == "GQ":
        out = oplus(x, x)
    elif kind == "GP":
        out = x
    else:
        raise ValueError(f"unknown kind {kind!r}")
    for j in range(k - 1):
        out = out * ominus(x, bs[j])
    return out


# -- determinants and exact division -------------------------------------

def determinant(rows: Sequence[Sequence[TPoly]]) -> TPoly:
    """Determinant by expansion along the first row, memoized on column
    subsets (fine for the small matrices appearing here)."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    ring = rows[0][0].ring
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix not square")
    cache = {}

    def minor(i, cols):
        if not cols:
            return ring.one()
        key = (i, cols)
        if key in cache:
            return cache[key]
        acc = ring.zero()
        sign = 1
        for t, j in enumerate(cols):
            a = rows[i][j]
            if not a.is_zero():
                sub = minor(i + 1, cols[:t] + cols[t + 1:])
                acc = acc + (a * sub if sign > 0 else -(a * sub))
            sign = -sign
        cache[key] = acc
        return acc

    return minor(0, tuple(range(n)))


class DivisionError(ArithmeticError):
    pass


def _beta_layers(f: TPoly):
    layers = {}
    for e, c in f.terms.items():
        k = e[0]
        e2 = (0,) + e[1:]
        layers.setdefault(k, {})[e2] = c
    return layers


def _divide_beta_free(f_terms: dict, g_terms: dict, ring: PolyRing) -> dict:
    """Exact division of beta-free term dicts, lex leading-term algorithm."""
    if not f_terms:
        return {}
    g_lead = max(g_terms)
    g_lc = Fraction(g_terms[g_lead])
    work = dict(f_terms)
    # lazy max-heap of candidate leading exponents (stale entries skipped)
    heap = [tuple(-x for x in e) for e in work]
    heapq.heapify(heap)
    q = {}
    while work:
        f_lead = None
        while heap:
            cand = tuple(-x for x in heap[0])
            if cand in work:
                f_lead = cand
                break
            heapq.heappop(heap)
        exp = tuple(map(int.__sub__, f_lead, g_lead))
        if any(e < 0 for e in exp):
            raise DivisionError("not divisible in the truncated ring")
        coeff = work[f_lead] / g_lc
        q[exp] = coeff
        for ge, gc in g_terms.items():
            key = tuple(map(int.__add__, exp, ge))
            v = work.get(key, Fraction(0)) - coeff * gc
            if v:
                if key not in work:
                    heapq.heappush(heap, tuple(-x for x in key))
                work[key] = v
            else:
                work.pop(key, None)
    return q


def exact_divide(f: TPoly, g: TPoly) -> TPoly:
    """Exact division f / g in the truncated ring.

    The divisor must have a nonzero beta-free part (after pulling out a
    common beta power); divisibility failures raise, signalling an upstream
    bug -- Vandermonde-type divisions in this artifact are always exact.
    """
    ring = f.ring
    if g.is_zero():
        raise DivisionError("division by zero")
    if f.is_zero():
        return ring.zero()
    f_layers = _beta_layers(f)
    g_layers = _beta_layers(g)
    g_min = min(g_layers)
    if g_min > 0:
        f_min = min(f_layers)
        if f_min < g_min:
            raise DivisionError("beta-order mismatch")
        f_layers = {k - g_min: v for k, v in f_layers.items()}
        g_layers = {k - g_min: v for k, v in g_layers.items()}
    g0 = g_layers[0]
    K = ring.beta_order
    q_layers = {}
    max_f = max(f_layers)
    for k in range(0, K + 1):
        rhs = dict(f_layers.get(k, {}))
        for t, qt in q_layers.items():
            gl = g_layers.get(k - t)
            if not gl:
                continue
            for e1, c1 in qt.items():
                for e2, c2 in gl.items():
                    key = tuple(map(int.__add__, e1, e2))
                    v = rhs.get(key, Fraction(0)) - c1 * c2
                    if v:
                        rhs[key] = v
                    else:
                        rhs.pop(key, None)
        if rhs:
            q_layers[k] = _divide_beta_free(rhs, g0, ring)
        if k >= max_f and all(t <= k for t in q_layers):
            # remaining layers are zero once the recursion stabilizes
            pass
    out = {}
    for k, layer in q_layers.items():
        for e, c in layer.items():
            exp = (k + e[0],) + e[1:]
            if ring.admissible(exp):
                out[exp] = c
    return TPoly(ring, out)


def binomial(n: int, k: int) -> Fraction:
    """Generalized binomial: C(-n, k) = (-1)^k C(n+k-1, k) for n > 0."""
    if k < 0:
        return Fraction(0)
    if n >= 0:
        return Fraction(comb(n, k)) if k <= n else Fraction(0)
    m = -n
    return Fraction((-1) ** k * comb(m + k - 1, k))
