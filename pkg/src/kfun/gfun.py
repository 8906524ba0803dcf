"""The four function families and their independent construction routes.

Families:
  "GQ", "GP": polynomial (x-side) families with parameters b.
  "gq", "gp": dual (y-side) completed families with parameters b.

Routes implemented here:
  * direct_sym       -- symmetrization over S_n (GQ/GP, definitional)
  * extract_coeff    -- generating-series coefficient extraction (all four)
  * kernel_solve     -- triangular solve against the Cauchy kernel (gq/gp)
  * build_by_T       -- raising-operator recursion from 1 (gq/gp)

Route independence is what the verification suites lean on: agreement of
unrelated constructions at the stated truncation caps.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .combinat import strict, strict_partitions_in, w_lambda_word
from .rings import (
    PolyRing,
    TPoly,
    TruncationProfile,
    complete_sym,
    exact_divide,
    ominus,
    oneg,
    oplus,
    unit_inverse,
)
from .series import TSeries, cross_ratio, geometric, poly_in_var, unit_inverse_in_var


def geometric_sum(term: TPoly) -> TPoly:
    """sum_k term^k, finite by the ring's caps (term must be nilpotent)."""
    ring = term.ring
    acc = ring.one()
    t = term
    guard = 0
    while not t.is_zero():
        acc = acc + t
        t = t * term
        guard += 1
        if guard > 10000:
            raise RuntimeError("geometric sum does not terminate under caps")
    return acc


# -- direct symmetrization ------------------------------------------------

def _row_factor(family: str, x: TPoly, k: int, bs) -> TPoly:
    ring = x.ring
    if k == 0:
        return ring.one()
    if family == "GQ":
        out = oplus(x, x)
    elif family == "GP":
        out = x
    else:
        raise ValueError(family)
    for j in range(k - 1):
        out = out * ominus(x, bs[j])
    return out


def direct_sym(family: str, lam, ring: PolyRing, n: int, widen_for_cap=True) -> TPoly:
    """GX_lam(x_1..x_n | b) by antisymmetrization.

    Equals (1/(n-r)!) * sum over S_n of the row factors times the
    oplus/ominus cross ratios; computed denominator-free by clearing the
    full Vandermonde.  If the ring caps x-degrees, the numerator is built
    with the cap widened by deg(Vandermonde) so the quotient is exact.
    """
    lam = strict(lam)
    r = len(lam)
    if n < r:
        raise ValueError("need at least l(lam) variables")
    work = ring
    v_deg = n * (n - 1) // 2
    if widen_for_cap and ring.profile.cap("x") is not None:
        work = ring.with_profile(ring.profile.widen(x=v_deg + n))
    xs = work.gens("x", n)
    bs = work.padded_gens("b", max((lam[0] - 1) if lam else 0, 0))
    beta = work.beta()
    one = work.one()

    rows = [_row_factor(family, xs[i], lam[i], bs) if i < r else one for i in range(n)]
    base = one
    for i in range(n):
        for j in range(i + 1, n):
            if i < r:
                base = base * oplus(xs[i], xs[j]) * (one + beta * xs[j])
            else:
                base = base * (xs[i] - xs[j])

    from itertools import permutations as _perms

    g = base
    for i in range(r):
        g = g * rows[i]
    numer = work.zero()
    names = [f"x{i}" for i in range(1, n + 1)]
    for perm in _perms(range(n)):
        sign = 1
        for a in range(n):
            for bb in range(a + 1, n):
                if perm[a] > perm[bb]:
                    sign = -sign
        term = g.substitute({names[i]: xs[perm[i]] for i in range(n)})
        numer = numer + (term if sign > 0 else -term)
    vand = one
    for i in range(n):
        for j in range(i + 1, n):
            vand = vand * (xs[i] - xs[j])
    q = exact_divide(numer, vand) / factorial(n - r)
    if work is not ring:
        q = TPoly(ring, {e: c for e, c in q.terms.items() if ring.admissible(e)})
    return q


def factorial_grothendieck(part, ring: PolyRing, r: int) -> TPoly:
    """Type-A factorial Grothendieck polynomial G_part(x_1..x_r|b) for an
    ordinary partition of length <= r, by antisymmetrization:
    sum_w w( prod_i [x_i|b]^{part_i + r - i} / prod_{i<j} (x_i (-) x_j) )."""
    part = tuple(part) + (0,) * r
    if any(part[i] < part[i + 1] for i in range(r - 1)) or any(p < 0 for p in part):
        raise ValueError("not a partition")
    work = ring
    v_deg = r * (r - 1) // 2
    if ring.profile.cap("x") is not None:
        work = ring.with_profile(ring.profile.widen(x=v_deg + r))
    xs = work.gens("x", r)
    bs = work.padded_gens("b", part[0] + r - 1)
    beta = work.beta()
    one = work.one()
    g = one
    for i in range(r):
        k = part[i] + r - 1 - i
        for j in range(k):
            g = g * ominus(xs[i], bs[j])
    for i in range(r):
        for j in range(i + 1, r):
            g = g * (one + beta * xs[j])
    from itertools import permutations as _perms

    numer = work.zero()
    names = [f"x{i}" for i in range(1, r + 1)]
    for perm in _perms(range(r)):
        sign = 1
        for a in range(r):
            for bb in range(a + 1, r):
                if perm[a] > perm[bb]:
                    sign = -sign
        term = g.substitute({names[i]: xs[perm[i]] for i in range(r)})
        numer = numer + (term if sign > 0 else -term)
    vand = one
    for i in range(r):
        for j in range(i + 1, r):
            vand = vand * (xs[i] - xs[j])
    q = exact_divide(numer, vand)
    if work is not ring:
        q = TPoly(ring, {e: c for e, c in q.terms.items() if ring.admissible(e)})
    return q


# -- Cauchy kernel and Omega factors --------------------------------------

def omega_factor(bval: TPoly, ring: PolyRing, ny=None) -> TPoly:
    """Omega(b|y) = prod_j (1 - (-)b y_j) / (1 - b y_j), expanded to the
    ring's y-cap."""
    ys = ring.gens("y", ny)
    beta = ring.beta()
    one = ring.one()
    inv = unit_inverse(one + beta * bval)
    out = one
    for y in ys:
        out = out * (one + beta * bval + bval * y) * inv * geometric_sum(bval * y)
    return out


def cauchy_kernel(ring: PolyRing) -> TPoly:
    """prod_{i,j} (1 - (-)x_i y_j) / (1 - x_i y_j) at the ring's caps."""
    xs = ring.gens("x")
    out = ring.one()
    for x in xs:
        out = out * omega_factor(x, ring)
    return out


# -- series routes --------------------------------------------------------

def gq_one_row_list(ring: PolyRing, mmax: int) -> list:
    """[gq_0(y), gq_1(y), ..., gq_mmax(y)]: coefficients of
    gq(z) = prod_j (1 - y_j zbar)/(1 - y_j z)."""
    beta = ring.beta()
    one = ring.one()
    windows = [(0, mmax)]
    s = TSeries.one(ring, windows)
    inv = unit_inverse_in_var(ring, windows, 0, beta, +1)
    for y in ring.gens("y"):
        s = s * poly_in_var(ring, windows, 0, {0: one, 1: beta + y})
        s = s * geometric(ring, windows, 0, y, +1)
        s = s * inv
    return [s.extract((m,)) for m in range(mmax + 1)]


def gp_one_row_list(ring: PolyRing, mmax: int) -> list:
    """Coefficients of gp(z) = (2 + beta z)^{-1} (gq(z) + 1 + beta z)."""
    gq = gq_one_row_list(ring, mmax)
    beta = ring.beta()
    one = ring.one()
    windows = [(0, mmax)]
    s = TSeries(ring, windows)
    for m, g in enumerate(gq):
        s.add_term((m,), g)
    s.add_term((0,), one)
    s.add_term((1,), beta)
    s = s * unit_inverse_in_var(ring, windows, 0, beta, +1, const=2)
    return [s.extract((m,)) for m in range(mmax + 1)]


def _gq_row_series(ring, windows, i, k, gq_list, bs) -> TSeries:
    """gq^{(k)}(z_i): the one-row series dressed with the k-th parameter
    shift, prod_{j<=k} z/(z - b_j) * prod_{j<k} (1 + beta b_j)."""
    beta = ring.beta()
    s = TSeries(ring, windows)
    for m, g in enumerate(gq_list):
        e = [0] * len(windows)
        e[i] = m
        s.add_term(e, g)
    pref = ring.one()
    for j in range(k - 1):
        pref = pref * (ring.one() + beta * bs[j])
    s = s * pref
    for j in range(k):
        if not bs[j].is_zero():
            s = s * geometric(ring, windows, i, bs[j], -1)
    return s


def extract_gq(lam, ring: PolyRing, pad=2, boundary_log=None) -> TPoly:
    """gq_lam(y|b) as [z^lam] of the dressed product with cross ratios."""
    lam = strict(lam)
    r = len(lam)
    if r == 0:
        return ring.one()
    D = ring.profile.cap("y")
    if D is None:
        raise ValueError("y-cap required for series extraction")
    M = D + ring.beta_order + pad
    bs = ring.padded_gens("b", lam[0])
    gq_list = gq_one_row_list(ring, M)
    windows = [(lam_i - M, M) for lam_i in lam]
    acc = None
    target = list(lam)
    for i in range(r):
        cur_windows = windows[i:]
        f = _gq_row_series(ring, cur_windows, 0, lam[i], gq_list, bs)
        acc = f if acc is None else acc * f
        for j in range(i + 1, r):
            acc = acc * cross_ratio(ring, cur_windows, 0, j - i)
        if boundary_log is not None:
            lo, hi = cur_windows[0]
            if any(e[0] in (lo, hi) for e in acc.terms):
                boundary_log.append((i, cur_windows[0]))
        acc = acc.project(0, target[i])
    return acc.extract(())


def _gx_u_series(family, ring, windows, i) -> TSeries:
    """GQ(u^{-1}) or GP(u^{-1}) as a series in u_i with x-coefficients."""
    beta = ring.beta()
    one = ring.one()
    s = TSeries.one(ring, windows)
    for x in ring.gens("x"):
        s = s * poly_in_var(ring, windows, i, {0: one + beta * x, -1: x})
        s = s * (one + beta * x)
        s = s * geometric(ring, windows, i, x, -1)
    s = s * unit_inverse_in_var(ring, windows, i, beta, +1)
    if family == "GP":
        s = s * unit_inverse_in_var(ring, windows, i, beta, +1, const=2)
    elif family != "GQ":
        raise ValueError(family)
    return s


def extract_GX(family, lam, ring: PolyRing, pad=2) -> TPoly:
    """GX_lam(x|b) as [u^{-lam}] of the dressed series product."""
    lam = strict(lam)
    r = len(lam)
    if r == 0:
        return ring.one()
    D = ring.profile.cap("x")
    if D is None:
        raise ValueError("x-cap required for series extraction")
    K = ring.beta_order
    M = D + K + pad
    bs = ring.padded_gens("b", max(p - 1 for p in lam))
    beta = ring.beta()
    one = ring.one()
    windows = [(-lam_i - M, M) for lam_i in lam]
    acc = None
    for i in range(r):
        cur_windows = windows[i:]
        f = _gx_u_series(family, ring, cur_windows, 0)
        for j in range(lam[i] - 1):
            if bs[j].is_zero():
                continue
            shift = poly_in_var(ring, cur_windows, 0, {0: one, -1: -bs[j]})
            f = f * shift * unit_inverse(one + beta * bs[j])
        acc = f if acc is None else acc * f
        for j in range(i + 1, r):
            acc = acc * cross_ratio(ring, cur_windows, j - i, 0)
        acc = acc.project(0, -lam[i])
    return acc.extract(())


def gx_at_points(family: str, lam, xvals, bvals, ring: PolyRing) -> TPoly:
    """GX_lam evaluated at pairwise-distinct rational x-values.

    Same symmetrized product as direct_sym, but with the Vandermonde a
    nonzero rational, so no symbolic x variables are needed.  ``bvals``
    is the (finitely supported) parameter sequence as ring elements.
    """
    lam = strict(lam)
    r = len(lam)
    n = len(xvals)
    if n < r:
        raise ValueError("need at least l(lam) values")
    xvals = [Fraction(v) for v in xvals]
    vand = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            vand *= xvals[i] - xvals[j]
    if vand == 0:
        raise ValueError("x-values must be pairwise distinct")
    need = max((lam[0] - 1) if lam else 0, 0)
    bs = [ring.coerce(v) for v in bvals][:need]
    bs += [ring.zero()] * (need - len(bs))
    xs = [ring.rational(v) for v in xvals]
    one = ring.one()
    beta = ring.beta()
    from itertools import permutations as _perms

    total = ring.zero()
    for perm in _perms(range(n)):
        sign = 1
        for a in range(n):
            for bb in range(a + 1, n):
                if perm[a] > perm[bb]:
                    sign = -sign
        xp = [xs[perm[i]] for i in range(n)]
        term = one
        for i in range(r):
            term = term * _row_factor(family, xp[i], lam[i], bs)
        for i in range(n):
            for j in range(i + 1, n):
                if i < r:
                    term = term * oplus(xp[i], xp[j]) * (one + beta * xp[j])
                else:
                    term = term * (xp[i] - xp[j])
        total = total + (term if sign > 0 else -term)
    return total / (vand * factorial(n - r))


# -- Cauchy kernel triangular solve ---------------------------------------

def bmu_values(mu, ring: PolyRing) -> dict:
    """Substitution x_i -> b_{mu_i} (zero past l(mu))."""
    mu = strict(mu)
    n = ring.counts["x"]
    out = {}
    for i in range(1, n + 1):
        if i <= len(mu):
            out[f"x{i}"] = ring.var(f"b{mu[i - 1]}")
        else:
            out[f"x{i}"] = ring.zero()
    return out


class GXEvaluator:
    """Caches GX_lam(b_mu | b) evaluations; x-uncapped internal ring."""

    def __init__(self, family: str, nb: int, beta_order: int):
        self.family = family
        profile = TruncationProfile(beta_order)
        self._sym_cache = {}
        self.nb = nb
        self.beta_order = beta_order
        self._eval_cache = {}

    def symbolic(self, lam, n: int) -> TPoly:
        key = (strict(lam), n)
        if key not in self._sym_cache:
            ring = PolyRing(TruncationProfile(self.beta_order), nb=self.nb, nx=n)
            self._sym_cache[key] = direct_sym(self.family, lam, ring, n)
        return self._sym_cache[key]

    def at(self, lam, mu) -> TPoly:
        """GX_lam(b_mu|b) in a beta/b ring."""
        lam, mu = strict(lam), strict(mu)
        key = (lam, mu)
        if key not in self._eval_cache:
            n = max(len(lam), len(mu), 1)
            f = self.symbolic(lam, n)
            ring = f.ring
            sub = {}
            for i in range(1, n + 1):
                if i <= len(mu) and mu[i - 1] <= ring.counts["b"]:
                    sub[f"x{i}"] = ring.var(f"b{mu[i - 1]}")
                else:
                    sub[f"x{i}"] = ring.zero()
            val = f.substitute(sub)
            target = PolyRing(TruncationProfile(self.beta_order), nb=self.nb)
            self._eval_cache[key] = val.convert(target)
        return self._eval_cache[key]


def kernel_solve(family: str, lam, ring: PolyRing, evaluator: GXEvaluator = None) -> TPoly:
    """gp_lam(y|b) (family "gp", solved against GQ) or gq_lam(y|b)
    (family "gq", solved against GP) from the specialized Cauchy kernel.

    At x = b_nu the kernel collapses to prod_i Omega(b_{nu_i}|y) and the
    vanishing of GX_mu(b_nu|b) for mu not in nu makes the system
    triangular in containment order.
    """
    lam = strict(lam)
    dualfam = "GQ" if family == "gp" else "GP"
    if evaluator is None:
        evaluator = GXEvaluator(dualfam, ring.counts["b"], ring.beta_order)
    solved = {}
    for nu in strict_partitions_in(lam):
        rhs = ring.one()
        for part in nu:
            bval = ring.var(f"b{part}") if part <= ring.counts["b"] else ring.zero()
            rhs = rhs * omega_factor(bval, ring)
        for mu in strict_partitions_in(nu):
            if mu == nu:
                continue
            rhs = rhs - evaluator.at(mu, nu).convert(ring) * solved[mu]
        diag = evaluator.at(nu, nu).convert(ring)
        solved[nu] = exact_divide(rhs, diag) if nu else rhs
    return solved[lam]


# -- operator recursions --------------------------------------------------

def swap_b(f: TPoly, i: int) -> TPoly:
    # a transposition of variables is a permutation of exponent vectors
    ring = f.ring
    p = ring.var_pos[f"b{i}"]
    q = ring.var_pos[f"b{i+1}"]
    out = {}
    for exp, c in f.terms.items():
        if exp[p] != exp[q]:
            e = list(exp)
            e[p], e[q] = e[q], e[p]
            exp = tuple(e)
        out[exp] = c
    return TPoly(ring, out)


def chern_root(i: int, typ: str, ring: PolyRing, negative: bool) -> TPoly:
    """c(alpha_i) (or c(-alpha_i)) for the type-B/C root systems realized
    on the parameter sequence b."""
    if i == 0:
        b1 = ring.var("b1")
        base = oneg(b1) if negative else b1
        if typ == "C":
            return oplus(base, base)
        if typ == "B":
            return base
        raise ValueError(typ)
    bi, bj = ring.var(f"b{i}"), ring.var(f"b{i+1}")
    return ominus(bi, bj) if negative else ominus(bj, bi)


def operator_T(f: TPoly, i: int, typ: str) -> TPoly:
    """Raising operator on the y-side families: T_i = c(alpha_i)^{-1}(s_i - 1)
    with s_0 f = Omega(b_1|y) * f(y | (-)b_1, b_2, ...)."""
    ring = f.ring
    if i == 0:
        nb1 = oneg(ring.var("b1"))
        sf = omega_factor(ring.var("b1"), ring) * f.substitute({"b1": nb1})
    else:
        sf = swap_b(f, i)
    c = chern_root(i, typ, ring, negative=False)
    return exact_divide(sf - f, c)


def build_by_T(family: str, lam, ring: PolyRing) -> TPoly:
    """gx_lam(y|b) = T_{w_lam}(1): apply the word for w_lam right to left."""
    typ = "B" if family == "gq" else "C"
    f = ring.one()
    for i in reversed(w_lambda_word(lam)):
        f = operator_T(f, i, typ)
    return f


def demazure_D(fs, i: int, typ: str):
    """Lowering operator on the x-side families.

    ``fs`` is a dict n -> representation of f on x_1..x_n; D_i for i >= 1
    preserves n, D_0 consumes a variable slot: the result at n uses fs[n+1].
    Returns a dict with the same keys minus those that cannot be formed.
    """
    out = {}
    for n, f in fs.items():
        ring = f.ring
        if i == 0:
            src = fs.get(n + 1)
            if src is None:
                continue
            big = src.ring
            nb1 = oneg(big.var("b1"))
            sub = {"b1": nb1, "x1": nb1}
            for t in range(2, n + 2):
                sub[f"x{t}"] = big.var(f"x{t-1}")
            sf = src.substitute(sub)
            fres = src.substitute({f"x{n+1}": big.zero()})
            cbig = chern_root(i, typ, big, negative=True)
            num = sf - (big.one() + big.beta() * cbig) * fres
            out[n] = exact_divide(num, cbig).convert(ring)
        else:
            c = chern_root(i, typ, ring, negative=True)
            sf = swap_b(f, i)
            num = sf - (ring.one() + ring.beta() * c) * f
            out[n] = exact_divide(num, c)
    return out
