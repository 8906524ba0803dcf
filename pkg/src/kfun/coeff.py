"""Expansion coefficients between parameter sequences.

Four independent constructions of the change-of-basis coefficients
C_{lam,mu}(b,c) relating the dual families over parameter sequences b
and c:

  * jt_coefficient      -- prefactored determinant in two-alphabet h's
  * the transposed determinant (same value, built entry-by-entry)
  * groth_coefficient   -- two-term double Grothendieck expression
  * cgq_solve           -- triangular solve of the GQ expansion at the
                           vanishing points x = b_nu

plus the divided-difference construction of double Grothendieck
polynomials, the two-variable contour extraction identity, and the
determinant form of the type-A factorial polynomial in its own
parameters.
"""

from __future__ import annotations

from fractions import Fraction

from .combinat import (
    Permutation,
    contains,
    quotient_perm,
    rightmost_bottom_content,
    staircase,
    strict,
    strict_partitions_in,
)
from .gfun import GXEvaluator, direct_sym, factorial_grothendieck, gx_at_points, swap_b
from .rings import (
    PolyRing,
    TPoly,
    TruncationProfile,
    binomial,
    determinant,
    exact_divide,
    oneg,
    oplus,
    supersym_h,
    unit_inverse,
)
from .series import TSeries, geometric, poly_in_var, product


class ScopeError(ValueError):
    """Inputs outside the regime where the quotient-permutation form of
    the coefficient is defined."""


# -- Jacobi-Trudi determinant route ---------------------------------------

def d_lambda(parts, ring: PolyRing, alphabet="b", values=None) -> TPoly:
    """prod_i prod_{l=1}^{parts_i - 1} (1 + beta * a_l)."""
    parts = tuple(int(p) for p in parts)
    need = max((p - 1 for p in parts), default=0)
    if values is None:
        if need > ring.counts[alphabet]:
            raise ValueError(f"alphabet {alphabet} too short: need {need}")
        values = ring.gens(alphabet, need)
    else:
        values = [ring.coerce(v) for v in values]
        if need > len(values):
            raise ValueError(f"alphabet too short: need {need}")
    beta = ring.beta()
    one = ring.one()
    out = one
    for p in parts:
        for l in range(p - 1):
            out = out * (one + beta * values[l])
    return out


def jt_entry(i, j, lam, mu, ring: PolyRing, bs=None, cs=None) -> TPoly:
    """Entry (i, j), 1-based: sum_k beta^k binom(i-j, k) h_{mu_i - lam_j + k}
    over the alphabets (b_1..b_{lam_j}; -c_1..-c_{mu_i - 1})."""
    K = ring.beta_order
    beta = ring.beta()
    if bs is None:
        bs = ring.padded_gens("b", lam[j - 1])
    else:
        bs = [ring.coerce(v) for v in bs][: lam[j - 1]]
    if cs is None:
        cs = ring.padded_gens("c", mu[i - 1] - 1)
    else:
        cs = [ring.coerce(v) for v in cs][: mu[i - 1] - 1]
    out = ring.zero()
    for k in range(K + 1):
        coef = binomial(i - j, k)
        if coef == 0:
            continue
        h = supersym_h(mu[i - 1] - lam[j - 1] + k, bs, cs, ring)
        if h.is_zero():
            continue
        out = out + beta ** k * ring.rational(coef) * h
    return out


def jt_coefficient(lam, mu, ring: PolyRing, bs=None, cs=None,
                   transpose=False, reason_log=None) -> TPoly:
    """d_lam(b) * d_mu(c)^{-1} * det(jt_entry); zero with a logged reason
    when the lengths differ.

    With ``transpose`` the matrix is assembled in the transposed
    orientation entry by entry (the GP-side reading of the same display).
    """
    lam, mu = strict(lam), strict(mu)
    if len(lam) != len(mu):
        if reason_log is not None:
            reason_log.append(("length-mismatch", lam, mu))
        return ring.zero()
    if not lam:
        return ring.one()
    r = len(lam)
    if transpose:
        rows = [[jt_entry(j, i, lam, mu, ring, bs=bs, cs=cs)
                 for j in range(1, r + 1)] for i in range(1, r + 1)]
    else:
        rows = [[jt_entry(i, j, lam, mu, ring, bs=bs, cs=cs)
                 for j in range(1, r + 1)] for i in range(1, r + 1)]
    det = determinant(rows)
    if det.is_zero():
        return det
    pref = d_lambda(lam, ring, "b", values=bs) \
        * unit_inverse(d_lambda(mu, ring, "c", values=cs))
    return pref * det


# -- double Grothendieck polynomials ---------------------------------------

def pi_op(f: TPoly, i: int) -> TPoly:
    """pi_i = del_i o (1 + beta b_{i+1}) with del_i = (1 - s_i)/(b_i - b_{i+1})."""
    ring = f.ring
    g = f * (ring.one() + ring.beta() * ring.var(f"b{i + 1}"))
    num = g - swap_b(g, i)
    return exact_divide(num, ring.var(f"b{i}") - ring.var(f"b{i + 1}"))


def top_cell(n: int, ring: PolyRing, cs=None) -> TPoly:
    """Longest-element value: prod_{i+j <= n} b_i (-) c_j."""
    out = ring.one()
    if n < 2:
        return out
    bs = ring.gens("b", n - 1)
    if cs is None:
        cs = ring.gens("c", n - 1)
    else:
        cs = [ring.coerce(v) for v in cs]
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            out = out * oplus(bs[i - 1], oneg(cs[j - 1]))
    return out


def reduced_word(w: Permutation, rng=None) -> list:
    """A reduced word for w (1-based letters, product applied left to
    right); with ``rng``, the descent resolved at each step is random."""
    line = list(w.trim().line)
    word = []
    while True:
        desc = [i for i in range(len(line) - 1) if line[i] > line[i + 1]]
        if not desc:
            break
        i = desc[0] if rng is None else rng.choice(desc)
        line[i], line[i + 1] = line[i + 1], line[i]
        word.append(i + 1)
    word.reverse()
    return word


_groth_cache = {}


def _ring_key(ring: PolyRing):
    prof = ring.profile
    return (prof.beta_order, tuple(sorted(prof.degree_caps.items())),
            tuple(sorted(ring.counts.items())))


def double_grothendieck(w: Permutation, n: int, ring: PolyRing,
                        word=None, cs=None) -> TPoly:
    """G_w(b;c) for w in S_n by pi-descent from the top cell.

    ``word``: an explicit reduced word for w^{-1} w_0 (letters applied to
    the top cell from the right end); used by the word-independence
    checks.  ``cs``: explicit values for the c parameters (the b's must
    stay symbolic for the divided differences).
    """
    w = w.trim()
    if len(w.line) > n:
        raise ValueError(f"{w!r} is not in S_{n}")
    if ring.counts["b"] < n:
        raise ValueError("need n symbolic b variables")
    # each division lowers b-degree by one; widen any b-cap so the capped
    # result agrees with the truncation of the untruncated value
    work = ring
    if ring.profile.cap("b") is not None:
        work = ring.with_profile(ring.profile.widen(b=n * (n - 1) // 2))
        if cs is not None:
            cs = [work.coerce(ring.coerce(v)) for v in cs]
    if word is not None:
        f = top_cell(n, work, cs)
        for i in reversed(list(word)):
            f = pi_op(f, i)
        return _settle(f, ring)
    w0line = tuple(range(n, 0, -1))
    rkey = (_ring_key(work), n) if cs is None else None
    local = {}

    def rec(line):
        if rkey is not None and (rkey, line) in _groth_cache:
            return _groth_cache[(rkey, line)]
        if line in local:
            return local[line]
        if line == w0line:
            val = top_cell(n, work, cs)
        else:
            v = Permutation(line)
            i = next(i for i in range(1, n) if v(i) < v(i + 1))
            val = pi_op(rec(v.times_s(i).pad(n).line), i)
        if rkey is not None:
            _groth_cache[(rkey, line)] = val
        else:
            local[line] = val
        return val

    return _settle(rec(w.pad(n).line), ring)


def _settle(f: TPoly, ring: PolyRing) -> TPoly:
    if f.ring is ring:
        return f
    return TPoly(ring, {e: c for e, c in f.terms.items() if ring.admissible(e)})


def groth_coefficient(lam, mu, ring: PolyRing, cs=None) -> TPoly:
    """G_{w_mu w_lam^{-1}}(b;c) + chi(lam > delta_r) beta G_{w_mu w_lam^{-1} s_i}(b;c)
    with i the content of the rightmost box in the bottom row of the
    shifted skew shape lam / delta_r."""
    lam, mu = strict(lam), strict(mu)
    if lam == () and mu == ():
        return ring.one()
    r = len(lam)
    if len(mu) != r:
        raise ScopeError("lengths differ")
    if not contains(mu, lam):
        raise ScopeError("lam not contained in mu")
    if not contains(lam, staircase(r)):
        raise ScopeError("staircase not contained in lam")
    w = quotient_perm(lam, mu, r)
    n = max(mu[0], 2)
    out = double_grothendieck(w, n, ring, cs=cs)
    if lam != staircase(r):
        i = rightmost_bottom_content(lam, r)
        out = out + ring.beta() * double_grothendieck(w.times_s(i), n, ring, cs=cs)
    return out


# -- cross-ring renaming ---------------------------------------------------

def rename(f: TPoly, target: PolyRing, mapping) -> TPoly:
    """Map f into ``target`` sending each named variable through
    ``mapping`` (beta goes to beta); a positive exponent on an unmapped
    variable raises KeyError."""
    out = target.zero()
    beta = target.beta()
    pow_cache = {}
    for exp, coef in f.terms.items():
        term = target.rational(coef)
        for i, e in enumerate(exp):
            if e == 0:
                continue
            key = (i, e)
            if key not in pow_cache:
                name = f.ring.vars[i]
                base = beta if name == "beta" else target.coerce(mapping[name])
                pow_cache[key] = base ** e
            term = term * pow_cache[key]
            if term.is_zero():
                break
        out = out + term
    return out


# -- GQ-side triangular solve ----------------------------------------------

def cgq_solve(mu, ring: PolyRing, bvals=None, cvals=None, evaluator=None) -> dict:
    """C^{GQ}_{mu lam}(c, b) for every lam inside mu of the same length.

    Solves GQ_mu(x|c) = sum_lam C_{mu lam} GQ_lam(x|b) at the points
    x = b_nu, where the vanishing of GQ_lam(b_nu|b) outside containment
    makes the system triangular.  With ``bvals``/``cvals`` (rational
    parameter values, bvals pairwise distinct) everything runs over
    beta-polynomials with rational coefficients.
    """
    mu = strict(mu)
    if not mu:
        return {(): ring.one()}
    r = len(mu)
    idx = [lam for lam in strict_partitions_in(mu) if len(lam) == r]
    numeric = bvals is not None
    if numeric:
        bvals = [Fraction(v) for v in bvals]
        cvals = [Fraction(v) for v in cvals]
        if len(set(bvals)) != len(bvals) or 0 in bvals:
            raise ValueError("bvals must be distinct and nonzero")
    else:
        ev = evaluator or GXEvaluator("GQ", ring.counts["b"], ring.beta_order)
        work = PolyRing(TruncationProfile(ring.beta_order),
                        nb=max(mu[0] - 1, 0), nx=r)
        f_mu = direct_sym("GQ", mu, work, r)
        cmap = {f"b{i}": ring.var(f"c{i}") for i in range(1, work.counts["b"] + 1)}

    def lhs_at(nu):
        pts = [nu[i] for i in range(r)]
        if numeric:
            return gx_at_points("GQ", mu, [bvals[p - 1] for p in pts],
                                [ring.rational(v) for v in cvals], ring)
        mp = dict(cmap)
        for i, p in enumerate(pts, start=1):
            mp[f"x{i}"] = ring.var(f"b{p}")
        return rename(f_mu, ring, mp)

    def basis_at(lam, nu):
        if numeric:
            return gx_at_points("GQ", lam, [bvals[p - 1] for p in nu],
                                [ring.rational(v) for v in bvals], ring)
        return ev.at(lam, nu).convert(ring)

    solved = {}
    for nu in idx:
        rhs = lhs_at(nu)
        for lam in idx:
            if lam != nu and contains(nu, lam):
                rhs = rhs - solved[lam] * basis_at(lam, nu)
        solved[nu] = exact_divide(rhs, basis_at(nu, nu))
    return solved


# -- the four routes side by side ------------------------------------------

def coincidence_routes(lam, mu, ring: PolyRing, bvals=None, cvals=None,
                       evaluator=None) -> dict:
    """All four coefficient constructions on (lam, mu), as a dict
    {"jt", "jt-transpose", "groth", "solve"} -> TPoly.

    Symbolic when bvals/cvals are None; otherwise every route is
    evaluated at the given rational parameter values.
    """
    lam, mu = strict(lam), strict(mu)
    if len(lam) != len(mu) or not contains(mu, lam):
        raise ScopeError("need lam inside mu with equal lengths")
    numeric = bvals is not None
    bs = [ring.rational(v) for v in bvals] if numeric else None
    cs = [ring.rational(v) for v in cvals] if numeric else None
    out = {
        "jt": jt_coefficient(lam, mu, ring, bs=bs, cs=cs),
        "jt-transpose": jt_coefficient(lam, mu, ring, bs=bs, cs=cs, transpose=True),
    }
    if not lam:
        out["groth"] = ring.one()
        out["solve"] = ring.one()
        return out
    if numeric:
        n = max(mu[0], 2)
        if len(bvals) < n:
            raise ValueError("need a b-value per descent variable")
        gring = PolyRing(TruncationProfile(ring.beta_order), nb=n)
        g = groth_coefficient(lam, mu, gring,
                              cs=[gring.rational(v) for v in cvals])
        g = g.substitute({f"b{i}": gring.rational(bvals[i - 1])
                          for i in range(1, n + 1)})
        out["groth"] = g.convert(ring)
        out["solve"] = cgq_solve(mu, ring, bvals=bvals, cvals=cvals)[lam]
    else:
        out["groth"] = groth_coefficient(lam, mu, ring)
        out["solve"] = cgq_solve(mu, ring, evaluator=evaluator)[lam]
    return out


# -- contour extraction identity -------------------------------------------

def contour_identity(A, B, m, n, d, ring: PolyRing, bs=None, cs=None,
                     pad=2, boundary_log=None):
    """Both sides of the two-variable coefficient extraction

      [u^{m+d} w^n] (1+bw)^A (1+b/u)^B prod(1-u c_k)/prod(1-b_k/w) uw/(1-uw)
        = sum_l binom(A+B, l) beta^l h_{l-n+m+d}(b; -c)

    expanded in the region |b|,|c| < |w| < 1/|u|.  Returns (lhs, rhs).
    """
    if m <= 0 or n < 0 or d < 0:
        raise ValueError("need m > 0 and n, d >= 0")
    K = ring.beta_order
    beta = ring.beta()
    one = ring.one()
    if bs is None:
        bs = ring.padded_gens("b", n)
    else:
        bs = [ring.coerce(v) for v in bs][:n]
    if cs is None:
        cs = ring.padded_gens("c", m - 1)
    else:
        cs = [ring.coerce(v) for v in cs][: m - 1]
    windows = [(-K - pad, m + d + K + pad),
               (n - m - d - K - pad, max(n, m + d) + K + pad)]
    factors = [
        poly_in_var(ring, windows, 1,
                    {k: ring.rational(binomial(A, k)) * beta ** k
                     for k in range(K + 1)}),
        poly_in_var(ring, windows, 0,
                    {-k: ring.rational(binomial(B, k)) * beta ** k
                     for k in range(K + 1)}),
    ]
    for c in cs:
        factors.append(poly_in_var(ring, windows, 0, {0: one, 1: -c}))
    for b in bs:
        factors.append(geometric(ring, windows, 1, b, -1))
    diag = TSeries(ring, windows)
    for j in range(1, min(windows[0][1], windows[1][1]) + 1):
        diag.add_term((j, j), one)
    factors.append(diag)
    lhs = product(factors).extract((m + d, n), boundary_log)
    rhs = ring.zero()
    for l in range(K + 1):
        coef = binomial(A + B, l)
        if coef == 0:
            continue
        h = supersym_h(l - n + m + d, bs, cs, ring)
        if h.is_zero():
            continue
        rhs = rhs + beta ** l * ring.rational(coef) * h
    return lhs, rhs


# -- determinant form of the type-A factorial polynomial -------------------

def factorial_groth_jt(eta, r: int, ring: PolyRing):
    """Both sides of the determinant form of G_eta(b_1..b_r|c):

      lhs: the symmetrization route, renamed from (x|b) into (b|c)
      rhs: d_{delta_r}(b)/d_{eta + delta_r}(c) times the determinant of
           sum_m binom(i-j, m) beta^m h_{eta_i - i + j + m} over
           (b_1..b_{r+1-j}; -c_1..-c_{eta_i + r - i}).
    """
    eta = tuple(int(p) for p in eta)
    if any(eta[i] < eta[i + 1] for i in range(len(eta) - 1)) or any(p < 0 for p in eta):
        raise ValueError("not a partition")
    if len([p for p in eta if p]) > r:
        raise ValueError("too many parts")
    eta = (eta + (0,) * r)[:r]
    if r == 0:
        return ring.one(), ring.one()
    K = ring.beta_order
    cmax = max(eta[0] + r - 1, r - 1)
    if ring.counts["b"] < r or ring.counts["c"] < cmax:
        raise ValueError("alphabets too short")
    work = PolyRing(TruncationProfile(K), nb=cmax, nx=r)
    g = factorial_grothendieck(eta, work, r)
    mapping = {f"x{i}": ring.var(f"b{i}") for i in range(1, r + 1)}
    mapping.update({f"b{i}": ring.var(f"c{i}") for i in range(1, cmax + 1)})
    lhs = rename(g, ring, mapping)

    beta = ring.beta()
    rows = []
    for i in range(1, r + 1):
        cs_full = ring.gens("c", eta[i - 1] + r - i)
        row = []
        for j in range(1, r + 1):
            bs = ring.gens("b", r + 1 - j)
            entry = ring.zero()
            for mm in range(K + 1):
                coef = binomial(i - j, mm)
                if coef == 0:
                    continue
                h = supersym_h(eta[i - 1] - i + j + mm, bs, cs_full, ring)
                if h.is_zero():
                    continue
                entry = entry + beta ** mm * ring.rational(coef) * h
            row.append(entry)
        rows.append(row)
    # the denominator shape is the entrywise sum eta + delta_r (the strict
    # partition being expanded), not the multiset union of the two shapes
    shape = tuple(eta[i] + r - i for i in range(r))
    pref = d_lambda(staircase(r), ring, "b") \
        * unit_inverse(d_lambda(shape, ring, "c"))
    rhs = pref * determinant(rows)
    return lhs, rhs
