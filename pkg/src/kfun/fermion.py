"""Neutral-fermion Fock space over a truncated coefficient ring.

States are finite linear combinations of monomials phi_{m_1}...phi_{m_k}|vac>
with m_1 > m_2 > ... >= 0; coefficients are TPoly.  The defining relations:

    [phi_m, phi_n]_+ = 2 (-1)^m delta_{m+n,0},    phi_n |vac> = 0  (n < 0),

so phi_0^2 = 1 and phi_n^2 = 0 for n != 0.  Everything (deformed mode
tails, boson sums, exponentials of the dressing operator theta and of the
Hamiltonians) is finite thanks to beta-nilpotency and the energy cap, and
every computed vacuum expectation value is exact at the caps.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .combinat import strict
from .rings import PolyRing, TPoly, binomial, complete_sym, elem_sym, unit_inverse


class FockState:
    """terms: dict mapping mode tuples (strictly decreasing, >= 0) to TPoly."""

    __slots__ = ("ring", "cap", "terms")

    def __init__(self, ring: PolyRing, cap: int, terms=None):
        self.ring = ring
        self.cap = cap
        self.terms = {} if terms is None else terms

    @classmethod
    def vacuum(cls, ring, cap) -> "FockState":
        return cls(ring, cap, {(): ring.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def add(self, modes, poly: TPoly):
        if poly.is_zero() or sum(modes) > self.cap:
            return
        cur = self.terms.get(modes)
        if cur is None:
            self.terms[modes] = poly
        else:
            cur = cur + poly
            if cur.is_zero():
                del self.terms[modes]
            else:
                self.terms[modes] = cur

    def __add__(self, other: "FockState") -> "FockState":
        out = FockState(self.ring, self.cap, dict(self.terms))
        for m, p in other.terms.items():
            out.add(m, p)
        return out

    def scale(self, poly) -> "FockState":
        out = FockState(self.ring, self.cap)
        for m, p in self.terms.items():
            out.add(m, p * poly)
        return out

    def vacuum_coeff(self) -> TPoly:
        return self.terms.get((), self.ring.zero())


def _insert_phi(n: int, modes: tuple) -> list:
    """phi_n applied to the monomial; returns [(int scalar, new modes)]."""
    if not modes:
        return [(1, (n,))] if n >= 0 else []
    m = modes[0]
    if n > m:
        return [(1, (n,) + modes)]
    if n == m:
        # phi_n phi_n = (-1)^n delta_{2n,0}: zero unless n = 0
        return [(1, modes[1:])] if n == 0 else []
    out = []
    if n + m == 0:
        out.append((2 * (-1) ** m, modes[1:]))
    for sign, rest in _insert_phi(n, modes[1:]):
        out.append((-sign, (m,) + rest))
    return out


def apply_phi(state: FockState, n: int, coeff: TPoly = None) -> FockState:
    out = FockState(state.ring, state.cap)
    for modes, poly in state.terms.items():
        p = poly if coeff is None else poly * coeff
        if p.is_zero():
            continue
        for sign, new in _insert_phi(n, modes):
            out.add(new, p * sign if sign != 1 else p)
    return out


class ModeOp:
    """A finite combination  scalar + sum_n coeff[n] * phi_n."""

    __slots__ = ("ring", "scalar", "coeff")

    def __init__(self, ring: PolyRing, scalar=None, coeff=None):
        self.ring = ring
        self.scalar = ring.zero() if scalar is None else scalar
        self.coeff = {} if coeff is None else coeff

    def add_mode(self, n: int, poly: TPoly):
        if poly.is_zero():
            return
        cur = self.coeff.get(n)
        if cur is None:
            self.coeff[n] = poly
        else:
            cur = cur + poly
            if cur.is_zero():
                del self.coeff[n]
            else:
                self.coeff[n] = cur

    def apply(self, state: FockState) -> FockState:
        out = state.scale(self.scalar) if not self.scalar.is_zero() else FockState(state.ring, state.cap)
        for n, p in self.coeff.items():
            out = out + apply_phi(state, n, p)
        return out

    def star(self) -> "ModeOp":
        """phi_n -> (-1)^n phi_{-n}; scalars fixed."""
        op = ModeOp(self.ring, self.scalar)
        for n, p in self.coeff.items():
            op.add_mode(-n, p if n % 2 == 0 else -p)
        return op

    def linear_pairs(self):
        return sorted(self.coeff.items())


# -- deformed mode builders ------------------------------------------------

def _half_beta_pow(ring, k) -> TPoly:
    return ring.beta() ** k * Fraction(1, 2 ** k)


def phi_round(ring, cap, n: int) -> ModeOp:
    """phi^{(beta)}_n."""
    op = ModeOp(ring)
    K = ring.beta_order
    if n >= 0:
        for m in range(n, min(cap, n + K) + 1):
            op.add_mode(m, _half_beta_pow(ring, m - n) * comb(m, n))
    else:
        nn = -n
        for m in range(1, nn + 1):
            op.add_mode(-m, _half_beta_pow(ring, nn - m) * binomial(-m, nn - m))
    return op


def phi_square(ring, cap, n: int) -> ModeOp:
    """phi^{[beta]}_n."""
    op = ModeOp(ring)
    K = ring.beta_order
    if n >= 1:
        for m in range(1, n + 1):
            op.add_mode(m, _half_beta_pow(ring, n - m) * binomial(-m, n - m))
    else:
        nn = -n
        for m in range(nn, nn + K + 1):
            op.add_mode(-m, _half_beta_pow(ring, m - nn) * comb(m, m - nn))
    return op


def _cap_combo(ring, cap, base_fn, n: int, shift_sign: int) -> ModeOp:
    """(1/2) sum_k (-beta/2)^k base(n + shift_sign*k)."""
    op = ModeOp(ring)
    K = ring.beta_order
    for k in range(0, K + 1):
        w = _half_beta_pow(ring, k) * ((-1) ** k)
        inner = base_fn(ring, cap, n + shift_sign * k)
        if not inner.scalar.is_zero():
            op.scalar = op.scalar + inner.scalar * w * Fraction(1, 2)
        for m, p in inner.coeff.items():
            op.add_mode(m, p * w * Fraction(1, 2))
    return op


def Phi_round(ring, cap, n: int) -> ModeOp:
    """Phi^{(beta)}_n = (1/2) sum_k (-beta/2)^k phi^{(beta)}_{n+k}."""
    return _cap_combo(ring, cap, phi_round, n, +1)


def Phi_square(ring, cap, n: int) -> ModeOp:
    """Phi^{[beta]}_n = (1/2) sum_k (-beta/2)^k phi^{[beta]}_{n-k}."""
    return _cap_combo(ring, cap, phi_square, n, -1)


def phi_round_eq(ring, cap, i: int, k: int, Phi=False) -> ModeOp:
    """phi^{(beta)(k)}_i (or Phi version): the parameter-dressed mode
    prod_{j<k}(1+beta b_j)^{-1} sum_{j=0}^{k-1} (-1)^j e_j(b_1..b_{k-1}) base_{i-j}.

    The displayed alphabet in the mode expansion has length k, but the
    field definition prod_{j<k}(1-z b_j) forces e_j over b_1..b_{k-1};
    the field definition wins (checked against the generating function).
    """
    base = Phi_round if Phi else phi_round
    if k <= 1:
        return base(ring, cap, i)
    bs = ring.padded_gens("b", k - 1)
    pref = ring.one()
    for b in bs:
        pref = pref * unit_inverse(ring.one() + ring.beta() * b)
    op = ModeOp(ring)
    for j in range(0, k):
        ej = elem_sym(j, bs, ring)
        if ej.is_zero():
            continue
        w = pref * ej * ((-1) ** j)
        inner = base(ring, cap, i - j)
        if not inner.scalar.is_zero():
            op.scalar = op.scalar + inner.scalar * w
        for m, p in inner.coeff.items():
            op.add_mode(m, p * w)
    return op


def phi_square_eq(ring, cap, i: int, k: int) -> ModeOp:
    """phi^{[beta](k)}_i = prod_{l<k}(1+beta b_l) sum_j h_j(b_1..b_k) phi^{[beta]}_{i+j}."""
    if k <= 0:
        return phi_square(ring, cap, i)
    bs = ring.padded_gens("b", k)
    pref = ring.one()
    for b in bs[:-1]:
        pref = pref * (ring.one() + ring.beta() * b)
    op = ModeOp(ring)
    j = 0
    while True:
        hj = complete_sym(j, bs, ring)
        if j > 0 and hj.is_zero():
            break
        if not hj.is_zero():
            inner = phi_square(ring, cap, i + j)
            w = pref * hj
            for m, p in inner.coeff.items():
                op.add_mode(m, p * w)
            if not inner.coeff and i + j > cap:
                break
        j += 1
        if i + j > cap + ring.beta_order + 1:
            break
    return op


def Phi_square_eq(ring, cap, i: int, k: int) -> ModeOp:
    """Phi^{[beta](k)}_i: like phi_square_eq with the shifted central term,
    prod(1+beta b_l) sum_j h_j(b_1..b_k)(Phi^{[beta]}_{i+j} - (1/2)(-beta/2)^{i+j})."""
    bs = ring.padded_gens("b", max(k, 0))
    pref = ring.one()
    for b in bs[:-1] if k >= 1 else []:
        pref = pref * (ring.one() + ring.beta() * b)
    op = ModeOp(ring)
    K = ring.beta_order
    j = 0
    while True:
        hj = complete_sym(j, bs, ring) if k >= 1 else (ring.one() if j == 0 else ring.zero())
        if j > 0 and hj.is_zero():
            break
        if not hj.is_zero():
            w = pref * hj
            inner = Phi_square(ring, cap, i + j)
            shift = _half_beta_pow(ring, i + j) * Fraction((-1) ** (i + j), 2) if 0 <= i + j <= K else ring.zero()
            op.scalar = op.scalar + (inner.scalar - shift) * w
            for m, p in inner.coeff.items():
                op.add_mode(m, p * w)
        j += 1
        if i + j > cap + K + 1:
            break
    return op


# -- bosons, theta, Hamiltonians -------------------------------------------

def apply_boson(state: FockState, n: int) -> FockState:
    """b_n = (1/4) sum_i (-1)^i phi_{-i-n} phi_i."""
    out = FockState(state.ring, state.cap)
    quarter = Fraction(1, 4)
    for modes, poly in state.terms.items():
        cands = set()
        for m in modes:
            cands.add(-m)
            cands.add(m - n)
        if n < 0:
            cands.update(range(0, -n + 1))
        cands.add(0)
        for i in cands:
            mid = []
            for s1, rest in _insert_phi(i, modes):
                for s2, final in _insert_phi(-i - n, rest):
                    mid.append((s1 * s2, final))
            if not mid:
                continue
            w = poly * (quarter * ((-1) ** i))
            for s, final in mid:
                out.add(final, w * s)
    return out


def apply_exp(state: FockState, step, max_iter=10000) -> FockState:
    """exp of the (locally nilpotent) linear map ``step`` applied to state."""
    acc = state
    term = state
    j = 0
    while not term.is_zero():
        j += 1
        if j > max_iter:
            raise RuntimeError("exponential did not terminate")
        term = step(term)
        term = term.scale(state.ring.rational(Fraction(1, j)))
        acc = acc + term
    return acc


def theta_step(sign: int, star: bool):
    """One application of +/- theta (or theta^*):
    theta = 2 sum_{odd n>=1} (beta/2)^n b_n / n."""

    def step(state: FockState) -> FockState:
        ring = state.ring
        out = FockState(ring, state.cap)
        K = ring.beta_order
        n = 1
        while n <= K:
            coeff = ring.rational(Fraction(2 * sign, n)) * _half_beta_pow(ring, n)
            piece = apply_boson(state, -n if star else n)
            out = out + piece.scale(coeff)
            n += 2
        return out

    return step


def power_sum(ring: PolyRing, family: str, n: int) -> TPoly:
    out = ring.zero()
    for v in ring.gens(family):
        out = out + v ** n
    return out


def deformed_power_sum(ring: PolyRing, which: str, n: int) -> TPoly:
    """p^{(beta)}_n(x) ("round") or p^{[beta]}_n(y) ("square")."""
    K = ring.beta_order
    out = ring.zero()
    if which == "round":
        cap = ring.profile.cap("x")
        for i in range(0, K + 1):
            p = power_sum(ring, "x", n + i)
            if p.is_zero() and (cap is not None and n + i > cap):
                break
            out = out + _half_beta_pow(ring, i) * binomial(-n, i) * p
    elif which == "square":
        for i in range(1, n + 1):
            out = out + _half_beta_pow(ring, n - i) * comb(n, i) * power_sum(ring, "y", i)
    else:
        raise ValueError(which)
    return out


def hamiltonian_vev(state: FockState, which: str) -> TPoly:
    """<vac| exp(H) |state> with H = 2 sum_{odd n} p_n/n b_n, p_n the
    deformed power sum of the requested kind ("round" in x, "square" in y)."""
    ring = state.ring
    fam_cap = ring.profile.cap("x" if which == "round" else "y")
    if fam_cap is None:
        raise ValueError("degree cap required for the Hamiltonian")
    nmax = fam_cap + ring.beta_order
    ps = {}
    for n in range(1, nmax + 1, 2):
        p = deformed_power_sum(ring, which, n)
        if not p.is_zero():
            ps[n] = p * Fraction(2, n)

    def step(st: FockState) -> FockState:
        out = FockState(ring, st.cap)
        for n, p in ps.items():
            out = out + apply_boson(st, n).scale(p)
        return out

    return apply_exp(state, step).vacuum_coeff()


# -- state construction -----------------------------------------------------

def default_cap(lam, ring: PolyRing, extra=0) -> int:
    D = max(ring.profile.cap("x") or 0, ring.profile.cap("y") or 0)
    return sum(lam) + D + ring.beta_order + extra


def build_state(tag: str, lam, ring: PolyRing, cap=None) -> FockState:
    """|lam>_{(tag, b)} for tag in {"gq", "GQ", "GP", "gp"}.

    "gp" is the conjectural parameter-dressed state; the other three are
    the proven ones.  Parameters are the ring's b-variables (zero-padded).
    """
    lam = strict(lam)
    r = len(lam)
    if cap is None:
        cap = default_cap(lam, ring)
    state = FockState.vacuum(ring, cap)
    if tag == "gq":
        rp = r if r % 2 == 0 else r + 1
        parts = lam + (0,) * (rp - r)
        for i in range(rp - 1, -1, -1):
            state = apply_exp(state, theta_step(-1, star=False))
            state = phi_square_eq(ring, cap, parts[i], parts[i]).apply(state)
    elif tag in ("GQ", "GP"):
        rp = r if r % 2 == 0 else r + 1
        parts = lam + (0,) * (rp - r)
        for i in range(rp - 1, -1, -1):
            state = apply_exp(state, theta_step(+1, star=True))
            if i >= r:
                op = phi_round(ring, cap, 0)
            elif tag == "GQ":
                op = phi_round_eq(ring, cap, parts[i], parts[i], Phi=False)
            else:
                op = phi_round_eq(ring, cap, parts[i], parts[i], Phi=True)
            state = op.apply(state)
    elif tag == "gp":
        state = apply_phi(state, 0) + state
        for i in range(r - 1, -1, -1):
            if i < r - 1:
                state = apply_exp(state, theta_step(-1, star=False))
            state = Phi_square_eq(ring, cap, lam[i], lam[i]).apply(state)
    else:
        raise ValueError(tag)
    return state


def state_pairing(bra: FockState, ket: FockState) -> TPoly:
    """<bra| ket> where ``bra`` is the state whose dagger is the bra word.

    The mode-monomial basis is orthogonal with <A|A> = 2^{#positive modes},
    so the pairing is a diagonal sum over shared monomials."""
    ring = ket.ring
    out = ring.zero()
    small, big = (bra.terms, ket.terms) \
        if len(bra.terms) <= len(ket.terms) else (ket.terms, bra.terms)
    for modes, p in small.items():
        q = big.get(modes)
        if q is not None:
            out = out + p * q * (2 ** sum(1 for m in modes if m > 0))
    return out


def dual_pairing(mu, lam, bra_tag: str, ket_tag: str, ring: PolyRing, cap=None) -> TPoly:
    """<mu|_(bra_tag, params) |lam>_(ket_tag, params) with both states over
    the ring's parameters.  For distinct parameter alphabets build the ring
    with both families and pass states through ``dual_pairing_ops``."""
    lam, mu = strict(lam), strict(mu)
    if cap is None:
        cap = sum(lam) + sum(mu) + ring.beta_order
    ket = build_state(ket_tag, lam, ring, cap=cap)
    return state_pairing(build_state(bra_tag, mu, ring, cap=cap), ket)


def apply_bra(mu, bra_tag: str, state: FockState, param_family: str = "b") -> TPoly:
    """Apply the starred bra word for <mu|_(bra_tag) and read the vacuum
    coefficient.  bra_tag in {"GP", "GQ"}; the bra parameters are the
    ring's variables of ``param_family`` (use "c" for mixed pairings)."""
    mu = strict(mu)
    ring = state.ring
    cap = state.cap
    if param_family != "b":
        # dressed modes read b-gens; remap by swapping roles via rename
        raise NotImplementedError
    r = len(mu)
    rp = r if r % 2 == 0 else r + 1
    parts = mu + (0,) * (rp - r)
    for i in range(rp):
        if i >= r:
            op = phi_round(ring, cap, 0)
        elif bra_tag == "GQ":
            op = phi_round_eq(ring, cap, parts[i], parts[i], Phi=False)
        elif bra_tag == "GP":
            op = phi_round_eq(ring, cap, parts[i], parts[i], Phi=True)
        else:
            raise ValueError(bra_tag)
        state = op.star().apply(state)
        state = apply_exp(state, theta_step(+1, star=False))
    return state.vacuum_coeff()


# -- Wick's theorem ----------------------------------------------------------

def two_point(ring: PolyRing, m: int, n: int) -> TPoly:
    """<vac| phi_m phi_n |vac>."""
    if n > 0:
        return ring.rational(2 * (-1) ** m) if m + n == 0 else ring.zero()
    if n == 0:
        return ring.one() if m == 0 else ring.zero()
    return ring.zero()


def vev_wick(ops, ring: PolyRing) -> TPoly:
    """Vacuum expectation of a product of linear combinations of phi's via
    the Pfaffian of the two-point matrix (zero for an odd number)."""
    r = len(ops)
    if r % 2 == 1:
        return ring.zero()
    if r == 0:
        return ring.one()
    pair = {}
    for i in range(r):
        for j in range(i + 1, r):
            val = ring.zero()
            for m, pm in ops[i].coeff.items():
                for n, pn in ops[j].coeff.items():
                    t = two_point(ring, m, n)
                    if not t.is_zero():
                        val = val + pm * pn * t
            pair[(i, j)] = val
    from .pfaff import pfaffian_from_pairs

    return pfaffian_from_pairs(pair, r, ring)


def vev_direct(ops, ring: PolyRing, cap=None) -> TPoly:
    if cap is None:
        cap = 2 * sum(max((abs(n) for n in op.coeff), default=0) for op in ops) + 4
    state = FockState.vacuum(ring, cap)
    for op in reversed(ops):
        state = op.apply(state)
    return state.vacuum_coeff()
