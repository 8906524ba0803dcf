"""Strict partitions, shifted diagrams, and signed/unsigned Coxeter data.

Strict partitions are plain tuples of strictly decreasing positive
integers; helpers here normalize, enumerate, and translate them into the
Weyl-group words and type-A permutations used by the coefficient layer.
"""

from __future__ import annotations

from itertools import combinations


# -- strict partitions ----------------------------------------------------

def strict(parts) -> tuple:
    """Normalize to a strict partition tuple; drop trailing zeros."""
    lam = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in lam):
        raise ValueError("negative part")
    if list(lam) != sorted(lam, reverse=True) or len(set(lam)) != len(lam):
        raise ValueError(f"not a strict partition: {parts}")
    return lam


def weight(lam) -> int:
    return sum(lam)


def contains(lam, mu) -> bool:
    """lam contains mu: mu_i <= lam_i for all i."""
    mu = tuple(mu)
    lam = tuple(lam)
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def strict_partitions(max_weight: int, max_len=None, max_part=None):
    """All strict partitions with |lam| <= max_weight (and optional caps),
    in increasing weight order."""
    out = [()]
    max_part = max_weight if max_part is None else min(max_part, max_weight)
    pool = range(1, max_part + 1)
    for r in range(1, (max_len if max_len is not None else max_part) + 1):
        for combo in combinations(pool, r):
            if sum(combo) <= max_weight:
                out.append(tuple(sorted(combo, reverse=True)))
    out.sort(key=lambda p: (sum(p), p))
    return out


def strict_partitions_in(box) -> list:
    """All strict partitions contained in the strict partition ``box``."""
    box = strict(box)
    out = []
    for r in range(len(box) + 1):
        for combo in combinations(range(1, (box[0] if box else 0) + 1), r):
            lam = tuple(sorted(combo, reverse=True))
            if contains(box, lam):
                out.append(lam)
    out.sort(key=lambda p: (sum(p), p))
    return out


def staircase(r: int) -> tuple:
    """delta_r = (r, r-1, ..., 1)."""
    return tuple(range(r, 0, -1))


# -- box moves on shifted diagrams ---------------------------------------
#
# The shifted diagram of lam has boxes (t, j) with t <= j <= lam_t + t - 1
# (rows indented).  The content of box (t, j) is j - t.  Adding a box of
# content i to row t changes lam_t from i to i+1.

def addable_row(lam, i: int):
    """Row index (1-based) where a box of content i can be added, or None.

    i = 0 adds a new part equal to 1 (allowed iff no part equals 1)."""
    lam = tuple(lam)
    if i == 0:
        return None if 1 in lam else len(lam) + 1
    for t, part in enumerate(lam, start=1):
        if part == i:
            prev = lam[t - 2] if t >= 2 else None
            if prev is None or part + 1 < prev:
                return t
            return None
    return None


def removable_row(lam, i: int):
    """Row index whose last box has content i and can be removed, or None."""
    lam = tuple(lam)
    for t, part in enumerate(lam, start=1):
        if part - 1 == i:
            nxt = lam[t] if t < len(lam) else 0
            if part - 1 > nxt or part == 1:
                return t
            return None
    return None


def weyl_act(lam, i: int):
    """Outcome of the simple reflection move indexed by i on lam.

    Returns (kind, new_lam): kind is "add", "remove", or "fix".
    """
    lam = strict(lam)
    t = addable_row(lam, i)
    if t is not None:
        new = list(lam) + ([0] if t == len(lam) + 1 else [])
        new[t - 1] += 1
        return "add", strict(new)
    t = removable_row(lam, i)
    if t is not None:
        new = list(lam)
        new[t - 1] -= 1
        return "remove", strict(new)
    return "fix", lam


# -- signed Coxeter words for the operator recursions ---------------------

def row_word(k: int) -> list:
    """rho_k = s_{k-1} ... s_1 s_0 as an index list (left to right)."""
    return list(range(k - 1, -1, -1))


def w_lambda_word(lam) -> list:
    """Reduced word for w_lam = rho_{lam_r} ... rho_{lam_1}, listed left to
    right; applying the rightmost letter first to the empty partition
    builds lam one box at a time."""
    lam = strict(lam)
    word = []
    for part in reversed(lam):
        word.extend(row_word(part))
    return word


# -- type-A permutations --------------------------------------------------

class Permutation:
    """Permutation of {1..n} in one-line notation (stored as a tuple)."""

    __slots__ = ("line",)

    def __init__(self, line):
        line = tuple(int(v) for v in line)
        if sorted(line) != list(range(1, len(line) + 1)):
            raise ValueError(f"not a permutation: {line}")
        self.line = line

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    @staticmethod
    def from_word(word, n: int) -> "Permutation":
        """Product s_{a_1} s_{a_2} ... applied left to right (a_i >= 1)."""
        w = Permutation.identity(n)
        for a in word:
            w = w * Permutation.transposition(a, n)
        return w

    @staticmethod
    def transposition(i: int, n: int) -> "Permutation":
        line = list(range(1, n + 1))
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(line)

    def __len__(self):
        return len(self.line)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.pad(max(len(self), len(other))).line == other.pad(max(len(self), len(other))).line

    def __hash__(self):
        return hash(self.trim().line)

    def __repr__(self):
        return f"Permutation{self.line}"

    def __call__(self, i: int) -> int:
        return self.line[i - 1] if i <= len(self.line) else i

    def __mul__(self, other: "Permutation") -> "Permutation":
        """(self*other)(i) = self(other(i))."""
        n = max(len(self), len(other))
        return Permutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.line)
        for i, v in enumerate(self.line, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def pad(self, n: int) -> "Permutation":
        if n <= len(self.line):
            return self
        return Permutation(self.line + tuple(range(len(self.line) + 1, n + 1)))

    def trim(self) -> "Permutation":
        line = list(self.line)
        while line and line[-1] == len(line):
            line.pop()
        return Permutation(line)

    def length(self) -> int:
        line = self.line
        n = len(line)
        return sum(1 for i in range(n) for j in range(i + 1, n) if line[i] > line[j])

    def right_descent(self, i: int) -> bool:
        """True iff l(w s_i) < l(w), i.e. w(i) > w(i+1)."""
        return self(i) > self(i + 1)

    def times_s(self, i: int) -> "Permutation":
        w = self.pad(i + 1)
        line = list(w.line)
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(line)


def grassmannian_perm(lam, r: int) -> Permutation:
    """w_lam^{(r)} with w(i) = i + lam_{r-i+1} for i <= r (lam padded with
    zeros to length r); r-Grassmannian."""
    lam = tuple(strict(lam)) + (0,) * r
    head = [i + lam[r - i] for i in range(1, r + 1)]
    n = max(head) if head else 0
    rest = [v for v in range(1, n + 1) if v not in set(head)]
    return Permutation(head + rest).trim()


def quotient_perm(lam, mu, r: int) -> Permutation:
    """w_{mu'}^{(r)} (w_{lam'}^{(r)})^{-1} for the staircase-shifted shapes
    lam' = lam - delta_r, mu' = mu - delta_r (entrywise, as partitions)."""
    lam = strict(lam)
    mu = strict(mu)
    if len(lam) != r or len(mu) != r:
        raise ValueError("length must equal r")
    delta = staircase(r)
    lamp = tuple(lam[i] - delta[i] for i in range(r))
    mup = tuple(mu[i] - delta[i] for i in range(r))
    if any(v < 0 for v in lamp) or any(v < 0 for v in mup):
        raise ValueError("staircase not contained")
    wl = partition_grassmannian(lamp, r)
    wm = partition_grassmannian(mup, r)
    return (wm * wl.inverse()).trim()


def partition_grassmannian(part, r: int) -> Permutation:
    """w^{(r)} for an ordinary partition (weakly decreasing, parts >= 0):
    w(i) = i + part_{r-i+1}."""
    part = tuple(part) + (0,) * r
    head = [i + part[r - i] for i in range(1, r + 1)]
    n = max(head + [r])
    rest = [v for v in range(1, n + 1) if v not in set(head)]
    return Permutation(head + rest).trim()


def rightmost_bottom_content(lam, r: int) -> int:
    """Content of the rightmost box in the bottom row of the skew shifted
    shape lam / delta_r: the last row t with lam_t > r - t + 1 contributes
    its final box (t, lam_t + t - 1), of content lam_t - 1."""
    lam = strict(lam)
    if len(lam) != r:
        raise ValueError("length must equal r")
    rows = [t for t in range(1, r + 1) if lam[t - 1] > r - t + 1]
    if not rows:
        raise ValueError("shape equals the staircase")
    t = max(rows)
    return lam[t - 1] - 1
