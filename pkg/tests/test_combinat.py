"""Strict partitions, the type-B Weyl action, and one-line permutations."""

from hypothesis import given, settings, strategies as st

from kfun.combinat import (
    Permutation,
    contains,
    grassmannian_perm,
    partition_grassmannian,
    quotient_perm,
    rightmost_bottom_content,
    staircase,
    strict,
    strict_partitions,
    strict_partitions_in,
    w_lambda_word,
    weyl_act,
)


def test_strict_partition_enumeration():
    assert strict_partitions(0) == [()]
    assert strict_partitions(3) == [(), (1,), (2,), (2, 1), (3,)]
    assert all(len(set(p)) == len(p) for p in strict_partitions(8))
    box = strict_partitions_in((3, 1))
    assert box == [(), (1,), (2,), (2, 1), (3,), (3, 1)]
    assert all(contains((3, 1), p) for p in box)


def test_staircase():
    assert staircase(0) == ()
    assert staircase(3) == (3, 2, 1)


def test_weyl_act_cases():
    # i = 0 toggles a part equal to 1
    assert weyl_act((2,), 0) == ("add", (2, 1))
    assert weyl_act((2, 1), 0) == ("remove", (2,))
    # i >= 1 exchanges parts i and i+1 when exactly one is present
    assert weyl_act((2, 1), 2) == ("add", (3, 1))
    assert weyl_act((3, 1), 2) == ("remove", (2, 1))
    assert weyl_act((3, 2), 2) == ("fix", (3, 2))


@st.composite
def perms(draw):
    n = draw(st.integers(1, 6))
    line = list(range(1, n + 1))
    for _ in range(draw(st.integers(0, 10))):
        i = draw(st.integers(0, n - 2)) if n > 1 else 0
        if n > 1:
            line[i], line[i + 1] = line[i + 1], line[i]
    return Permutation(tuple(line))


@settings(max_examples=40, deadline=None)
@given(perms())
def test_permutation_group_laws(w):
    n = len(w)
    e = Permutation.identity(n)
    assert w * w.inverse() == e
    assert w.inverse().inverse().trim() == w.trim()
    assert w.length() == w.inverse().length()


@settings(max_examples=40, deadline=None)
@given(perms())
def test_reduced_word_reconstructs(w):
    from kfun.coeff import reduced_word
    word = reduced_word(w)
    assert len(word) == w.length()
    assert Permutation.from_word(word, len(w)) == w


def test_grassmannian_dictionary_perms():
    lam = (3, 1)
    r = 2
    w = grassmannian_perm(lam, r)
    assert w.length() == sum(lam)
    v = partition_grassmannian((2, 1), 2)
    # descents only at position r
    for i in range(1, len(v)):
        if v.right_descent(i):
            assert i == 2


def test_quotient_perm_composes():
    lam, mu, r = (3, 1), (4, 2), 2
    w = quotient_perm(lam, mu, r)
    d = staircase(r)
    wl = partition_grassmannian(tuple(lam[i] - d[i] for i in range(r)), r)
    wm = partition_grassmannian(tuple(mu[i] - d[i] for i in range(r)), r)
    n = max(len(wl), len(wm), len(w))
    assert (wm.pad(n) * wl.inverse().pad(n)).trim() == w.trim()


def test_rightmost_bottom_content():
    # row below the staircase threshold determines the extra reflection
    assert rightmost_bottom_content((3, 2), 2) == 1
    assert rightmost_bottom_content((2,), 1) == 1


def test_w_lambda_word_length():
    for lam in [(1,), (2,), (2, 1), (3, 1)]:
        word = w_lambda_word(lam)
        assert len(word) == sum(lam)
