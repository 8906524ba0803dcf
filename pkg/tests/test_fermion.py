"""Fock-space layer: normal ordering, pairings, expectation values."""

from kfun.fermion import build_state, dual_pairing, hamiltonian_vev
from kfun.gfun import direct_sym, extract_gq
from kfun.rings import PolyRing, TruncationProfile

K = 2


def test_round_vev_reproduces_polynomial_family():
    ring = PolyRing(TruncationProfile(K, {"x": 4}), nb=2, nx=2)
    for fam in ("GP", "GQ"):
        for lam in [(1,), (2,), (2, 1)]:
            v = hamiltonian_vev(build_state(fam, lam, ring), "round")
            assert v == direct_sym(fam, lam, ring, 2)


def test_square_vev_reproduces_series_family():
    ring = PolyRing(TruncationProfile(K, {"y": 3}), nb=2, ny=2)
    for lam in [(1,), (2,), (2, 1)]:
        v = hamiltonian_vev(build_state("gq", lam, ring), "square")
        assert v == extract_gq(lam, ring)


def test_pairing_orthonormality_small():
    ring = PolyRing(TruncationProfile(K), nb=3)
    from kfun.combinat import strict_partitions
    parts = strict_partitions(3)
    for lam in parts:
        for mu in parts:
            val = dual_pairing(mu, lam, "GP", "gq", ring)
            if lam == mu:
                assert val == ring.one()
            else:
                assert val.is_zero()


def test_pairing_other_orientation():
    ring = PolyRing(TruncationProfile(K), nb=3)
    assert dual_pairing((2, 1), (2, 1), "GQ", "gp", ring) == ring.one()
    assert dual_pairing((2,), (2, 1), "GQ", "gp", ring).is_zero()
