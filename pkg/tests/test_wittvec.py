from fractions import Fraction

import pytest

from wittkit.errors import ConstantTermError, RingMismatchError, TruncationError, UnsupportedRingError
from wittkit.exactring import Integers, IntegersMod, Polynomial, PrimeField, Rationals
from wittkit.wittvec import (
    GhostVector,
    TruncatedWittVector,
    build_universal_polys,
    frobenius,
    ghost,
    ghost_inverse,
    teichmuller,
    verschiebung,
    witt_add,
    witt_from_series,
    witt_mul,
    witt_neg,
    witt_one,
    witt_scalar,
    witt_scalar_mul,
    witt_sub,
    witt_zero,
)

Z = Integers()
Q = Rationals()
RINGS = [Z, IntegersMod(12), PrimeField(7), Q]


def random_witt(ring, N, rng):
    return TruncatedWittVector(ring, N, tuple(ring.random_element(rng, 3) for _ in range(N)))


def test_teichmuller_product():
    assert witt_mul(teichmuller(2, Z, 4), teichmuller(3, Z, 4)) == teichmuller(6, Z, 4)
    assert str(witt_mul(teichmuller(2, Z, 4), teichmuller(3, Z, 4))) == "1-6t"


def test_addition_is_series_multiplication():
    u = witt_from_series(Polynomial(Z, (1, -2)), 3)
    v = witt_from_series(Polynomial(Z, (1, -3)), 3)
    assert witt_add(u, v).tail == (-5, 6, 0)
    assert witt_add(u, witt_neg(u)) == witt_zero(Z, 3)
    assert witt_sub(u, u).is_zero()


@pytest.mark.parametrize("ring", RINGS, ids=str)
@pytest.mark.parametrize("N", [1, 3, 6])
def test_ring_axioms(ring, N, rng):
    for _ in range(5):
        u, v, w = (random_witt(ring, N, rng) for _ in range(3))
        assert u * v == v * u
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        assert witt_one(ring, N) * u == u
        assert witt_zero(ring, N) * u == witt_zero(ring, N)


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_ghost_is_a_ring_homomorphism(ring, rng):
    for _ in range(5):
        u, v = random_witt(ring, 6, rng), random_witt(ring, 6, rng)
        assert ghost(u + v) == ghost(u) + ghost(v)
        assert ghost(u * v) == ghost(u) * ghost(v)


def test_ghost_of_teichmuller_is_powers():
    assert ghost(teichmuller(3, Z, 4)).components == (3, 9, 27, 81)
    assert ghost(witt_scalar(2, Z, 3)).components == (2, 2, 2)


def test_ghost_inverse_round_trip_over_q(rng):
    for N in range(1, 11):
        g = GhostVector(Q, N, tuple(Q.random_element(rng, 4) for _ in range(N)))
        assert ghost(ghost_inverse(g)) == g


def test_ghost_inverse_needs_a_q_algebra():
    with pytest.raises(UnsupportedRingError):
        ghost_inverse(GhostVector(Z, 2, (1, 1)))


def test_universal_polynomials():
    polys = build_universal_polys(8)
    assert polys.N == 8
    assert polys.mul_polys[0] == ((-1, ((0, 1),), ((0, 1),)),)
    assert len(polys.mul_polys) == 8
    assert set(polys.frob_polys) == set(range(2, 9))
    for terms in polys.mul_polys:
        assert all(isinstance(coeff, int) for coeff, _, _ in terms)


@pytest.mark.parametrize("m", [2, 3])
def test_frobenius_after_verschiebung_is_multiplication(m, rng):
    for _ in range(5):
        u = random_witt(Z, 8, rng)
        depth = 8 // m
        truncated = TruncatedWittVector(Z, depth, u.tail[:depth])
        assert frobenius(m, verschiebung(m, u)) == witt_scalar_mul(m, truncated)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_frobenius_of_teichmuller(m):
    assert frobenius(m, teichmuller(-2, Z, 8)) == teichmuller((-2) ** m, Z, 8 // m)


def test_frobenius_matches_ghost_shift_over_q(rng):
    u = random_witt(Q, 6, rng)
    shifted = frobenius(2, u)
    assert ghost(shifted).components == tuple(ghost(u)[2 * n] for n in range(1, 4))


def test_frobenius_needs_depth():
    with pytest.raises(TruncationError):
        frobenius(5, teichmuller(1, Z, 3))


def test_verschiebung_substitutes_powers():
    u = witt_from_series(Polynomial(Z, (1, 2, 3)), 5)
    assert verschiebung(2, u).tail == (0, 2, 0, 3, 0)


def test_witt_scalar_negative():
    assert witt_scalar(-1, Z, 3) == witt_neg(witt_one(Z, 3))
    assert witt_scalar_mul(-2, teichmuller(1, Z, 3)) == witt_scalar(-2, Z, 3)


def test_constant_term_must_be_one():
    with pytest.raises(ConstantTermError):
        witt_from_series(Polynomial(Z, (2, 1)), 2)


def test_mixed_rings_or_depths_are_rejected():
    with pytest.raises(RingMismatchError):
        witt_add(teichmuller(1, Z, 2), teichmuller(1, Q, 2))
    with pytest.raises(RingMismatchError):
        witt_mul(teichmuller(1, Z, 2), teichmuller(1, Z, 3))


def test_tail_length_must_match_depth():
    with pytest.raises(TruncationError):
        TruncatedWittVector(Z, 3, (1, 2))


def test_rational_tails_are_coerced():
    u = TruncatedWittVector(Q, 2, (1, 2))
    assert u.tail == (Fraction(1), Fraction(2))
