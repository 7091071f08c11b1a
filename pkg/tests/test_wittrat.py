import pytest

from wittkit.config import reset_settings
from wittkit.errors import ConstantTermError, NonUnitError, NotPrimeError, UnsupportedRingError
from wittkit.exactring import CyclotomicField, Integers, IntegersMod, Polynomial, Rationals, random_polynomial
from wittkit.wittrat import (
    RationalWittVector,
    phi_p,
    phi_p_minus_scalar_check,
    phi_p_teichmuller_sum,
    poly_witt_mul,
    vanishing_pattern,
    wr_add,
    wr_base_change,
    wr_embed_truncated,
    wr_frobenius,
    wr_ghost,
    wr_mul,
    wr_neg,
    wr_normalize,
    wr_one,
    wr_scalar,
    wr_scalar_mul,
    wr_sub,
    wr_teichmuller,
    wr_verschiebung,
    wr_zero,
    zeta_minus_one_check,
)
from wittkit.wittvec import witt_mul

Z = Integers()


def poly(*coeffs, ring=Z):
    return Polynomial(ring, coeffs)


def random_wrat(rng, ring=Z, degree=3):
    return wr_normalize(
        random_polynomial(ring, rng.randint(0, degree), rng, height=2),
        random_polynomial(ring, rng.randint(0, degree), rng, height=2),
    )


def test_normalize_cancels_common_factors():
    u = wr_normalize(poly(1, 0, -1), poly(1, -1))
    assert u.num == poly(1, 1) and u.den == poly(1)
    assert u == wr_normalize(poly(1, 1), poly(1))


def test_normalize_scales_constant_terms_over_fields():
    Q = Rationals()
    u = wr_normalize(poly(2, 4, ring=Q), poly(1, ring=Q))
    assert u.num == poly(1, 2, ring=Q)


def test_constant_term_must_be_a_unit():
    with pytest.raises(NonUnitError):
        wr_normalize(poly(2, 1), poly(1))
    with pytest.raises(ConstantTermError):
        RationalWittVector(Z, poly(2, 1), poly(1))


def test_addition_is_multiplication_of_fractions():
    u = wr_add(wr_teichmuller(2, Z), wr_teichmuller(3, Z))
    assert u.num == poly(1, -5, 6)
    assert wr_sub(u, u) == wr_zero(Z)
    assert wr_neg(wr_teichmuller(2, Z)).den == poly(1, -2)


def test_teichmuller_product():
    assert wr_mul(wr_teichmuller(2, Z), wr_teichmuller(3, Z)) == wr_teichmuller(6, Z)


def test_product_by_bilinearity():
    u = wr_normalize(poly(1, -2), poly(1, -3))
    v = wr_teichmuller(5, Z)
    assert wr_mul(u, v) == wr_normalize(poly(1, -10), poly(1, -15))


def test_poly_witt_mul_pairs_roots():
    # (1 - t)(1 - 2t) times (1 - 3t) has roots 3 and 6
    assert poly_witt_mul(poly(1, -3, 2), poly(1, -3)) == poly(1, -9, 18)


def test_product_agrees_with_truncated_product(rng):
    for _ in range(10):
        u, v = random_wrat(rng), random_wrat(rng)
        product = wr_mul(u, v)
        assert wr_embed_truncated(product, 12) == witt_mul(wr_embed_truncated(u, 12), wr_embed_truncated(v, 12))
        assert product.rank == u.rank * v.rank


def test_product_without_crosscheck(monkeypatch):
    monkeypatch.setenv("WITTKIT_CROSSCHECK_DEPTH", "0")
    reset_settings()
    assert wr_mul(wr_teichmuller(2, Z), wr_teichmuller(-1, Z)) == wr_teichmuller(-2, Z)


def test_one_is_the_multiplicative_unit(rng):
    u = random_wrat(rng)
    assert wr_mul(wr_one(Z), u) == u


def test_scalars():
    assert wr_scalar(3, Z).den == poly(1) and wr_scalar(3, Z).num == poly(1, -3, 3, -1)
    assert wr_scalar_mul(-1, wr_one(Z)) == wr_scalar(-1, Z)


def test_products_need_an_integrally_closed_domain():
    ring = IntegersMod(12)
    u = wr_normalize(poly(1, 1, ring=ring), poly(1, ring=ring))
    with pytest.raises(UnsupportedRingError):
        wr_mul(u, u)


def test_frobenius_raises_roots_to_powers():
    assert wr_frobenius(3, wr_teichmuller(2, Z)) == wr_teichmuller(8, Z)
    # the roots of 1 + t + t^2 are permuted by squaring
    assert wr_frobenius(2, wr_normalize(poly(1, 1, 1), poly(1))) == wr_normalize(poly(1, 1, 1), poly(1))


@pytest.mark.parametrize("m", [2, 3])
def test_frobenius_after_verschiebung(m, rng):
    for _ in range(5):
        u = random_wrat(rng)
        assert wr_frobenius(m, wr_verschiebung(m, u)) == wr_scalar_mul(m, u)


def test_verschiebung():
    assert wr_verschiebung(2, wr_teichmuller(3, Z)).num == poly(1, 0, -3)


def test_embedding():
    u = wr_normalize(poly(1), poly(1, -1))
    assert wr_embed_truncated(u, 3).tail == (1, 1, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_ghost_of_phi_p(p):
    expected = tuple(p - 1 if n % p == 0 else -1 for n in range(1, 2 * p + 1))
    assert wr_ghost(phi_p(p), 2 * p).components == expected


def test_phi_minus_scalar_ghost():
    assert phi_p_minus_scalar_check(3).components == (-3, -3, 0, -3, -3, 0)
    for p in (2, 5, 7):
        g = phi_p_minus_scalar_check(p, 3 * p)
        assert all(c == (0 if n % p == 0 else -p) for n, c in enumerate(g.components, start=1))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_phi_as_teichmuller_sum(p):
    assert phi_p_teichmuller_sum(p) == wr_base_change(phi_p(p), CyclotomicField(p))


@pytest.mark.parametrize("p", [3, 5])
def test_zeta_minus_one_vanishes_at_multiples_of_p(p):
    difference, shifted = zeta_minus_one_check(p)
    expected = [n % p == 0 for n in range(1, 2 * p + 1)]
    assert vanishing_pattern(difference) == expected
    assert vanishing_pattern(shifted) == expected


def test_phi_needs_a_prime():
    with pytest.raises(NotPrimeError):
        phi_p(4)
