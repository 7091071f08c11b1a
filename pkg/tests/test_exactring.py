from fractions import Fraction

import pytest
from sympy import Matrix, Poly, cyclotomic_poly, resultant, symbols

from wittkit.errors import (
    InexactDivisionError,
    InvalidDescriptorError,
    NonUnitError,
    RingMismatchError,
    UnsupportedRingError,
    ZeroPolynomialError,
)
from wittkit.exactring import (
    CyclotomicField,
    CyclotomicNumber,
    FractionField,
    Integers,
    IntegersMod,
    Polynomial,
    PrimeField,
    Rationals,
    bareiss_determinant,
    cyclotomic_polynomial,
    format_polynomial,
    poly_divmod,
    poly_exact_quotient,
    poly_gcd,
    poly_mul,
    poly_resultant,
    random_polynomial,
    ring_from_text,
    ring_to_text,
    series_inverse,
)

x = symbols("x")
Z = Integers()
Q = Rationals()


@pytest.mark.parametrize("text", ["Z", "Q", "Z/12", "Fp/7", "Qzeta/5", "Frac(Z)"])
def test_ring_descriptors_print_as_parsed(text):
    assert ring_to_text(ring_from_text(text)) == text


@pytest.mark.parametrize("text", ["R", "Z/x", "Fp/6", "Qzeta/0", ""])
def test_bad_ring_descriptors_are_rejected(text):
    with pytest.raises(InvalidDescriptorError):
        ring_from_text(text)


def test_ring_properties():
    assert Z.is_integral_domain and Z.is_integrally_closed and not Z.contains_rationals
    assert Q.is_field and Q.contains_rationals
    assert not IntegersMod(12).is_integral_domain
    assert PrimeField(7).is_field
    assert CyclotomicField(5).degree == 4
    assert FractionField(Z).is_field


def test_integers_mod_reduce_on_coercion():
    ring = IntegersMod(12)
    assert ring.coerce(13) == 1
    assert ring.mul(5, 7) == 11
    assert ring.is_unit(5) and not ring.is_unit(4)


def test_cyclotomic_numbers_reduce_modulo_the_cyclotomic_polynomial():
    z = CyclotomicNumber.zeta(3)
    assert z ** 3 == CyclotomicNumber.constant(3, 1)
    assert (1 + z + z * z).is_zero()
    w = CyclotomicNumber(5, (Fraction(2), Fraction(1), Fraction(0), Fraction(3)))
    assert w * w.inverse() == CyclotomicNumber.constant(5, 1)


def test_cyclotomic_conductors_must_agree():
    with pytest.raises(RingMismatchError):
        CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(4)


def test_zero_has_no_cyclotomic_inverse():
    with pytest.raises(NonUnitError):
        CyclotomicNumber.constant(7, 0).inverse()


@pytest.mark.parametrize("n", [1, 2, 6, 9, 12, 15, 30])
def test_cyclotomic_polynomials_match_sympy(n):
    expected = [int(c) for c in reversed(Poly(cyclotomic_poly(n, x), x).all_coeffs())]
    assert list(cyclotomic_polynomial(n).coeffs) == expected


def test_format_polynomial():
    assert format_polynomial(Polynomial(Z, (1, -2, 3))) == "1-2t+3t^2"
    assert format_polynomial(Polynomial(Z, ())) == "0"


def test_series_inverse():
    inverse = series_inverse(Polynomial(Z, (1, -1)), 5)
    assert inverse.coeffs == (1, 1, 1, 1, 1, 1)
    with pytest.raises(NonUnitError):
        series_inverse(Polynomial(Z, (2, 1)), 3)


def test_divmod_and_exact_quotient():
    f = Polynomial(Q, (Fraction(-1), Fraction(0), Fraction(1)))
    g = Polynomial(Q, (Fraction(-1), Fraction(1)))
    q, r = poly_divmod(f, g)
    assert q.coeffs == (Fraction(1), Fraction(1)) and r.is_zero()
    assert poly_exact_quotient(Polynomial(Z, (-1, 0, 1)), Polynomial(Z, (1, 1))).coeffs == (-1, 1)
    with pytest.raises(InexactDivisionError):
        poly_exact_quotient(Polynomial(Z, (1, 0, 1)), Polynomial(Z, (1, 1)))
    with pytest.raises(ZeroPolynomialError):
        poly_divmod(f, Polynomial.zero(Q))


def test_integer_gcd_is_normalized_to_constant_term_one():
    common = Polynomial(Z, (1, -1))
    f = poly_mul(common, Polynomial(Z, (1, 2)))
    g = poly_mul(common, Polynomial(Z, (3, 1)))
    assert poly_gcd(f, g).coeffs == (1, -1)


def test_gcd_needs_a_field_or_the_integers():
    ring = IntegersMod(12)
    with pytest.raises(UnsupportedRingError):
        poly_gcd(Polynomial(ring, (1, 1)), Polynomial(ring, (1, 2)))


def test_bareiss_matches_sympy(rng):
    for size in range(1, 6):
        rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        assert bareiss_determinant(rows, Z) == Matrix(rows).det()


def test_resultant_matches_sympy(rng):
    for _ in range(20):
        f = random_polynomial(Z, rng.randint(1, 4), rng, constant_one=False)
        g = random_polynomial(Z, rng.randint(1, 4), rng, constant_one=False)
        if f.degree < 1 or g.degree < 1:
            continue
        sf = sum(c * x ** k for k, c in enumerate(f.coeffs))
        sg = sum(c * x ** k for k, c in enumerate(g.coeffs))
        assert poly_resultant(f, g) == resultant(sf, sg, x)


def test_resultant_of_zero_is_undefined():
    with pytest.raises(ZeroPolynomialError):
        poly_resultant(Polynomial.zero(Z), Polynomial(Z, (1, 1)))


def test_resultant_needs_an_integral_domain():
    ring = IntegersMod(6)
    with pytest.raises(UnsupportedRingError):
        poly_resultant(Polynomial(ring, (1, 1)), Polynomial(ring, (1, 2)))


def test_polynomials_over_different_rings_do_not_mix():
    with pytest.raises(RingMismatchError):
        Polynomial(Z, (1, 1)) + Polynomial(Q, (1, 1))
