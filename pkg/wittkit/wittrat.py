"""
Rational Witt vectors.

W_rat(A) consists of the power series P/Q with P(0) = Q(0) = 1. Addition
multiplies fractions, negation swaps numerator and denominator and the Witt
product pairs roots: for f = prod(1 - a_i t) and g = prod(1 - c_k t),
f * g = prod(1 - a_i c_k t). The root pairing is computed by bivariate
resultants, never by factoring.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from sympy import isprime

from .config import get_settings
from .errors import (
    ConstantTermError,
    CrossCheckError,
    NonUnitError,
    NotPrimeError,
    RingMismatchError,
    UnsupportedRingError,
)
from .exactring import (
    CyclotomicField,
    Integers,
    Polynomial,
    PolynomialRing,
    RingDescriptor,
    format_fraction,
    poly_exact_div_const1,
    poly_gcd,
    poly_mul,
    poly_mul_truncated,
    poly_reverse,
    poly_scale,
    poly_substitute_power,
    series_inverse,
    sylvester_resultant,
)
from .wittvec import (
    GhostVector,
    TruncatedWittVector,
    ghost,
    witt_from_series,
    witt_mul,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RationalWittVector:
    """The series num/den; both polynomials have constant term 1."""

    ring: RingDescriptor
    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        one = self.ring.one()
        for label, poly in (("numerator", self.num), ("denominator", self.den)):
            if poly.ring != self.ring:
                raise RingMismatchError(f"{label} is over {poly.ring}, expected {self.ring}")
            if not self.ring.eq(poly.constant_term, one):
                raise ConstantTermError(f"{label} {poly} does not have constant term 1")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalWittVector):
            return NotImplemented
        return wr_equal(self, other)

    __hash__ = None

    def __add__(self, other: "RationalWittVector") -> "RationalWittVector":
        return wr_add(self, other)

    def __neg__(self) -> "RationalWittVector":
        return wr_neg(self)

    def __sub__(self, other: "RationalWittVector") -> "RationalWittVector":
        return wr_sub(self, other)

    def __mul__(self, other: "RationalWittVector") -> "RationalWittVector":
        return wr_mul(self, other)

    @property
    def rank(self) -> int:
        """deg num - deg den; additive, and multiplicative under wr_mul."""
        return self.num.degree - self.den.degree

    def __str__(self) -> str:
        return format_fraction(self.num, self.den)


def _supports_gcd(ring: RingDescriptor) -> bool:
    return isinstance(ring, Integers) or ring.is_field


def require_exact_ring(ring: RingDescriptor, operation: str) -> None:
    if not (ring.is_integral_domain and ring.is_integrally_closed):
        raise UnsupportedRingError(
            f"{operation} needs an integrally closed domain, got {ring}; "
            "use wr_embed_truncated and the truncated Witt product instead"
        )


def wr_normalize(P: Polynomial, Q: Polynomial) -> RationalWittVector:
    """
    Bring P/Q to normal form

    Both constant terms are scaled to 1 and, over fields and the integers, the
    gcd of numerator and denominator is cancelled.

    Raises:
        NonUnitError: if P(0) or Q(0) is not a unit
    """
    if P.ring != Q.ring:
        raise RingMismatchError(f"Fraction over different rings: {P.ring} vs {Q.ring}")
    ring = P.ring
    for poly in (P, Q):
        if not ring.is_unit(poly.constant_term):
            raise NonUnitError(f"Constant term of {poly} is not a unit in {ring}")
    P = poly_scale(P, ring.inv(P.constant_term))
    Q = poly_scale(Q, ring.inv(Q.constant_term))
    if _supports_gcd(ring) and Q.degree > 0 and P.degree > 0:
        common = poly_gcd(P, Q)
        if common.degree > 0:
            P = poly_exact_div_const1(P, common)
            Q = poly_exact_div_const1(Q, common)
    return RationalWittVector(ring, P, Q)


def wr_from_polynomial(f: Polynomial) -> RationalWittVector:
    return wr_normalize(f, Polynomial.one(f.ring))


def wr_zero(ring: RingDescriptor) -> RationalWittVector:
    one = Polynomial.one(ring)
    return RationalWittVector(ring, one, one)


def wr_teichmuller(a, ring: RingDescriptor) -> RationalWittVector:
    """[a] = 1 - a t."""
    a = ring.coerce(a)
    return RationalWittVector(ring, Polynomial(ring, (ring.one(), ring.neg(a))), Polynomial.one(ring))


def wr_one(ring: RingDescriptor) -> RationalWittVector:
    return wr_teichmuller(ring.one(), ring)


def _power(f: Polynomial, exponent: int) -> Polynomial:
    result = Polynomial.one(f.ring)
    for _ in range(exponent):
        result = poly_mul(result, f)
    return result


def wr_scalar(n: int, ring: RingDescriptor) -> RationalWittVector:
    """The Witt integer n = n-fold sum of [1], i.e. (1 - t)^n."""
    return wr_scalar_mul(n, wr_one(ring))


def wr_scalar_mul(n: int, u: RationalWittVector) -> RationalWittVector:
    if n < 0:
        return wr_scalar_mul(-n, wr_neg(u))
    return RationalWittVector(u.ring, _power(u.num, n), _power(u.den, n))


def _check_pair(u: RationalWittVector, v: RationalWittVector) -> RingDescriptor:
    if u.ring != v.ring:
        raise RingMismatchError(f"Rational Witt vectors over different rings: {u.ring} vs {v.ring}")
    return u.ring


def wr_add(u: RationalWittVector, v: RationalWittVector) -> RationalWittVector:
    _check_pair(u, v)
    return wr_normalize(poly_mul(u.num, v.num), poly_mul(u.den, v.den))


def wr_neg(u: RationalWittVector) -> RationalWittVector:
    return RationalWittVector(u.ring, u.den, u.num)


def wr_sub(u: RationalWittVector, v: RationalWittVector) -> RationalWittVector:
    return wr_add(u, wr_neg(v))


def wr_equal(u: RationalWittVector, v: RationalWittVector) -> bool:
    """Equality of series, tested as num_u * den_v == num_v * den_u."""
    if u.ring != v.ring:
        return False
    return poly_mul(u.num, v.den) == poly_mul(v.num, u.den)


# ---------------------------------------------------------------------------
# Root pairing
# ---------------------------------------------------------------------------

def _renormalize(H: Polynomial, degree: int) -> Polynomial:
    """t^degree H(1/t) scaled to constant term 1."""
    ring = H.ring
    reversed_poly = poly_reverse(H, degree)
    return poly_scale(reversed_poly, ring.inv(reversed_poly.constant_term))


def poly_witt_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Witt product of two constant-term-1 polynomials

    With f = prod(1 - a_i t) and g = prod(1 - c_k t) over an algebraic
    closure, returns prod(1 - a_i c_k t) of degree deg f * deg g. Computed as
    the reversal of Res_y(f*(y), G(x, y)) where f*(y) = y^n f(1/y) and
    G(x, y) = sum_j g_j x^(m-j) y^j.

    Raises:
        ConstantTermError: if f(0) or g(0) is not 1
        UnsupportedRingError: if the ring is not an integrally closed domain
    """
    if f.ring != g.ring:
        raise RingMismatchError(f"Polynomials over different rings: {f.ring} vs {g.ring}")
    ring = f.ring
    one = ring.one()
    for poly in (f, g):
        if not ring.eq(poly.constant_term, one):
            raise ConstantTermError(f"{poly} does not have constant term 1")
    require_exact_ring(ring, "poly_witt_mul")
    n, m = f.degree, g.degree
    if n == 0 or m == 0:
        return Polynomial.one(ring)
    x_ring = PolynomialRing(ring)
    f_star = [x_ring.coerce(c) for c in reversed(f.coeffs)]
    G = [Polynomial(ring, (ring.zero(),) * (m - j) + (g[j],)) for j in range(m + 1)]
    H = sylvester_resultant(f_star, G, x_ring)
    return _renormalize(H, n * m)


def _power_roots(f: Polynomial, m: int) -> Polynomial:
    """prod(1 - a_i^m t) for f = prod(1 - a_i t)."""
    ring = f.ring
    n = f.degree
    if n == 0 or m == 1:
        return f
    x_ring = PolynomialRing(ring)
    f_star = [x_ring.coerce(c) for c in reversed(f.coeffs)]
    relation = [Polynomial(ring, (ring.zero(), ring.one()))]
    relation += [x_ring.zero()] * (m - 1)
    relation.append(x_ring.from_int(-1))
    H = sylvester_resultant(f_star, relation, x_ring)
    return _renormalize(H, n)


def wr_mul(u: RationalWittVector, v: RationalWittVector) -> RationalWittVector:
    """
    Witt product of rational Witt vectors

    Expands (P/Q) * (R/S) by bilinearity into root pairings of the four
    polynomial pairs, then checks the result against the truncated Witt
    product of the embeddings (depth from WITTKIT_CROSSCHECK_DEPTH).

    Raises:
        UnsupportedRingError: if the ring is not an integrally closed domain
        CrossCheckError: if the truncated images disagree
    """
    ring = _check_pair(u, v)
    require_exact_ring(ring, "wr_mul")
    num = poly_mul(poly_witt_mul(u.num, v.num), poly_witt_mul(u.den, v.den))
    den = poly_mul(poly_witt_mul(u.num, v.den), poly_witt_mul(u.den, v.num))
    result = wr_normalize(num, den)
    depth = get_settings().crosscheck_depth
    if depth > 0:
        expected = witt_mul(wr_embed_truncated(u, depth), wr_embed_truncated(v, depth))
        if wr_embed_truncated(result, depth) != expected:
            raise CrossCheckError("Rational Witt product disagrees with its truncated image",
                                  {"u": u, "v": v, "depth": depth})
    return result


def wr_frobenius(m: int, u: RationalWittVector) -> RationalWittVector:
    """F_m sends every root a of numerator and denominator to a^m."""
    if m < 1:
        raise ValueError(f"Frobenius index must be positive, got {m}")
    require_exact_ring(u.ring, "wr_frobenius")
    return wr_normalize(_power_roots(u.num, m), _power_roots(u.den, m))


def wr_verschiebung(m: int, u: RationalWittVector) -> RationalWittVector:
    """V_m: t -> t^m on numerator and denominator."""
    if m < 1:
        raise ValueError(f"Verschiebung index must be positive, got {m}")
    return wr_normalize(poly_substitute_power(u.num, m), poly_substitute_power(u.den, m))


# ---------------------------------------------------------------------------
# Embedding and ghosts
# ---------------------------------------------------------------------------

def wr_embed_truncated(u: RationalWittVector, N: int) -> TruncatedWittVector:
    """num * den^-1 mod t^(N+1) as an element of W_N."""
    series = poly_mul_truncated(u.num, series_inverse(u.den, N), N)
    return witt_from_series(series, N)


def wr_ghost(u: RationalWittVector, N: int) -> GhostVector:
    """Newton power sums of the numerator roots minus those of the denominator."""
    return ghost(witt_from_series(u.num, N)) - ghost(witt_from_series(u.den, N))


def wr_base_change(u: RationalWittVector, ring: RingDescriptor) -> RationalWittVector:
    """Push coefficients into ``ring`` along the canonical map."""
    num = Polynomial(ring, tuple(ring.coerce(c) for c in u.num.coeffs))
    den = Polynomial(ring, tuple(ring.coerce(c) for c in u.den.coeffs))
    return wr_normalize(num, den)


# ---------------------------------------------------------------------------
# Cyclotomic elements
# ---------------------------------------------------------------------------

def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")


def phi_p(p: int) -> RationalWittVector:
    """Phi_p = 1 + t + ... + t^(p-1) = prod over nontrivial p-th roots z of (1 - z t)."""
    _require_prime(p)
    ring = Integers()
    return RationalWittVector(ring, Polynomial(ring, (1,) * p), Polynomial.one(ring))


def phi_p_minus_scalar_check(p: int, N: int = 0) -> GhostVector:
    """
    Ghost vector of Phi_p minus the Witt integer p-1

    Phi_p - (p-1)[1] = (1 - t^p)/(1 - t)^p, whose ghost components are 0 at
    multiples of p and -p elsewhere. N defaults to 2p.
    """
    _require_prime(p)
    N = N or 2 * p
    ring = Integers()
    return wr_ghost(wr_sub(phi_p(p), wr_scalar(p - 1, ring)), N)


def phi_p_teichmuller_sum(p: int) -> RationalWittVector:
    """[z] + [z^2] + ... + [z^(p-1)] over Q(zeta_p), z a primitive p-th root of unity."""
    _require_prime(p)
    field = CyclotomicField(p)
    total = wr_zero(field)
    for i in range(1, p):
        total = wr_add(total, wr_teichmuller(field.zeta(i), field))
    return total


def zeta_minus_one_check(p: int, N: int = 0) -> Tuple[GhostVector, GhostVector]:
    """
    Ghosts of [zeta_p] - [1] and of Phi_p - (p-1)[1] over Q(zeta_p)

    Both vanish exactly at the indices divisible by p.
    """
    _require_prime(p)
    N = N or 2 * p
    field = CyclotomicField(p)
    difference = wr_sub(wr_teichmuller(field.zeta(1), field), wr_one(field))
    shifted = wr_base_change(wr_sub(phi_p(p), wr_scalar(p - 1, Integers())), field)
    return wr_ghost(difference, N), wr_ghost(shifted, N)


def vanishing_pattern(g: GhostVector) -> List[bool]:
    return [g.ring.is_zero(c) for c in g.components]
