"""
Exact arithmetic kernel.

Coefficient rings, dense univariate polynomials, truncated power series,
gcd, resultants and cyclotomic fields. Everything else in wittkit is built on
the values defined here; all of them are immutable.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Any, Callable, List, Optional, Sequence, Tuple

from sympy import divisors, isprime, totient

from .errors import (
    InexactDivisionError,
    InvalidDescriptorError,
    NonUnitError,
    RingMismatchError,
    UnsupportedRingError,
    ZeroPolynomialError,
)

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Rational polynomial helpers (lists of Fractions, ascending degree)
# ---------------------------------------------------------------------------

def _strip(coeffs: List[Any], is_zero: Callable[[Any], bool] = lambda c: c == 0) -> List[Any]:
    while coeffs and is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _q_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _strip(out)


def _q_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _q_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    rem = list(a)
    if len(rem) < len(b):
        return [], _strip(rem)
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    lead = b[-1]
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        quot[k] = c
        if c:
            for i, y in enumerate(b):
                rem[k + i] -= c * y
    return _strip(quot), _strip(rem[: len(b) - 1])


def _reduce_modulo(coeffs: List[Fraction], modulus: Sequence[int]) -> List[Fraction]:
    """Reduce modulo a monic integer polynomial; result padded to its degree."""
    degree = len(modulus) - 1
    rem = list(coeffs)
    for k in range(len(rem) - 1, degree - 1, -1):
        c = rem[k]
        if c:
            base = k - degree
            for i in range(degree + 1):
                rem[base + i] -= c * modulus[i]
    rem = rem[:degree]
    rem.extend([Fraction(0)] * (degree - len(rem)))
    return rem


# ---------------------------------------------------------------------------
# Cyclotomic numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclotomicNumber:
    """Element of Q(zeta_N), stored as the reduced residue modulo Phi_N."""

    conductor: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        modulus = _cyclotomic_modulus(self.conductor)
        reduced = _reduce_modulo([Fraction(c) for c in self.coeffs], modulus)
        object.__setattr__(self, "coeffs", tuple(reduced))

    @classmethod
    def constant(cls, conductor: int, value: Any) -> "CyclotomicNumber":
        return cls(conductor, (Fraction(value),))

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> "CyclotomicNumber":
        k %= conductor
        return cls(conductor, (Fraction(0),) * k + (Fraction(1),))

    def _lift(self, other: Any) -> "CyclotomicNumber":
        if isinstance(other, CyclotomicNumber):
            if other.conductor != self.conductor:
                raise RingMismatchError(
                    f"Conductors differ: {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.constant(self.conductor, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(self.conductor, tuple(_q_mul(list(self.coeffs), list(other.coeffs))))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """
        Invert by the extended Euclidean algorithm modulo Phi_N

        Raises:
            NonUnitError: for the zero element
        """
        a = _strip(list(self.coeffs))
        if not a:
            raise NonUnitError("Zero has no inverse in a cyclotomic field")
        r0 = [Fraction(c) for c in _cyclotomic_modulus(self.conductor)]
        r1 = a
        s0: List[Fraction] = []
        s1 = [Fraction(1)]
        while r1:
            q, r = _q_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _q_sub(s0, _q_mul(q, s1))
        if len(r0) != 1:
            raise NonUnitError("Element shares a factor with the cyclotomic modulus")
        return CyclotomicNumber(self.conductor, tuple(c / r0[0] for c in s0))

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CyclotomicNumber.constant(self.conductor, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return _format_terms(list(self.coeffs), "z", _format_rational) or "0"


@lru_cache(maxsize=None)
def _cyclotomic_modulus(conductor: int) -> Tuple[int, ...]:
    if conductor < 1:
        raise InvalidDescriptorError(f"Cyclotomic conductor must be positive, got {conductor}")
    return tuple(cyclotomic_polynomial(conductor).coeffs)


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------

class RingDescriptor:
    """
    Base class for coefficient rings.

    Elements are plain Python values (``int``, ``Fraction`` or
    ``CyclotomicNumber``); descriptors supply the arithmetic.
    """

    kind = "abstract"
    characteristic = 0

    @property
    def is_integral_domain(self) -> bool:
        return False

    @property
    def is_integrally_closed(self) -> bool:
        return False

    @property
    def contains_rationals(self) -> bool:
        return False

    @property
    def is_field(self) -> bool:
        return False

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return self.is_zero(self.sub(a, b))

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def exact_div(self, a, b):
        """Divide when the quotient is known to exist in the ring."""
        if not self.is_unit(b):
            raise InexactDivisionError(f"{self.format(b)} is not a unit in {self}")
        return self.mul(a, self.inv(b))

    def pow(self, a, exponent: int):
        if exponent < 0:
            a = self.inv(a)
            exponent = -exponent
        result = self.one()
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def random_element(self, rng: random.Random, height: int = 5):
        return self.from_int(rng.randint(-height, height))

    def format(self, a) -> str:
        return str(a)

    def __str__(self) -> str:
        return ring_to_text(self)


@dataclass(frozen=True)
class Integers(RingDescriptor):
    kind = "Integers"

    @property
    def is_integral_domain(self) -> bool:
        return True

    @property
    def is_integrally_closed(self) -> bool:
        return True

    def from_int(self, n: int) -> int:
        return int(n)

    def coerce(self, value) -> int:
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return value.numerator
        raise RingMismatchError(f"{value!r} is not an integer")

    def is_unit(self, a) -> bool:
        return a in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"{a} is not a unit in Z")
        return a

    def exact_div(self, a, b):
        if b == 0:
            raise InexactDivisionError("Division by zero in Z")
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{b} does not divide {a}")
        return q


@dataclass(frozen=True)
class Rationals(RingDescriptor):
    kind = "Rationals"

    @property
    def is_integral_domain(self) -> bool:
        return True

    @property
    def is_integrally_closed(self) -> bool:
        return True

    @property
    def contains_rationals(self) -> bool:
        return True

    @property
    def is_field(self) -> bool:
        return True

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, value) -> Fraction:
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise RingMismatchError(f"{value!r} is not a rational number")

    def is_unit(self, a) -> bool:
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NonUnitError("Zero is not invertible in Q")
        return 1 / Fraction(a)

    def random_element(self, rng: random.Random, height: int = 5):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def format(self, a) -> str:
        return _format_rational(a)


@dataclass(frozen=True)
class IntegersMod(RingDescriptor):
    n: int
    kind = "IntegersMod"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise InvalidDescriptorError(f"IntegersMod requires n >= 2, got {self.n}")

    @property
    def characteristic(self) -> int:
        return self.n

    @property
    def is_integral_domain(self) -> bool:
        return isprime(self.n)

    @property
    def is_integrally_closed(self) -> bool:
        return isprime(self.n)

    @property
    def is_field(self) -> bool:
        return isprime(self.n)

    def from_int(self, n: int) -> int:
        return int(n) % self.n

    def coerce(self, value) -> int:
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % self.n
        if isinstance(value, Fraction):
            den = value.denominator % self.n
            if gcd(den, self.n) != 1:
                raise RingMismatchError(f"{value} has no image in Z/{self.n}")
            return value.numerator * pow(den, -1, self.n) % self.n
        raise RingMismatchError(f"{value!r} is not a residue mod {self.n}")

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return a * b % self.n

    def is_zero(self, a) -> bool:
        return a % self.n == 0

    def is_unit(self, a) -> bool:
        return gcd(a, self.n) == 1

    def inv(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"{a} is not a unit mod {self.n}")
        return pow(a, -1, self.n)

    def random_element(self, rng: random.Random, height: int = 5):
        return rng.randrange(self.n)


@dataclass(frozen=True)
class PrimeField(IntegersMod):
    kind = "PrimeField"

    def __post_init__(self):
        super().__post_init__()
        if not isprime(self.n):
            raise InvalidDescriptorError(f"PrimeField requires a prime, got {self.n}")

    @property
    def p(self) -> int:
        return self.n


@dataclass(frozen=True)
class CyclotomicField(RingDescriptor):
    conductor: int
    kind = "CyclotomicField"

    def __post_init__(self):
        if not isinstance(self.conductor, int) or self.conductor < 1:
            raise InvalidDescriptorError(f"Cyclotomic conductor must be positive, got {self.conductor}")

    @property
    def is_integral_domain(self) -> bool:
        return True

    @property
    def is_integrally_closed(self) -> bool:
        return True

    @property
    def contains_rationals(self) -> bool:
        return True

    @property
    def is_field(self) -> bool:
        return True

    @property
    def degree(self) -> int:
        return int(totient(self.conductor))

    def from_int(self, n: int) -> CyclotomicNumber:
        return CyclotomicNumber.constant(self.conductor, n)

    def coerce(self, value) -> CyclotomicNumber:
        if isinstance(value, CyclotomicNumber):
            if value.conductor != self.conductor:
                raise RingMismatchError(
                    f"Element of Q(zeta_{value.conductor}) used in Q(zeta_{self.conductor})"
                )
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            return CyclotomicNumber.constant(self.conductor, value)
        raise RingMismatchError(f"{value!r} is not a cyclotomic number")

    def zeta(self, k: int = 1) -> CyclotomicNumber:
        return CyclotomicNumber.zeta(self.conductor, k)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def is_unit(self, a) -> bool:
        return not a.is_zero()

    def inv(self, a):
        return a.inverse()

    def pow(self, a, exponent: int):
        return a ** exponent

    def random_element(self, rng: random.Random, height: int = 3):
        return CyclotomicNumber(
            self.conductor, tuple(Fraction(rng.randint(-height, height)) for _ in range(self.degree))
        )

    def format(self, a) -> str:
        return str(a)


@dataclass(frozen=True)
class FractionField(RingDescriptor):
    """
    Fraction field of an integral domain.

    Frac(Z) computes as Q; the fraction field of a field is the field itself.
    """

    of: RingDescriptor
    kind = "FractionField"

    def __post_init__(self):
        if not (isinstance(self.of, Integers) or self.of.is_field):
            raise InvalidDescriptorError(f"Fraction field of {self.of} is not supported")

    @property
    def base(self) -> RingDescriptor:
        if isinstance(self.of, Integers):
            return Rationals()
        if isinstance(self.of, FractionField):
            return self.of.base
        return self.of

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def is_integral_domain(self) -> bool:
        return True

    @property
    def is_integrally_closed(self) -> bool:
        return True

    @property
    def contains_rationals(self) -> bool:
        return self.base.contains_rationals

    @property
    def is_field(self) -> bool:
        return True

    def from_int(self, n):
        return self.base.from_int(n)

    def coerce(self, value):
        return self.base.coerce(value)

    def add(self, a, b):
        return self.base.add(a, b)

    def sub(self, a, b):
        return self.base.sub(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def mul(self, a, b):
        return self.base.mul(a, b)

    def is_zero(self, a) -> bool:
        return self.base.is_zero(a)

    def is_unit(self, a) -> bool:
        return self.base.is_unit(a)

    def inv(self, a):
        return self.base.inv(a)

    def pow(self, a, exponent: int):
        return self.base.pow(a, exponent)

    def random_element(self, rng: random.Random, height: int = 5):
        return self.base.random_element(rng, height)

    def format(self, a) -> str:
        return self.base.format(a)


def fraction_field(ring: RingDescriptor) -> RingDescriptor:
    """The ring in which ghost components of a Witt vector over ``ring`` can be divided."""
    if ring.is_field:
        return ring
    return FractionField(ring)


def check_same_ring(*rings: RingDescriptor) -> RingDescriptor:
    first = rings[0]
    for other in rings[1:]:
        if other != first:
            raise RingMismatchError(f"Ring mismatch: {first} vs {other}")
    return first


def ring_to_text(ring: RingDescriptor) -> str:
    """Render a descriptor in the mini-grammar ``Z``, ``Q``, ``Z/12``, ``Fp/7``, ``Qzeta/5``."""
    if isinstance(ring, Integers):
        return "Z"
    if isinstance(ring, Rationals):
        return "Q"
    if isinstance(ring, PrimeField):
        return f"Fp/{ring.n}"
    if isinstance(ring, IntegersMod):
        return f"Z/{ring.n}"
    if isinstance(ring, CyclotomicField):
        return f"Qzeta/{ring.conductor}"
    if isinstance(ring, FractionField):
        return f"Frac({ring_to_text(ring.of)})"
    return ring.kind


def ring_from_text(text: str) -> RingDescriptor:
    """
    Parse a ring descriptor

    Args:
        text: one of ``Z``, ``Q``, ``Z/n``, ``Fp/p``, ``Qzeta/N`` or ``Frac(<desc>)``

    Returns:
        RingDescriptor: the described ring

    Raises:
        InvalidDescriptorError: for anything else
    """
    text = text.strip()
    if text == "Z":
        return Integers()
    if text == "Q":
        return Rationals()
    if text.startswith("Frac(") and text.endswith(")"):
        return FractionField(ring_from_text(text[5:-1]))
    for prefix, build in (("Z/", IntegersMod), ("Fp/", PrimeField), ("Qzeta/", CyclotomicField)):
        if text.startswith(prefix):
            try:
                value = int(text[len(prefix):])
            except ValueError:
                raise InvalidDescriptorError(f"Bad ring descriptor {text!r}") from None
            return build(value)
    raise InvalidDescriptorError(f"Bad ring descriptor {text!r}")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial, ascending coefficients, trailing zeros stripped."""

    ring: RingDescriptor
    coeffs: Tuple[Any, ...] = ()

    def __post_init__(self):
        ring = self.ring
        coeffs = [ring.coerce(c) for c in self.coeffs]
        _strip(coeffs, ring.is_zero)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def one(cls, ring: RingDescriptor) -> "Polynomial":
        return cls(ring, (ring.one(),))

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Polynomial":
        return cls(ring, ())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ring.zero()

    @property
    def constant_term(self):
        return self[0]

    @property
    def leading_coefficient(self):
        if not self.coeffs:
            return self.ring.zero()
        return self.coeffs[-1]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_sub(self, other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple(self.ring.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return poly_mul(self, other)

    def __call__(self, x):
        return poly_eval(self, x)

    def __str__(self) -> str:
        return format_polynomial(self)


def _require_same(f: Polynomial, g: Polynomial) -> RingDescriptor:
    if f.ring != g.ring:
        raise RingMismatchError(f"Polynomials over different rings: {f.ring} vs {g.ring}")
    return f.ring


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = _require_same(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial(ring, tuple(ring.add(f[i], g[i]) for i in range(n)))


def poly_sub(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = _require_same(f, g)
    n = max(len(f.coeffs), len(g.coeffs))
    return Polynomial(ring, tuple(ring.sub(f[i], g[i]) for i in range(n)))


def poly_scale(f: Polynomial, c) -> Polynomial:
    ring = f.ring
    c = ring.coerce(c)
    return Polynomial(ring, tuple(ring.mul(c, a) for a in f.coeffs))


def _convolve(ring: RingDescriptor, a: Sequence, b: Sequence, bound: Optional[int]) -> List:
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if bound is not None:
        size = min(size, bound + 1)
    out = [ring.zero()] * max(size, 0)
    for i, x in enumerate(a):
        if i >= size:
            break
        if ring.is_zero(x):
            continue
        for j in range(min(len(b), size - i)):
            out[i + j] = ring.add(out[i + j], ring.mul(x, b[j]))
    return out


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = _require_same(f, g)
    return Polynomial(ring, tuple(_convolve(ring, f.coeffs, g.coeffs, None)))


def poly_mul_truncated(f: Polynomial, g: Polynomial, N: int) -> Polynomial:
    """
    Multiply and drop every term of degree greater than N

    Args:
        f: first factor
        g: second factor, over the same ring
        N: degree bound, N >= 0

    Returns:
        Polynomial: f*g mod t^(N+1)
    """
    ring = _require_same(f, g)
    if N < 0:
        raise ValueError(f"Degree bound must be non-negative, got {N}")
    return Polynomial(ring, tuple(_convolve(ring, f.coeffs, g.coeffs, N)))


def poly_pow_truncated(f: Polynomial, exponent: int, N: int) -> Polynomial:
    result = Polynomial.one(f.ring)
    base = f
    while exponent:
        if exponent & 1:
            result = poly_mul_truncated(result, base, N)
        base = poly_mul_truncated(base, base, N)
        exponent >>= 1
    return result


def poly_truncate(f: Polynomial, N: int) -> Polynomial:
    return Polynomial(f.ring, f.coeffs[: N + 1])


def series_inverse(f: Polynomial, N: int) -> Polynomial:
    """
    Invert a power series with unit constant term modulo t^(N+1)

    Args:
        f: series (given as a polynomial) whose constant term is a unit
        N: degree bound

    Returns:
        Polynomial: g with f*g = 1 mod t^(N+1)

    Raises:
        NonUnitError: if f(0) is not a unit
    """
    ring = f.ring
    f0 = f.constant_term
    if not ring.is_unit(f0):
        raise NonUnitError(f"Constant term {ring.format(f0)} is not a unit in {ring}")
    g0 = ring.inv(f0)
    minus_g0 = ring.neg(g0)
    g = [g0]
    for n in range(1, N + 1):
        acc = ring.zero()
        for k in range(1, min(n, f.degree) + 1):
            acc = ring.add(acc, ring.mul(f.coeffs[k], g[n - k]))
        g.append(ring.mul(minus_g0, acc))
    return Polynomial(ring, tuple(g))


def poly_eval(f: Polynomial, x):
    ring = f.ring
    acc = ring.zero()
    for c in reversed(f.coeffs):
        acc = ring.add(ring.mul(acc, x), c)
    return acc


def poly_reverse(f: Polynomial, degree: Optional[int] = None) -> Polynomial:
    """t^d f(1/t), with d defaulting to deg f."""
    d = f.degree if degree is None else degree
    coeffs = list(f.coeffs) + [f.ring.zero()] * (d + 1 - len(f.coeffs))
    return Polynomial(f.ring, tuple(reversed(coeffs[: d + 1])))


def poly_substitute_power(f: Polynomial, m: int, N: Optional[int] = None) -> Polynomial:
    """f(t^m), optionally truncated to degree N."""
    ring = f.ring
    if m < 1:
        raise ValueError(f"Substitution exponent must be positive, got {m}")
    out = [ring.zero()] * (m * max(f.degree, 0) + 1)
    for i, c in enumerate(f.coeffs):
        out[i * m] = c
    if N is not None:
        out = out[: N + 1]
    return Polynomial(ring, tuple(out))


def poly_divmod(f: Polynomial, g: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """
    Division with remainder by a polynomial whose leading coefficient is a unit
    """
    ring = _require_same(f, g)
    if g.is_zero():
        raise ZeroPolynomialError("Division by the zero polynomial")
    lead = g.leading_coefficient
    if not ring.is_unit(lead):
        raise NonUnitError(f"Leading coefficient {ring.format(lead)} is not a unit in {ring}")
    lead_inv = ring.inv(lead)
    rem = list(f.coeffs)
    if len(rem) < len(g.coeffs):
        return Polynomial.zero(ring), f
    quot = [ring.zero()] * (len(rem) - len(g.coeffs) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = ring.mul(rem[k + g.degree], lead_inv)
        quot[k] = c
        if not ring.is_zero(c):
            for i, y in enumerate(g.coeffs):
                rem[k + i] = ring.sub(rem[k + i], ring.mul(c, y))
    return Polynomial(ring, tuple(quot)), Polynomial(ring, tuple(rem[: g.degree]))


def poly_exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """Quotient f/g over an integral domain when g divides f exactly."""
    ring = _require_same(f, g)
    if g.is_zero():
        raise ZeroPolynomialError("Division by the zero polynomial")
    rem = list(f.coeffs)
    if len(rem) < len(g.coeffs):
        if rem:
            raise InexactDivisionError(f"{g} does not divide {f}")
        return Polynomial.zero(ring)
    lead = g.leading_coefficient
    quot = [ring.zero()] * (len(rem) - len(g.coeffs) + 1)
    for k in range(len(quot) - 1, -1, -1):
        c = ring.exact_div(rem[k + g.degree], lead)
        quot[k] = c
        if not ring.is_zero(c):
            for i, y in enumerate(g.coeffs):
                rem[k + i] = ring.sub(rem[k + i], ring.mul(c, y))
    if any(not ring.is_zero(c) for c in rem[: g.degree]):
        raise InexactDivisionError(f"{g} does not divide {f}")
    return Polynomial(ring, tuple(quot))


def poly_exact_div_const1(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Exact quotient f/g for g with unit constant term, by series division

    Works over any ring; raises InexactDivisionError if g does not divide f.
    """
    ring = _require_same(f, g)
    if f.is_zero():
        return f
    bound = f.degree - g.degree
    if bound < 0:
        raise InexactDivisionError(f"{g} does not divide {f}")
    q = poly_mul_truncated(f, series_inverse(g, bound), bound)
    if poly_mul(q, g) != f:
        raise InexactDivisionError(f"{g} does not divide {f}")
    return q


def _content(f: Polynomial) -> int:
    c = 0
    for a in f.coeffs:
        c = gcd(c, a)
    return c


def _normalize_gcd(g: Polynomial) -> Polynomial:
    ring = g.ring
    if g.is_zero():
        return g
    if isinstance(ring, Integers):
        g = Polynomial(ring, tuple(a // _content(g) for a in g.coeffs))
        pivot = g.constant_term if g.constant_term in (1, -1) else g.leading_coefficient
        return g if pivot > 0 else -g
    c0 = g.constant_term
    pivot = c0 if not ring.is_zero(c0) else g.leading_coefficient
    return poly_scale(g, ring.inv(pivot))


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """
    Greatest common divisor over a field or over the integers

    The result has constant term 1 when its constant term is a unit, otherwise
    it is monic (fields) or primitive with positive leading coefficient (Z).

    Raises:
        UnsupportedRingError: for rings other than fields and Z
    """
    ring = _require_same(f, g)
    if isinstance(ring, Integers):
        content = gcd(_content(f), _content(g))
        qf = Polynomial(Rationals(), f.coeffs)
        qg = Polynomial(Rationals(), g.coeffs)
        h = poly_gcd(qf, qg)
        if h.is_zero():
            return Polynomial.zero(ring)
        scale = 1
        for c in h.coeffs:
            scale = scale * c.denominator // gcd(scale, c.denominator)
        primitive = _normalize_gcd(Polynomial(ring, tuple((c * scale).numerator for c in h.coeffs)))
        if content > 1:
            return Polynomial(ring, tuple(content * a for a in primitive.coeffs))
        return primitive
    if not ring.is_field:
        raise UnsupportedRingError(f"poly_gcd is not supported over {ring}")
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    return _normalize_gcd(a)


# ---------------------------------------------------------------------------
# Determinants and resultants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolynomialRing(RingDescriptor):
    """R[x] viewed as a coefficient ring, used for bivariate elimination."""

    base: RingDescriptor
    kind = "PolynomialRing"

    @property
    def is_integral_domain(self) -> bool:
        return self.base.is_integral_domain

    def from_int(self, n: int) -> Polynomial:
        return Polynomial(self.base, (self.base.from_int(n),))

    def coerce(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.ring != self.base:
                raise RingMismatchError(f"Polynomial over {value.ring} used in {self}")
            return value
        return Polynomial(self.base, (self.base.coerce(value),))

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def is_unit(self, a) -> bool:
        return a.degree == 0 and self.base.is_unit(a.constant_term)

    def inv(self, a):
        if not self.is_unit(a):
            raise NonUnitError(f"{a} is not a unit")
        return Polynomial(self.base, (self.base.inv(a.constant_term),))

    def exact_div(self, a, b):
        return poly_exact_quotient(a, b)

    def format(self, a) -> str:
        return format_polynomial(a, "x")

    def __str__(self) -> str:
        return f"{ring_to_text(self.base)}[x]"


def bareiss_determinant(matrix: Sequence[Sequence[Any]], ring: RingDescriptor):
    """
    Fraction-free determinant over an integral domain

    Args:
        matrix: square matrix of ring elements
        ring: descriptor providing the arithmetic and exact division

    Returns:
        the determinant as a ring element
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return ring.one()
    sign = 1
    previous = ring.one()
    for k in range(n - 1):
        if ring.is_zero(rows[k][k]):
            swap = next((i for i in range(k + 1, n) if not ring.is_zero(rows[i][k])), None)
            if swap is None:
                return ring.zero()
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                value = ring.sub(ring.mul(row_i[j], pivot), ring.mul(lead, rows[k][j]))
                row_i[j] = ring.exact_div(value, previous)
            row_i[k] = ring.zero()
        previous = pivot
    det = rows[n - 1][n - 1]
    return det if sign > 0 else ring.neg(det)


def sylvester_matrix(f_coeffs: Sequence[Any], g_coeffs: Sequence[Any], ring: RingDescriptor) -> List[List[Any]]:
    """Sylvester matrix of two polynomials given by ascending coefficients."""
    n = len(f_coeffs) - 1
    m = len(g_coeffs) - 1
    size = n + m
    f_desc = list(reversed(f_coeffs))
    g_desc = list(reversed(g_coeffs))
    matrix = []
    for i in range(m):
        matrix.append([ring.zero()] * i + f_desc + [ring.zero()] * (size - n - 1 - i))
    for i in range(n):
        matrix.append([ring.zero()] * i + g_desc + [ring.zero()] * (size - m - 1 - i))
    return matrix


def sylvester_resultant(f_coeffs: Sequence[Any], g_coeffs: Sequence[Any], ring: RingDescriptor):
    return bareiss_determinant(sylvester_matrix(f_coeffs, g_coeffs, ring), ring)


def poly_resultant(f: Polynomial, g: Polynomial):
    """
    Resultant Res(f, g) = lc(f)^deg(g) * prod over roots a of f of g(a)

    Computed as the determinant of the Sylvester matrix by Bareiss
    elimination, so no roots are ever extracted.

    Raises:
        ZeroPolynomialError: if either input is zero
        UnsupportedRingError: if the ring is not an integral domain
    """
    ring = _require_same(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("Resultant of the zero polynomial is undefined")
    if not ring.is_integral_domain:
        raise UnsupportedRingError(f"Resultants need an integral domain, got {ring}")
    return sylvester_resultant(f.coeffs, g.coeffs, ring)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> Polynomial:
    """
    The n-th cyclotomic polynomial over the integers

    Args:
        n: positive integer

    Returns:
        Polynomial: monic Phi_n of degree phi(n)
    """
    if n < 1:
        raise ValueError(f"Cyclotomic index must be positive, got {n}")
    ring = Integers()
    result = Polynomial(ring, (-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n):
        if d < n:
            result = poly_divmod(result, cyclotomic_polynomial(d))[0]
    return result


def cyclotomic_zeta(N: int, k: int = 1) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(N, k)


# ---------------------------------------------------------------------------
# Random values and text output
# ---------------------------------------------------------------------------

def random_polynomial(ring: RingDescriptor, degree: int, rng: random.Random,
                      constant_one: bool = True, height: int = 5) -> Polynomial:
    coeffs = [ring.one() if constant_one else ring.random_element(rng, height)]
    coeffs += [ring.random_element(rng, height) for _ in range(degree)]
    return Polynomial(ring, tuple(coeffs))


def _format_rational(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _format_terms(coeffs: Sequence[Any], var: str, fmt: Callable[[Any], str],
                  is_zero: Callable[[Any], bool] = lambda c: c == 0) -> str:
    parts: List[str] = []
    for k, c in enumerate(coeffs):
        if is_zero(c):
            continue
        text = fmt(c)
        compound = any(op in text[1:] for op in "+-") or "/" in text
        monomial = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k == 0:
            term = text
        elif text == "1":
            term = monomial
        elif text == "-1":
            term = "-" + monomial
        elif compound:
            term = f"({text}){monomial}"
        else:
            term = text + monomial
        if parts and not term.startswith("-"):
            term = "+" + term
        parts.append(term)
    return "".join(parts)


def format_polynomial(f: Polynomial, var: str = "t") -> str:
    """Compact text form, ascending powers, e.g. ``1-2t+3t^2``."""
    return _format_terms(list(f.coeffs), var, f.ring.format, f.ring.is_zero) or "0"


def format_fraction(num: Polynomial, den: Polynomial) -> str:
    """``(<num>)/(<den>)``, or the bare numerator when the denominator is 1."""
    if den.degree == 0 and den.constant_term == den.ring.one():
        return format_polynomial(num)
    return f"({format_polynomial(num)})/({format_polynomial(den)})"
