"""
Truncated big Witt vectors.

An element of W_N(A) is the power series 1 + a_1 t + ... + a_N t^N modulo
t^(N+1). Addition is series multiplication; multiplication is evaluated from
integer universal polynomials, built once per depth with sympy and then
reused for every coefficient ring.

Conventions: the Teichmuller lift is [a] = 1 - a t and the ghost generating
function is -t f'/f, so ghost([a]) = (a, a^2, ..., a^N).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.rings import ring as sparse_ring

from .config import get_settings
from .errors import (
    ConstantTermError,
    CrossCheckError,
    IntegralityError,
    RingMismatchError,
    TruncationError,
    UnsupportedRingError,
)
from .exactring import (
    Polynomial,
    RingDescriptor,
    poly_mul_truncated,
    poly_pow_truncated,
    poly_substitute_power,
    series_inverse,
)

logger = logging.getLogger(__name__)

# one term of an integer polynomial: (coefficient, ((a index, exponent), ...), ((b index, exponent), ...))
Term = Tuple[int, Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int], ...]]


@dataclass(frozen=True)
class TruncatedWittVector:
    """Element of W_N(ring); ``tail`` holds (a_1, ..., a_N), the constant 1 is implicit."""

    ring: RingDescriptor
    N: int
    tail: Tuple[Any, ...]

    def __post_init__(self):
        if self.N < 1:
            raise TruncationError(f"Truncation depth must be at least 1, got {self.N}")
        if len(self.tail) != self.N:
            raise TruncationError(f"Expected {self.N} tail coefficients, got {len(self.tail)}")
        object.__setattr__(self, "tail", tuple(self.ring.coerce(a) for a in self.tail))

    def series(self) -> Polynomial:
        return Polynomial(self.ring, (self.ring.one(),) + self.tail)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(a) for a in self.tail)

    def __add__(self, other: "TruncatedWittVector") -> "TruncatedWittVector":
        return witt_add(self, other)

    def __neg__(self) -> "TruncatedWittVector":
        return witt_neg(self)

    def __sub__(self, other: "TruncatedWittVector") -> "TruncatedWittVector":
        return witt_sub(self, other)

    def __mul__(self, other: "TruncatedWittVector") -> "TruncatedWittVector":
        return witt_mul(self, other)

    def __str__(self) -> str:
        return str(self.series())


@dataclass(frozen=True)
class GhostVector:
    """Ghost components (gh_1, ..., gh_N) with componentwise ring structure."""

    ring: RingDescriptor
    N: int
    components: Tuple[Any, ...]

    def __post_init__(self):
        if len(self.components) != self.N:
            raise TruncationError(f"Expected {self.N} ghost components, got {len(self.components)}")
        object.__setattr__(self, "components", tuple(self.ring.coerce(c) for c in self.components))

    def _zip(self, other: "GhostVector"):
        if self.ring != other.ring or self.N != other.N:
            raise RingMismatchError(
                f"Ghost vectors over {self.ring}/N={self.N} and {other.ring}/N={other.N}"
            )
        return zip(self.components, other.components)

    def __add__(self, other: "GhostVector") -> "GhostVector":
        return GhostVector(self.ring, self.N, tuple(self.ring.add(x, y) for x, y in self._zip(other)))

    def __sub__(self, other: "GhostVector") -> "GhostVector":
        return GhostVector(self.ring, self.N, tuple(self.ring.sub(x, y) for x, y in self._zip(other)))

    def __mul__(self, other: "GhostVector") -> "GhostVector":
        return GhostVector(self.ring, self.N, tuple(self.ring.mul(x, y) for x, y in self._zip(other)))

    def __neg__(self) -> "GhostVector":
        return GhostVector(self.ring, self.N, tuple(self.ring.neg(x) for x in self.components))

    def __getitem__(self, n: int):
        """1-based access, gh_n."""
        return self.components[n - 1]

    def __str__(self) -> str:
        return "(" + ", ".join(self.ring.format(c) for c in self.components) + ")"


@dataclass(frozen=True)
class UniversalWittPolynomials:
    """
    Integer polynomials for products and Frobenius images at depth N.

    ``mul_polys[n-1]`` lists the terms of c_n(a_1..a_n, b_1..b_n);
    ``frob_polys[m][n-1]`` lists the terms of the n-th coefficient of F_m in
    the variables a_1..a_N (the b part of each term is empty).
    """

    N: int
    mul_polys: Tuple[Tuple[Term, ...], ...]
    frob_polys: Dict[int, Tuple[Tuple[Term, ...], ...]] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Basic constructors and additive structure
# ---------------------------------------------------------------------------

def _check_pair(u: TruncatedWittVector, v: TruncatedWittVector) -> Tuple[RingDescriptor, int]:
    if u.ring != v.ring:
        raise RingMismatchError(f"Witt vectors over different rings: {u.ring} vs {v.ring}")
    if u.N != v.N:
        raise RingMismatchError(f"Witt vectors of different depth: {u.N} vs {v.N}")
    return u.ring, u.N


def witt_zero(ring: RingDescriptor, N: int) -> TruncatedWittVector:
    return TruncatedWittVector(ring, N, (ring.zero(),) * N)


def witt_one(ring: RingDescriptor, N: int) -> TruncatedWittVector:
    return teichmuller(ring.one(), ring, N)


def teichmuller(a, ring: RingDescriptor, N: int) -> TruncatedWittVector:
    """[a] = 1 - a t."""
    a = ring.coerce(a)
    return TruncatedWittVector(ring, N, (ring.neg(a),) + (ring.zero(),) * (N - 1))


def witt_from_series(f: Polynomial, N: int) -> TruncatedWittVector:
    """
    Truncate a series with constant term 1 to a Witt vector of depth N

    Raises:
        ConstantTermError: if f(0) != 1
    """
    ring = f.ring
    if not ring.eq(f.constant_term, ring.one()):
        raise ConstantTermError(f"Series {f} does not have constant term 1")
    return TruncatedWittVector(ring, N, tuple(f[k] for k in range(1, N + 1)))


def witt_add(u: TruncatedWittVector, v: TruncatedWittVector) -> TruncatedWittVector:
    _, N = _check_pair(u, v)
    return witt_from_series(poly_mul_truncated(u.series(), v.series(), N), N)


def witt_neg(u: TruncatedWittVector) -> TruncatedWittVector:
    return witt_from_series(series_inverse(u.series(), u.N), u.N)


def witt_sub(u: TruncatedWittVector, v: TruncatedWittVector) -> TruncatedWittVector:
    return witt_add(u, witt_neg(v))


def witt_scalar(n: int, ring: RingDescriptor, N: int) -> TruncatedWittVector:
    """The Witt integer n = [1] added n times, i.e. (1 - t)^n."""
    base = witt_one(ring, N).series()
    if n < 0:
        base = series_inverse(base, N)
        n = -n
    return witt_from_series(poly_pow_truncated(base, n, N), N)


def witt_scalar_mul(n: int, u: TruncatedWittVector) -> TruncatedWittVector:
    """n.u as the n-fold Witt sum, (-n).u = n.(-u)."""
    base = u if n >= 0 else witt_neg(u)
    return witt_from_series(poly_pow_truncated(base.series(), abs(n), u.N), u.N)


# ---------------------------------------------------------------------------
# Ghost map
# ---------------------------------------------------------------------------

def ghost(u: TruncatedWittVector) -> GhostVector:
    """
    Ghost components of u, the coefficients of -t f'/f

    Args:
        u: Witt vector 1 + a_1 t + ... + a_N t^N

    Returns:
        GhostVector: (gh_1, ..., gh_N) over the same ring, with
        gh_n = -n a_n - sum_{j<n} gh_j a_{n-j}
    """
    ring = u.ring
    a = u.tail
    gh: List[Any] = []
    for n in range(1, u.N + 1):
        value = ring.neg(ring.mul(ring.from_int(n), a[n - 1]))
        for j in range(1, n):
            value = ring.sub(value, ring.mul(gh[j - 1], a[n - j - 1]))
        gh.append(value)
    return GhostVector(ring, u.N, tuple(gh))


def ghost_inverse(g: GhostVector) -> TruncatedWittVector:
    """
    Recover the Witt vector with the given ghost components

    Raises:
        UnsupportedRingError: if the ring cannot divide by arbitrary integers
    """
    ring = g.ring
    if not ring.contains_rationals:
        raise UnsupportedRingError(f"ghost_inverse needs a Q-algebra, got {ring}")
    a: List[Any] = []
    for n in range(1, g.N + 1):
        value = g.components[n - 1]
        for j in range(1, n):
            value = ring.add(value, ring.mul(g.components[j - 1], a[n - j - 1]))
        a.append(ring.neg(ring.mul(value, ring.inv(ring.from_int(n)))))
    return TruncatedWittVector(ring, g.N, tuple(a))


# ---------------------------------------------------------------------------
# Universal polynomials
# ---------------------------------------------------------------------------

def _symbolic_ghost(xs: Sequence) -> List:
    gh: List = []
    for n in range(1, len(xs) + 1):
        value = -n * xs[n - 1]
        for j in range(1, n):
            value -= gh[j - 1] * xs[n - j - 1]
        gh.append(value)
    return gh


def _symbolic_ghost_inverse(gh: Sequence) -> List:
    a: List = []
    for n in range(1, len(gh) + 1):
        value = gh[n - 1]
        for j in range(1, n):
            value += gh[j - 1] * a[n - j - 1]
        a.append(value * QQ(-1, n))
    return a


def _integer_terms(poly, split: int, label: str) -> Tuple[Term, ...]:
    terms = []
    for monom, coeff in poly.terms():
        if QQ.denom(coeff) != 1:
            raise IntegralityError(
                f"Universal polynomial {label} has a non-integer coefficient {coeff}",
                {"monomial": monom},
            )
        a_part = tuple((i, e) for i, e in enumerate(monom[:split]) if e)
        b_part = tuple((i, e) for i, e in enumerate(monom[split:]) if e)
        terms.append((int(QQ.numer(coeff)), a_part, b_part))
    return tuple(terms)


@lru_cache(maxsize=None)
def _multiplication_terms(N: int) -> Tuple[Tuple[Term, ...], ...]:
    logger.debug("Building universal multiplication polynomials for N=%d", N)
    names = [f"a{i}" for i in range(1, N + 1)] + [f"b{i}" for i in range(1, N + 1)]
    _, *gens = sparse_ring(",".join(names), QQ)
    a, b = gens[:N], gens[N:]
    ghost_a = _symbolic_ghost(a)
    ghost_b = _symbolic_ghost(b)
    products = [x * y for x, y in zip(ghost_a, ghost_b)]
    coefficients = _symbolic_ghost_inverse(products)
    return tuple(_integer_terms(c, N, f"c_{n}") for n, c in enumerate(coefficients, start=1))


@lru_cache(maxsize=None)
def _frobenius_terms(m: int, depth: int) -> Tuple[Tuple[Term, ...], ...]:
    """Coefficients of F_m at the given output depth, in a_1..a_{m*depth}."""
    logger.debug("Building universal Frobenius polynomials for m=%d, depth=%d", m, depth)
    width = m * depth
    names = ",".join(f"a{i}" for i in range(1, width + 1))
    _, *a = sparse_ring(names, QQ)
    gh = _symbolic_ghost(a)
    shifted = [gh[m * n - 1] for n in range(1, depth + 1)]
    coefficients = _symbolic_ghost_inverse(shifted)
    return tuple(_integer_terms(c, width, f"F_{m},{n}") for n, c in enumerate(coefficients, start=1))


@lru_cache(maxsize=None)
def build_universal_polys(N: int) -> UniversalWittPolynomials:
    """
    Universal multiplication and Frobenius polynomials at depth N

    Built over the rationals by symbolic ghost, componentwise product (or index
    shift) and ghost inverse; every coefficient is asserted to be an integer.

    Raises:
        IntegralityError: if a coefficient fails to be integral
    """
    if N < 1:
        raise TruncationError(f"Truncation depth must be at least 1, got {N}")
    frob = {m: _frobenius_terms(m, N // m) for m in range(2, N + 1)}
    return UniversalWittPolynomials(N, _multiplication_terms(N), frob)


class _PowerTable:
    """Memoized powers of a fixed list of ring elements."""

    def __init__(self, ring: RingDescriptor, values: Sequence[Any]):
        self.ring = ring
        self.values = values
        self.zero = [ring.is_zero(v) for v in values]
        self.cache: Dict[Tuple[int, int], Any] = {}

    def get(self, i: int, e: int):
        key = (i, e)
        if key not in self.cache:
            self.cache[key] = self.ring.pow(self.values[i], e)
        return self.cache[key]


def _evaluate(terms: Sequence[Term], a: _PowerTable, b: _PowerTable, ring: RingDescriptor):
    total = ring.zero()
    for coeff, a_part, b_part in terms:
        if any(a.zero[i] for i, _ in a_part) or any(b.zero[i] for i, _ in b_part):
            continue
        value = ring.from_int(coeff)
        for i, e in a_part:
            value = ring.mul(value, a.get(i, e))
        for i, e in b_part:
            value = ring.mul(value, b.get(i, e))
        total = ring.add(total, value)
    return total


# ---------------------------------------------------------------------------
# Multiplicative structure and operators
# ---------------------------------------------------------------------------

def _ghost_crosscheck_enabled(ring: RingDescriptor) -> bool:
    return ring.contains_rationals and get_settings().ghost_crosscheck


def witt_mul(u: TruncatedWittVector, v: TruncatedWittVector) -> TruncatedWittVector:
    """
    Witt product through the universal polynomials

    Over Q-algebras the result is also compared with the ghost route.

    Raises:
        RingMismatchError: if ring or depth differ
        CrossCheckError: if the two routes disagree
    """
    ring, N = _check_pair(u, v)
    terms = _multiplication_terms(N)
    a = _PowerTable(ring, u.tail)
    b = _PowerTable(ring, v.tail)
    result = TruncatedWittVector(ring, N, tuple(_evaluate(terms[n], a, b, ring) for n in range(N)))
    if _ghost_crosscheck_enabled(ring) and ghost(result) != ghost(u) * ghost(v):
        raise CrossCheckError("Witt product disagrees with the ghost route", {"u": u, "v": v})
    return result


def frobenius(m: int, u: TruncatedWittVector) -> TruncatedWittVector:
    """
    Frobenius F_m: W_N -> W_{N // m}, with ghost(F_m u)_n = ghost(u)_{mn}

    Raises:
        TruncationError: if N // m < 1
    """
    if m < 1:
        raise ValueError(f"Frobenius index must be positive, got {m}")
    if m == 1:
        return u
    depth = u.N // m
    if depth < 1:
        raise TruncationError(f"Depth {u.N} is too shallow for F_{m}", {"m": m, "N": u.N})
    ring = u.ring
    terms = _frobenius_terms(m, depth)
    a = _PowerTable(ring, u.tail[: m * depth])
    none = _PowerTable(ring, ())
    result = TruncatedWittVector(ring, depth, tuple(_evaluate(terms[n], a, none, ring) for n in range(depth)))
    if _ghost_crosscheck_enabled(ring):
        source = ghost(u)
        expected = GhostVector(ring, depth, tuple(source[m * n] for n in range(1, depth + 1)))
        if ghost(result) != expected:
            raise CrossCheckError(f"F_{m} disagrees with the ghost index shift", {"u": u})
    return result


def verschiebung(m: int, u: TruncatedWittVector) -> TruncatedWittVector:
    """V_m: t -> t^m, truncated at the same depth."""
    if m < 1:
        raise ValueError(f"Verschiebung index must be positive, got {m}")
    return witt_from_series(poly_substitute_power(u.series(), m, u.N), u.N)
