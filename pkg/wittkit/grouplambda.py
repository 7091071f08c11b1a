"""
Group rings of finitely generated abelian groups and their Lambda-structure.

Groups are written additively: the basis element [m] of Z[M] multiplies as
[m][m'] = [m + m'], and the Frobenius lift phi_p sends [m] to [p m]. The
bridge ``to_witt`` turns the additive basis into Teichmuller lifts
[m] -> 1 - eval(m) t inside the rational Witt vectors.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Mapping, Optional, Sequence, Tuple

from sympy import isprime

from .errors import (
    DivisibilityError,
    ExcludedPrimeError,
    GroupMismatchError,
    NonUnitError,
    NotPrimeError,
    TorsionCompatibilityError,
)
from .exactring import Polynomial, RingDescriptor, poly_mul
from .wittrat import RationalWittVector, require_exact_ring, wr_frobenius, wr_normalize

logger = logging.getLogger(__name__)

GroupElement = Tuple[int, ...]


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, each d_i >= 2."""

    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        torsion = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", torsion)
        if self.rank < 0:
            raise DivisibilityError(f"Free rank must be non-negative, got {self.rank}")
        for d in torsion:
            if d < 2:
                raise DivisibilityError(f"Invariant factors must be at least 2, got {d}")
        for lower, upper in zip(torsion, torsion[1:]):
            if upper % lower:
                raise DivisibilityError(f"Invariant factors {torsion} do not form a divisibility chain")

    @property
    def dimension(self) -> int:
        return self.rank + len(self.torsion)

    @property
    def order(self) -> Optional[int]:
        """Group order, None for infinite groups."""
        if self.rank:
            return None
        order = 1
        for d in self.torsion:
            order *= d
        return order

    @property
    def exponent(self) -> Optional[int]:
        if self.rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def reduce(self, vector: Sequence[int]) -> GroupElement:
        if len(vector) != self.dimension:
            raise GroupMismatchError(f"Element {tuple(vector)} has the wrong length for {self}")
        free = tuple(int(x) for x in vector[: self.rank])
        tors = tuple(int(x) % d for x, d in zip(vector[self.rank:], self.torsion))
        return free + tors

    def zero(self) -> GroupElement:
        return (0,) * self.dimension

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return self.reduce([a + b for a, b in zip(x, y)])

    def neg(self, x: GroupElement) -> GroupElement:
        return self.reduce([-a for a in x])

    def scale(self, k: int, x: GroupElement) -> GroupElement:
        return self.reduce([k * a for a in x])

    def generators(self) -> Tuple[GroupElement, ...]:
        out = []
        for i in range(self.dimension):
            e = [0] * self.dimension
            e[i] = 1
            out.append(tuple(e))
        return tuple(out)

    def elements(self) -> Iterator[GroupElement]:
        """All elements of a finite group in lexicographic order."""
        if self.rank:
            raise GroupMismatchError(f"{self} is infinite")
        return itertools.product(*(range(d) for d in self.torsion))

    def index(self, x: GroupElement) -> int:
        """Position of x in ``elements()`` (mixed radix)."""
        position = 0
        for value, d in zip(x, self.torsion):
            position = position * d + value
        return position

    def random_element(self, rng: random.Random, height: int = 3) -> GroupElement:
        free = [rng.randint(-height, height) for _ in range(self.rank)]
        tors = [rng.randrange(d) for d in self.torsion]
        return tuple(free + tors)

    def __str__(self) -> str:
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupRingElement:
    """Finite integer combination of group elements; zero coefficients never stored."""

    group: FgAbelianGroup
    terms: Tuple[Tuple[GroupElement, int], ...] = ()

    @classmethod
    def from_mapping(cls, group: FgAbelianGroup, terms: Mapping[Sequence[int], int]) -> "GroupRingElement":
        collected: Dict[GroupElement, int] = {}
        for exp, coeff in terms.items():
            key = group.reduce(exp)
            collected[key] = collected.get(key, 0) + int(coeff)
        return cls(group, tuple(sorted((k, c) for k, c in collected.items() if c)))

    def as_dict(self) -> Dict[GroupElement, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_add(self, other)

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_sub(self, other)

    def __neg__(self) -> "GroupRingElement":
        return gr_neg(self)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_mul(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            basis = "[" + ",".join(str(e) for e in exp) + "]"
            text = basis if coeff == 1 else ("-" + basis if coeff == -1 else f"{coeff}{basis}")
            if parts and not text.startswith("-"):
                text = "+" + text
            parts.append(text)
        return "".join(parts)


@dataclass(frozen=True)
class WittAssignment:
    """
    Evaluation of group elements in a ring: one image per generator.

    Free generators must map to units, the generator of Z/d to an element
    whose d-th power is 1. ``bad_prime`` is excluded from the Frobenius checks.
    """

    group: FgAbelianGroup
    ring: RingDescriptor
    images: Tuple[Any, ...]
    bad_prime: Optional[int] = None

    def __post_init__(self):
        ring = self.ring
        if len(self.images) != self.group.dimension:
            raise GroupMismatchError(
                f"Expected {self.group.dimension} generator images, got {len(self.images)}"
            )
        images = tuple(ring.coerce(v) for v in self.images)
        object.__setattr__(self, "images", images)
        for i, image in enumerate(images[: self.group.rank]):
            if not ring.is_unit(image):
                raise NonUnitError(f"Image {ring.format(image)} of free generator {i} is not a unit")
        for image, d in zip(images[self.group.rank:], self.group.torsion):
            if not ring.eq(ring.pow(image, d), ring.one()):
                raise TorsionCompatibilityError(
                    f"Image {ring.format(image)} of a generator of order {d} does not satisfy x^{d} = 1"
                )

    def evaluate(self, m: GroupElement):
        ring = self.ring
        value = ring.one()
        for image, e in zip(self.images, m):
            if e:
                value = ring.mul(value, ring.pow(image, e))
        return value


def _check_group(x: GroupRingElement, y: GroupRingElement) -> FgAbelianGroup:
    if x.group != y.group:
        raise GroupMismatchError(f"Group ring elements over {x.group} and {y.group}")
    return x.group


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not isprime(p):
        raise NotPrimeError(f"{p} is not prime")


def gr_zero(group: FgAbelianGroup) -> GroupRingElement:
    return GroupRingElement(group)


def gr_basis(group: FgAbelianGroup, m: Sequence[int], coeff: int = 1) -> GroupRingElement:
    return GroupRingElement.from_mapping(group, {tuple(m): coeff})


def gr_one(group: FgAbelianGroup) -> GroupRingElement:
    return gr_basis(group, group.zero())


def gr_add(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    group = _check_group(x, y)
    collected = x.as_dict()
    for exp, coeff in y.terms:
        collected[exp] = collected.get(exp, 0) + coeff
    return GroupRingElement.from_mapping(group, collected)


def gr_neg(x: GroupRingElement) -> GroupRingElement:
    return GroupRingElement(x.group, tuple((exp, -coeff) for exp, coeff in x.terms))


def gr_sub(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return gr_add(x, gr_neg(y))


def gr_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    """Convolution product, [m][m'] = [m + m']."""
    group = _check_group(x, y)
    collected: Dict[GroupElement, int] = {}
    for m, a in x.terms:
        for n, b in y.terms:
            key = group.add(m, n)
            collected[key] = collected.get(key, 0) + a * b
    return GroupRingElement.from_mapping(group, collected)


def gr_pow(x: GroupRingElement, k: int) -> GroupRingElement:
    if k < 0:
        raise ValueError("Group ring powers must be non-negative")
    result = gr_one(x.group)
    base = x
    while k:
        if k & 1:
            result = gr_mul(result, base)
        base = gr_mul(base, base)
        k >>= 1
    return result


def gr_augmentation(x: GroupRingElement) -> int:
    """Sum of coefficients; equals the rank deg num - deg den of to_witt(x)."""
    return sum(coeff for _, coeff in x.terms)


def gr_frobenius_lift(p: int, x: GroupRingElement) -> GroupRingElement:
    """phi_p: [m] -> [p m], extended linearly."""
    _require_prime(p)
    group = x.group
    collected: Dict[GroupElement, int] = {}
    for m, coeff in x.terms:
        key = group.scale(p, m)
        collected[key] = collected.get(key, 0) + coeff
    return GroupRingElement.from_mapping(group, collected)


def frobenius_congruence_check(p: int, x: GroupRingElement) -> GroupRingElement:
    """x^p - phi_p(x); every coefficient is divisible by p."""
    _require_prime(p)
    return gr_sub(gr_pow(x, p), gr_frobenius_lift(p, x))


def divisible_by(x: GroupRingElement, p: int) -> bool:
    return all(coeff % p == 0 for _, coeff in x.terms)


def lambda_commute_check(p: int, q: int, x: GroupRingElement) -> bool:
    return gr_frobenius_lift(p, gr_frobenius_lift(q, x)) == gr_frobenius_lift(q, gr_frobenius_lift(p, x))


def to_witt(x: GroupRingElement, asg: WittAssignment) -> RationalWittVector:
    """
    sum c_m [m] -> prod (1 - eval(m) t)^(c_m) as a rational Witt vector

    Raises:
        GroupMismatchError: if the assignment is for another group
        UnsupportedRingError: if the target is not an integrally closed domain
    """
    if x.group != asg.group:
        raise GroupMismatchError(f"Assignment for {asg.group} applied to an element of {x.group}")
    ring = asg.ring
    require_exact_ring(ring, "to_witt")
    num = Polynomial.one(ring)
    den = Polynomial.one(ring)
    for m, coeff in x.terms:
        factor = Polynomial(ring, (ring.one(), ring.neg(asg.evaluate(m))))
        for _ in range(abs(coeff)):
            if coeff > 0:
                num = poly_mul(num, factor)
            else:
                den = poly_mul(den, factor)
    return wr_normalize(num, den)


def frobenius_compat_check(p: int, x: GroupRingElement, asg: WittAssignment) -> bool:
    """
    to_witt(phi_p x) == F_p(to_witt x)

    Raises:
        ExcludedPrimeError: if p is the assignment's bad prime
    """
    _require_prime(p)
    if asg.bad_prime is not None and p == asg.bad_prime:
        raise ExcludedPrimeError(f"Prime {p} is excluded from Frobenius checks for this assignment")
    return to_witt(gr_frobenius_lift(p, x), asg) == wr_frobenius(p, to_witt(x, asg))


def random_group_ring_element(group: FgAbelianGroup, rng: random.Random,
                              max_terms: int = 5, height: int = 3) -> GroupRingElement:
    count = rng.randint(1, max_terms)
    terms: Dict[GroupElement, int] = {}
    for _ in range(count):
        key = group.random_element(rng)
        terms[key] = terms.get(key, 0) + rng.choice([c for c in range(-height, height + 1) if c])
    return GroupRingElement.from_mapping(group, terms)
