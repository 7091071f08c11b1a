"""
Kummer extensions of cyclotomic fields and finite group cohomology.

A KummerExtension adjoins radicals y_i with y_i^(m_i) = a_i to Q(zeta_N),
m_i | N. Elements are polynomials in the y_i with cyclotomic coefficients and
y-degrees below m_i; a Galois element k acts by y_i -> zeta_(m_i)^(k_i) y_i.

Group cohomology of a finite abelian group with coefficients in a finitely
generated module is computed from normalized bar cochains, with cocycles and
coboundaries as integer lattices reduced by Hermite and Smith forms.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix, factorint, integer_nthroot

from .config import get_settings
from .dualtop import (
    IntegerMatrix,
    as_matrix,
    hermite_normal_form,
    identity,
    integer_kernel,
    mat_mul,
    smith_normal_form,
    transpose,
)
from .errors import (
    CochainError,
    IncompatibleModulesError,
    InvalidActionError,
    KummerError,
    ResolventExhaustedError,
)
from .exactring import CyclotomicField, CyclotomicNumber
from .grouplambda import FgAbelianGroup, GroupElement

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]


# ---------------------------------------------------------------------------
# Kummer extensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GaloisElement:
    """y_i -> zeta_(m_i)^(k_i) y_i, identity on the base field."""

    exponents: Tuple[int, ...]
    moduli: Tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.moduli):
            raise KummerError("Galois element and extension have different numbers of radicals")
        object.__setattr__(
            self, "exponents", tuple(int(k) % m for k, m in zip(self.exponents, self.moduli))
        )

    def compose(self, other: "GaloisElement") -> "GaloisElement":
        return GaloisElement(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.moduli)

    def power(self, k: int) -> "GaloisElement":
        return GaloisElement(tuple(k * a for a in self.exponents), self.moduli)

    @property
    def order(self) -> int:
        order = 1
        for k, m in zip(self.exponents, self.moduli):
            order = lcm(order, m // gcd(k, m))
        return order

    def is_identity(self) -> bool:
        return not any(self.exponents)


@dataclass(frozen=True)
class KummerExtension:
    """
    Q(zeta_N)(y_1, ..., y_r) with y_i^(m_i) = a_i.

    ``classes`` optionally records, for each rational radicand handed to
    ``from_radicands``, its n-th root as coefficient * y^exponents.
    """

    conductor: int
    radicals: Tuple[Tuple[CyclotomicNumber, int], ...]
    classes: Tuple[Tuple[Fraction, Exponents, CyclotomicNumber], ...] = ()

    def __post_init__(self):
        field = CyclotomicField(self.conductor)
        radicals = []
        for a, m in self.radicals:
            m = int(m)
            if m < 1 or self.conductor % m:
                raise KummerError(f"Radical exponent {m} must divide the conductor {self.conductor}")
            a = field.coerce(a)
            if a.is_zero():
                raise KummerError("Radicands must be nonzero")
            radicals.append((a, m))
        object.__setattr__(self, "radicals", tuple(radicals))

    @classmethod
    def from_radicands(cls, N: int, n: int, radicands: Sequence[Any]) -> "KummerExtension":
        """
        Adjoin n-th roots of rational radicands, skipping dependent ones

        A radicand that is, up to a rational n-th power and a root of unity of
        Q(zeta_N), a product of earlier generators becomes an element of the
        extension rather than a new generator.

        Raises:
            KummerError: if n does not divide N or a radicand is zero
        """
        if n < 1 or N % n:
            raise KummerError(f"Exponent {n} must divide the conductor {N}")
        generators: List[Fraction] = []
        found: List[Tuple[Fraction, Exponents, CyclotomicNumber]] = []
        for raw in radicands:
            value = Fraction(raw)
            if value == 0:
                raise KummerError("Radicands must be nonzero")
            decomposition = _decompose(value, generators, N, n)
            if decomposition is None:
                generators.append(value)
                exps = (0,) * (len(generators) - 1) + (1,)
                found.append((value, exps, CyclotomicNumber.constant(N, 1)))
            else:
                found.append((value,) + decomposition)
        width = len(generators)
        classes = tuple((value, exps + (0,) * (width - len(exps)), coeff) for value, exps, coeff in found)
        logger.debug("Kummer extension of Q(zeta_%d) with %d of %d radicands independent", N, width, len(found))
        return cls(N, tuple((CyclotomicNumber.constant(N, g), n) for g in generators), classes)

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.conductor)

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(m for _, m in self.radicals)

    @property
    def degree(self) -> int:
        degree = 1
        for m in self.moduli:
            degree *= m
        return degree

    # elements -----------------------------------------------------------

    def element(self, terms: Mapping[Sequence[int], Any]) -> "KummerElement":
        field = self.field
        collected: Dict[Exponents, CyclotomicNumber] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.radicals) or any(not 0 <= e < m for e, m in zip(exps, self.moduli)):
                raise KummerError(f"Monomial exponents {exps} out of range for moduli {self.moduli}")
            collected[exps] = collected.get(exps, field.zero()) + field.coerce(coeff)
        return KummerElement(self, tuple(sorted((e, c) for e, c in collected.items() if not c.is_zero())))

    def zero(self) -> "KummerElement":
        return KummerElement(self, ())

    def from_base(self, value) -> "KummerElement":
        return self.element({(0,) * len(self.radicals): value})

    def one(self) -> "KummerElement":
        return self.from_base(1)

    def generator(self, i: int) -> "KummerElement":
        exps = [0] * len(self.radicals)
        exps[i] = 1
        if self.moduli[i] == 1:
            return self.from_base(self.radicals[i][0])
        return self.element({tuple(exps): 1})

    def add(self, x: "KummerElement", y: "KummerElement") -> "KummerElement":
        merged: Dict[Exponents, CyclotomicNumber] = dict(x.terms)
        for exps, coeff in y.terms:
            merged[exps] = merged[exps] + coeff if exps in merged else coeff
        return self.element(merged)

    def neg(self, x: "KummerElement") -> "KummerElement":
        return KummerElement(self, tuple((e, -c) for e, c in x.terms))

    def sub(self, x: "KummerElement", y: "KummerElement") -> "KummerElement":
        return self.add(x, self.neg(y))

    def scale(self, c, x: "KummerElement") -> "KummerElement":
        c = self.field.coerce(c)
        return self.element({e: c * v for e, v in x.terms})

    def mul(self, x: "KummerElement", y: "KummerElement") -> "KummerElement":
        field = self.field
        collected: Dict[Exponents, CyclotomicNumber] = {}
        for e, a in x.terms:
            for f, b in y.terms:
                coeff = a * b
                exps = []
                for s, (radicand, m) in zip((u + v for u, v in zip(e, f)), self.radicals):
                    if s >= m:
                        s -= m
                        coeff = coeff * radicand
                    exps.append(s)
                key = tuple(exps)
                collected[key] = collected.get(key, field.zero()) + coeff
        return self.element(collected)

    def pow(self, x: "KummerElement", k: int) -> "KummerElement":
        if k < 0:
            raise KummerError("Negative powers are not supported")
        result = self.one()
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def in_base(self, x: "KummerElement") -> Optional[CyclotomicNumber]:
        """The base-field value of x, or None if x involves a radical."""
        if not x.terms:
            return self.field.zero()
        if len(x.terms) == 1 and not any(x.terms[0][0]):
            return x.terms[0][1]
        return None

    # Galois action --------------------------------------------------------

    def galois_element(self, exponents: Sequence[int]) -> GaloisElement:
        return GaloisElement(tuple(exponents), self.moduli)

    def galois_group(self) -> List[GaloisElement]:
        return [self.galois_element(k) for k in itertools.product(*(range(m) for m in self.moduli))]

    def apply(self, sigma: GaloisElement, x: "KummerElement") -> "KummerElement":
        if sigma.moduli != self.moduli:
            raise KummerError("Galois element belongs to a different extension")
        N = self.conductor
        terms = {}
        for exps, coeff in x.terms:
            shift = sum(k * e * (N // m) for k, e, m in zip(sigma.exponents, exps, self.moduli))
            terms[exps] = coeff * CyclotomicNumber.zeta(N, shift)
        return self.element(terms)

    def radical_classes(self) -> List[Tuple[Optional[Fraction], "KummerElement"]]:
        """The n-th roots recorded by ``from_radicands``, or the generators themselves."""
        if self.classes:
            return [(value, self.element({exps: coeff})) for value, exps, coeff in self.classes]
        return [(None, self.generator(i)) for i in range(len(self.radicals))]

    def random_element(self, rng: random.Random, height: int = 2) -> "KummerElement":
        field = self.field
        terms = {}
        for exps in itertools.product(*(range(m) for m in self.moduli)):
            if rng.random() < 0.6:
                terms[exps] = field.random_element(rng, height)
        return self.element(terms)


@dataclass(frozen=True)
class KummerElement:
    extension: KummerExtension
    terms: Tuple[Tuple[Exponents, CyclotomicNumber], ...] = ()

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "KummerElement") -> "KummerElement":
        return self.extension.add(self, other)

    def __sub__(self, other: "KummerElement") -> "KummerElement":
        return self.extension.sub(self, other)

    def __neg__(self) -> "KummerElement":
        return self.extension.neg(self)

    def __mul__(self, other: "KummerElement") -> "KummerElement":
        return self.extension.mul(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = ["y"] if len(self.extension.radicals) == 1 else [
            f"y{i + 1}" for i in range(len(self.extension.radicals))
        ]
        parts = []
        for exps, coeff in self.terms:
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
            )
            text = str(coeff)
            if monomial:
                text = monomial if text == "1" else f"({text})*{monomial}"
            parts.append(text)
        return " + ".join(parts)


def _signed_root_of_minus_one(N: int, n: int) -> Optional[CyclotomicNumber]:
    """A root of unity eta in Q(zeta_N) with eta^n = -1, if there is one."""
    w = N if N % 2 == 0 else 2 * N
    if (w // 2) % n:
        return None
    zeta_w = CyclotomicNumber.zeta(N, 1) if N % 2 == 0 else -CyclotomicNumber.zeta(N, (N + 1) // 2)
    return zeta_w ** (w // (2 * n))


def _prime_exponents(value: Fraction) -> Dict[int, int]:
    exps: Dict[int, int] = dict(factorint(abs(value.numerator)))
    for p, e in factorint(value.denominator).items():
        exps[p] = exps.get(p, 0) - e
    exps.pop(1, None)
    return exps


def _decompose(value: Fraction, generators: Sequence[Fraction], N: int, n: int
               ) -> Optional[Tuple[Exponents, CyclotomicNumber]]:
    """
    Write an n-th root of ``value`` as coeff * prod y_j^(c_j) with y_j^n = generators[j]

    Only rational n-th powers and roots of unity of Q(zeta_N) are detected.
    """
    eta = _signed_root_of_minus_one(N, n)
    track_sign = eta is None
    factored = [_prime_exponents(g) for g in generators]
    target = _prime_exponents(value)
    primes = sorted(set(target).union(*factored)) if factored else sorted(target)

    def vector(exps: Dict[int, int], negative: bool) -> List[int]:
        v = [exps.get(p, 0) % n for p in primes]
        if track_sign:
            v.append(n // 2 if negative else 0)
        return v

    goal = vector(target, value < 0)
    basis = [vector(f, g < 0) for f, g in zip(factored, generators)]
    for combo in itertools.product(range(n), repeat=len(generators)):
        if all((sum(c * b[k] for c, b in zip(combo, basis)) - goal[k]) % n == 0 for k in range(len(goal))):
            quotient = value
            for c, g in zip(combo, generators):
                quotient /= g ** c
            num_root, num_exact = integer_nthroot(abs(quotient.numerator), n)
            den_root, den_exact = integer_nthroot(quotient.denominator, n)
            if not (num_exact and den_exact):
                continue
            coeff = CyclotomicNumber.constant(N, Fraction(int(num_root), int(den_root)))
            if quotient < 0:
                if eta is None:
                    continue
                coeff = coeff * eta
            return tuple(combo), coeff
    return None


def _zeta_power(N: int, n: int, k: int) -> CyclotomicNumber:
    return CyclotomicNumber.zeta(N, (N // n) * k)


def kummer_pairing(sigma: GaloisElement, alpha: KummerElement, n: int) -> int:
    """
    The exponent k with sigma(alpha) / alpha = zeta_n^k

    Raises:
        KummerError: if zeta_n is not in the base, alpha is zero, alpha^n is
            not in the base field or the quotient is not an n-th root of unity
    """
    ext = alpha.extension
    N = ext.conductor
    if n < 1 or N % n:
        raise KummerError(f"zeta_{n} does not lie in Q(zeta_{N})")
    if alpha.is_zero():
        raise KummerError("The Kummer pairing is undefined at zero")
    if ext.in_base(ext.pow(alpha, n)) is None:
        raise KummerError(f"{alpha} is not an n-th root of a base field element", {"n": n})
    image = ext.apply(sigma, alpha)
    for k in range(n):
        if image == ext.scale(_zeta_power(N, n, k), alpha):
            return k
    raise KummerError(f"sigma(alpha)/alpha is not an {n}-th root of unity")


def kummer_pairing_matrix(ext: KummerExtension, n: int) -> List[List[int]]:
    """
    Pairings <sigma_j, alpha_i> mod n

    Rows are the radical classes, columns the Galois generators sigma_j
    (the dual basis k = e_j).
    """
    if any(m != n for m in ext.moduli):
        raise KummerError(f"All radical exponents must equal {n}, got {ext.moduli}")
    generators = [ext.galois_element([int(i == j) for i in range(len(ext.radicals))])
                  for j in range(len(ext.radicals))]
    return [[kummer_pairing(sigma, alpha, n) for sigma in generators] for _, alpha in ext.radical_classes()]


def pairing_matrix_invertible(matrix: Sequence[Sequence[int]], n: int) -> bool:
    if not matrix or len(matrix) != len(matrix[0]):
        return False
    det = int(Matrix(matrix).det())
    return gcd(det, n) == 1


def _resolvent(ext: KummerExtension, sigma: GaloisElement, zeta: CyclotomicNumber,
               theta: KummerElement, n: int) -> KummerElement:
    total = ext.zero()
    image = theta
    zeta_inverse = zeta.inverse()
    weight = CyclotomicNumber.constant(ext.conductor, 1)
    for _ in range(n):
        total = ext.add(total, ext.scale(weight, image))
        image = ext.apply(sigma, image)
        weight = weight * zeta_inverse
    return total


def _trial_elements(ext: KummerExtension, rng: random.Random):
    monomials = [exps for exps in itertools.product(*(range(m) for m in ext.moduli))]
    for exps in monomials:
        yield ext.element({exps: 1})
    for exps in monomials:
        if any(exps):
            yield ext.add(ext.one(), ext.element({exps: 1}))
    while True:
        yield ext.random_element(rng)


def hilbert90_resolvent(ext: KummerExtension, zeta, sigma: Optional[GaloisElement] = None,
                        seed: Optional[int] = None) -> KummerElement:
    """
    Find alpha != 0 with sigma(alpha) = zeta * alpha

    Uses the Lagrange resolvent sum_i zeta^-i sigma^i(theta) over radical
    monomials, then 1 + monomial, then seeded random elements, up to the
    configured budget. sigma defaults to the generator k = (1, ..., 1) and
    must generate the whole Galois group; seed overrides the configured
    resolvent seed.

    Raises:
        KummerError: if zeta^n != 1 or sigma does not generate a cyclic group of order [E:F]
        ResolventExhaustedError: if no trial element yields a nonzero resolvent
    """
    settings = get_settings()
    field = ext.field
    zeta = field.coerce(zeta)
    if sigma is None:
        sigma = ext.galois_element([1] * len(ext.radicals))
    n = ext.degree
    if sigma.order != n:
        raise KummerError(f"sigma has order {sigma.order}, the extension has degree {n}")
    if zeta ** n != field.one():
        raise KummerError(f"zeta is not an {n}-th root of unity")
    if zeta == field.one():
        return ext.one()
    rng = random.Random(settings.resolvent_seed if seed is None else seed)
    for attempt, theta in zip(range(settings.resolvent_budget), _trial_elements(ext, rng)):
        alpha = _resolvent(ext, sigma, zeta, theta, n)
        if alpha.is_zero():
            logger.debug("Resolvent trial %d vanished for theta=%s", attempt, theta)
            continue
        if ext.apply(sigma, alpha) != ext.scale(zeta, alpha):
            raise KummerError("Resolvent failed verification", {"theta": str(theta)})
        logger.debug("Resolvent found after %d trials", attempt + 1)
        return alpha
    raise ResolventExhaustedError(
        f"No nonzero resolvent within {settings.resolvent_budget} trials", {"zeta": str(zeta)}
    )


def kummer_norm(ext: KummerExtension, alpha: KummerElement, sigma: GaloisElement) -> KummerElement:
    """prod_{i < ord(sigma)} sigma^i(alpha)."""
    result = ext.one()
    image = alpha
    for _ in range(sigma.order):
        result = ext.mul(result, image)
        image = ext.apply(sigma, image)
    return result


# ---------------------------------------------------------------------------
# G-modules and cochains
# ---------------------------------------------------------------------------

def _apply_matrix(M: IntegerMatrix, vector: Sequence[int]) -> List[int]:
    return [sum(a * b for a, b in zip(row, vector)) for row in M]


@dataclass(frozen=True)
class GModule:
    """
    A finitely generated abelian group with an action of a finite abelian group.

    ``matrices[j]`` is the action of the j-th generator of ``group`` on the
    coordinates of ``module`` (column vectors).
    """

    group: FgAbelianGroup
    module: FgAbelianGroup
    matrices: Tuple[IntegerMatrix, ...]

    @classmethod
    def trivial(cls, group: FgAbelianGroup, module: FgAbelianGroup) -> "GModule":
        return cls(group, module, tuple(identity(module.dimension) for _ in range(group.dimension)))

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(as_matrix(M) for M in self.matrices))
        _validate_action(self)

    def matrix(self, g: GroupElement) -> IntegerMatrix:
        return _element_matrix(self, tuple(g))

    def act(self, g: GroupElement, x: Sequence[int]) -> Tuple[int, ...]:
        return self.module.reduce(_apply_matrix(self.matrix(g), x))


def _same_in_module(module: FgAbelianGroup, x: Sequence[int], y: Sequence[int]) -> bool:
    return module.reduce(x) == module.reduce(y)


def _validate_action(gm: GModule) -> None:
    G, A = gm.group, gm.module
    s = A.dimension
    if G.rank:
        raise InvalidActionError(f"Acting group {G} must be finite")
    if len(gm.matrices) != G.dimension:
        raise InvalidActionError(f"Expected {G.dimension} action matrices, got {len(gm.matrices)}")
    basis = identity(s)
    for j, M in enumerate(gm.matrices):
        if len(M) != s or any(len(row) != s for row in M):
            raise InvalidActionError(f"Action matrix {j} must be {s}x{s}")
        columns = transpose(M) if M else ()
        for i, d in enumerate(A.torsion):
            image = [d * x for x in columns[A.rank + i]]
            if not _same_in_module(A, image, [0] * s):
                raise InvalidActionError(f"Generator {j} does not respect the torsion of {A}")
        for e in basis:
            x = list(e)
            for _ in range(G.torsion[j]):
                x = _apply_matrix(M, x)
            if not _same_in_module(A, x, e):
                raise InvalidActionError(f"Generator {j} does not act with order dividing {G.torsion[j]}")
    for j, M in enumerate(gm.matrices):
        for k, L in enumerate(gm.matrices[j + 1:], start=j + 1):
            for e in basis:
                if not _same_in_module(A, _apply_matrix(M, _apply_matrix(L, e)), _apply_matrix(L, _apply_matrix(M, e))):
                    raise InvalidActionError(f"Action matrices {j} and {k} do not commute")


@lru_cache(maxsize=4096)
def _element_matrix(gm: GModule, g: GroupElement) -> IntegerMatrix:
    result = identity(gm.module.dimension)
    for M, e in zip(gm.matrices, g):
        for _ in range(e):
            result = mat_mul(M, result)
    return result


def _all_tuples(group: FgAbelianGroup, p: int) -> List[Tuple[GroupElement, ...]]:
    return list(itertools.product(list(group.elements()), repeat=p))


def _normalized_tuples(group: FgAbelianGroup, p: int) -> List[Tuple[GroupElement, ...]]:
    zero = group.zero()
    nontrivial = [g for g in group.elements() if g != zero]
    return list(itertools.product(nontrivial, repeat=p))


@dataclass(frozen=True)
class Cocycle:
    """
    A p-cochain G^p -> A stored as a dense table in product order of G^p.

    ``is_cocycle`` is evaluated from the bar coboundary formula at
    construction; chains that are not cocycles are kept but flagged.
    """

    degree: int
    gmodule: GModule
    values: Tuple[Tuple[int, ...], ...]
    is_cocycle: bool = False

    def __post_init__(self):
        G, A = self.gmodule.group, self.gmodule.module
        expected = G.order ** self.degree
        if len(self.values) != expected:
            raise CochainError(f"A {self.degree}-cochain needs {expected} values, got {len(self.values)}")
        object.__setattr__(self, "values", tuple(A.reduce(v) for v in self.values))
        object.__setattr__(self, "is_cocycle", _satisfies_cocycle_condition(self))

    @classmethod
    def from_function(cls, degree: int, gmodule: GModule, function) -> "Cocycle":
        return cls(degree, gmodule, tuple(function(*args) for args in _all_tuples(gmodule.group, degree)))

    @classmethod
    def zero(cls, degree: int, gmodule: GModule) -> "Cocycle":
        width = gmodule.module.dimension
        return cls(degree, gmodule, ((0,) * width,) * (gmodule.group.order ** degree))

    def value(self, *args: GroupElement) -> Tuple[int, ...]:
        G = self.gmodule.group
        index = 0
        for g in args:
            index = index * G.order + G.index(G.reduce(g))
        return self.values[index]

    def is_normalized(self) -> bool:
        zero = self.gmodule.group.zero()
        trivial = self.gmodule.module.zero()
        for args, value in zip(_all_tuples(self.gmodule.group, self.degree), self.values):
            if zero in args and value != trivial:
                return False
        return True

    def is_zero(self) -> bool:
        trivial = self.gmodule.module.zero()
        return all(v == trivial for v in self.values)

    def _check(self, other: "Cocycle") -> None:
        if self.degree != other.degree or self.gmodule != other.gmodule:
            raise IncompatibleModulesError("Cochains of different degree or module")

    def __add__(self, other: "Cocycle") -> "Cocycle":
        self._check(other)
        A = self.gmodule.module
        return Cocycle(self.degree, self.gmodule,
                       tuple(A.add(x, y) for x, y in zip(self.values, other.values)))

    def __neg__(self) -> "Cocycle":
        A = self.gmodule.module
        return Cocycle(self.degree, self.gmodule, tuple(A.neg(x) for x in self.values))

    def __sub__(self, other: "Cocycle") -> "Cocycle":
        return self + (-other)


def _satisfies_cocycle_condition(c: Cocycle) -> bool:
    gm = c.gmodule
    G, A = gm.group, gm.module
    p = c.degree
    for args in _all_tuples(G, p + 1):
        total = list(gm.act(args[0], c.value(*args[1:])))
        for i in range(1, p + 1):
            merged = args[: i - 1] + (G.add(args[i - 1], args[i]),) + args[i + 1:]
            sign = -1 if i % 2 else 1
            total = [t + sign * v for t, v in zip(total, c.value(*merged))]
        sign = -1 if (p + 1) % 2 else 1
        total = [t + sign * v for t, v in zip(total, c.value(*args[:p]))]
        if A.reduce(total) != A.zero():
            return False
    return True


def coboundary_matrix(gmodule: GModule, p: int) -> IntegerMatrix:
    """
    Integer matrix of d: C^p -> C^(p+1) on normalized cochains

    Coordinates are (tuple index) * s + (module coordinate), tuples of
    non-identity elements in product order.
    """
    G = gmodule.group
    s = gmodule.module.dimension
    sources = _normalized_tuples(G, p)
    position = {t: i for i, t in enumerate(sources)}
    targets = _normalized_tuples(G, p + 1)
    rows = [[0] * (len(sources) * s) for _ in range(len(targets) * s)]

    def add_block(row_base: int, source: Tuple, sign: int, M: Optional[IntegerMatrix] = None) -> None:
        index = position.get(source)
        if index is None:
            return
        col_base = index * s
        for a in range(s):
            for b in range(s):
                entry = M[a][b] if M is not None else int(a == b)
                if entry:
                    rows[row_base + a][col_base + b] += sign * entry

    for r, args in enumerate(targets):
        base = r * s
        add_block(base, args[1:], 1, gmodule.matrix(args[0]))
        for i in range(1, p + 1):
            merged = args[: i - 1] + (G.add(args[i - 1], args[i]),) + args[i + 1:]
            add_block(base, merged, -1 if i % 2 else 1)
        add_block(base, args[:p], -1 if (p + 1) % 2 else 1)
    return as_matrix(rows)


# ---------------------------------------------------------------------------
# Cohomology
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CohomologyGroup:
    """H^p(G, A) with representative cocycles for its invariant-factor generators."""

    degree: int
    gmodule: GModule
    group: FgAbelianGroup
    representatives: Tuple[Cocycle, ...]
    cocycle_basis: IntegerMatrix
    pivots: Tuple[int, ...]
    change_of_basis: IntegerMatrix
    factors: Tuple[int, ...]
    columns: Tuple[int, ...]

    def class_of(self, cocycle: Cocycle) -> Tuple[int, ...]:
        """
        Coordinates of the class of a normalized cocycle on the generators

        Raises:
            CochainError: if the cochain is not a normalized cocycle
        """
        if cocycle.gmodule != self.gmodule or cocycle.degree != self.degree:
            raise IncompatibleModulesError("Cocycle belongs to a different complex")
        if not cocycle.is_normalized():
            raise CochainError("Classes are computed for normalized cochains only")
        vector = _normalized_coordinates(cocycle)
        weights = _solve_echelon(self.cocycle_basis, self.pivots, vector)
        if weights is None:
            raise CochainError("Cochain is not a cocycle")
        transformed = [sum(w * self.change_of_basis[i][j] for i, w in enumerate(weights))
                       for j in range(len(self.factors))]
        return self.group.reduce([transformed[i] for i in self.columns])


def _normalized_coordinates(cocycle: Cocycle) -> List[int]:
    vector: List[int] = []
    for args in _normalized_tuples(cocycle.gmodule.group, cocycle.degree):
        vector.extend(cocycle.value(*args))
    return vector


def _solve_echelon(basis: IntegerMatrix, pivots: Sequence[int], vector: Sequence[int]) -> Optional[List[int]]:
    """Integer w with sum w_i basis_i = vector for a row echelon basis, or None."""
    remainder = list(vector)
    weights = []
    for row, pivot in zip(basis, pivots):
        if remainder[pivot] % row[pivot]:
            return None
        w = remainder[pivot] // row[pivot]
        weights.append(w)
        if w:
            remainder = [a - w * b for a, b in zip(remainder, row)]
    if any(remainder):
        return None
    return weights


def _pivots(echelon: IntegerMatrix) -> Tuple[int, ...]:
    return tuple(next(j for j, x in enumerate(row) if x) for row in echelon)


def _module_moduli(A: FgAbelianGroup) -> List[int]:
    return [0] * A.rank + list(A.torsion)


def _cocycle_lattice(gmodule: GModule, p: int, width: int) -> IntegerMatrix:
    """Echelon basis of {x : d x lies in the relation lattice of C^(p+1)}."""
    D = coboundary_matrix(gmodule, p)
    moduli = _module_moduli(gmodule.module)
    s = len(moduli)
    free_rows = [row for r, row in enumerate(D) if moduli[r % s] == 0 and any(row)]
    torsion_rows = [(row, moduli[r % s]) for r, row in enumerate(D) if moduli[r % s] and any(row)]
    if free_rows:
        kernel = integer_kernel(hermite_normal_form(free_rows), cols=width)
    else:
        kernel = list(identity(width))
    if not kernel:
        return ()
    if torsion_rows:
        e = gmodule.module.torsion[-1]
        q = len(kernel)
        restricted = set()
        for row, d in torsion_rows:
            scaled = [(e // d) * x for x in row]
            image = tuple(sum(a * b for a, b in zip(scaled, k)) % e for k in kernel)
            if any(image):
                restricted.add(image)
        restricted = sorted(restricted) + [[e * int(i == j) for j in range(q)] for i in range(q)]
        lattice = hermite_normal_form(restricted)
        smith = smith_normal_form(lattice)
        diagonal = list(smith.diagonal) + [0] * (q - len(smith.diagonal))
        V_cols = transpose(smith.V)
        generators = []
        for i in range(q):
            step = e // gcd(diagonal[i], e)
            combo = [step * v for v in V_cols[i]]
            generators.append([sum(c * k[j] for c, k in zip(combo, kernel)) for j in range(width)])
        return hermite_normal_form(generators)
    return hermite_normal_form(kernel)


@lru_cache(maxsize=256)
def _cohomology(gmodule: GModule, p: int) -> CohomologyGroup:
    G, A = gmodule.group, gmodule.module
    s = A.dimension
    width = len(_normalized_tuples(G, p)) * s
    cocycles = _cocycle_lattice(gmodule, p, width)
    if not cocycles:
        return CohomologyGroup(p, gmodule, FgAbelianGroup(), (), (), (), (), (), ())
    pivots = _pivots(cocycles)
    q = len(cocycles)
    boundary_generators: List[List[int]] = []
    if p >= 1:
        boundary_generators.extend(list(col) for col in transpose(coboundary_matrix(gmodule, p - 1)))
    moduli = _module_moduli(A)
    for t in range(width // s if s else 0):
        for a, d in enumerate(moduli):
            if d:
                vector = [0] * width
                vector[t * s + a] = d
                boundary_generators.append(vector)
    relations = []
    for b in boundary_generators:
        weights = _solve_echelon(cocycles, pivots, b)
        if weights is None:
            raise CochainError("Coboundary outside the cocycle lattice; the action is inconsistent")
        if any(weights):
            relations.append(weights)
    if relations:
        smith = smith_normal_form(relations)
        diagonal = list(smith.diagonal) + [0] * (q - len(smith.diagonal))
        V = smith.V
    else:
        diagonal = [0] * q
        V = identity(q)
    V_inverse = Matrix(V).inv()
    # free generators first, then torsion, as in FgAbelianGroup
    columns = [i for i, d in enumerate(diagonal) if d == 0] + [i for i, d in enumerate(diagonal) if d > 1]
    representatives = []
    for i in columns:
        weights = [int(V_inverse[i, j]) for j in range(q)]
        vector = [sum(w * row[k] for w, row in zip(weights, cocycles)) for k in range(width)]
        representatives.append(_cocycle_from_coordinates(gmodule, p, vector))
    group = FgAbelianGroup(
        rank=sum(1 for d in diagonal if d == 0), torsion=tuple(d for d in diagonal if d > 1)
    )
    logger.debug("H^%d(%s, %s) = %s", p, G, A, group)
    return CohomologyGroup(
        p, gmodule, group, tuple(representatives), cocycles, pivots, as_matrix(V), tuple(diagonal), tuple(columns)
    )


def _cocycle_from_coordinates(gmodule: GModule, p: int, vector: Sequence[int]) -> Cocycle:
    G = gmodule.group
    s = gmodule.module.dimension
    table: Dict[Tuple[GroupElement, ...], Tuple[int, ...]] = {}
    for t, args in enumerate(_normalized_tuples(G, p)):
        table[args] = tuple(vector[t * s:(t + 1) * s])
    trivial = gmodule.module.zero()
    return Cocycle(p, gmodule, tuple(table.get(args, trivial) for args in _all_tuples(G, p)))


def group_cohomology(G: FgAbelianGroup, A: FgAbelianGroup, p: int,
                     action: Optional[Sequence[Sequence[Sequence[int]]]] = None) -> CohomologyGroup:
    """
    H^p(G, A) for a finite abelian group G acting on A

    Args:
        G: finite group as invariant factors
        A: coefficient module
        p: cochain degree
        action: one integer matrix per generator of G, trivial action if omitted

    Returns:
        CohomologyGroup: invariant factors and representative cocycles

    Raises:
        InvalidActionError: for non-commuting matrices, wrong orders or torsion violations
        CochainError: beyond the configured group order or degree limits
    """
    settings = get_settings()
    if G.rank:
        raise InvalidActionError(f"Acting group {G} must be finite")
    if G.order > settings.max_group_order:
        raise CochainError(f"Group order {G.order} exceeds the limit {settings.max_group_order}")
    if not 0 <= p <= settings.max_cochain_degree:
        raise CochainError(f"Degree {p} outside 0..{settings.max_cochain_degree}")
    gmodule = GModule.trivial(G, A) if action is None else GModule(G, A, tuple(as_matrix(M) for M in action))
    return _cohomology(gmodule, p)


def cohomology_class(u: Cocycle) -> Tuple[int, ...]:
    return _cohomology(u.gmodule, u.degree).class_of(u)


def is_coboundary(u: Cocycle) -> bool:
    return not any(cohomology_class(u))


# ---------------------------------------------------------------------------
# Cup products and Galois symbols
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Pairing:
    """
    Bilinear map A x B -> C given by tensor[i][j] = image of (e_i, e_j) in C.

    ``target`` carries the action on C.
    """

    left: FgAbelianGroup
    right: FgAbelianGroup
    target: GModule
    tensor: Tuple[Tuple[Tuple[int, ...], ...], ...]

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        C = self.target.module
        total = [0] * C.dimension
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    total = [t + x * y * v for t, v in zip(total, self.tensor[i][j])]
        return C.reduce(total)


def multiplication_pairing(gmodule: GModule) -> Pairing:
    """Z/n x Z/n -> Z/n, (a, b) -> ab, for a cyclic module."""
    A = gmodule.module
    if A.dimension != 1:
        raise IncompatibleModulesError("Multiplication pairing needs a cyclic module")
    return Pairing(A, A, gmodule, (((1,),),))


def _validate_pairing(u: Cocycle, v: Cocycle, pairing: Pairing) -> None:
    if u.gmodule.group != v.gmodule.group or pairing.target.group != u.gmodule.group:
        raise IncompatibleModulesError("Cup product factors act through different groups")
    if u.gmodule.module != pairing.left or v.gmodule.module != pairing.right:
        raise IncompatibleModulesError("Pairing does not match the coefficient modules")
    A, B = pairing.left, pairing.right
    zero = pairing.target.module.zero()
    for i, d in enumerate(_module_moduli(A)):
        if d:
            for j in range(B.dimension):
                if pairing.target.module.reduce([d * x for x in pairing.tensor[i][j]]) != zero:
                    raise IncompatibleModulesError("Pairing does not respect the torsion of the left module")
    for j, d in enumerate(_module_moduli(B)):
        if d:
            for i in range(A.dimension):
                if pairing.target.module.reduce([d * x for x in pairing.tensor[i][j]]) != zero:
                    raise IncompatibleModulesError("Pairing does not respect the torsion of the right module")
    G = u.gmodule.group
    for g in G.generators():
        for a in identity(A.dimension):
            for b in identity(B.dimension):
                left = pairing(u.gmodule.act(g, a), v.gmodule.act(g, b))
                right = pairing.target.act(g, pairing(a, b))
                if left != right:
                    raise IncompatibleModulesError("Pairing is not equivariant")


def cup_product(u: Cocycle, v: Cocycle, pairing: Pairing) -> Cocycle:
    """(u cup v)(g, h) = pairing(u(g), g . v(h)) for 1-cocycles u and v."""
    if u.degree != 1 or v.degree != 1:
        raise IncompatibleModulesError("Cup products are implemented for degree one cocycles")
    _validate_pairing(u, v, pairing)
    return Cocycle.from_function(
        2, pairing.target, lambda g, h: pairing(u.value(g), v.gmodule.act(g, v.value(h)))
    )


def _rational_radicand(value: CyclotomicNumber) -> Optional[Fraction]:
    if not value.coeffs:
        return Fraction(0)
    if any(value.coeffs[1:]):
        return None
    return value.coeffs[0]


def galois_symbol(alpha, ext: KummerExtension, n: int) -> Cocycle:
    """
    The 1-cocycle sigma -> <sigma, alpha^(1/n)> with values in Z/n

    Raises:
        KummerError: if an n-th root of alpha is not representable in ext
    """
    if n < 2:
        raise KummerError("Galois symbols need n >= 2")
    if any(m != n for m in ext.moduli):
        raise KummerError(f"All radical exponents must equal {n}, got {ext.moduli}")
    if isinstance(alpha, CyclotomicNumber):
        rational = _rational_radicand(alpha)
        if rational is None:
            raise KummerError("Galois symbols are computed for rational alpha")
        alpha = rational
    value = Fraction(alpha)
    if value == 0:
        raise KummerError("The Galois symbol of zero is undefined")
    generators = []
    for a, _ in ext.radicals:
        radicand = _rational_radicand(a)
        if radicand is None:
            raise KummerError("Galois symbols need rational radicands")
        generators.append(radicand)
    decomposition = _decompose(value, generators, ext.conductor, n)
    if decomposition is None:
        raise KummerError(f"No {n}-th root of {value} in the extension")
    exps, coeff = decomposition
    root = ext.element({exps: coeff})
    G = FgAbelianGroup(0, (n,) * len(ext.radicals))
    gmodule = GModule.trivial(G, FgAbelianGroup(0, (n,)))
    return Cocycle.from_function(
        1, gmodule, lambda g: (kummer_pairing(ext.galois_element(g), root, n),)
    )
