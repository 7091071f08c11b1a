"""
Finitely generated abelian group calculus.

Smith and Hermite normal forms, Hom and Ext into the integers, component
groups of Pontryagin duals, overlattices Z^r <= N <= Q^r (the connected finite
covers of the dual torus) with their deck groups, and finite stages of
solenoid inverse systems.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod
from typing import Iterator, List, Sequence, Tuple

from sympy import Matrix, divisors
from sympy.core.intfunc import igcdex

from .errors import CrossCheckError, DivisibilityError
from .exactring import Integers, bareiss_determinant
from .grouplambda import FgAbelianGroup

logger = logging.getLogger(__name__)

IntegerMatrix = Tuple[Tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]]) -> IntegerMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntegerMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: IntegerMatrix) -> IntegerMatrix:
    return tuple(zip(*A)) if A else ()


def mat_mul(A: IntegerMatrix, B: IntegerMatrix) -> IntegerMatrix:
    cols = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in A)


def determinant(A: IntegerMatrix) -> int:
    return bareiss_determinant(A, Integers())


@dataclass(frozen=True)
class SmithDecomposition:
    """U A V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.V))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def _swap_rows(M: List[List[int]], i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]


def _swap_cols(M: List[List[int]], i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M: List[List[int]], target: int, source: int, factor: int) -> None:
    M[target] = [a + factor * b for a, b in zip(M[target], M[source])]


def _add_col(M: List[List[int]], target: int, source: int, factor: int) -> None:
    for row in M:
        row[target] += factor * row[source]


@lru_cache(maxsize=1024)
def _smith(A: IntegerMatrix, m: int, n: int) -> SmithDecomposition:
    D = [list(row) for row in A]
    U = [list(row) for row in identity(m)]
    V = [list(row) for row in identity(n)]
    for t in range(min(m, n)):
        while True:
            candidates = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not candidates:
                break
            _, i, j = min(candidates)
            if i != t:
                _swap_rows(D, t, i)
                _swap_rows(U, t, i)
            if j != t:
                _swap_cols(D, t, j)
                _swap_cols(V, t, j)
            pivot = D[t][t]
            clean = True
            for i in range(t + 1, m):
                q = D[i][t] // pivot
                if q:
                    _add_row(D, i, t, -q)
                    _add_row(U, i, t, -q)
                clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                q = D[t][j] // pivot
                if q:
                    _add_col(D, j, t, -q)
                    _add_col(V, j, t, -q)
                clean = clean and D[t][j] == 0
            if not clean:
                continue
            offender = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % pivot), None
            )
            if offender is None:
                break
            _add_row(D, t, offender, 1)
            _add_row(U, t, offender, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return SmithDecomposition(as_matrix(U), as_matrix(D), as_matrix(V))


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """
    Smith normal form with transforms

    Args:
        A: integer matrix, row-major

    Returns:
        SmithDecomposition: U, D, V with U A V = D exactly

    Raises:
        CrossCheckError: if the recomputed product or the divisibility chain fails
    """
    A = as_matrix(A)
    m = len(A)
    n = len(A[0]) if A else 0
    result = _smith(A, m, n)
    if m and n and mat_mul(mat_mul(result.U, A), result.V) != result.D:
        raise CrossCheckError("Smith decomposition does not reproduce U A V = D")
    diagonal = result.diagonal
    for lower, upper in zip(diagonal, diagonal[1:]):
        if (lower == 0 and upper != 0) or (lower and upper % lower):
            raise CrossCheckError(f"Smith diagonal {diagonal} is not a divisibility chain")
    return result


def invariant_factors(A: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(d for d in smith_normal_form(A).diagonal if d)


# ---------------------------------------------------------------------------
# Hermite normal form and kernels
# ---------------------------------------------------------------------------

def hermite_normal_form(A: Sequence[Sequence[int]]) -> IntegerMatrix:
    """
    Row-style Hermite normal form of the lattice spanned by the rows of A

    Pivots are positive, entries above a pivot lie in [0, pivot) and zero
    rows are dropped, so two matrices span the same lattice exactly when
    their forms agree.
    """
    rows = [list(r) for r in as_matrix(A)]
    if not rows:
        return ()
    m, n = len(rows), len(rows[0])
    r = 0
    for col in range(n):
        for i in range(r + 1, m):
            b = rows[i][col]
            if b == 0:
                continue
            a = rows[r][col]
            x, y, g = (int(v) for v in igcdex(a, b))
            top, other = rows[r], rows[i]
            rows[r] = [x * p + y * q for p, q in zip(top, other)]
            rows[i] = [(a // g) * q - (b // g) * p for p, q in zip(top, other)]
        pivot = rows[r][col]
        if pivot == 0:
            continue
        if pivot < 0:
            rows[r] = [-v for v in rows[r]]
            pivot = -pivot
        for i in range(r):
            q = rows[i][col] // pivot
            if q:
                rows[i] = [v - q * w for v, w in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return as_matrix(rows[:r])


def integer_kernel(A: Sequence[Sequence[int]], cols: int = 0) -> List[Tuple[int, ...]]:
    """
    Basis of {x in Z^n : A x = 0}

    Args:
        A: m x n integer matrix
        cols: n, needed when A has no rows
    """
    A = as_matrix(A)
    n = len(A[0]) if A else cols
    if not A:
        return list(identity(n))
    smith = smith_normal_form(A)
    V_cols = transpose(smith.V)
    return [tuple(V_cols[j]) for j in range(smith.rank, n)]


def group_from_relations(A: Sequence[Sequence[int]], generators: int = 0) -> FgAbelianGroup:
    """Z^n modulo the row span of A."""
    A = as_matrix(A)
    n = len(A[0]) if A else generators
    diagonal = [d for d in smith_normal_form(A).diagonal] if A else []
    nonzero = [d for d in diagonal if d]
    return FgAbelianGroup(rank=n - len(nonzero), torsion=tuple(d for d in nonzero if d > 1))


def presentation_matrix(M: FgAbelianGroup) -> IntegerMatrix:
    """Relations of M on its generators, one row per torsion factor."""
    rows = []
    for i, d in enumerate(M.torsion):
        row = [0] * M.dimension
        row[M.rank + i] = d
        rows.append(row)
    return as_matrix(rows)


# ---------------------------------------------------------------------------
# Hom, Ext and component groups
# ---------------------------------------------------------------------------

def hom_to_Z(M: FgAbelianGroup) -> FgAbelianGroup:
    """Hom(M, Z): the kernel of the transposed presentation, free of rank r."""
    relations = presentation_matrix(M)
    kernel = integer_kernel(relations, cols=M.dimension) if relations else list(identity(M.dimension))
    return FgAbelianGroup(rank=len(kernel))


def ext_to_Z(M: FgAbelianGroup) -> FgAbelianGroup:
    """
    Ext(M, Z) from the presentation 0 -> Z^k -A-> Z^n -> M -> 0

    Applying Hom(-, Z) gives Ext(M, Z) = coker(A^T), which is the torsion
    part of M.
    """
    relations = presentation_matrix(M)
    if not relations:
        return FgAbelianGroup()
    return group_from_relations(transpose(relations))


def pi0_path_dual(M: FgAbelianGroup) -> FgAbelianGroup:
    """Path components of the Pontryagin dual of M, isomorphic to Ext(M, Z)."""
    return ext_to_Z(M)


def pi0_spec_group_algebra(M: FgAbelianGroup) -> FgAbelianGroup:
    """Component group of Spec of the group algebra, the dual of the torsion of M."""
    relations = presentation_matrix(M)
    torsion_part = [row[M.rank:] for row in relations]
    if not torsion_part:
        return FgAbelianGroup()
    return group_from_relations(torsion_part)


# ---------------------------------------------------------------------------
# Overlattices and covers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Overlattice:
    """
    N with Z^r <= N <= (1/n)Z^r and [N : Z^r] = n.

    Stored as n N, a lattice between n Z^r and Z^r, in row Hermite form.
    """

    rank: int
    index: int
    hnf: IntegerMatrix

    @classmethod
    def from_basis(cls, basis: Sequence[Sequence[Fraction]]) -> "Overlattice":
        """Build from rational basis rows; Z^r must lie in their span."""
        r = len(basis)
        denominator = 1
        for row in basis:
            for x in row:
                denominator = denominator * Fraction(x).denominator // gcd(denominator, Fraction(x).denominator)
        scaled = [[int(Fraction(x) * denominator) for x in row] for row in basis]
        scaled += [[denominator * int(i == j) for j in range(r)] for i in range(r)]
        lattice = hermite_normal_form(scaled)
        index = denominator ** r // abs(determinant(lattice))
        # the exponent of N / Z^r divides its order
        factor = index // denominator
        return cls(r, index, hermite_normal_form([[v * factor for v in row] for row in lattice]))

    @property
    def basis(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(x, self.index) for x in row) for row in self.hnf)

    @property
    def determinant(self) -> Fraction:
        return Fraction(determinant(self.hnf), self.index ** self.rank)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        scaled = [Fraction(x) * self.index for x in vector]
        if any(v.denominator != 1 for v in scaled):
            return False
        return _in_row_lattice(self.hnf, [int(v) for v in scaled])

    def __str__(self) -> str:
        rows = ["(" + ", ".join(str(x) for x in row) + ")" for row in self.basis]
        return "<" + ", ".join(rows) + ">"


def _in_row_lattice(H: IntegerMatrix, vector: Sequence[int]) -> bool:
    """Membership in the row span of a square upper-triangular Hermite basis."""
    v = list(vector)
    for i, row in enumerate(H):
        if v[i] % row[i]:
            return False
        c = v[i] // row[i]
        v = [a - c * b for a, b in zip(v, row)]
    return not any(v)


def _diagonals(r: int, n: int) -> Iterator[Tuple[int, ...]]:
    target = n ** (r - 1)
    for combo in itertools.product(divisors(n), repeat=r):
        if prod(combo) == target:
            yield combo


def enumerate_overlattices(r: int, n: int) -> List[Overlattice]:
    """
    All N with Z^r <= N and [N : Z^r] = n

    Equivalently the lattices L = n N with n Z^r <= L <= Z^r of index
    n^(r-1) in Z^r, enumerated by their row Hermite forms. For r = 2 the count
    is sigma(n).
    """
    if r < 1 or n < 1:
        raise ValueError(f"Rank and index must be positive, got r={r}, n={n}")
    found: List[Overlattice] = []
    for diagonal in _diagonals(r, n):
        slots = [(i, j) for i in range(r) for j in range(i + 1, r)]
        ranges = [range(diagonal[j]) for _, j in slots]
        for values in itertools.product(*ranges):
            H = [[0] * r for _ in range(r)]
            for i in range(r):
                H[i][i] = diagonal[i]
            for (i, j), value in zip(slots, values):
                H[i][j] = value
            H_matrix = as_matrix(H)
            if all(_in_row_lattice(H_matrix, [n * int(i == k) for k in range(r)]) for i in range(r)):
                found.append(Overlattice(r, n, H_matrix))
    logger.debug("Enumerated %d overlattices for r=%d, n=%d", len(found), r, n)
    return found


def _quotient_relations(N: Overlattice) -> IntegerMatrix:
    """Z^r written in the basis of N: the rows of n H^-1."""
    inverse = Matrix(N.hnf).inv() * N.index
    return as_matrix([[int(inverse[i, j]) for j in range(N.rank)] for i in range(N.rank)])


def covering_deck_group(N: Overlattice) -> FgAbelianGroup:
    """Invariant factors of N / Z^r, dual to the deck group of the cover."""
    return group_from_relations(_quotient_relations(N))


@dataclass(frozen=True)
class DeckRestriction:
    """Certificate for N <= N': the deck map from N'/Z^r onto N/Z^r."""

    source: FgAbelianGroup
    target: FgAbelianGroup
    inclusion: IntegerMatrix
    index: int
    surjective: bool


def deck_restriction(N: Overlattice, N_prime: Overlattice) -> DeckRestriction:
    """
    Realize the restriction of deck groups for N <= N'

    The basis of N written in the basis of N' is an integer matrix C with
    |det C| = [N' : N]; the deck map is surjective exactly when the group
    orders differ by that factor.

    Raises:
        DivisibilityError: if N is not contained in N'
    """
    if N.rank != N_prime.rank:
        raise DivisibilityError("Overlattices of different rank")
    B = Matrix(N.basis)
    B_prime = Matrix(N_prime.basis)
    C = B * B_prime.inv()
    if any(not C[i, j].is_integer for i in range(N.rank) for j in range(N.rank)):
        raise DivisibilityError(f"{N} is not contained in {N_prime}")
    inclusion = as_matrix([[int(C[i, j]) for j in range(N.rank)] for i in range(N.rank)])
    index = abs(determinant(inclusion))
    source = covering_deck_group(N_prime)
    target = covering_deck_group(N)
    surjective = source.order == target.order * index
    return DeckRestriction(source, target, inclusion, index, surjective)


# ---------------------------------------------------------------------------
# Solenoid stages
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CyclicMap:
    """The homomorphism Z/source -> Z/target sending 1 to ``image``."""

    source: int
    target: int
    image: int
    surjective: bool
    kernel_order: int


def cyclic_map(source: int, target: int, image: int) -> CyclicMap:
    """
    Build Z/source -> Z/target, 1 -> image

    Raises:
        DivisibilityError: if target does not divide source * image, so the map is not well defined
    """
    if source < 1 or target < 1:
        raise DivisibilityError(f"Cyclic orders must be positive, got {source} and {target}")
    image %= target
    if (source * image) % target:
        raise DivisibilityError(f"1 -> {image} does not define a map Z/{source} -> Z/{target}")
    g = gcd(image, target)
    return CyclicMap(source, target, image, g == 1, source * g // target)


@dataclass(frozen=True)
class SolenoidStage:
    """Stage Z/n_j of the inverse system with its reduction map to the previous stage."""

    denominator: int
    group: FgAbelianGroup
    reduction: IntegerMatrix
    surjective: bool
    kernel_order: int


def _stage_transition(previous: int, n: int) -> CyclicMap:
    """
    Ext((1/n)Z / Z, Z) -> Ext((1/previous)Z / Z, Z) induced by the inclusion

    The character 1/n -> k/n pulls back to 1/previous -> k c/n with c the
    inclusion coefficient, i.e. k c previous / n in units of 1/previous.
    """
    inner = Overlattice.from_basis([[Fraction(1, previous)]])
    outer = Overlattice.from_basis([[Fraction(1, n)]])
    c = deck_restriction(inner, outer).inclusion[0][0]
    return cyclic_map(n, previous, c * previous // n)


def solenoid_stage_chain(denominators: Sequence[int]) -> List[SolenoidStage]:
    """
    Finite stages Ext((1/n_j)Z / Z, Z) = Z/n_j and their reduction maps

    Raises:
        DivisibilityError: if the chain is not increasing under divisibility
    """
    chain = [int(n) for n in denominators]
    if not chain or any(n < 1 for n in chain):
        raise DivisibilityError(f"Denominators must be positive, got {chain}")
    for lower, upper in zip(chain, chain[1:]):
        if upper % lower:
            raise DivisibilityError(f"{lower} does not divide {upper}")
    stages: List[SolenoidStage] = []
    previous = None
    for n in chain:
        quotient = covering_deck_group(Overlattice(1, n, ((1,),)))
        group = ext_to_Z(quotient)
        if previous is None:
            stages.append(SolenoidStage(n, group, (), True, 1))
        else:
            transition = _stage_transition(previous, n)
            stages.append(
                SolenoidStage(n, group, ((transition.image,),), transition.surjective, transition.kernel_order)
            )
        previous = n
    return stages


def stage_order(stage: SolenoidStage) -> int:
    return stage.group.order or 1
