"""
Seeded property battery behind ``wittkit verify``.

Each suite draws from its own ``random.Random`` derived from the seed and the
suite name, so suites can run on worker threads and the merged report is the
same for every run with the same seed.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Dict, List, Optional, Sequence

from sympy import divisor_sigma

from .config import get_settings
from .errors import ConfigurationError
from .dualtop import (
    Overlattice,
    as_matrix,
    covering_deck_group,
    deck_restriction,
    enumerate_overlattices,
    ext_to_Z,
    group_from_relations,
    identity,
    mat_mul,
    pi0_path_dual,
    pi0_spec_group_algebra,
    solenoid_stage_chain,
    stage_order,
    transpose,
)
from .exactring import (
    CyclotomicField,
    CyclotomicNumber,
    Integers,
    IntegersMod,
    PrimeField,
    Rationals,
    RingDescriptor,
    random_polynomial,
)
from .grouplambda import (
    FgAbelianGroup,
    WittAssignment,
    divisible_by,
    frobenius_compat_check,
    frobenius_congruence_check,
    lambda_commute_check,
    random_group_ring_element,
)
from .kummercoh import (
    Cocycle,
    GModule,
    KummerExtension,
    coboundary_matrix,
    cup_product,
    galois_symbol,
    group_cohomology,
    hilbert90_resolvent,
    is_coboundary,
    kummer_norm,
    kummer_pairing_matrix,
    multiplication_pairing,
)
from .schemas import SuiteResult, VerifyReport
from .wittrat import (
    phi_p,
    phi_p_minus_scalar_check,
    phi_p_teichmuller_sum,
    vanishing_pattern,
    wr_base_change,
    wr_embed_truncated,
    wr_frobenius,
    wr_ghost,
    wr_mul,
    wr_normalize,
    wr_scalar_mul,
    wr_teichmuller,
    wr_verschiebung,
    zeta_minus_one_check,
)
from .wittvec import (
    GhostVector,
    TruncatedWittVector,
    build_universal_polys,
    frobenius,
    ghost,
    ghost_inverse,
    teichmuller,
    verschiebung,
    witt_add,
    witt_mul,
    witt_neg,
    witt_one,
    witt_scalar_mul,
    witt_zero,
)

logger = logging.getLogger(__name__)

SUITES = ("witt", "wrat", "lambda", "dual", "cohom", "all")

# randomized cases per check when no override is given
DEFAULT_TRIALS: Dict[str, int] = {
    "ring_axioms": 200,
    "teichmuller": 100,
    "ghost": 100,
    "frobenius": 100,
    "closure": 100,
    "commute": 100,
    "congruence": 200,
    "intertwine": 50,
    "ext_scramble": 5,
    "cup": 20,
    "automorphism": 20,
}


def trial_count(check: str, override: Optional[int] = None) -> int:
    """Cases for one randomized check: the override when given, else its default."""
    return DEFAULT_TRIALS[check] if override is None else override


@dataclass
class _Tally:
    name: str
    checks: int = 0
    passed: int = 0
    failures: List[str] = field(default_factory=list)

    def check(self, label: str, predicate: Callable[[], bool]) -> None:
        self.checks += 1
        try:
            ok = bool(predicate())
        except Exception as exc:  # a crash counts as a failed check
            self.failures.append(f"{label}: {type(exc).__name__}: {exc}")
            return
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    def result(self) -> SuiteResult:
        return SuiteResult(
            name=self.name,
            checks=self.checks,
            passed=self.passed,
            failed=self.checks - self.passed,
            first_failure=self.failures[0] if self.failures else None,
        )


def _random_witt(ring: RingDescriptor, N: int, rng: random.Random) -> TruncatedWittVector:
    return TruncatedWittVector(ring, N, tuple(ring.random_element(rng, 3) for _ in range(N)))


def _truncate(u: TruncatedWittVector, depth: int) -> TruncatedWittVector:
    return TruncatedWittVector(u.ring, depth, u.tail[:depth])


# ---------------------------------------------------------------------------
# witt
# ---------------------------------------------------------------------------

def _ring_axioms(u: TruncatedWittVector, v: TruncatedWittVector, w: TruncatedWittVector) -> bool:
    ring, N = u.ring, u.N
    return (
        witt_add(u, v) == witt_add(v, u)
        and witt_add(witt_add(u, v), w) == witt_add(u, witt_add(v, w))
        and witt_add(u, witt_neg(u)) == witt_zero(ring, N)
        and witt_mul(u, v) == witt_mul(v, u)
        and witt_mul(witt_mul(u, v), w) == witt_mul(u, witt_mul(v, w))
        and witt_mul(u, witt_add(v, w)) == witt_add(witt_mul(u, v), witt_mul(u, w))
        and witt_mul(witt_one(ring, N), u) == u
    )


def suite_witt(rng: random.Random, trials: Optional[int] = None) -> SuiteResult:
    tally = _Tally("witt")
    rings = (Integers(), IntegersMod(12), PrimeField(7), Rationals())
    for ring in rings:
        for N in range(1, 9):
            for i in range(trial_count("ring_axioms", trials)):
                u, v, w = (_random_witt(ring, N, rng) for _ in range(3))
                tally.check(f"ring axioms {ring} N={N} #{i}", lambda: _ring_axioms(u, v, w))
        for i in range(trial_count("teichmuller", trials)):
            a, b = ring.random_element(rng, 5), ring.random_element(rng, 5)
            tally.check(
                f"teichmuller product {ring} #{i}",
                lambda: witt_mul(teichmuller(a, ring, 6), teichmuller(b, ring, 6)) == teichmuller(ring.mul(a, b), ring, 6),
            )
        for i in range(trial_count("ghost", trials)):
            u, v = _random_witt(ring, 6, rng), _random_witt(ring, 6, rng)
            tally.check(
                f"ghost homomorphism {ring} #{i}",
                lambda: ghost(witt_add(u, v)) == ghost(u) + ghost(v) and ghost(witt_mul(u, v)) == ghost(u) * ghost(v),
            )
    Q = Rationals()
    for N in range(1, 11):
        g = GhostVector(Q, N, tuple(Q.random_element(rng, 4) for _ in range(N)))
        tally.check(f"ghost inverse N={N}", lambda: ghost(ghost_inverse(g)) == g)
    tally.check(
        "universal polynomials N=8 integral, c_1 = -a_1 b_1",
        lambda: build_universal_polys(8).mul_polys[0] == ((-1, ((0, 1),), ((0, 1),)),),
    )
    Z = Integers()
    for m in (2, 3):
        for i in range(trial_count("frobenius", trials)):
            u = _random_witt(Z, 8, rng)
            depth = 8 // m
            tally.check(
                f"F_{m} V_{m} = {m} #{i}",
                lambda: frobenius(m, verschiebung(m, u)) == witt_scalar_mul(m, _truncate(u, depth)),
            )
            a = Z.random_element(rng, 4)
            tally.check(
                f"F_{m}[a] = [a^{m}] #{i}",
                lambda: frobenius(m, teichmuller(a, Z, 8)) == teichmuller(a ** m, Z, depth),
            )
    return tally.result()


# ---------------------------------------------------------------------------
# wrat
# ---------------------------------------------------------------------------

def _random_wrat(ring: RingDescriptor, rng: random.Random, degree: int):
    num = random_polynomial(ring, rng.randint(0, degree), rng, height=2)
    den = random_polynomial(ring, rng.randint(0, degree), rng, height=2)
    return wr_normalize(num, den)


def suite_wrat(rng: random.Random, trials: Optional[int] = None) -> SuiteResult:
    tally = _Tally("wrat")
    Z = Integers()
    for i in range(trial_count("closure", trials)):
        u, v = _random_wrat(Z, rng, 4), _random_wrat(Z, rng, 4)
        tally.check(
            f"closure under products at depth 12 #{i}",
            lambda: wr_embed_truncated(wr_mul(u, v), 12) == witt_mul(wr_embed_truncated(u, 12), wr_embed_truncated(v, 12)),
        )
        tally.check(f"commutativity #{i}", lambda: wr_mul(u, v) == wr_mul(v, u))
        m = rng.choice((2, 3))
        tally.check(
            f"F_{m} V_{m} = {m} #{i}",
            lambda: wr_frobenius(m, wr_verschiebung(m, u)) == wr_scalar_mul(m, u),
        )
        a = rng.choice([c for c in range(-5, 6) if c])
        tally.check(
            f"F_{m}[{a}] = [{a}^{m}] #{i}",
            lambda: wr_frobenius(m, wr_teichmuller(a, Z)) == wr_teichmuller(a ** m, Z),
        )
    for p in (2, 3, 5):
        tally.check(
            f"ghost of Phi_{p}",
            lambda: list(wr_ghost(phi_p(p), 2 * p).components)
            == [p - 1 if n % p == 0 else -1 for n in range(1, 2 * p + 1)],
        )
        tally.check(
            f"Phi_{p} - ({p}-1)[1] has ghost in {{0, -{p}}}",
            lambda: list(phi_p_minus_scalar_check(p).components)
            == [0 if n % p == 0 else -p for n in range(1, 2 * p + 1)],
        )
        tally.check(
            f"Phi_{p} as a sum of Teichmuller lifts",
            lambda: phi_p_teichmuller_sum(p) == wr_base_change(phi_p(p), CyclotomicField(p)),
        )
        tally.check(
            f"[zeta_{p}] - [1] vanishes with Phi_{p} - ({p}-1)[1]",
            lambda: _same_vanishing(p),
        )
    return tally.result()


def _same_vanishing(p: int) -> bool:
    difference, shifted = zeta_minus_one_check(p)
    return vanishing_pattern(difference) == vanishing_pattern(shifted)


# ---------------------------------------------------------------------------
# lambda
# ---------------------------------------------------------------------------

def suite_lambda(rng: random.Random, trials: Optional[int] = None) -> SuiteResult:
    tally = _Tally("lambda")
    groups = (FgAbelianGroup(1, (2,)), FgAbelianGroup(2), FgAbelianGroup(0, (6,)))
    primes = (2, 3, 5)
    for group in groups:
        for i in range(trial_count("commute", trials)):
            x = random_group_ring_element(group, rng)
            for p, q in ((2, 3), (2, 5), (3, 5)):
                tally.check(f"phi_{p} phi_{q} commute on {group} #{i}", lambda: lambda_commute_check(p, q, x))
        for i in range(trial_count("congruence", trials)):
            x = random_group_ring_element(group, rng)
            for p in primes:
                tally.check(
                    f"x^{p} = phi_{p}(x) mod {p} on {group} #{i}",
                    lambda: divisible_by(frobenius_congruence_check(p, x), p),
                )
    group = FgAbelianGroup(1, (2,))
    assignment = WittAssignment(group, Rationals(), (2, -1))
    for i in range(trial_count("intertwine", trials)):
        x = random_group_ring_element(group, rng, max_terms=3, height=2)
        for p in primes:
            tally.check(f"to_witt intertwines phi_{p} and F_{p} #{i}", lambda: frobenius_compat_check(p, x, assignment))
    return tally.result()


# ---------------------------------------------------------------------------
# dual
# ---------------------------------------------------------------------------

def _chains(limit: int, length: int) -> List[tuple]:
    found = [()]
    frontier = [()]
    for _ in range(length):
        grown = []
        for chain in frontier:
            start = chain[-1] if chain else 2
            for d in range(start, limit + 1):
                if not chain or d % chain[-1] == 0:
                    grown.append(chain + (d,))
        found.extend(grown)
        frontier = grown
    return found


def _cyclic_subgroups(n: int) -> List[frozenset]:
    found = set()
    for a in range(n):
        for b in range(n):
            found.add(frozenset(((k * a) % n, (k * b) % n) for k in range(n)))
    return list(found)


def subgroups_of_order(n: int) -> int:
    """
    Count the subgroups of (Z/n)^2 of order n by brute force

    Every subgroup of a rank-2 group is generated by two elements, so it is
    the sum A + B of two cyclic subgroups, of order |A||B| / |A n B|.
    """
    cyclic = _cyclic_subgroups(n)
    found = set()
    for i, A in enumerate(cyclic):
        for B in cyclic[i:]:
            if len(A) * len(B) != n * len(A & B):
                continue
            found.add(frozenset(((x[0] + y[0]) % n, (x[1] + y[1]) % n) for x in A for y in B))
    return len(found)


def _random_unimodular(size: int, rng: random.Random) -> tuple:
    rows = [list(r) for r in identity(size)]
    for _ in range(3 * size if size > 1 else 0):
        i, j = rng.sample(range(size), 2)
        k = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + k * b for a, b in zip(rows[i], rows[j])]
    if size and rng.random() < 0.5:
        rows[0] = [-a for a in rows[0]]
    return tuple(tuple(r) for r in rows)


def ext_from_presentation(relations: Sequence[Sequence[int]], generators: int) -> FgAbelianGroup:
    """
    Ext(M, Z) from a free resolution 0 -> Z^k -> Z^g -> M -> 0 with relations as rows

    Dualizing gives Hom(Z^g, Z) -> Hom(Z^k, Z) whose cokernel is Ext(M, Z),
    i.e. Z^k modulo the columns of the relation matrix.
    """
    if not relations:
        return FgAbelianGroup()
    return group_from_relations(transpose(as_matrix(relations)), len(relations))


def _scrambled_presentation(rank: int, torsion: Sequence[int], rng: random.Random) -> tuple:
    k, g = len(torsion), rank + len(torsion)
    diagonal = tuple(tuple(d if j == rank + i else 0 for j in range(g)) for i, d in enumerate(torsion))
    if not diagonal:
        return ()
    return mat_mul(mat_mul(_random_unimodular(k, rng), diagonal), _random_unimodular(g, rng))


def _ext_ok(relations: tuple, generators: int) -> bool:
    M = group_from_relations(relations, generators)
    expected = ext_from_presentation(relations, generators)
    return ext_to_Z(M) == expected and pi0_path_dual(M) == expected and pi0_spec_group_algebra(M) == expected


def suite_dual(rng: random.Random, trials: Optional[int] = None) -> SuiteResult:
    tally = _Tally("dual")
    for torsion in _chains(12, 3):
        for rank in (0, 1):
            generators = rank + len(torsion)
            for i in range(trial_count("ext_scramble", trials)):
                relations = _scrambled_presentation(rank, torsion, rng)
                tally.check(
                    f"Ext of Z^{rank} + {torsion} from a free resolution #{i}",
                    lambda: _ext_ok(relations, generators),
                )
    for n in range(1, 31):
        lattices = enumerate_overlattices(2, n)
        tally.check(f"sigma({n}) overlattices", lambda: len(lattices) == int(divisor_sigma(n)))
        tally.check(f"deck orders for n={n}", lambda: all(covering_deck_group(N).order == n for N in lattices))
        tally.check(f"brute-force subgroup count n={n}", lambda: subgroups_of_order(n) == len(lattices))
    for small, large in ((2, 4), (3, 6), (2, 6)):
        for N in enumerate_overlattices(2, small):
            for N_prime in enumerate_overlattices(2, large):
                if all(N_prime.contains(row) for row in N.basis):
                    tally.check(
                        f"deck restriction {N} <= {N_prime}",
                        lambda: _restriction_ok(N, N_prime, large // small),
                    )
    chain = [2 ** k for k in range(1, 9)]
    stages = solenoid_stage_chain(chain)
    for stage, previous in zip(stages, [None] + chain[:-1]):
        expected_kernel = 1 if previous is None else stage.denominator // previous
        tally.check(
            f"solenoid stage {stage.denominator}",
            lambda: stage.surjective and stage_order(stage) == stage.denominator and stage.kernel_order == expected_kernel,
        )
    return tally.result()


def _restriction_ok(N: Overlattice, N_prime: Overlattice, ratio: int) -> bool:
    restriction = deck_restriction(N, N_prime)
    return restriction.surjective and restriction.index == ratio


# ---------------------------------------------------------------------------
# cohom
# ---------------------------------------------------------------------------

def _cyclic_oracle(k: int, n: int, p: int) -> FgAbelianGroup:
    """H^p(Z/k, Z/n) for the trivial action from the periodic resolution."""
    if p == 0:
        return FgAbelianGroup(0, (n,))
    g = gcd(k, n)
    return FgAbelianGroup(0, (g,) if g > 1 else ())


def _integral_oracle(k: int, p: int) -> FgAbelianGroup:
    if p == 0:
        return FgAbelianGroup(1)
    return FgAbelianGroup(0, (k,)) if p % 2 == 0 else FgAbelianGroup()


def _character(gm: GModule, weights: Sequence[int]) -> Cocycle:
    return Cocycle.from_function(1, gm, lambda g: (sum(w * x for w, x in zip(weights, g)),))


def _d_squared_zero(gm: GModule, p: int) -> bool:
    product = mat_mul(coboundary_matrix(gm, p), coboundary_matrix(gm, p - 1))
    return all(x == 0 for row in product for x in row)


def suite_cohom(rng: random.Random, trials: Optional[int] = None) -> SuiteResult:
    tally = _Tally("cohom")
    for k in range(2, 9):
        for n in range(2, 9):
            G, A = FgAbelianGroup(0, (k,)), FgAbelianGroup(0, (n,))
            for p in (0, 1, 2):
                tally.check(
                    f"H^{p}(Z/{k}, Z/{n})",
                    lambda: group_cohomology(G, A, p).group == _cyclic_oracle(k, n, p),
                )
            gm = GModule.trivial(G, A)
            tally.check(f"d o d = 0 for Z/{k}, Z/{n}", lambda: _d_squared_zero(gm, 1) and _d_squared_zero(gm, 2))
    for k in (2, 3, 4):
        for p in range(4):
            G = FgAbelianGroup(0, (k,))
            tally.check(f"H^{p}(Z/{k}, Z)", lambda: group_cohomology(G, FgAbelianGroup(1), p).group == _integral_oracle(k, p))
    sign = [[[-1]]]
    for p, expected in ((0, FgAbelianGroup()), (1, FgAbelianGroup(0, (2,))), (2, FgAbelianGroup()), (3, FgAbelianGroup(0, (2,)))):
        tally.check(
            f"H^{p}(Z/2, Z with sign action)",
            lambda: group_cohomology(FgAbelianGroup(0, (2,)), FgAbelianGroup(1), p, sign).group == expected,
        )

    C2 = FgAbelianGroup(0, (2,))
    gm = GModule.trivial(C2, C2)
    chi = _character(gm, (1,))
    tally.check("cup square of the character of Z/2", lambda: not is_coboundary(cup_product(chi, chi, multiplication_pairing(gm))))
    klein = GModule.trivial(FgAbelianGroup(0, (2, 2)), C2)
    pairing = multiplication_pairing(klein)
    for i in range(trial_count("cup", trials)):
        u = _character(klein, (rng.randrange(2), rng.randrange(2)))
        v = _character(klein, (rng.randrange(2), rng.randrange(2)))
        tally.check(
            f"graded commutativity of cup products #{i}",
            lambda: is_coboundary(cup_product(u, v, pairing) + cup_product(v, u, pairing)),
        )

    roots = KummerExtension.from_radicands(4, 2, [2, 3])
    tally.check("pairing matrix of sqrt2, sqrt3 over Q(i)", lambda: kummer_pairing_matrix(roots, 2) == [[1, 0], [0, 1]])
    dependent = KummerExtension.from_radicands(4, 2, [2, 8])
    tally.check("sqrt2, sqrt8 pair dependently", lambda: kummer_pairing_matrix(dependent, 2) == [[1], [1]])
    tally.check(
        "symbol of 6 is the sum of the symbols of 2 and 3",
        lambda: galois_symbol(6, roots, 2) == galois_symbol(2, roots, 2) + galois_symbol(3, roots, 2),
    )
    for i in range(trial_count("automorphism", trials)):
        x, y = roots.random_element(rng), roots.random_element(rng)
        sigma = roots.galois_element((rng.randrange(2), rng.randrange(2)))
        tally.check(
            f"Galois action is a ring automorphism #{i}",
            lambda: roots.apply(sigma, x * y) == roots.apply(sigma, x) * roots.apply(sigma, y)
            and roots.apply(sigma, x + y) == roots.apply(sigma, x) + roots.apply(sigma, y),
        )

    seed = rng.randrange(2 ** 31)
    for N in (3, 5):
        ext = KummerExtension(N, ((CyclotomicNumber.constant(N, 2), N),))
        sigma = ext.galois_element((1,))
        for k in range(N):
            zeta = CyclotomicNumber.zeta(N, k)
            tally.check(f"Hilbert 90 for zeta_{N}^{k}", lambda: _resolvent_ok(ext, sigma, zeta, seed))
    return tally.result()


def _resolvent_ok(ext: KummerExtension, sigma, zeta: CyclotomicNumber, seed: int) -> bool:
    n = ext.degree
    alpha = hilbert90_resolvent(ext, zeta, sigma, seed=seed)
    twisted = ext.scale(zeta ** (n * (n - 1) // 2), ext.pow(alpha, n))
    return (
        not alpha.is_zero()
        and ext.apply(sigma, alpha) == ext.scale(zeta, alpha)
        and kummer_norm(ext, alpha, sigma) == twisted
    )


_SUITE_FUNCTIONS: Dict[str, Callable[[random.Random, int], SuiteResult]] = {
    "witt": suite_witt,
    "wrat": suite_wrat,
    "lambda": suite_lambda,
    "dual": suite_dual,
    "cohom": suite_cohom,
}


def _run_suite(name: str, seed: int, trials: Optional[int]) -> SuiteResult:
    logger.info("Running suite %s", name)
    result = _SUITE_FUNCTIONS[name](random.Random(f"{seed}:{name}"), trials)
    logger.info("Suite %s: %d/%d passed", name, result.passed, result.checks)
    return result


def run_verify(suite: str, seed: int, trials: Optional[int] = None, workers: Optional[int] = None) -> VerifyReport:
    """
    Run one suite or all of them

    Args:
        suite: one of ``SUITES``
        seed: base seed; each suite derives its own generator from it
        trials: cases for every randomized check; by default each check uses its own
            count from ``DEFAULT_TRIALS``
        workers: thread count, default from settings

    Returns:
        VerifyReport: per-suite counts sorted by suite name
    """
    if suite not in SUITES:
        raise ConfigurationError(f"Unknown suite {suite!r}, expected one of {SUITES}")
    names = sorted(_SUITE_FUNCTIONS) if suite == "all" else [suite]
    workers = workers or get_settings().verify_workers
    with ThreadPoolExecutor(max_workers=min(workers, len(names))) as pool:
        results = list(pool.map(lambda name: _run_suite(name, seed, trials), names))
    results.sort(key=lambda r: r.name)
    return VerifyReport(seed=seed, suites=results, ok=all(r.failed == 0 for r in results))


def format_report(report: VerifyReport) -> str:
    lines = [f"wittkit verify seed={report.seed}"]
    for r in report.suites:
        lines.append(f"{r.name}: {r.passed}/{r.checks} passed")
        if r.first_failure:
            lines.append(f"  first failure: {r.first_failure}")
    lines.append("result: " + ("ok" if report.ok else "FAILED"))
    return "\n".join(lines)
