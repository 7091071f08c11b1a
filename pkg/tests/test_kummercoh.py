from math import gcd

import pytest

from wittkit.config import reset_settings
from wittkit.dualtop import mat_mul
from wittkit.errors import (
    CochainError,
    IncompatibleModulesError,
    InvalidActionError,
    KummerError,
    ResolventExhaustedError,
)
from wittkit.exactring import CyclotomicNumber
from wittkit.grouplambda import FgAbelianGroup
from wittkit.kummercoh import (
    Cocycle,
    GModule,
    KummerExtension,
    coboundary_matrix,
    cohomology_class,
    cup_product,
    galois_symbol,
    group_cohomology,
    hilbert90_resolvent,
    is_coboundary,
    kummer_norm,
    kummer_pairing,
    kummer_pairing_matrix,
    multiplication_pairing,
    pairing_matrix_invertible,
)

C2 = FgAbelianGroup(0, (2,))
KLEIN = FgAbelianGroup(0, (2, 2))
SIGN = [[[-1]]]


def cube_root_of_two():
    return KummerExtension(3, ((CyclotomicNumber.constant(3, 2), 3),))


def character(gm, weights):
    return Cocycle.from_function(1, gm, lambda g: (sum(w * x for w, x in zip(weights, g)),))


# ---------------------------------------------------------------------------
# Kummer extensions
# ---------------------------------------------------------------------------

def test_kummer_pairing_of_cube_roots():
    ext = cube_root_of_two()
    sigma = ext.galois_element((1,))
    y = ext.generator(0)
    assert kummer_pairing(sigma, y, 3) == 1
    assert kummer_pairing(sigma, y * y, 3) == 2
    assert kummer_pairing(ext.galois_element((0,)), y, 3) == 0


def test_radical_arithmetic():
    ext = cube_root_of_two()
    y = ext.generator(0)
    assert ext.pow(y, 3) == ext.from_base(2)
    assert ext.in_base(ext.pow(y, 3)) == CyclotomicNumber.constant(3, 2)
    assert ext.in_base(y) is None
    assert ext.degree == 3 and len(ext.galois_group()) == 3


def test_galois_action_is_a_ring_automorphism(rng):
    ext = KummerExtension.from_radicands(4, 2, [2, 3])
    for _ in range(10):
        x, y = ext.random_element(rng), ext.random_element(rng)
        for sigma in ext.galois_group():
            assert ext.apply(sigma, x * y) == ext.apply(sigma, x) * ext.apply(sigma, y)
            assert ext.apply(sigma, x + y) == ext.apply(sigma, x) + ext.apply(sigma, y)


def test_pairing_matrix_of_independent_square_roots():
    ext = KummerExtension.from_radicands(4, 2, [2, 3])
    matrix = kummer_pairing_matrix(ext, 2)
    assert matrix == [[1, 0], [0, 1]]
    assert pairing_matrix_invertible(matrix, 2)


def test_pairing_matrix_of_dependent_square_roots():
    ext = KummerExtension.from_radicands(4, 2, [2, 8])
    assert len(ext.radicals) == 1
    matrix = kummer_pairing_matrix(ext, 2)
    assert matrix == [[1], [1]]
    assert not pairing_matrix_invertible(matrix, 2)


def test_minus_one_is_a_square_over_gaussian_field():
    ext = KummerExtension.from_radicands(4, 2, [2, -2])
    assert len(ext.radicals) == 1


def test_radicands_must_be_nonzero():
    with pytest.raises(KummerError):
        KummerExtension.from_radicands(4, 2, [0])
    with pytest.raises(KummerError):
        KummerExtension.from_radicands(6, 4, [2])


def test_pairing_needs_a_radical_element():
    ext = KummerExtension.from_radicands(4, 2, [2, 3])
    with pytest.raises(KummerError):
        kummer_pairing(ext.galois_element((1, 0)), ext.generator(0) + ext.generator(1), 2)
    with pytest.raises(KummerError):
        kummer_pairing(ext.galois_element((1, 0)), ext.zero(), 2)


@pytest.mark.parametrize("N", [3, 5])
def test_hilbert_90_for_every_root_of_unity(N):
    ext = KummerExtension(N, ((CyclotomicNumber.constant(N, 2), N),))
    sigma = ext.galois_element((1,))
    for k in range(N):
        zeta = CyclotomicNumber.zeta(N, k)
        alpha = hilbert90_resolvent(ext, zeta, sigma)
        assert not alpha.is_zero()
        assert ext.apply(sigma, alpha) == ext.scale(zeta, alpha)
        twisted = ext.scale(zeta ** (N * (N - 1) // 2), ext.pow(alpha, N))
        assert kummer_norm(ext, alpha, sigma) == twisted


def test_hilbert_90_rejects_non_roots_of_unity():
    with pytest.raises(KummerError):
        hilbert90_resolvent(cube_root_of_two(), CyclotomicNumber.constant(3, 2))


def test_hilbert_90_needs_a_cyclic_generator():
    ext = KummerExtension.from_radicands(4, 2, [2, 3])
    with pytest.raises(KummerError):
        hilbert90_resolvent(ext, CyclotomicNumber.constant(4, -1))


def test_hilbert_90_budget(monkeypatch):
    monkeypatch.setenv("WITTKIT_RESOLVENT_BUDGET", "1")
    reset_settings()
    with pytest.raises(ResolventExhaustedError):
        hilbert90_resolvent(cube_root_of_two(), CyclotomicNumber.zeta(3))


def test_hilbert_90_is_reproducible_for_a_seed():
    ext = cube_root_of_two()
    zeta = CyclotomicNumber.zeta(3, 2)
    assert hilbert90_resolvent(ext, zeta, seed=5) == hilbert90_resolvent(ext, zeta, seed=5)


# ---------------------------------------------------------------------------
# Group cohomology
# ---------------------------------------------------------------------------

def test_cohomology_of_cyclic_groups_with_cyclic_coefficients():
    for k in range(2, 9):
        for n in range(2, 9):
            G, A = FgAbelianGroup(0, (k,)), FgAbelianGroup(0, (n,))
            assert group_cohomology(G, A, 0).group == A
            g = gcd(k, n)
            expected = FgAbelianGroup(0, (g,) if g > 1 else ())
            assert group_cohomology(G, A, 1).group == expected
            assert group_cohomology(G, A, 2).group == expected


def test_degree_two_example():
    H = group_cohomology(FgAbelianGroup(0, (6,)), FgAbelianGroup(0, (4,)), 2)
    assert H.group == FgAbelianGroup(0, (2,))


def test_integral_coefficients():
    G = FgAbelianGroup(0, (3,))
    Z = FgAbelianGroup(1)
    assert [group_cohomology(G, Z, p).group for p in range(4)] == [
        FgAbelianGroup(1), FgAbelianGroup(), FgAbelianGroup(0, (3,)), FgAbelianGroup(),
    ]


def test_sign_action():
    Z = FgAbelianGroup(1)
    assert [group_cohomology(C2, Z, p, SIGN).group for p in range(4)] == [
        FgAbelianGroup(), C2, FgAbelianGroup(), C2,
    ]


def test_klein_group():
    assert group_cohomology(KLEIN, C2, 1).group == FgAbelianGroup(0, (2, 2))
    assert group_cohomology(KLEIN, C2, 2).group == FgAbelianGroup(0, (2, 2, 2))


def test_representatives_generate():
    H = group_cohomology(KLEIN, C2, 2)
    classes = [H.class_of(c) for c in H.representatives]
    assert classes == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert all(c.is_cocycle and c.is_normalized() for c in H.representatives)


def test_coboundaries():
    gm = GModule(C2, FgAbelianGroup(1), SIGN)
    boundary = Cocycle.from_function(1, gm, lambda g: (-2 if g == (1,) else 0,))
    assert boundary.is_cocycle and is_coboundary(boundary)
    generator = Cocycle.from_function(1, gm, lambda g: (1 if g == (1,) else 0,))
    assert generator.is_cocycle and not is_coboundary(generator)
    assert cohomology_class(generator) == (1,)
    assert is_coboundary(Cocycle.zero(2, gm))


def test_non_cocycles_are_flagged():
    gm = GModule.trivial(C2, FgAbelianGroup(0, (4,)))
    chain = Cocycle.from_function(1, gm, lambda g: g)
    assert not chain.is_cocycle
    with pytest.raises(CochainError):
        cohomology_class(chain)


def test_coboundary_squares_to_zero():
    for gm in (GModule.trivial(FgAbelianGroup(0, (4,)), FgAbelianGroup(0, (6,))),
               GModule(C2, FgAbelianGroup(1), SIGN),
               GModule.trivial(KLEIN, C2)):
        for p in (1, 2):
            product = mat_mul(coboundary_matrix(gm, p), coboundary_matrix(gm, p - 1))
            assert all(x == 0 for row in product for x in row)


def test_invalid_actions():
    with pytest.raises(InvalidActionError):
        GModule(C2, FgAbelianGroup(1), (((2,),),))
    with pytest.raises(InvalidActionError):
        GModule(KLEIN, FgAbelianGroup(2), (((0, 1), (1, 0)), ((-1, 0), (0, 1))))
    with pytest.raises(InvalidActionError):
        group_cohomology(FgAbelianGroup(1), C2, 1)


def test_limits(monkeypatch):
    with pytest.raises(CochainError):
        group_cohomology(C2, C2, 4)
    monkeypatch.setenv("WITTKIT_MAX_GROUP_ORDER", "4")
    reset_settings()
    with pytest.raises(CochainError):
        group_cohomology(FgAbelianGroup(0, (6,)), C2, 1)


# ---------------------------------------------------------------------------
# Cup products and symbols
# ---------------------------------------------------------------------------

def test_cup_square_of_the_character_of_c2():
    gm = GModule.trivial(C2, C2)
    chi = character(gm, (1,))
    square = cup_product(chi, chi, multiplication_pairing(gm))
    assert square.is_cocycle and not is_coboundary(square)


def test_cup_products_anticommute():
    gm = GModule.trivial(KLEIN, C2)
    pairing = multiplication_pairing(gm)
    for a in ((1, 0), (0, 1), (1, 1)):
        for b in ((1, 0), (0, 1), (1, 1)):
            u, v = character(gm, a), character(gm, b)
            assert is_coboundary(cup_product(u, v, pairing) + cup_product(v, u, pairing))


def test_cup_product_needs_degree_one():
    gm = GModule.trivial(C2, C2)
    with pytest.raises(IncompatibleModulesError):
        cup_product(Cocycle.zero(2, gm), character(gm, (1,)), multiplication_pairing(gm))


def test_galois_symbols_are_multiplicative():
    ext = KummerExtension.from_radicands(4, 2, [2, 3])
    assert galois_symbol(6, ext, 2) == galois_symbol(2, ext, 2) + galois_symbol(3, ext, 2)
    assert galois_symbol(4, ext, 2).is_zero()
    assert galois_symbol(2, ext, 2).value((1, 0)) == (1,)


def test_galois_symbol_needs_a_root_in_the_extension():
    ext = KummerExtension.from_radicands(4, 2, [2, 3])
    with pytest.raises(KummerError):
        galois_symbol(5, ext, 2)
