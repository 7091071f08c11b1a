from fractions import Fraction

import pytest
from sympy import divisor_sigma

from wittkit.dualtop import (
    Overlattice,
    covering_deck_group,
    cyclic_map,
    deck_restriction,
    enumerate_overlattices,
    ext_to_Z,
    group_from_relations,
    hermite_normal_form,
    hom_to_Z,
    integer_kernel,
    invariant_factors,
    mat_mul,
    pi0_path_dual,
    pi0_spec_group_algebra,
    smith_normal_form,
    solenoid_stage_chain,
    stage_order,
)
from wittkit.errors import DivisibilityError
from wittkit.grouplambda import FgAbelianGroup


def test_smith_normal_form():
    A = [[2, 4], [6, 8]]
    smith = smith_normal_form(A)
    assert smith.diagonal == (2, 4)
    assert mat_mul(mat_mul(smith.U, tuple(map(tuple, A))), smith.V) == smith.D


def test_smith_of_a_rectangular_matrix(rng):
    for _ in range(10):
        A = tuple(tuple(rng.randint(-6, 6) for _ in range(4)) for _ in range(3))
        smith = smith_normal_form(A)
        assert mat_mul(mat_mul(smith.U, A), smith.V) == smith.D
        diagonal = [d for d in smith.diagonal if d]
        assert all(upper % lower == 0 for lower, upper in zip(diagonal, diagonal[1:]))


def test_invariant_factors():
    assert invariant_factors([[4, 0], [0, 6]]) == (2, 12)


def test_hermite_form_is_canonical():
    assert hermite_normal_form([[2, 0], [0, 2], [1, 1]]) == ((1, 1), (0, 2))
    assert hermite_normal_form([[1, 1], [0, 2]]) == ((1, 1), (0, 2))


def test_integer_kernel():
    A = [[1, 2, 3]]
    kernel = integer_kernel(A)
    assert len(kernel) == 2
    assert all(sum(a * x for a, x in zip(A[0], k)) == 0 for k in kernel)
    assert len(integer_kernel([], cols=3)) == 3


def test_group_from_relations():
    assert group_from_relations([[2, 0], [0, 3]]) == FgAbelianGroup(0, (6,))
    assert group_from_relations([[2, 0]]) == FgAbelianGroup(1, (2,))
    assert group_from_relations([], generators=2) == FgAbelianGroup(2)


@pytest.mark.parametrize(
    "rank, torsion",
    [(0, (4, 12)), (1, (4, 12)), (3, ()), (0, (2, 2, 6)), (2, (5,))],
)
def test_ext_is_the_torsion_part(rank, torsion):
    M = FgAbelianGroup(rank, torsion)
    expected = FgAbelianGroup(0, torsion)
    assert ext_to_Z(M) == expected
    assert pi0_path_dual(M) == expected
    assert pi0_spec_group_algebra(M) == expected
    assert hom_to_Z(M) == FgAbelianGroup(rank)


@pytest.mark.parametrize("n", range(1, 31))
def test_overlattice_count_is_sigma(n):
    assert len(enumerate_overlattices(2, n)) == divisor_sigma(n)


def test_rank_three_overlattices_of_prime_index():
    # subgroups of order p in (Z/p)^3
    assert len(enumerate_overlattices(3, 2)) == 7
    assert len(enumerate_overlattices(3, 3)) == 13


@pytest.mark.parametrize("n", [1, 4, 6, 9, 12])
def test_deck_groups_have_order_n(n):
    for N in enumerate_overlattices(2, n):
        assert covering_deck_group(N).order == n


def test_deck_group_types():
    groups = [covering_deck_group(N) for N in enumerate_overlattices(2, 4)]
    assert groups.count(FgAbelianGroup(0, (2, 2))) == 1
    assert groups.count(FgAbelianGroup(0, (4,))) == 6


def test_overlattice_from_basis():
    N = Overlattice.from_basis([[Fraction(1, 2), 0], [0, 1]])
    assert N.index == 2
    assert N.contains([Fraction(1, 2), 0]) and not N.contains([Fraction(1, 3), 0])
    assert covering_deck_group(N) == FgAbelianGroup(0, (2,))
    assert N.determinant == Fraction(1, 2)


def test_deck_restriction_is_surjective():
    N = Overlattice.from_basis([[Fraction(1, 2), 0], [0, 1]])
    N_prime = Overlattice.from_basis([[Fraction(1, 4), 0], [0, 1]])
    restriction = deck_restriction(N, N_prime)
    assert restriction.index == 2 and restriction.surjective
    assert restriction.source == FgAbelianGroup(0, (4,))
    assert restriction.target == FgAbelianGroup(0, (2,))


def test_deck_restriction_pairs():
    for N in enumerate_overlattices(2, 2):
        for N_prime in enumerate_overlattices(2, 6):
            if all(N_prime.contains(row) for row in N.basis):
                restriction = deck_restriction(N, N_prime)
                assert restriction.surjective and restriction.index == 3


def test_deck_restriction_needs_containment():
    N = Overlattice.from_basis([[Fraction(1, 2), 0], [0, 1]])
    other = Overlattice.from_basis([[1, 0], [0, Fraction(1, 3)]])
    with pytest.raises(DivisibilityError):
        deck_restriction(N, other)


def test_solenoid_stages():
    stages = solenoid_stage_chain([2, 4, 8, 24])
    assert [stage_order(s) for s in stages] == [2, 4, 8, 24]
    assert [s.kernel_order for s in stages] == [1, 2, 2, 3]
    assert all(s.surjective for s in stages)


def test_solenoid_chain_must_divide():
    with pytest.raises(DivisibilityError):
        solenoid_stage_chain([2, 3])


def test_solenoid_reductions_come_from_the_inclusions():
    stages = solenoid_stage_chain([2, 4, 8, 256])
    assert stages[0].reduction == ()
    assert [s.reduction for s in stages[1:]] == [((1,),), ((1,),), ((1,),)]
    assert [s.kernel_order for s in stages] == [1, 2, 2, 32]


@pytest.mark.parametrize(
    "source, target, image, surjective, kernel",
    [(12, 4, 3, True, 3), (4, 2, 2, False, 4), (8, 4, 2, False, 4), (6, 6, 5, True, 1)],
)
def test_cyclic_maps(source, target, image, surjective, kernel):
    f = cyclic_map(source, target, image)
    assert f.surjective is surjective
    assert f.kernel_order == kernel


def test_cyclic_map_must_be_well_defined():
    with pytest.raises(DivisibilityError):
        cyclic_map(6, 4, 1)
    with pytest.raises(DivisibilityError):
        cyclic_map(0, 4, 1)
