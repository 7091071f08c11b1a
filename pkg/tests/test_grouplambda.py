import pytest

from wittkit.errors import (
    DivisibilityError,
    ExcludedPrimeError,
    GroupMismatchError,
    NonUnitError,
    NotPrimeError,
    TorsionCompatibilityError,
    UnsupportedRingError,
)
from wittkit.exactring import CyclotomicField, Integers, IntegersMod, Polynomial, Rationals
from wittkit.grouplambda import (
    FgAbelianGroup,
    GroupRingElement,
    WittAssignment,
    divisible_by,
    frobenius_compat_check,
    frobenius_congruence_check,
    gr_augmentation,
    gr_basis,
    gr_frobenius_lift,
    gr_mul,
    gr_one,
    gr_pow,
    lambda_commute_check,
    random_group_ring_element,
    to_witt,
)
from wittkit.wittrat import wr_normalize

Q = Rationals()
G = FgAbelianGroup(1, (2,))


def element(group, mapping):
    return GroupRingElement.from_mapping(group, mapping)


def test_group_invariants():
    group = FgAbelianGroup(2, (2, 6))
    assert group.dimension == 4 and group.order is None and str(group) == "Z + Z + Z/2 + Z/6"
    finite = FgAbelianGroup(0, (2, 6))
    assert finite.order == 12 and finite.exponent == 6
    assert len(list(finite.elements())) == 12
    assert finite.reduce([3, -1]) == (1, 5)
    assert FgAbelianGroup().is_trivial()


def test_invariant_factors_must_divide():
    with pytest.raises(DivisibilityError):
        FgAbelianGroup(0, (4, 6))
    with pytest.raises(DivisibilityError):
        FgAbelianGroup(0, (1,))


def test_elements_of_an_infinite_group_are_not_listed():
    with pytest.raises(GroupMismatchError):
        list(FgAbelianGroup(1).elements())


def test_index_follows_element_order():
    group = FgAbelianGroup(0, (2, 4))
    assert [group.index(g) for g in group.elements()] == list(range(8))


def test_convolution_product():
    x = element(G, {(1, 0): 2, (0, 1): 1})
    y = element(G, {(-1, 1): 1})
    assert gr_mul(x, y) == element(G, {(0, 1): 2, (-1, 0): 1})
    assert gr_mul(x, gr_one(G)) == x
    assert str(x) == "[0,1]+2[1,0]"


def test_torsion_exponents_wrap():
    cyclic = FgAbelianGroup(0, (3,))
    g = gr_basis(cyclic, (1,))
    assert gr_pow(g, 3) == gr_one(cyclic)


def test_frobenius_lift():
    x = element(G, {(1, 1): 3, (2, 0): -1})
    assert gr_frobenius_lift(2, x) == element(G, {(2, 0): 3, (4, 0): -1})
    with pytest.raises(NotPrimeError):
        gr_frobenius_lift(4, x)


def test_lifts_commute_and_satisfy_the_congruence(rng):
    for group in (G, FgAbelianGroup(2), FgAbelianGroup(0, (6,))):
        for _ in range(10):
            x = random_group_ring_element(group, rng)
            assert lambda_commute_check(2, 3, x) and lambda_commute_check(3, 5, x)
            for p in (2, 3, 5):
                assert divisible_by(frobenius_congruence_check(p, x), p)


def test_congruence_example():
    x = element(FgAbelianGroup(1), {(0,): 1, (1,): 1})
    difference = frobenius_congruence_check(2, x)
    assert difference == element(FgAbelianGroup(1), {(1,): 2})


def test_mixed_groups_are_rejected():
    with pytest.raises(GroupMismatchError):
        gr_mul(gr_one(G), gr_one(FgAbelianGroup(1)))


def test_to_witt():
    asg = WittAssignment(G, Q, (2, -1))
    x = element(G, {(1, 0): 1, (0, 1): -2})
    expected = wr_normalize(Polynomial(Q, (1, -2)), Polynomial(Q, (1, 2, 1)))
    assert to_witt(x, asg) == expected
    assert to_witt(x, asg).rank == gr_augmentation(x)


def test_to_witt_intertwines_frobenius(rng):
    asg = WittAssignment(G, Q, (2, -1))
    for _ in range(10):
        x = random_group_ring_element(G, rng, max_terms=3, height=2)
        for p in (2, 3, 5):
            assert frobenius_compat_check(p, x, asg)


def test_roots_of_unity_in_cyclotomic_images():
    field = CyclotomicField(6)
    cyclic = FgAbelianGroup(0, (6,))
    asg = WittAssignment(cyclic, field, (field.zeta(1),))
    x = element(cyclic, {(1,): 1, (3,): 1})
    for p in (5, 7):
        assert frobenius_compat_check(p, x, asg)


def test_assignment_validation():
    with pytest.raises(NonUnitError):
        WittAssignment(FgAbelianGroup(1), Integers(), (2,))
    with pytest.raises(TorsionCompatibilityError):
        WittAssignment(FgAbelianGroup(0, (2,)), Q, (2,))
    with pytest.raises(GroupMismatchError):
        WittAssignment(G, Q, (2,))


def test_bad_prime_is_excluded():
    asg = WittAssignment(G, Q, (2, -1), bad_prime=3)
    with pytest.raises(ExcludedPrimeError):
        frobenius_compat_check(3, gr_one(G), asg)
    assert frobenius_compat_check(2, gr_one(G), asg)


def test_to_witt_needs_an_integrally_closed_domain():
    ring = IntegersMod(12)
    asg = WittAssignment(FgAbelianGroup(1), ring, (5,))
    with pytest.raises(UnsupportedRingError):
        to_witt(gr_one(FgAbelianGroup(1)), asg)
