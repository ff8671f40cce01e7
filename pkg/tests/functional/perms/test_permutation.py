import itertools

import pytest

from burnside_etale.perms.exceptions import InvalidPermutation, DegreeMismatch
from burnside_etale.perms.permutation import Permutation, compose


def p(*cycles, degree=3):
    return Permutation.from_cycles(cycles, degree)


def test_transposition_squared_is_identity():
    t = p((1, 2))
    assert compose(t, t).is_identity()


def test_identity_is_neutral():
    q = p((1, 2, 3))
    assert compose(Permutation.identity(3), q) == q
    assert compose(q, Permutation.identity(3)) == q


def test_compose_applies_right_factor_first():
    # (1 2)∘(2 3): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert compose(p((1, 2)), p((2, 3))) == p((1, 2, 3))


def test_compose_agrees_with_brute_force_cayley_table():
    elements = [Permutation(images) for images in itertools.permutations(range(1, 4))]
    for a, b in itertools.product(elements, repeat=2):
        expected = tuple(a(b(x)) for x in range(1, 4))
        assert (a * b).images == expected


def test_compose_rejects_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(Permutation.identity(2), Permutation.identity(3))


@pytest.mark.parametrize('images', [
    (),
    (1, 1),
    (2, 3),
    (0, 1),
])
def test_invalid_images(images):
    with pytest.raises(InvalidPermutation):
        Permutation(images)


@pytest.mark.parametrize('cycles, degree', [
    ([(1, 4)], 3),
    ([(1, 2), (2, 3)], 3),
])
def test_invalid_cycles(cycles, degree):
    with pytest.raises(InvalidPermutation):
        Permutation.from_cycles(cycles, degree)


def test_inverse_and_order():
    q = Permutation.from_cycles([(1, 2), (3, 4, 5)], 5)
    assert (q * q.inverse()).is_identity()
    assert q.order() == 6
    assert Permutation.identity(4).order() == 1


def test_cycles_and_cycle_string():
    q = Permutation.from_cycles([(3, 5, 4), (1, 2)], 6)
    assert q.cycles == ((1, 2), (3, 5, 4))
    assert q.cycle_string() == '(1,2)(3,5,4)'
    assert str(Permutation.identity(2)) == '()'


def test_extended_moves_the_support():
    q = p((1, 2), degree=2).extended(5, shift=3)
    assert q == Permutation.from_cycles([(4, 5)], 5)
