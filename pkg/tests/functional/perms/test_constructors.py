import pytest

from burnside_etale.env import ORDER_CAP
from burnside_etale.formats.group_spec import parse_group_spec, Cyclic, Dihedral, SL2, \
    Symmetric, Alternating, DirectProduct
from burnside_etale.perms.constructors import make_group, nonzero_vectors, matrix_permutation
from burnside_etale.perms.exceptions import GroupOrderCapExceeded, UnsupportedGroupParameter
from burnside_etale.perms.permutation import Permutation


@pytest.mark.parametrize('spec, order', [
    ('C1', 1),
    ('C6', 6),
    ('S1', 1),
    ('S2', 2),
    ('S4', 24),
    ('A3', 3),
    ('A5', 60),
    ('D2', 2),
    ('D4', 4),
    ('D8', 8),
    ('D12', 12),
    ('Q8', 8),
    ('SL2_2', 6),
    ('SL2_3', 24),
    ('SL2_5', 120),
    ('C2xC2', 4),
    ('C2xS3', 12),
    ('C2xC2xC2', 8),
    ('perms:(1,2);(1,2,3)', 6),
])
def test_group_orders(spec, order):
    spec = parse_group_spec(spec)
    assert spec.expected_order() in (order, None)
    assert make_group(spec).order == order


@pytest.mark.parametrize('spec, element_orders', [
    ('D4', [1, 2, 2, 2]),  # the Klein four group
    ('Q8', [1, 2, 4, 4, 4, 4, 4, 4]),
    ('D8', [1, 2, 2, 2, 2, 2, 4, 4]),
])
def test_element_orders(spec, element_orders):
    group = make_group(parse_group_spec(spec))
    assert sorted(group.element_order(i) for i in range(group.order)) == element_orders


def test_sl2_acts_on_nonzero_vectors():
    assert len(nonzero_vectors(5)) == 24
    assert make_group(SL2(5)).degree == 24
    minus_one = matrix_permutation(((2, 0), (0, 2)), 3)
    assert minus_one.order() == 2 and len(minus_one.cycles) == 4


def test_generator_file(tmp_path):
    path = tmp_path / 'a4.g'
    path.write_text('# A4\n(1,2)(3,4)\n\n(1,2,3)\n')
    assert make_group(parse_group_spec(f'gens:{path}')).order == 12


def test_missing_generator_file(tmp_path):
    with pytest.raises(UnsupportedGroupParameter):
        make_group(parse_group_spec(f'gens:{tmp_path / "missing.g"}'))


def test_cap_is_checked_before_enumeration():
    with pytest.raises(GroupOrderCapExceeded) as e:
        make_group(Cyclic(1000000))
    assert e.value.order == 1000000
    with ORDER_CAP.temporary_set(10):
        with pytest.raises(GroupOrderCapExceeded):
            make_group(Dihedral(12))


def test_generator_defined_groups_hit_the_cap_during_enumeration():
    with ORDER_CAP.temporary_set(50):
        with pytest.raises(GroupOrderCapExceeded):
            make_group(parse_group_spec('perms:(1,2,3);(1,2,3,4,5)'))


def test_dihedral_reflection_is_an_involution():
    group = make_group(Dihedral(10))
    reflections = [e for e in group.elements if e.order() == 2]
    assert len(reflections) == 5
    assert Permutation.identity(5) in group


@pytest.mark.parametrize('spec', [
    Symmetric(10 ** 9),
    Alternating(10 ** 9),
    DirectProduct((Cyclic(2), Symmetric(10 ** 9))),
])
def test_huge_groups_are_refused_without_computing_their_order(spec):
    with pytest.raises(GroupOrderCapExceeded) as e:
        make_group(spec)
    assert e.value.group == spec.render()
