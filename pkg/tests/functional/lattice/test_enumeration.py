import itertools

import pytest

from burnside_etale.env import ORDER_CAP
from burnside_etale.formats.group_spec import parse_group_spec
from burnside_etale.lattice.enumeration import conjugacy_classes_of_subgroups, all_subgroups, is_subconjugate
from burnside_etale.perms.constructors import make_group
from burnside_etale.perms.exceptions import GroupOrderCapExceeded
from burnside_etale.perms.element_set import ElementSet


def group_of(spec: str):
    return make_group(parse_group_spec(spec))


def subgroups_from_subsets(group):
    """
    Every subset containing the identity that is closed under multiplication.
    """
    subgroups = set()
    others = range(1, group.order)
    for size in range(len(others) + 1):
        for subset in itertools.combinations(others, size):
            candidate = group.element_set((0,) + subset)
            if group.is_subgroup(candidate):
                subgroups.add(candidate.mask)
    return subgroups


def subgroups_from_three_generators(group):
    pairs = {group.closure([a, b]).mask for a in range(group.order) for b in range(a, group.order)}
    triples = set(pairs)
    for mask in pairs:
        generators = [int(i) for i in ElementSet(mask, group.order).indices]
        for x in range(group.order):
            triples.add(group.closure(generators + [x]).mask)
    return triples


@pytest.mark.parametrize('spec, count', [
    ('C1', 1),
    ('C6', 4),
    ('S3', 6),
    ('C2xC2', 5),
    ('Q8', 6),
    ('D8', 10),
    ('A4', 10),
    ('S4', 30),
    ('A5', 59),
])
def test_number_of_subgroups(spec, count):
    assert len(all_subgroups(group_of(spec))) == count


@pytest.mark.parametrize('spec', ['C6', 'S3', 'C2xC2', 'D8', 'Q8', 'D10', 'C12', 'A4', 'D12'])
def test_join_closure_equals_brute_force_over_subsets(spec):
    group = group_of(spec)
    assert {s.mask for s in all_subgroups(group)} == subgroups_from_subsets(group)


@pytest.mark.parametrize('spec', ['S4', 'SL2_3', 'C2xA4', 'D24', 'C2xC2xC2', 'C4xC4'])
def test_join_closure_equals_subgroups_generated_by_three_elements(spec):
    group = group_of(spec)
    assert {s.mask for s in all_subgroups(group)} == subgroups_from_three_generators(group)


@pytest.mark.parametrize('spec, weyl_orders', [
    ('C6', (6, 3, 2, 1)),
    ('S3', (6, 1, 2, 1)),
    ('A5', (60, 2, 2, 3, 2, 1, 1, 1, 1)),
    ('C5', (5, 1)),
])
def test_weyl_orders(spec, weyl_orders):
    assert conjugacy_classes_of_subgroups(group_of(spec)).weyl_orders == weyl_orders


@pytest.mark.parametrize('spec', ['S3', 'A4', 'S4', 'D12', 'A5'])
def test_class_table_invariants(spec):
    group = group_of(spec)
    ct = conjugacy_classes_of_subgroups(group)
    assert ct[0].order == 1 and ct[len(ct) - 1].order == group.order
    assert list(ct.orders) == sorted(ct.orders)
    assert ct.subgroup_count == len(all_subgroups(group))
    for c in ct:
        assert c.normalizer_order * c.num_conjugates == group.order
        assert c.representative == min(c.all_conjugates, key=lambda s: s.sort_key)
        assert group.closure(c.generators) == c.representative
        assert all(ct.class_position(conjugate) == ct.classes.index(c) for conjugate in c.all_conjugates)
    assert ct[0].weyl_order == group.order and ct[len(ct) - 1].weyl_order == 1


def test_is_subconjugate_in_s3():
    ct = conjugacy_classes_of_subgroups(group_of('S3'))
    last = len(ct) - 1
    assert all(is_subconjugate(ct, 0, i) for i in range(len(ct)))
    assert not any(is_subconjugate(ct, last, i) for i in range(last))
    assert not is_subconjugate(ct, 2, 1)  # C3 is not inside C2
    assert is_subconjugate(ct, 1, last)


def test_enumeration_respects_order_cap():
    group = group_of('S5')
    with ORDER_CAP.temporary_set(60):
        with pytest.raises(GroupOrderCapExceeded):
            conjugacy_classes_of_subgroups(group)


def test_order_cap_applies_to_already_enumerated_groups():
    group = group_of('S4')
    assert len(conjugacy_classes_of_subgroups(group)) == 11
    with ORDER_CAP.temporary_set(12):
        with pytest.raises(GroupOrderCapExceeded):
            conjugacy_classes_of_subgroups(group)
