import pytest

from burnside_etale.formats.group_spec import parse_group_spec
from burnside_etale.perms.constructors import make_group
from burnside_etale.perms.derived import derived_series, derived_subgroup, is_solvable


@pytest.mark.parametrize('spec, solvable', [
    ('C1', True),
    ('C12', True),
    ('S3', True),
    ('S4', True),
    ('A4', True),
    ('D10', True),
    ('Q8', True),
    ('SL2_3', True),
    ('C2xS3', True),
    ('A5', False),
    ('SL2_5', False),
])
def test_is_solvable(spec, solvable):
    assert is_solvable(make_group(parse_group_spec(spec))) == solvable


def test_derived_subgroup_of_cyclic_group_is_trivial():
    assert len(derived_subgroup(make_group(parse_group_spec('C8')))) == 1


@pytest.mark.parametrize('spec, orders', [
    ('S4', [24, 12, 4, 1]),
    ('S3', [6, 3, 1]),
    ('A5', [60]),
])
def test_derived_series(spec, orders):
    assert [len(term) for term in derived_series(make_group(parse_group_spec(spec)))] == orders
