import pytest

from burnside_etale.formats.exceptions import GroupSpecSyntaxError
from burnside_etale.formats.group_spec import parse_group_spec, Cyclic, Symmetric, Alternating, Dihedral, \
    Quaternion8, SL2, FromGenerators, GeneratorFile, DirectProduct
from burnside_etale.perms.exceptions import UnsupportedGroupParameter
from burnside_etale.perms.permutation import Permutation


@pytest.mark.parametrize('text, expected', [
    ('C6', Cyclic(6)),
    ('S4', Symmetric(4)),
    ('A5', Alternating(5)),
    ('D8', Dihedral(8)),
    ('Q8', Quaternion8()),
    ('SL2_5', SL2(5)),
    (' A5 ', Alternating(5)),
    ('C2xS3', DirectProduct((Cyclic(2), Symmetric(3)))),
    ('C2xC2xC2', DirectProduct((Cyclic(2), Cyclic(2), Cyclic(2)))),
    ('gens:tables/s3.gens', GeneratorFile('tables/s3.gens')),
])
def test_parse_group_spec(text, expected):
    assert parse_group_spec(text) == expected


@pytest.mark.parametrize('text', ['C1', 'S3', 'A4', 'D12', 'Q8', 'SL2_7', 'C2xS3xQ8', 'perms:(1,2);(1,2,3)'])
def test_render_is_parsed_back(text):
    spec = parse_group_spec(text)
    assert spec.render() == text
    assert parse_group_spec(spec.render()) == spec


def test_inline_generators():
    spec = parse_group_spec('perms:(1,2);(1,2,3)')
    assert isinstance(spec, FromGenerators)
    assert spec.permutations == (Permutation((2, 1, 3)), Permutation((2, 3, 1)))


def test_inline_generators_in_a_product():
    spec = parse_group_spec('perms:(1,2)xC3')
    assert spec == DirectProduct((FromGenerators((Permutation((2, 1)),)), Cyclic(3)))


@pytest.mark.parametrize('text, order', [
    ('C7', 7),
    ('S4', 24),
    ('A1', 1),
    ('A5', 60),
    ('D10', 10),
    ('SL2_3', 24),
    ('C2xS3', 12),
    ('perms:(1,2)', None),
    ('C2xperms:(1,2)', None),
])
def test_expected_order(text, order):
    assert parse_group_spec(text).expected_order() == order


def test_products_are_flattened():
    inner = DirectProduct((Cyclic(2), Cyclic(3)))
    assert DirectProduct((inner, Cyclic(5))).factors == (Cyclic(2), Cyclic(3), Cyclic(5))


def test_generator_file_must_come_last():
    with pytest.raises(UnsupportedGroupParameter):
        DirectProduct((GeneratorFile('gens.txt'), Cyclic(2)))


@pytest.mark.parametrize('text, position, reason', [
    ('', 0, 'empty'),
    ('   ', 0, 'empty'),
    ('Z5', 0, 'expected one of'),
    ('C6xZ2', 3, 'expected one of'),
    ('C6*S3', 2, 'expected "x"'),
    ('C6x', 3, 'expected one of'),
    ('D5', 0, 'must be even'),
    ('C0', 0, 'positive'),
    ('C2xSL2_4', 3, 'only prime fields'),
    ('SL2_11', 0, 'only p in'),
    ('SL2_1000000007', 0, 'only p in'),
    ('SL2_1', 0, 'only prime fields'),
])
def test_syntax_errors(text, position, reason):
    with pytest.raises(GroupSpecSyntaxError) as e:
        parse_group_spec(text)
    assert e.value.position == position
    assert reason in e.value.reason
    assert '^' in str(e.value)
