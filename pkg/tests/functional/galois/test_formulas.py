import pytest

from burnside_etale.galois.formulas import divisor_formula, solvable_rank_formula
from burnside_etale.galois.types import chi
from burnside_etale.marks.table_of_marks import TableOfMarks
from burnside_etale.pipeline import analyze_group

from tests.golden import C6_MARKS, S3_MARKS


@pytest.mark.parametrize('n, expected', [
    (1, 0),
    (2, 0),
    (6, 1),
    (12, 2),
    (16, 0),
    (30, 5),
    (81, 0),
])
def test_divisor_formula(n, expected):
    assert divisor_formula(n) == expected


@pytest.mark.parametrize('p, q, n', [(2, 3, 0), (2, 3, 1), (3, 2, 2), (2, 5, 1), (5, 2, 0)])
def test_divisor_formula_for_prime_power_times_prime(p, q, n):
    # for C_{p^(n+1) q} the rank is n + 1
    assert divisor_formula(p ** (n + 1) * q) == n + 1


@pytest.mark.parametrize('marks, expected', [
    (C6_MARKS, 1),
    (S3_MARKS, 0),
    ([[1]], 0),
])
def test_solvable_rank_formula(marks, expected):
    assert solvable_rank_formula(TableOfMarks(marks)) == expected


@pytest.mark.parametrize('spec', ['C8', 'C9', 'C12', 'C30'])
def test_solvable_rank_formula_on_cyclic_groups(spec):
    tom = analyze_group(spec).tom
    assert solvable_rank_formula(tom) == divisor_formula(tom.group_order)


@pytest.mark.parametrize('L, expected', [
    ([0], 1),
    ([0, 0], 2),
    ([1], 0),
    ([6, 0, 0, 0], -2),
])
def test_chi(L, expected):
    assert chi(L) == expected
