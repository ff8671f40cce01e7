import numpy as np
import pytest

from burnside_etale.utils.nice_list import compact_repr, nicely_join


@pytest.mark.parametrize('obj, expected_repr', [
    ([], '[]'),
    ([0], '[0]'),
    ([[1, 2], [3]], '[[1,2],[3]]'),
    (((6,), (3, 3)), '[[6],[3,3]]'),
    (np.array([2, 0, 2]), '[2,0,2]'),
])
def test_compact_repr(obj, expected_repr):
    assert compact_repr(obj) == expected_repr


@pytest.mark.parametrize('words, expected', [
    ([], ''),
    (['C6'], 'C6'),
    (['C6', 'S3'], 'C6 and S3'),
    (['C6', 'S3', 'A5'], 'C6, S3 and A5'),
])
def test_nicely_join(words, expected):
    assert nicely_join(words) == expected
