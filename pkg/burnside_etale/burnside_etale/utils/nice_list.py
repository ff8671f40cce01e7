from numbers import Integral
from typing import Iterable, Union

Nested = Union[int, Iterable['Nested']]


def compact_repr(obj: Nested) -> str:
    """
    GAP-style rendering of nested integer lists, without spaces.
    compact_repr([[1, 2], [3]]) -> '[[1,2],[3]]'
    """
    if isinstance(obj, Integral):
        return str(int(obj))
    return '[' + ','.join(compact_repr(item) for item in obj) + ']'


def nicely_join(words: Iterable, separator: str = ', ', last_separator: str = ' and ', empty_str: str = '') -> str:
    """
    nicely_join(['a', 'b', 'c']) -> 'a, b and c'
    """
    words = [str(word) for word in words]
    if not words:
        return empty_str
    if len(words) == 1:
        return words[0]
    return separator.join(words[:-1]) + last_separator + words[-1]
