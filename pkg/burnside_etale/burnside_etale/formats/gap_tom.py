"""
Tables of marks as GAP nested lists, the way `MarksTom(tom)` prints them:

    [ [ 6 ], [ 3, 3 ], [ 2, 0, 2 ], [ 1, 1, 1, 1 ] ]

Whitespace is free and `#` starts a comment running to the end of the line.
Only the marks are stored; name and class orders travel in the json format.
"""
from typing import Iterator, Optional

import regex

from burnside_etale.utils.nice_list import compact_repr

from .exceptions import TomFormatError
from .tom_document import TomDocument

TOKEN_PATTERN = regex.compile(r'(?P<open>\[)|(?P<close>\])|(?P<comma>,)|(?P<int>-?\d+)'
                              r'|(?P<space>\s+)|(?P<comment>#[^\n]*)|(?P<bad>.)')

Token = tuple[str, str, int]  # kind, text, position


def _tokens(text: str) -> Iterator[Token]:
    for match in TOKEN_PATTERN.finditer(text):
        kind = match.lastgroup
        if kind in ('space', 'comment'):
            continue
        if kind == 'bad':
            raise TomFormatError(f'unexpected character {match.group()!r}', position=match.start())
        yield kind, match.group(), match.start()
    yield 'end', '', len(text)


class _ListParser:
    """
    Recursive descent over the token stream for a list of lists of integers.
    """

    def __init__(self, text: str):
        self.tokens = _tokens(text)
        self.current = next(self.tokens)

    def advance(self) -> Token:
        token = self.current
        self.current = next(self.tokens)
        return token

    def expect(self, kind: str, what: str) -> Token:
        if self.current[0] != kind:
            found = 'end of text' if self.current[0] == 'end' else repr(self.current[1])
            raise TomFormatError(f'expected {what}, found {found}', position=self.current[2])
        return self.advance()

    def items(self, parse_item) -> list:
        """
        '[' item (',' item)* ']' or '[' ']'.
        """
        self.expect('open', '"["')
        items = []
        if self.current[0] == 'close':
            self.advance()
            return items
        while True:
            items.append(parse_item())
            if self.current[0] == 'close':
                self.advance()
                return items
            self.expect('comma', '"," or "]"')

    def integer(self) -> int:
        kind, text, position = self.expect('int', 'an integer')
        value = int(text)
        if value < 0:
            raise TomFormatError(f'negative mark {value}', position=position)
        return value

    def row(self) -> tuple[int, ...]:
        return tuple(self.items(self.integer))

    def table(self) -> list[tuple[int, ...]]:
        rows = self.items(self.row)
        if self.current[0] != 'end':
            raise TomFormatError('trailing text after the table', position=self.current[2])
        return rows


def parse_gap_tom(text: str, name: Optional[str] = None) -> TomDocument:
    """
    Parse and validate a table of marks written as a GAP list of its lower-triangular rows.
    """
    doc = TomDocument(marks=_ListParser(text).table(), name=name)
    doc.to_table_of_marks()
    return doc


def render_gap_tom(doc: TomDocument) -> str:
    return compact_repr(doc.marks) + '\n'
