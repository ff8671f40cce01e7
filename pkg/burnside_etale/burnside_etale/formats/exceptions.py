from dataclasses import dataclass
from typing import Optional

from burnside_etale.exceptions import InputException


def _point_at(text: str, position: int) -> str:
    return f'{text}\n{" " * position}^'


@dataclass
class GroupSpecSyntaxError(InputException, ValueError):
    """
    Raised when a group specification string cannot be parsed.
    """
    text: str
    position: int
    reason: str

    def __str__(self):
        return f'Invalid group specification at position {self.position}: {self.reason}\n' \
               f'{_point_at(self.text, self.position)}'


@dataclass
class CycleNotationError(InputException, ValueError):
    """
    Raised when a permutation in cycle notation cannot be parsed.
    """
    text: str
    position: int
    reason: str
    line_number: Optional[int] = None

    def __str__(self):
        line = f' on line {self.line_number}' if self.line_number is not None else ''
        return f'Invalid cycle notation{line} at position {self.position}: {self.reason}\n' \
               f'{_point_at(self.text, self.position)}'


@dataclass
class TomFormatError(InputException, ValueError):
    """
    Raised when a table-of-marks document is syntactically invalid or has the wrong shape or types.
    """
    reason: str
    position: Optional[int] = None

    def __str__(self):
        if self.position is None:
            return f'Invalid table of marks: {self.reason}'
        return f'Invalid table of marks at position {self.position}: {self.reason}'
