from dataclasses import dataclass
from typing import Optional

from burnside_etale.exceptions import InputException, InvariantViolation


@dataclass
class NotPrimeError(InputException, ValueError):
    value: int

    def __str__(self):
        return f'{self.value} is not a prime'


@dataclass
class NotPositiveError(InputException, ValueError):
    value: int

    def __str__(self):
        return f'Expected a positive integer, got {self.value}'


@dataclass
class MalformedTableOfMarks(InputException, ValueError):
    """
    Raised when a table of marks violates one of the invariants every table of marks satisfies.
    `row` and `column` are 1-based class numbers.
    """
    reason: str
    row: Optional[int] = None
    column: Optional[int] = None

    def __str__(self):
        if self.row is None:
            return f'Malformed table of marks: {self.reason}'
        where = f'row {self.row}' if self.column is None else f'entry ({self.row}, {self.column})'
        return f'Malformed table of marks at {where}: {self.reason}'


@dataclass
class ClassOrderViolation(MalformedTableOfMarks):
    """
    Raised when the classes of a table of marks are not sorted by subgroup order:
    a class must come after every class of its proper subgroups.
    """
    pass


@dataclass
class InvalidPrimePartition(InputException, ValueError):
    prime: int
    reason: str

    def __str__(self):
        return f'Invalid partition for the prime {self.prime}: {self.reason}'


@dataclass
class CyclicExtensionsMismatch(InvariantViolation, RuntimeError):
    """
    Raised when the partition read off the marks (column congruence mod p) differs from the one built
    from normal inclusions of index p. This should never happen; if it does, both are reported.
    """
    prime: int
    from_marks: tuple
    structural: tuple
    group: Optional[str] = None

    def __str__(self):
        group = f' of {self.group}' if self.group else ''
        return f'Cyclic extensions{group} for p={self.prime} disagree:\n' \
               f'  from the marks:         {self.from_marks}\n' \
               f'  from normal inclusions: {self.structural}'
