from dataclasses import dataclass
from typing import Optional

from burnside_etale.exceptions import InputException, ResourceException


@dataclass
class InvalidPermutation(InputException, ValueError):
    """
    Raised when an image sequence is not a bijection of {1..n}.
    """
    images: tuple
    reason: str

    def __str__(self):
        return f'{self.images} is not a permutation: {self.reason}'


@dataclass
class DegreeMismatch(InputException, ValueError):
    """
    Raised when permutations of different degrees are combined.
    """
    degrees: tuple

    def __str__(self):
        return f'Permutations must have equal degrees, got degrees {self.degrees}'


@dataclass
class EmptyGeneratorList(InputException, ValueError):

    def __str__(self):
        return 'A group must be generated by at least one permutation (use the identity for the trivial group)'


@dataclass
class UnsupportedGroupParameter(InputException, ValueError):
    """
    Raised when a built-in group constructor gets a parameter it does not support.
    """
    group: str
    reason: str

    def __str__(self):
        return f'Unsupported group {self.group}: {self.reason}'


@dataclass
class GroupOrderCapExceeded(ResourceException, RuntimeError):
    """
    Raised when a group would have more elements than we are allowed to enumerate.
    """
    cap: int
    order: Optional[int] = None  # None if the enumeration was stopped before the order was known
    group: Optional[str] = None

    def __str__(self):
        group = f' {self.group}' if self.group else ''
        if self.order is None:
            order = f'more than {self.cap} elements'
        else:
            order = f'order {self.order}'
        return f'Group{group} has {order}, above the order cap {self.cap} ' \
               f'(raise it with the BURNSIDE_ETALE_ORDER_CAP environment variable)'
