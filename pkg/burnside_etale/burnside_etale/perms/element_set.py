from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np


def bool_rows_to_masks(member: np.ndarray) -> list[int]:
    """
    Pack each row of a 2D boolean array into an int bit-vector (bit i <-> column i).
    """
    packed = np.packbits(member, axis=-1, bitorder='little')
    return [int.from_bytes(row.tobytes(), 'little') for row in packed]


@dataclass(frozen=True)
class ElementSet:
    """
    A set of elements of an ambient FiniteGroup, stored as a bit-vector over element indices.
    `universe` is the order of the ambient group.
    """
    mask: int
    universe: int

    @classmethod
    def from_bool(cls, member: np.ndarray) -> ElementSet:
        return cls(bool_rows_to_masks(member[np.newaxis, :])[0], len(member))

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe: int) -> ElementSet:
        member = np.zeros(universe, dtype=bool)
        member[np.asarray(list(indices), dtype=np.int64)] = True
        return cls.from_bool(member)

    def to_bool(self) -> np.ndarray:
        num_bytes = (self.universe + 7) // 8
        bits = np.unpackbits(np.frombuffer(self.mask.to_bytes(num_bytes, 'little'), dtype=np.uint8),
                             bitorder='little')
        return bits[:self.universe].astype(bool)

    @cached_property
    def indices(self) -> np.ndarray:
        return np.flatnonzero(self.to_bool())

    @cached_property
    def sort_key(self) -> tuple[int, ...]:
        """
        The sorted member indices; used to order conjugates and break ties between classes.
        """
        return tuple(int(i) for i in self.indices)

    def __len__(self):
        return self.mask.bit_count()

    def __contains__(self, index: int):
        return bool((self.mask >> index) & 1)

    def __iter__(self):
        return iter(self.sort_key)

    def issubset(self, other: ElementSet) -> bool:
        return self.mask & other.mask == self.mask

    def __le__(self, other: ElementSet) -> bool:
        return self.issubset(other)
