from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from burnside_etale.perms.element_set import ElementSet


@dataclass(frozen=True)
class SubgroupClass:
    """
    A conjugacy class of subgroups.
    `generators` are element indices generating `representative`.
    """
    representative: ElementSet
    order: int
    all_conjugates: tuple[ElementSet, ...]
    normalizer_order: int
    generators: tuple[int, ...]

    @property
    def weyl_order(self) -> int:
        return self.normalizer_order // self.order

    @property
    def num_conjugates(self) -> int:
        return len(self.all_conjugates)


@dataclass(frozen=True)
class ClassTable:
    """
    The conjugacy classes of subgroups of a group, ordered by subgroup order (ties: smallest member indices).
    The trivial subgroup is first and the whole group last.
    """
    group_order: int
    classes: tuple[SubgroupClass, ...]

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, position: int) -> SubgroupClass:
        return self.classes[position]

    def __iter__(self) -> Iterator[SubgroupClass]:
        return iter(self.classes)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(c.order for c in self.classes)

    @property
    def weyl_orders(self) -> tuple[int, ...]:
        return tuple(c.weyl_order for c in self.classes)

    @property
    def subgroup_count(self) -> int:
        return sum(c.num_conjugates for c in self.classes)

    @cached_property
    def position_of_mask(self) -> dict[int, int]:
        """
        Maps the bit-vector of each subgroup to the position of its class.
        """
        return {conjugate.mask: position
                for position, c in enumerate(self.classes) for conjugate in c.all_conjugates}

    def class_position(self, subgroup: ElementSet) -> int:
        return self.position_of_mask[subgroup.mask]
