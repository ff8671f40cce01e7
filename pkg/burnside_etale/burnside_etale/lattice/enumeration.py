from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from burnside_etale.env import get_order_cap
from burnside_etale.perms.element_set import ElementSet
from burnside_etale.perms.exceptions import GroupOrderCapExceeded
from burnside_etale.perms.group import FiniteGroup
from burnside_etale.utils.print_to_file import print_and_log_progress

from .class_table import ClassTable, SubgroupClass


@dataclass
class _FoundClass:
    subgroup: ElementSet
    generators: tuple[int, ...]
    masks_by_element: list[int]  # masks_by_element[g] is the mask of g⁻¹ subgroup g


class _SubgroupCollector:
    """
    Join closure over conjugacy classes.

    Every subgroup is reached from the trivial one by repeatedly adding a cyclic subgroup. Joins are
    formed only with the first-found member H of each class: the joins of a conjugate H^g are the
    conjugates of the joins of H, and every new subgroup is registered together with all its conjugates.
    """

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.class_of_mask: dict[int, int] = {}
        self.found: list[_FoundClass] = []

    def register(self, subgroup: ElementSet, generators: tuple[int, ...]) -> Optional[int]:
        """
        Add the class of `subgroup` if it is new; return its position, or None if it was known.
        """
        if subgroup.mask in self.class_of_mask:
            return None
        position = len(self.found)
        masks_by_element = self.group.all_conjugates_by_element(subgroup)
        for mask in masks_by_element:
            self.class_of_mask.setdefault(mask, position)
        self.found.append(_FoundClass(subgroup, generators, masks_by_element))
        return position

    def cyclic_subgroups(self) -> list[tuple[ElementSet, int]]:
        """
        Each cyclic subgroup once, with its first generator in element order.
        """
        mul = self.group.multiplication
        cyclics = {}
        for x in range(self.group.order):
            powers = [0]
            current = x
            while current != 0:
                powers.append(current)
                current = int(mul[current, x])
            c = self.group.element_set(powers)
            cyclics.setdefault(c.mask, (c, x))
        return list(cyclics.values())

    def collect(self) -> list[_FoundClass]:
        cyclics = self.cyclic_subgroups()
        self.register(self.group.trivial_subgroup, ())
        queue = deque([0])
        for c, x in cyclics:
            position = self.register(c, (x,))
            if position is not None:
                queue.append(position)
        while queue:
            found = self.found[queue.popleft()]
            for c, x in cyclics:
                if c.issubset(found.subgroup):
                    continue
                generators = found.generators + (x,)
                position = self.register(self.group.closure(generators, base=found.subgroup), generators)
                if position is not None:
                    queue.append(position)
        return self.found


def _check_order_cap(group: FiniteGroup):
    cap = get_order_cap()
    if group.order > cap:
        raise GroupOrderCapExceeded(cap=cap, order=group.order, group=group.name)


def _subgroup_class(group: FiniteGroup, found: _FoundClass) -> SubgroupClass:
    conjugates = sorted((ElementSet(mask, group.order) for mask in dict.fromkeys(found.masks_by_element)),
                        key=lambda s: s.sort_key)
    representative = conjugates[0]
    g = found.masks_by_element.index(representative.mask)
    generators = tuple(int(group.conjugation[g, x]) for x in found.generators)
    return SubgroupClass(
        representative=representative,
        order=len(representative),
        all_conjugates=tuple(conjugates),
        normalizer_order=group.order // len(conjugates),
        generators=generators,
    )


def conjugacy_classes_of_subgroups(group: FiniteGroup) -> ClassTable:
    """
    All conjugacy classes of subgroups, sorted by (order, smallest sorted member indices among conjugates).
    The conjugate attaining that minimum is the representative.
    """
    _check_order_cap(group)
    return _classes_of_subgroups(group)


@lru_cache(maxsize=16)
def _classes_of_subgroups(group: FiniteGroup) -> ClassTable:
    found = _SubgroupCollector(group).collect()
    classes = sorted((_subgroup_class(group, f) for f in found),
                     key=lambda c: (c.order, c.representative.sort_key))
    table = ClassTable(group_order=group.order, classes=tuple(classes))
    print_and_log_progress(f'{group.name or "group"}: {table.subgroup_count} subgroups in {len(table)} classes')
    return table


def all_subgroups(group: FiniteGroup) -> list[ElementSet]:
    return [conjugate for c in conjugacy_classes_of_subgroups(group) for conjugate in c.all_conjugates]


def is_subconjugate(class_table: ClassTable, j: int, i: int) -> bool:
    """
    Whether some conjugate of the representative of class j lies in the representative of class i.
    """
    big = class_table[i]
    small = class_table[j]
    if big.order % small.order:
        return False
    return any(conjugate.issubset(big.representative) for conjugate in small.all_conjugates)
