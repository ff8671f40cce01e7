from __future__ import annotations

from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from burnside_etale.env import get_order_cap

from .element_set import ElementSet, bool_rows_to_masks
from .exceptions import EmptyGeneratorList, DegreeMismatch, GroupOrderCapExceeded
from .permutation import Permutation

# Rows of the Cayley table computed per numpy batch (bounds memory for the larger groups):
_MULTIPLICATION_CHUNK = 256


def _dimino(generators: Sequence[tuple[int, ...]], identity: tuple[int, ...], cap: int,
            name: Optional[str] = None) -> list[tuple[int, ...]]:
    """
    Enumerate <generators> by Dimino's method: the group is built up one generator at a time, each
    new subgroup listed as a union of right cosets of the previous one.
    Raise GroupOrderCapExceeded as soon as more than `cap` elements are found.
    """
    def mul(p, q):
        return tuple(p[y - 1] for y in q)

    elements = [identity]
    seen = {identity}

    def add_coset(rep, block):
        coset = [mul(h, rep) for h in elements[:block]]
        elements.extend(coset)
        seen.update(coset)
        if len(elements) > cap:
            raise GroupOrderCapExceeded(cap=cap, group=name)

    for i, gen in enumerate(generators):
        if gen in seen:
            continue
        block = len(elements)
        add_coset(gen, block)
        rep_pos = block
        while rep_pos < len(elements):
            rep = elements[rep_pos]
            for s in generators[:i + 1]:
                t = mul(rep, s)
                if t not in seen:
                    add_coset(t, block)
            rep_pos += block
    return elements


def generate_group(generators: Sequence[Permutation], name: Optional[str] = None) -> FiniteGroup:
    """
    The smallest group containing the generators, with all elements enumerated.
    """
    generators = list(generators)
    if not generators:
        raise EmptyGeneratorList()
    degrees = tuple(sorted({g.degree for g in generators}))
    if len(degrees) > 1:
        raise DegreeMismatch(degrees)
    cap = get_order_cap()
    degree = degrees[0]
    raw_elements = _dimino([g.images for g in generators], Permutation.identity(degree).images, cap, name)
    return FiniteGroup(sorted(raw_elements), generators, name=name)


class FiniteGroup:
    """
    A finite permutation group, fully enumerated.

    Elements are ordered lexicographically by their image sequences, so the identity is element 0.
    Subgroups and other subsets are ElementSet bit-vectors over these element indices.
    The Cayley, inverse and conjugation tables are numpy arrays built on first use.
    """

    def __init__(self, element_images: Sequence[tuple[int, ...]], generators: Sequence[Permutation],
                 name: Optional[str] = None):
        self.elements = tuple(Permutation(images) for images in element_images)
        self.generators = tuple(generators)
        self.name = name
        self.degree = self.elements[0].degree
        self.index = {p: i for i, p in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm: Permutation):
        return perm in self.index

    def __repr__(self):
        return f'FiniteGroup({self.name or "?"}, order={self.order}, degree={self.degree})'

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def images(self) -> np.ndarray:
        """
        (order, degree) array of 0-based images.
        """
        return np.array([p.images for p in self.elements], dtype=np.int64) - 1

    @cached_property
    def _base(self) -> list[int]:
        """
        Points whose images determine an element uniquely (greedy choice, in point order).
        """
        base = []
        num_distinct = 1
        for point in range(self.degree):
            if num_distinct == self.order:
                break
            count = len(np.unique(self.images[:, base + [point]], axis=0))
            if count > num_distinct:
                base.append(point)
                num_distinct = count
        return base

    def _base_keys(self, base_images: np.ndarray) -> Optional[np.ndarray]:
        """
        Encode images of the base points as int64 keys, or None if the keys could overflow.
        """
        if self.degree ** len(self._base) >= 2 ** 62:
            return None
        weights = self.degree ** np.arange(len(self._base), dtype=np.int64)
        return (base_images * weights).sum(axis=-1)

    @cached_property
    def multiplication(self) -> np.ndarray:
        """
        multiplication[i, j] is the index of elements[i] ∘ elements[j].
        """
        n = self.order
        images = self.images
        base_of_elements = images[:, self._base]
        keys = self._base_keys(base_of_elements)
        table = np.empty((n, n), dtype=np.int64)
        if keys is not None:
            key_order = np.argsort(keys)
            sorted_keys = keys[key_order]
            for start in range(0, n, _MULTIPLICATION_CHUNK):
                stop = min(start + _MULTIPLICATION_CHUNK, n)
                # products[i, j, k] = elements[start + i](elements[j](base[k]))
                products = images[start:stop][:, base_of_elements]
                table[start:stop] = key_order[np.searchsorted(sorted_keys, self._base_keys(products))]
        else:
            lookup = {row.tobytes(): i for i, row in enumerate(np.ascontiguousarray(base_of_elements))}
            for i in range(n):
                products = np.ascontiguousarray(images[i][base_of_elements])
                table[i] = [lookup[row.tobytes()] for row in products]
        return table

    @cached_property
    def inverse(self) -> np.ndarray:
        return np.argmax(self.multiplication == 0, axis=1)

    @cached_property
    def conjugation(self) -> np.ndarray:
        """
        conjugation[g, x] is the index of g⁻¹ x g.
        """
        mul = self.multiplication
        left = mul[self.inverse]
        return mul[left, np.arange(self.order)[:, np.newaxis]]

    def element_order(self, index: int) -> int:
        order, current = 1, index
        while current != 0:
            current = self.multiplication[current, index]
            order += 1
        return order

    # Element sets

    def element_set(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet.from_indices(indices, self.order)

    @cached_property
    def trivial_subgroup(self) -> ElementSet:
        return self.element_set([0])

    @cached_property
    def whole(self) -> ElementSet:
        return ElementSet((1 << self.order) - 1, self.order)

    def closure(self, generators: Iterable[int], base: Optional[ElementSet] = None) -> ElementSet:
        """
        The subgroup generated by the given element indices and, if given, the subgroup `base`.
        `base` must be a subgroup; its own generators must be among `generators`.
        """
        gens = np.array(sorted({int(g) for g in generators}), dtype=np.int64)
        member = base.to_bool() if base is not None else np.zeros(self.order, dtype=bool)
        member[0] = True
        if gens.size == 0:
            return ElementSet.from_bool(member)
        frontier = np.flatnonzero(member)
        mul = self.multiplication
        while frontier.size:
            products = mul[np.ix_(frontier, gens)].ravel()
            new = np.unique(products[~member[products]])
            member[new] = True
            frontier = new
        return ElementSet.from_bool(member)

    def cyclic_subgroup(self, index: int) -> ElementSet:
        return self.closure([index])

    def conjugate(self, subset: ElementSet, g: int) -> ElementSet:
        """
        g⁻¹ subset g.
        """
        return self.element_set(self.conjugation[g, subset.indices])

    def all_conjugates_by_element(self, subset: ElementSet) -> list[int]:
        """
        Masks of g⁻¹ subset g for every element index g, in element order.
        """
        rows = self.conjugation[:, subset.indices]
        member = np.zeros((self.order, self.order), dtype=bool)
        member[np.arange(self.order)[:, np.newaxis], rows] = True
        return bool_rows_to_masks(member)

    def is_subgroup(self, subset: ElementSet) -> bool:
        indices = subset.indices
        if 0 not in subset or self.order % len(indices):
            return False
        products = self.multiplication[np.ix_(indices, indices)]
        member = subset.to_bool()
        return bool(member[products].all())
