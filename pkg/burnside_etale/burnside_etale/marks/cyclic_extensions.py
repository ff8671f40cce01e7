from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import networkx as nx

from burnside_etale.lattice.class_table import ClassTable
from burnside_etale.perms.group import FiniteGroup
from burnside_etale.utils.nice_list import compact_repr

from .exceptions import NotPrimeError, InvalidPrimePartition
from .primes import is_prime, prime_divisors
from .table_of_marks import TableOfMarks


@dataclass(frozen=True)
class PrimePartition:
    """
    A partition of the class numbers 1..s of a table of marks, for one prime.
    Blocks are normalised: each sorted, blocks ordered by their smallest class number.
    """
    prime: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = sorted((tuple(sorted(int(k) for k in block)) for block in self.blocks), key=lambda b: b[:1])
        object.__setattr__(self, 'blocks', tuple(blocks))

    def __str__(self):
        return compact_repr(self.blocks)

    @cached_property
    def _block_of(self) -> dict[int, tuple[int, ...]]:
        return {k: block for block in self.blocks for k in block}

    def block_of(self, class_number: int) -> tuple[int, ...]:
        try:
            return self._block_of[class_number]
        except KeyError:
            raise InvalidPrimePartition(self.prime, f'class {class_number} is in no block')

    def check_covers(self, size: int):
        """
        Raise InvalidPrimePartition unless the blocks are nonempty and cover 1..size exactly once.
        """
        if any(not block for block in self.blocks):
            raise InvalidPrimePartition(self.prime, 'empty block')
        members = [k for block in self.blocks for k in block]
        if sorted(members) != list(range(1, size + 1)):
            raise InvalidPrimePartition(self.prime, f'the blocks {self} do not cover the classes 1..{size} '
                                                    f'exactly once')

    def relabeled(self, mapping: Mapping[int, int]) -> PrimePartition:
        """
        The partition with every class number k replaced by mapping[k].
        """
        return PrimePartition(self.prime, tuple(tuple(mapping[k] for k in block) for block in self.blocks))


def _check_prime(p: int):
    if not is_prime(p):
        raise NotPrimeError(p)


def _partition_from_groups(p: int, groups: Iterable[Iterable[int]]) -> PrimePartition:
    return PrimePartition(p, tuple(tuple(k + 1 for k in group) for group in groups))


def cyclic_extensions_marks(tom: TableOfMarks, p: int) -> PrimePartition:
    """
    Classes j, j' are in the same block iff their full columns of marks are congruent mod p.
    Equivalent to the closure of "H is normal of index p in K" (Dress congruences), but needs only the table.
    """
    _check_prime(p)
    residues = tom.matrix % p
    columns: dict[tuple[int, ...], list[int]] = {}
    for j in range(tom.size):
        columns.setdefault(tuple(residues[:, j].tolist()), []).append(j)
    return _partition_from_groups(p, columns.values())


def _is_normal_in(group: FiniteGroup, subgroup, generators: Iterable[int]) -> bool:
    return all(group.conjugate(subgroup, g) == subgroup for g in generators)


def cyclic_extensions_structural(group: FiniteGroup, class_table: ClassTable, p: int) -> PrimePartition:
    """
    Classes [H], [K] are linked when some conjugate of H is a normal subgroup of index p of the
    representative of K; blocks are the connected components of that relation.
    """
    _check_prime(p)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(class_table)))
    for j, big in enumerate(class_table):
        if big.order % p:
            continue
        for i, small in enumerate(class_table.classes[:j]):
            if small.order * p != big.order:
                continue
            if any(conjugate.issubset(big.representative) and _is_normal_in(group, conjugate, big.generators)
                   for conjugate in small.all_conjugates):
                graph.add_edge(i, j)
    return _partition_from_groups(p, nx.connected_components(graph))


def marks_partitions(tom: TableOfMarks) -> dict[int, PrimePartition]:
    """
    The partition of every prime dividing the group order, read off the marks.
    """
    return {p: cyclic_extensions_marks(tom, p) for p in prime_divisors(tom.group_order)}
