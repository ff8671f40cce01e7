from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from burnside_etale.utils.nice_list import compact_repr

Block = tuple[int, ...]
Partition = tuple[Block, ...]


def normalize_partition(blocks) -> Partition:
    """
    Each block sorted, blocks ordered by their smallest member.
    """
    return tuple(sorted((tuple(sorted(block)) for block in blocks), key=lambda b: b[:1]))


class StepKind(Enum):
    INITIALIZE = 'initialize'  # the class of the whole group, glued into the empty space
    ISOLATED = 'isolated'  # trivial Weyl group: a new component of rank 0
    GLUED = 'glued'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class StepRecord:
    """
    One iteration of the gluing loop: the class `class_number` (1-based) leaves the family.
    `L` and `C` are the state after the step, in algorithm order.
    """
    kind: StepKind
    class_number: int
    diag: int
    primes: tuple[int, ...]
    prime_blocks: dict[int, Block] = field(default_factory=dict)
    glued: Partition = ()
    N: int = 0
    L: tuple[int, ...] = ()
    C: Partition = ()
    chi_before: int = 0
    chi_after: int = 0

    def is_euler_additive(self) -> bool:
        return self.chi_after == self.chi_before + 1 - len(self.primes)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind.value,
            'class': self.class_number,
            'diag': self.diag,
            'P': list(self.primes),
            'Ep': {str(p): list(block) for p, block in self.prime_blocks.items()},
            'I': [list(block) for block in self.glued],
            'N': self.N,
            'L': list(self.L),
            'C': [list(block) for block in self.C],
            'chi_before': self.chi_before,
            'chi_after': self.chi_after,
        }

    def describe(self) -> str:
        head = f'c={self.class_number} {self.kind}: diag={self.diag} P={compact_repr(self.primes)}'
        if self.kind is StepKind.GLUED:
            blocks = ' '.join(f'E{p}={compact_repr(block)}' for p, block in self.prime_blocks.items())
            head += f' {blocks} I={compact_repr(self.glued)} N={self.N}'
        return f'{head} L={compact_repr(self.L)} C={compact_repr(self.C)} chi {self.chi_before}->{self.chi_after}'


@dataclass(frozen=True)
class GaloisInvariant:
    """
    The result of the gluing algorithm: the fundamental groupoid of Spec of the Burnside ring is the
    disjoint union, over connected components, of profinite completions of free groups of rank L[i].
    """
    raw_L: tuple[int, ...]
    raw_components: Partition
    trace: tuple[StepRecord, ...] = ()
    name: Optional[str] = None

    @property
    def L(self) -> tuple[int, ...]:
        """
        The ranks as a multiset, in canonical (descending) order.
        """
        return tuple(sorted(self.raw_L, reverse=True))

    @property
    def components(self) -> Partition:
        return normalize_partition(self.raw_components)

    @property
    def ranked_components(self) -> list[tuple[int, Block]]:
        """
        (rank, component) pairs, components normalised and ordered by their smallest class.
        """
        pairs = [(rank, tuple(sorted(block))) for rank, block in zip(self.raw_L, self.raw_components)]
        return sorted(pairs, key=lambda pair: pair[1][:1])

    @property
    def chi(self) -> int:
        return chi(self.raw_L)

    @property
    def is_connected(self) -> bool:
        return len(self.raw_L) == 1

    @property
    def is_trivial(self) -> bool:
        return self.raw_L == (0,)


def chi(L) -> int:
    """
    The profinite Euler characteristic: number of components minus the sum of the ranks.
    """
    L = list(L)
    return len(L) - sum(L)
