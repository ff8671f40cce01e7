from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from .exceptions import InvalidPermutation, DegreeMismatch


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {1..n}, stored as its 1-based image sequence: images[x - 1] is the image of x.
    """
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, 'images', images)
        if len(images) == 0:
            raise InvalidPermutation(images, 'degree must be at least 1')
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(images, f'images must be each of 1..{len(images)} exactly once')

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """
        Build a permutation from disjoint cycles, e.g. from_cycles([(1, 2), (3, 4, 5)], 5).
        """
        images = list(range(1, degree + 1))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise InvalidPermutation(tuple(cycle), f'point {point} is outside 1..{degree}')
                if point in seen:
                    raise InvalidPermutation(tuple(cycle), f'point {point} appears in more than one cycle')
                seen.add(point)
            for x, y in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[x - 1] = y
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inverse = [0] * self.degree
        for x, y in enumerate(self.images, start=1):
            inverse[y - 1] = x
        return Permutation(tuple(inverse))

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images, start=1))

    def extended(self, degree: int, shift: int = 0) -> Permutation:
        """
        The same permutation acting on points shift+1..shift+n of {1..degree}, fixing all other points.
        """
        images = list(range(1, degree + 1))
        for x, y in enumerate(self.images, start=1):
            images[shift + x - 1] = shift + y
        return Permutation(tuple(images))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """
        Non-trivial cycles, each starting at its smallest point, ordered by that point.
        """
        seen = set()
        cycles = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1:
                cycles.append(tuple(cycle))
        return tuple(cycles)

    def order(self) -> int:
        return lcm(*(len(cycle) for cycle in self.cycles)) if self.cycles else 1

    def cycle_string(self) -> str:
        """
        Cycle notation as read by the generator-file parser, e.g. '(1,2)(3,4,5)'; identity is '()'.
        """
        if not self.cycles:
            return '()'
        return ''.join('(' + ','.join(str(x) for x in cycle) + ')' for cycle in self.cycles)

    def __str__(self):
        return self.cycle_string()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    (p∘q)(x) = p(q(x)).
    """
    if p.degree != q.degree:
        raise DegreeMismatch((p.degree, q.degree))
    p_images = p.images
    return Permutation(tuple(p_images[y - 1] for y in q.images))
