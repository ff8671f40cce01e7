from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from burnside_etale.lattice.class_table import ClassTable
from burnside_etale.perms.group import FiniteGroup
from burnside_etale.utils.nice_list import compact_repr
from burnside_etale.utils.print_to_file import print_and_log_progress

from .exceptions import MalformedTableOfMarks, ClassOrderViolation

# marks are stored in int64 arrays; every mark is bounded by the group order
MAX_GROUP_ORDER = np.iinfo(np.int64).max


@dataclass(frozen=True)
class TableOfMarks:
    """
    A table of marks, stored as its ragged lower-triangular rows: row k has k + 1 entries.

    rows[i][j] is the number of cosets of H_i fixed by K_j, where H_i, K_j are representatives of
    subgroup classes i, j (0-based positions). The first class is the trivial subgroup, the last is the
    whole group.

    Construction does not validate; call `validate()` (done by every consumer of external tables).
    """
    rows: tuple[tuple[int, ...], ...]
    name: Optional[str] = None
    class_orders: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, 'rows', tuple(tuple(int(m) for m in row) for row in self.rows))
        if self.class_orders is not None:
            object.__setattr__(self, 'class_orders', tuple(int(o) for o in self.class_orders))

    def __str__(self):
        return compact_repr(self.rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def group_order(self) -> int:
        return self.rows[0][0]

    @property
    def diagonal(self) -> tuple[int, ...]:
        """
        The Weyl group orders |N(H_i)/H_i|.
        """
        return tuple(row[-1] for row in self.rows)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(row[0] for row in self.rows)

    @cached_property
    def matrix(self) -> np.ndarray:
        """
        The square marks matrix, zero above the diagonal.
        """
        matrix = np.zeros((self.size, self.size), dtype=np.int64)
        for i, row in enumerate(self.rows):
            matrix[i, :len(row)] = row
        return matrix

    def validate(self):
        """
        Check every invariant a table of marks satisfies that can be checked without the group.
        Raises MalformedTableOfMarks (or its subclass ClassOrderViolation); error positions are 1-based.
        """
        if not self.rows:
            raise MalformedTableOfMarks('the table is empty')
        for i, row in enumerate(self.rows):
            if len(row) != i + 1:
                raise MalformedTableOfMarks(f'expected {i + 1} entries, found {len(row)} '
                                            f'(rows must be lower-triangular)', row=i + 1)
            for j, m in enumerate(row):
                if m < 0:
                    raise MalformedTableOfMarks(f'negative mark {m}', row=i + 1, column=j + 1)
        g = self.group_order
        if g <= 0:
            raise MalformedTableOfMarks(f'the group order (first entry) must be positive, got {g}', row=1, column=1)
        if g > MAX_GROUP_ORDER:
            raise MalformedTableOfMarks(f'the group order {g} is too large (at most {MAX_GROUP_ORDER})', row=1, column=1)
        for i, row in enumerate(self.rows):
            self._validate_row(i, row)
        if any(m != 1 for m in self.rows[-1]):
            raise MalformedTableOfMarks('the last row (the whole group) must consist of 1s', row=self.size)
        if self.class_orders is not None:
            self._validate_class_orders()

    def _validate_row(self, i: int, row: tuple[int, ...]):
        g = self.group_order
        index = row[0]
        diag = row[-1]
        if diag <= 0:
            raise MalformedTableOfMarks(f'diagonal entry must be positive, got {diag}', row=i + 1, column=i + 1)
        if index <= 0 or g % index:
            raise MalformedTableOfMarks(f'the index {index} does not divide the group order {g}', row=i + 1, column=1)
        if index % diag:
            raise MalformedTableOfMarks(f'the diagonal entry {diag} does not divide the index {index}',
                                        row=i + 1, column=i + 1)
        if i > 0 and index > self.rows[i - 1][0]:
            raise ClassOrderViolation(f'the first column must be non-increasing ({self.rows[i - 1][0]} then {index})',
                                      row=i + 1, column=1)
        for j, m in enumerate(row[:-1]):
            if m > index:
                raise MalformedTableOfMarks(f'the mark {m} exceeds the index {index}', row=i + 1, column=j + 1)
            if m == 0:
                continue
            if self.rows[j][0] <= index:
                # the subgroup of class j is subconjugate to that of class i, so it must be strictly smaller
                raise ClassOrderViolation(f'class {j + 1} is subconjugate to class {i + 1} but not of smaller order',
                                          row=i + 1, column=j + 1)

    def _validate_class_orders(self):
        if len(self.class_orders) != self.size:
            raise MalformedTableOfMarks(f'{len(self.class_orders)} class orders given for {self.size} classes')
        for i, (order, index) in enumerate(zip(self.class_orders, self.indices)):
            if order * index != self.group_order:
                raise MalformedTableOfMarks(f'class order {order} times index {index} is not the group order '
                                            f'{self.group_order}', row=i + 1)

    @classmethod
    def from_square(cls, matrix: Sequence[Sequence[int]], name: Optional[str] = None,
                    class_orders: Optional[Sequence[int]] = None) -> TableOfMarks:
        matrix = np.asarray(matrix, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise MalformedTableOfMarks(f'expected a square matrix, got shape {matrix.shape}')
        above = np.argwhere(np.triu(matrix, k=1))
        if above.size:
            i, j = above[0]
            raise ClassOrderViolation('nonzero entry above the diagonal', row=int(i) + 1, column=int(j) + 1)
        return cls(rows=tuple(tuple(matrix[i, :i + 1]) for i in range(matrix.shape[0])),
                   name=name, class_orders=class_orders)

    def permuted(self, order: Sequence[int]) -> TableOfMarks:
        """
        The same table with the classes rearranged: new class k is old class order[k] (0-based positions).
        The rearrangement must keep the table lower-triangular.
        """
        order = [int(k) for k in order]
        if sorted(order) != list(range(self.size)):
            raise ValueError(f'{order} is not a permutation of the {self.size} class positions')
        class_orders = None if self.class_orders is None else [self.class_orders[k] for k in order]
        return self.from_square(self.matrix[np.ix_(order, order)], name=self.name, class_orders=class_orders)


def table_of_marks(group: FiniteGroup, class_table: ClassTable) -> TableOfMarks:
    """
    The table of marks of `group` with classes in the order of `class_table`.

    m(i, j) = |{g : g⁻¹ K_j g ⊆ H_i}| / |H_i| = (number of conjugates of K_j inside H_i) · |N(K_j)| / |H_i|
    """
    rows = []
    for big in class_table:
        row = []
        for small in class_table.classes[:len(rows) + 1]:
            if big.order % small.order:
                row.append(0)
                continue
            inside = sum(conjugate.issubset(big.representative) for conjugate in small.all_conjugates)
            row.append(inside * small.normalizer_order // big.order)
        rows.append(tuple(row))
    tom = TableOfMarks(rows=tuple(rows), name=group.name, class_orders=class_table.orders)
    print_and_log_progress(f'{group.name or "group"}: table of marks with {tom.size} classes')
    return tom
