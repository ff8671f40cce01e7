from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from burnside_etale.marks.table_of_marks import TableOfMarks


@dataclass(frozen=True)
class TomDocument:
    """
    A table of marks as read from (or written to) a file: the ragged lower-triangular rows of marks,
    plus optional metadata.
    """
    marks: tuple[tuple[int, ...], ...]
    name: Optional[str] = None
    class_orders: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, 'marks', tuple(tuple(row) for row in self.marks))
        if self.class_orders is not None:
            object.__setattr__(self, 'class_orders', tuple(self.class_orders))

    def to_table_of_marks(self) -> TableOfMarks:
        """
        The validated table. Raises MalformedTableOfMarks for a document that no group could have produced.
        """
        tom = TableOfMarks(rows=self.marks, name=self.name, class_orders=self.class_orders)
        tom.validate()
        return tom

    @classmethod
    def from_table_of_marks(cls, tom: TableOfMarks) -> TomDocument:
        return cls(marks=tom.rows, name=tom.name, class_orders=tom.class_orders)
