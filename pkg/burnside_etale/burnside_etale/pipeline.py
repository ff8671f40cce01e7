"""
From a group (or a table of marks read from a file) to the invariant L:

    group -> conjugacy classes of subgroups -> table of marks -> cyclic-extension partitions -> L
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from burnside_etale.env import STRUCTURAL_CHECK_MAX_ORDER
from burnside_etale.formats.gap_tom import parse_gap_tom
from burnside_etale.formats.group_spec import GroupSpec, parse_group_spec
from burnside_etale.formats.json_tom import read_json_tom
from burnside_etale.formats.tom_document import TomDocument
from burnside_etale.galois.compute_l import compute_L
from burnside_etale.galois.types import GaloisInvariant
from burnside_etale.lattice.class_table import ClassTable
from burnside_etale.lattice.enumeration import conjugacy_classes_of_subgroups
from burnside_etale.marks.cyclic_extensions import PrimePartition, cyclic_extensions_structural, marks_partitions
from burnside_etale.marks.exceptions import CyclicExtensionsMismatch
from burnside_etale.marks.table_of_marks import TableOfMarks, table_of_marks
from burnside_etale.perms.constructors import make_group
from burnside_etale.perms.group import FiniteGroup
from burnside_etale.utils.print_to_file import print_and_log_progress

TOM_FORMATS = ('gap', 'json')


@dataclass
class Analysis:
    """
    Everything computed on the way to L. `group` and `class_table` are None for tables read from files.
    """
    tom: TableOfMarks
    partitions: dict[int, PrimePartition]
    invariant: GaloisInvariant
    group: Optional[FiniteGroup] = None
    class_table: Optional[ClassTable] = None
    structural_checked: bool = False

    @property
    def name(self) -> str:
        return self.tom.name or 'table'

    @property
    def method(self) -> str:
        """
        How the cyclic-extension partitions were obtained.
        """
        return 'marks (agrees with structural)' if self.structural_checked else 'marks'

    def header(self) -> str:
        return f'{self.name}: order {self.tom.group_order}, {self.tom.size} subgroup classes'


def check_cyclic_extensions(group: FiniteGroup, class_table: ClassTable, partitions: dict[int, PrimePartition]):
    """
    Require the marks partitions to equal those built from normal inclusions of prime index.
    """
    for p, from_marks in partitions.items():
        structural = cyclic_extensions_structural(group, class_table, p)
        if structural != from_marks:
            raise CyclicExtensionsMismatch(prime=p, from_marks=from_marks.blocks, structural=structural.blocks,
                                           group=group.name)
    print_and_log_progress(f'{group.name}: cyclic extensions agree for primes {sorted(partitions)}')


def analyze_group(group: Union[GroupSpec, str, FiniteGroup]) -> Analysis:
    if isinstance(group, str):
        group = parse_group_spec(group)
    if isinstance(group, GroupSpec):
        group = make_group(group)
    class_table = conjugacy_classes_of_subgroups(group)
    tom = table_of_marks(group, class_table)
    partitions = marks_partitions(tom)
    structural_checked = group.order <= STRUCTURAL_CHECK_MAX_ORDER.val
    if structural_checked:
        check_cyclic_extensions(group, class_table, partitions)
    return Analysis(tom=tom, partitions=partitions, invariant=compute_L(tom, partitions),
                    group=group, class_table=class_table, structural_checked=structural_checked)


def analyze_tom(tom: Union[TableOfMarks, TomDocument]) -> Analysis:
    """
    L of a table of marks without its group; the primes are those dividing the first mark.
    """
    if isinstance(tom, TomDocument):
        tom = tom.to_table_of_marks()
    else:
        tom.validate()
    partitions = marks_partitions(tom)
    return Analysis(tom=tom, partitions=partitions, invariant=compute_L(tom, partitions))


def infer_tom_format(path: Path, tom_format: Optional[str] = None) -> str:
    if tom_format is not None:
        return tom_format
    return 'json' if Path(path).suffix.lower() == '.json' else 'gap'


def read_tom_file(path: Union[str, Path], tom_format: Optional[str] = None) -> TomDocument:
    """
    Read a table of marks file. Bracket-list files get their name from the file name.
    """
    path = Path(path)
    text = path.read_text(encoding='utf-8')
    if infer_tom_format(path, tom_format) == 'json':
        return read_json_tom(text)
    return parse_gap_tom(text, name=path.stem)
