"""
Consistency checks of the whole pipeline over the built-in catalog.

Every group is analyzed, then each invariant is checked on the result. A check returns True (holds),
False (violated) or None (does not apply to this group).
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

import pandas as pd

from burnside_etale.catalog import KNOWN_L, catalog_specs
from burnside_etale.env import TEXT_WIDTH
from burnside_etale.exceptions import burnside_etaleException
from burnside_etale.formats.gap_tom import parse_gap_tom, render_gap_tom
from burnside_etale.formats.group_spec import Cyclic, GroupSpec
from burnside_etale.formats.json_tom import read_json_tom, write_json_tom
from burnside_etale.formats.tom_document import TomDocument
from burnside_etale.galois.compute_l import compute_L
from burnside_etale.galois.exceptions import EulerCharacteristicViolation
from burnside_etale.galois.formulas import divisor_formula, solvable_rank_formula
from burnside_etale.galois.types import normalize_partition
from burnside_etale.marks.exceptions import CyclicExtensionsMismatch
from burnside_etale.marks.primes import prime_divisors
from burnside_etale.perms.derived import is_solvable
from burnside_etale.pipeline import Analysis, analyze_group, analyze_tom
from burnside_etale.utils.nice_list import compact_repr
from burnside_etale.utils.print_to_file import print_and_log_progress

ROUND_TRIP_MAX_ORDER = 60


def check_class_table(analysis: Analysis, spec: GroupSpec) -> bool:
    ct = analysis.class_table
    order = analysis.group.order
    return ct[0].order == 1 and ct[len(ct) - 1].order == order \
        and list(ct.orders) == sorted(ct.orders) \
        and all(c.normalizer_order * c.num_conjugates == order for c in ct) \
        and ct[0].weyl_order == order and ct[len(ct) - 1].weyl_order == 1


def check_table_of_marks(analysis: Analysis, spec: GroupSpec) -> bool:
    tom = analysis.tom
    tom.validate()
    ct = analysis.class_table
    return tom.indices == tuple(tom.group_order // o for o in ct.orders) and tom.diagonal == ct.weyl_orders


def check_method_agreement(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    # analyze_group raises CyclicExtensionsMismatch on disagreement
    return True if analysis.structural_checked else None


def check_euler_additivity(analysis: Analysis, spec: GroupSpec) -> bool:
    inv = analysis.invariant
    return all(record.is_euler_additive() for record in inv.trace) and inv.trace[-1].chi_after == inv.chi


def check_dress_connectivity(analysis: Analysis, spec: GroupSpec) -> bool:
    return analysis.invariant.is_connected == is_solvable(analysis.group)


def check_solvable_formula(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    if not is_solvable(analysis.group):
        return None
    return analysis.invariant.L == (solvable_rank_formula(analysis.tom),)


def check_divisor_formula(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    if not isinstance(spec, Cyclic):
        return None
    return analysis.invariant.L == (divisor_formula(spec.n),)


def check_p_group_triviality(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    if len(prime_divisors(analysis.group.order)) > 1:
        return None
    return analysis.invariant.is_trivial


def check_round_trip(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    if analysis.group.order > ROUND_TRIP_MAX_ORDER:
        return None
    doc = TomDocument.from_table_of_marks(analysis.tom)
    expected = analysis.invariant
    for parsed in (read_json_tom(write_json_tom(doc)), parse_gap_tom(render_gap_tom(doc), name=doc.name)):
        replayed = analyze_tom(parsed).invariant
        if (replayed.raw_L, replayed.raw_components) != (expected.raw_L, expected.raw_components):
            return False
    return True


def tie_shuffle(orders: tuple[int, ...]) -> list[int]:
    """
    A rearrangement of class positions reversing every run of classes of equal subgroup order.
    """
    order = []
    start = 0
    for end in range(1, len(orders) + 1):
        if end == len(orders) or orders[end] != orders[start]:
            order.extend(reversed(range(start, end)))
            start = end
    return order


def check_tie_order_invariance(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    """
    Listing classes of equal order differently must give the same L and the same components.
    """
    shuffle = tie_shuffle(analysis.class_table.orders)
    if shuffle == list(range(len(shuffle))):
        return None
    new_number = {old + 1: new + 1 for new, old in enumerate(shuffle)}
    old_number = {new: old for old, new in new_number.items()}
    tom = analysis.tom.permuted(shuffle)
    partitions = {p: partition.relabeled(new_number) for p, partition in analysis.partitions.items()}
    shuffled = compute_L(tom, partitions)
    components = normalize_partition([[old_number[k] for k in block] for block in shuffled.components])
    return shuffled.L == analysis.invariant.L and components == analysis.invariant.components


def check_known_L(analysis: Analysis, spec: GroupSpec) -> Optional[bool]:
    known = KNOWN_L.get(spec.render())
    if known is None:
        return None
    return analysis.invariant.L == known


SELF_CHECKS: dict[str, Callable[[Analysis, GroupSpec], Optional[bool]]] = {
    'class table': check_class_table,
    'table of marks': check_table_of_marks,
    'method agreement': check_method_agreement,
    'euler additivity': check_euler_additivity,
    'dress connectivity': check_dress_connectivity,
    'solvable formula': check_solvable_formula,
    'divisor formula': check_divisor_formula,
    'p-group triviality': check_p_group_triviality,
    'round trip': check_round_trip,
    'tie order': check_tie_order_invariance,
    'known L': check_known_L,
}

EXCEPTIONS_TO_CHECKS = {
    CyclicExtensionsMismatch: 'method agreement',
    EulerCharacteristicViolation: 'euler additivity',
}


@dataclass
class InvariantFailure:
    group: str
    invariant: str
    message: str = ''

    def __str__(self):
        message = f': {self.message}' if self.message else ''
        return f'{self.group}: invariant "{self.invariant}" violated{message}'


@dataclass
class SelfCheckReport:
    rows: list[dict] = field(default_factory=list)
    failures: list[InvariantFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def summary(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows)

    def to_string(self) -> str:
        return self.summary.to_string(index=False, line_width=TEXT_WIDTH)


def _status(result: Optional[bool]) -> str:
    return '-' if result is None else ('ok' if result else 'FAIL')


def _check_group(spec: GroupSpec, report: SelfCheckReport):
    name = spec.render()
    print_and_log_progress(f'Checking {name}')
    try:
        analysis = analyze_group(spec)
    except burnside_etaleException as e:
        invariant = next((check for type_, check in EXCEPTIONS_TO_CHECKS.items() if isinstance(e, type_)),
                         'analysis')
        report.failures.append(InvariantFailure(name, invariant, str(e)))
        report.rows.append({'group': name, 'order': spec.expected_order(), 'classes': '', 'L': '',
                            invariant: 'FAIL'})
        return
    row = {'group': name, 'order': analysis.group.order, 'classes': analysis.tom.size,
           'L': compact_repr(analysis.invariant.L)}
    for invariant, check in SELF_CHECKS.items():
        try:
            result = check(analysis, spec)
            message = ''
        except burnside_etaleException as e:
            result = False
            message = str(e)
        if result is False:
            report.failures.append(InvariantFailure(name, invariant, message))
        row[invariant] = _status(result)
    report.rows.append(row)


def run_self_check(max_order: int = 60, include_cyclic: bool = True) -> SelfCheckReport:
    report = SelfCheckReport()
    for spec in catalog_specs(max_order, include_cyclic=include_cyclic):
        _check_group(spec, report)
    return report
