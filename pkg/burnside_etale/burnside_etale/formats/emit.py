import json
from enum import Enum
from typing import Union

from burnside_etale.galois.types import GaloisInvariant
from burnside_etale.utils.nice_list import compact_repr


class EmitMode(Enum):
    HUMAN = 'human'
    JSON = 'json'


def _human(inv: GaloisInvariant, trace: bool) -> str:
    lines = [
        f'L = {compact_repr(inv.L)}',
        f'components = {compact_repr(inv.components)}',
        f'chi = {inv.chi}',
    ]
    if trace:
        lines.append('trace:')
        lines.extend(f'  {number}. {record.describe()}' for number, record in enumerate(inv.trace, start=1))
    return '\n'.join(lines) + '\n'


def _json(inv: GaloisInvariant, trace: bool) -> str:
    data = {
        'L': list(inv.L),
        'components': [list(block) for block in inv.components],
        'chi': inv.chi,
    }
    if trace:
        data['trace'] = [record.to_dict() for record in inv.trace]
    return json.dumps(data, separators=(',', ':')) + '\n'


def emit_result(inv: GaloisInvariant, mode: Union[EmitMode, str] = EmitMode.HUMAN, trace: bool = False) -> str:
    """
    The text reporting L (canonical order), the connected components and chi, optionally with one
    entry per gluing step.
    """
    mode = EmitMode(mode)
    if mode is EmitMode.JSON:
        return _json(inv, trace)
    return _human(inv, trace)
