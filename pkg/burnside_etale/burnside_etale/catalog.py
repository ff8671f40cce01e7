from typing import Optional

from burnside_etale.env import get_order_cap
from burnside_etale.formats.group_spec import GroupSpec, Cyclic, parse_group_spec

PRODUCTS = ['C2xC2', 'C3xC3', 'C2xC2xC2', 'C2xC4', 'C2xS3', 'C2xA4', 'S3xS3', 'C4xC4']

CATALOG = [
    *(f'C{n}' for n in range(1, 201)),
    *(f'D{n}' for n in range(4, 25, 2)),
    'Q8',
    *(f'S{n}' for n in range(1, 7)),
    *(f'A{n}' for n in range(4, 7)),
    'SL2_2', 'SL2_3', 'SL2_5', 'SL2_7',
    *PRODUCTS,
]

# L of groups too large for the default catalog run, as a multiset in canonical order:
KNOWN_L = {
    'C6': (1,),
    'S3': (0,),
    'A5': (0, 0),
    'A6': (0, 0, 0, 0),
    'S5': (1, 0),
    'S6': (6, 0, 0, 0),
    'SL2_3': (1,),
    'SL2_5': (2, 0),
    'SL2_7': (3, 0),
}


def catalog_specs(max_order: Optional[int] = None, include_cyclic: bool = True) -> list[GroupSpec]:
    """
    The built-in groups of order at most `max_order` (and the order cap), by increasing order.
    """
    cap = get_order_cap()
    limit = cap if max_order is None else min(max_order, cap)
    specs = [parse_group_spec(text) for text in CATALOG]
    specs = [spec for spec in specs if spec.expected_order() <= limit
             and (include_cyclic or not isinstance(spec, Cyclic))]
    return sorted(specs, key=lambda spec: spec.expected_order())
