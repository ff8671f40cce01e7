from pathlib import Path

from burnside_etale.exceptions import InvalidConfiguration
from burnside_etale.utils.mutable import Mutable, Flag, get_bounded_int

BASE_FOLDER = Path(__file__).parent.parent.parent

# Example tables of marks in the bracket-list and json formats:
TABLES_FOLDER = BASE_FOLDER / 'tables'

# Groups are enumerated element by element; no group above this order is ever enumerated,
# whatever ORDER_CAP says:
HARD_MAX_ORDER = 5040

ORDER_CAP_ENV_VAR = 'BURNSIDE_ETALE_ORDER_CAP'

# Largest group order we agree to enumerate (can be raised up to HARD_MAX_ORDER):
ORDER_CAP = Mutable.from_environ(ORDER_CAP_ENV_VAR, default=1000, parse=int)

# Up to this order, the group pipeline also computes the cyclic-extension partitions from
# normal index-p inclusions and requires them to equal the marks-congruence partitions:
STRUCTURAL_CHECK_MAX_ORDER = Mutable(360)

# Print progress messages (to stderr):
VERBOSE = Flag(False)

# Width of the summary tables printed by `check` and `table`:
TEXT_WIDTH = 150


def get_order_cap() -> int:
    try:
        return get_bounded_int(ORDER_CAP, 1, HARD_MAX_ORDER)
    except ValueError as e:
        raise InvalidConfiguration(setting=ORDER_CAP_ENV_VAR, reason=str(e))
