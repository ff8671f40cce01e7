from .mutable import Mutable, Flag
from .nice_list import compact_repr, nicely_join
