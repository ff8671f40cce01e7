from .types import StepKind, StepRecord, GaloisInvariant, chi, normalize_partition
from .exceptions import MissingPrimePartition, EulerCharacteristicViolation
from .compute_l import compute_L
from .formulas import solvable_rank_formula, divisor_formula
