from .pipeline import Analysis, analyze_group, analyze_tom, read_tom_file
from .galois import GaloisInvariant, compute_L, chi, solvable_rank_formula, divisor_formula
from .marks import TableOfMarks, PrimePartition, table_of_marks, cyclic_extensions_marks, \
    cyclic_extensions_structural
from .formats import parse_group_spec, emit_result
