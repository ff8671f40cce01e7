from .exceptions import NotPrimeError, NotPositiveError, MalformedTableOfMarks, ClassOrderViolation, \
    InvalidPrimePartition, CyclicExtensionsMismatch
from .primes import prime_divisors, is_prime, factorize
from .table_of_marks import TableOfMarks, table_of_marks
from .cyclic_extensions import PrimePartition, cyclic_extensions_marks, cyclic_extensions_structural, \
    marks_partitions
