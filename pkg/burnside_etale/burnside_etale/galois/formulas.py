from itertools import product

from burnside_etale.marks.primes import factorize, prime_divisors
from burnside_etale.marks.table_of_marks import TableOfMarks


def solvable_rank_formula(tom: TableOfMarks) -> int:
    """
    For a solvable group the groupoid is connected, of rank
        sum over the proper subgroup classes K of (number of primes dividing |W(K)|) - 1.
    Meaningless (but computable) for non-solvable groups.
    """
    return sum(len(prime_divisors(diag)) - 1 for diag in tom.diagonal[:-1])


def divisor_formula(n: int) -> int:
    """
    The rank for the cyclic group of order n = prod p_i^a_i:
        sum over exponent vectors b != a with 0 <= b_i <= a_i of (|{i : a_i > b_i}| - 1).
    divisor_formula(6) -> 1; divisor_formula(12) -> 2; divisor_formula(p^k) -> 0.
    """
    exponents = list(factorize(n).values())
    total = 0
    for beta in product(*(range(a + 1) for a in exponents)):
        strictly_smaller = sum(a > b for a, b in zip(exponents, beta))
        if strictly_smaller:
            total += strictly_smaller - 1
    return total
