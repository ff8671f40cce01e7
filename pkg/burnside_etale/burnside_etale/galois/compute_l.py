from typing import Mapping

from burnside_etale.marks.cyclic_extensions import PrimePartition
from burnside_etale.marks.primes import prime_divisors
from burnside_etale.marks.table_of_marks import TableOfMarks
from burnside_etale.utils.print_to_file import print_and_log_progress

from .exceptions import MissingPrimePartition, EulerCharacteristicViolation
from .types import GaloisInvariant, StepKind, StepRecord, chi


def _as_state(L: list[int], C: list[list[int]]) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    return tuple(L), tuple(tuple(block) for block in C)


def _check_partitions(tom: TableOfMarks, partitions: Mapping[int, PrimePartition]):
    for p in prime_divisors(tom.group_order):
        if p not in partitions:
            raise MissingPrimePartition(prime=p, group_order=tom.group_order)
        partitions[p].check_covers(tom.size)


def _check_euler_additivity(record: StepRecord):
    if not record.is_euler_additive():
        raise EulerCharacteristicViolation(class_number=record.class_number, chi_before=record.chi_before,
                                           chi_after=record.chi_after, num_primes=len(record.primes))


def compute_L(tom: TableOfMarks, partitions: Mapping[int, PrimePartition]) -> GaloisInvariant:
    """
    Remove the subgroup classes one at a time, from the whole group down to the trivial subgroup,
    keeping track of the connected components C of the space built so far and the rank L of the
    fundamental group of each.

    Removing class k glues a copy of Spec Z onto every component that meets, for some prime p dividing
    the Weyl order diag_k, the cyclic-extensions block of k at p. A trivial Weyl group instead adds a new
    component of rank 0.

    Class numbers are 1-based. `partitions` maps each prime dividing the group order to its
    cyclic-extensions partition.
    """
    tom.validate()
    _check_partitions(tom, partitions)
    s = tom.size
    diagonal = tom.diagonal

    c = s
    L = [0]
    C = [[s]]
    trace = [StepRecord(kind=StepKind.INITIALIZE, class_number=s, diag=diagonal[s - 1], primes=(),
                        L=(0,), C=((s,),), chi_before=0, chi_after=1)]
    while c > 1:
        k = c - 1
        diag = diagonal[k - 1]
        P = prime_divisors(diag)
        chi_before = chi(L)
        if not P:
            L = [0] + L
            C = [[k]] + C
            state_L, state_C = _as_state(L, C)
            record = StepRecord(kind=StepKind.ISOLATED, class_number=k, diag=diag, primes=P,
                                L=state_L, C=state_C, chi_before=chi_before, chi_after=chi(L))
        else:
            prime_blocks = {p: partitions[p].block_of(k) for p in P}
            glued = []  # positions in C, in the order they were found
            for p in P:
                Ep = set(prime_blocks[p])
                for j, block in enumerate(C):
                    if j not in glued and not Ep.isdisjoint(block):
                        glued.append(j)
            kept = [j for j in range(len(C)) if j not in glued]
            N = len(P) - len(glued) + sum(L[j] for j in range(len(C)) if j in glued)
            new_block = [k] + [x for j in glued for x in C[j]]
            glued_blocks = tuple(tuple(C[j]) for j in glued)
            L = [N] + [L[j] for j in kept]
            C = [new_block] + [C[j] for j in kept]
            state_L, state_C = _as_state(L, C)
            record = StepRecord(kind=StepKind.GLUED, class_number=k, diag=diag, primes=P,
                                prime_blocks=prime_blocks, glued=glued_blocks, N=N,
                                L=state_L, C=state_C, chi_before=chi_before, chi_after=chi(L))
        _check_euler_additivity(record)
        trace.append(record)
        c -= 1

    raw_L, raw_components = _as_state(L, C)
    print_and_log_progress(f'{tom.name or "table"}: L = {list(raw_L)} after {len(trace)} steps')
    return GaloisInvariant(raw_L=raw_L, raw_components=raw_components, trace=tuple(trace), name=tom.name)
