import numpy as np

from .element_set import ElementSet
from .group import FiniteGroup


def commutator_subgroup(group: FiniteGroup, subgroup: ElementSet) -> ElementSet:
    """
    [H, H]: the closure of all commutators a⁻¹b⁻¹ab with a, b in H.
    """
    mul, inv = group.multiplication, group.inverse
    a = subgroup.indices[:, np.newaxis]
    b = subgroup.indices[np.newaxis, :]
    commutators = np.unique(mul[mul[inv[a], inv[b]], mul[a, b]])
    result = group.trivial_subgroup
    generators = []
    # add commutators one at a time, skipping those already generated
    for c in commutators:
        if int(c) not in result:
            generators.append(int(c))
            result = group.closure(generators, base=result)
    return result


def derived_series(group: FiniteGroup) -> list[ElementSet]:
    """
    G = G⁽⁰⁾ ⊇ G⁽¹⁾ ⊇ ... down to the first term equal to its own commutator subgroup.
    """
    series = [group.whole]
    while True:
        derived = commutator_subgroup(group, series[-1])
        if derived == series[-1]:
            return series
        series.append(derived)


def derived_subgroup(group: FiniteGroup) -> ElementSet:
    return commutator_subgroup(group, group.whole)


def is_solvable(group: FiniteGroup) -> bool:
    return len(derived_series(group)[-1]) == 1
