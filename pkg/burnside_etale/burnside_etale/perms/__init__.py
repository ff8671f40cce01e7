from .exceptions import InvalidPermutation, DegreeMismatch, EmptyGeneratorList, UnsupportedGroupParameter, \
    GroupOrderCapExceeded
from .permutation import Permutation, compose
from .element_set import ElementSet
from .group import FiniteGroup, generate_group
from .derived import commutator_subgroup, derived_series, derived_subgroup, is_solvable
