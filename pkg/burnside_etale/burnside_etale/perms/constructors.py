from itertools import product
from typing import Callable

from burnside_etale.env import get_order_cap
from burnside_etale.formats.cycle_notation import read_generator_file
from burnside_etale.formats.group_spec import GroupSpec, Cyclic, Symmetric, Alternating, Dihedral, Quaternion8, \
    SL2, DirectProduct, FromGenerators, GeneratorFile
from burnside_etale.utils.print_to_file import print_and_log_progress

from .exceptions import UnsupportedGroupParameter
from .group import FiniteGroup, generate_group
from .permutation import Permutation

Matrix = tuple[tuple[int, int], tuple[int, int]]


def _cycle(points: range, degree: int) -> Permutation:
    return Permutation.from_cycles([tuple(points)], degree)


def _cyclic_generators(spec: Cyclic) -> list[Permutation]:
    if spec.n == 1:
        return [Permutation.identity(1)]
    return [_cycle(range(1, spec.n + 1), spec.n)]


def _symmetric_generators(spec: Symmetric) -> list[Permutation]:
    n = spec.n
    if n == 1:
        return [Permutation.identity(1)]
    if n == 2:
        return [_cycle(range(1, 3), 2)]
    return [_cycle(range(1, 3), n), _cycle(range(1, n + 1), n)]


def _alternating_generators(spec: Alternating) -> list[Permutation]:
    n = spec.n
    if n <= 2:
        return [Permutation.identity(n)]
    return [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]


def _dihedral_generators(spec: Dihedral) -> list[Permutation]:
    m = spec.order // 2
    if m == 1:
        return [_cycle(range(1, 3), 2)]
    if m == 2:
        # the Klein four group, acting regularly
        return [Permutation.from_cycles([(1, 2), (3, 4)], 4), Permutation.from_cycles([(1, 3), (2, 4)], 4)]
    rotation = _cycle(range(1, m + 1), m)
    reflection = Permutation(tuple((m + 1 - x) % m + 1 for x in range(1, m + 1)))
    return [rotation, reflection]


def nonzero_vectors(p: int) -> list[tuple[int, int]]:
    """
    The nonzero vectors of the plane over the field with p elements, in lexicographic order.
    Vector k of the list is point k + 1.
    """
    return [v for v in product(range(p), repeat=2) if v != (0, 0)]


def matrix_permutation(matrix: Matrix, p: int) -> Permutation:
    """
    The permutation of the nonzero vectors v -> matrix·v (mod p).
    """
    vectors = nonzero_vectors(p)
    point_of = {v: k for k, v in enumerate(vectors, start=1)}
    (a, b), (c, d) = matrix
    return Permutation(tuple(point_of[((a * x + b * y) % p, (c * x + d * y) % p)] for x, y in vectors))


def _sl2_generators(spec: SL2) -> list[Permutation]:
    p = spec.p
    return [matrix_permutation(((1, 1), (0, 1)), p), matrix_permutation(((0, p - 1), (1, 0)), p)]


def _quaternion_generators(spec: Quaternion8) -> list[Permutation]:
    # i and j inside SL2(3): i² = j² = −1 and ij = −ji
    return [matrix_permutation(((0, 2), (1, 0)), 3), matrix_permutation(((1, 1), (1, 2)), 3)]


def _direct_product_generators(spec: DirectProduct) -> list[Permutation]:
    factors = [spec_generators(factor) for factor in spec.factors]
    degree = sum(gens[0].degree for gens in factors)
    generators = []
    shift = 0
    for gens in factors:
        generators.extend(g.extended(degree, shift) for g in gens)
        shift += gens[0].degree
    return generators


def _from_generators(spec: FromGenerators) -> list[Permutation]:
    if not spec.permutations:
        raise UnsupportedGroupParameter(spec.render(), 'no generators given')
    return list(spec.permutations)


def _generator_file(spec: GeneratorFile) -> list[Permutation]:
    try:
        generators = read_generator_file(spec.path)
    except OSError as e:
        raise UnsupportedGroupParameter(spec.render(), f'cannot read generator file: {e.strerror}')
    if not generators:
        raise UnsupportedGroupParameter(spec.render(), 'the generator file lists no permutations')
    return generators


SPEC_TYPES_TO_GENERATORS: dict[type, Callable[..., list[Permutation]]] = {
    Cyclic: _cyclic_generators,
    Symmetric: _symmetric_generators,
    Alternating: _alternating_generators,
    Dihedral: _dihedral_generators,
    Quaternion8: _quaternion_generators,
    SL2: _sl2_generators,
    DirectProduct: _direct_product_generators,
    FromGenerators: _from_generators,
    GeneratorFile: _generator_file,
}


def spec_generators(spec: GroupSpec) -> list[Permutation]:
    """
    Generators, all of the same degree, of the group described by `spec`.
    """
    return SPEC_TYPES_TO_GENERATORS[type(spec)](spec)


def make_group(spec: GroupSpec) -> FiniteGroup:
    """
    Build and enumerate the group described by `spec`.
    The order of built-in groups is checked against the order cap before anything is enumerated.
    """
    cap = get_order_cap()
    spec.check_order_cap(cap)
    group = generate_group(spec_generators(spec), name=spec.render())
    print_and_log_progress(f'Enumerated {group.name}: order {group.order}, degree {group.degree}')
    return group
