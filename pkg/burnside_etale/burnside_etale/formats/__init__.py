from .exceptions import GroupSpecSyntaxError, CycleNotationError, TomFormatError
from .group_spec import GroupSpec, Cyclic, Symmetric, Alternating, Dihedral, Quaternion8, SL2, DirectProduct, \
    FromGenerators, GeneratorFile, parse_group_spec
from .cycle_notation import parse_cycles, parse_permutation, parse_generators, parse_generator_text, \
    read_generator_file, render_generators
from .tom_document import TomDocument
from .gap_tom import parse_gap_tom, render_gap_tom
from .json_tom import read_json_tom, write_json_tom
from .emit import EmitMode, emit_result
