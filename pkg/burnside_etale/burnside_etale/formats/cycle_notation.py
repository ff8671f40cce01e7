from pathlib import Path
from typing import Optional, Sequence, Union

import regex

from burnside_etale.perms.permutation import Permutation
from burnside_etale.perms.exceptions import InvalidPermutation

from .exceptions import CycleNotationError

TOKEN_PATTERN = regex.compile(r'(?P<open>\()|(?P<close>\))|(?P<comma>,)|(?P<int>\d+)|(?P<space>\s+)|(?P<bad>.)')

Cycles = list[tuple[int, ...]]


def parse_cycles(text: str, line_number: Optional[int] = None) -> Cycles:
    """
    Parse cycle notation like '(1,2)(3,4,5)' into a list of cycles; '()' is the identity.
    Whitespace is ignored.
    """
    def error(position, reason):
        return CycleNotationError(text=text, position=position, reason=reason, line_number=line_number)

    if not text.strip():
        raise error(0, 'empty permutation (write the identity as "()")')
    cycles = []
    current = None  # points of the cycle being read, None when outside parentheses
    expect_point = False
    last_position = 0
    for match in TOKEN_PATTERN.finditer(text):
        kind, position = match.lastgroup, match.start()
        last_position = position
        if kind == 'space':
            continue
        if kind == 'bad':
            raise error(position, f'unexpected character {match.group()!r}')
        if current is None:
            if kind != 'open':
                raise error(position, 'expected "("')
            current = []
            expect_point = True
        elif kind == 'int':
            if not expect_point:
                raise error(position, 'expected "," or ")"')
            point = int(match.group())
            if point < 1:
                raise error(position, 'points are numbered from 1')
            current.append(point)
            expect_point = False
        elif kind == 'comma':
            if expect_point:
                raise error(position, 'expected a point')
            expect_point = True
        elif kind == 'close':
            if expect_point and current:
                raise error(position, 'expected a point')
            if len(set(current)) != len(current):
                raise error(position, 'a point is repeated within the cycle')
            if current:
                cycles.append(tuple(current))
            current = None
        else:
            raise error(position, 'unexpected "("')
    if current is not None:
        raise error(last_position, 'unclosed cycle')
    return cycles


def _max_point(cycles: Cycles) -> int:
    return max((max(cycle) for cycle in cycles), default=1)


def permutation_from_cycles(cycles: Cycles, degree: int, text: str = '', line_number: Optional[int] = None) \
        -> Permutation:
    try:
        return Permutation.from_cycles(cycles, degree)
    except InvalidPermutation as e:
        raise CycleNotationError(text=text, position=0, reason=e.reason, line_number=line_number)


def parse_permutation(text: str, degree: Optional[int] = None) -> Permutation:
    """
    Parse a single permutation. The degree defaults to the largest point mentioned.
    """
    cycles = parse_cycles(text)
    return permutation_from_cycles(cycles, degree or _max_point(cycles), text)


def parse_generators(lines: Sequence[str], line_numbers: Optional[Sequence[int]] = None) -> list[Permutation]:
    """
    Parse permutations given one per item; all get the degree of the largest point mentioned in any of them.
    """
    line_numbers = line_numbers or list(range(1, len(lines) + 1))
    parsed = [parse_cycles(line, number) for line, number in zip(lines, line_numbers)]
    degree = max((_max_point(cycles) for cycles in parsed), default=1)
    return [permutation_from_cycles(cycles, degree, line, number)
            for cycles, line, number in zip(parsed, lines, line_numbers)]


def parse_generator_text(text: str) -> list[Permutation]:
    """
    Parse a generator file: one permutation per line. Blank lines and lines starting with '#' are skipped.
    """
    lines, numbers = [], []
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip() and not line.lstrip().startswith('#'):
            lines.append(line)
            numbers.append(number)
    return parse_generators(lines, numbers)


def read_generator_file(path: Union[str, Path]) -> list[Permutation]:
    return parse_generator_text(Path(path).read_text(encoding='utf-8'))


def render_generators(permutations: Sequence[Permutation]) -> str:
    return ''.join(p.cycle_string() + '\n' for p in permutations)
