import contextlib
import os
from dataclasses import dataclass
from typing import Any, Callable, Optional


@dataclass
class Mutable:
    """
    A module-level setting that can be changed at run time, or temporarily within a context.
    """
    val: Any

    def set(self, val: Any):
        self.val = val

    @contextlib.contextmanager
    def temporary_set(self, val):
        current = self.val
        self.set(val)
        try:
            yield
        finally:
            self.set(current)

    @classmethod
    def from_environ(cls, name: str, default: Any, parse: Callable[[str], Any] = str):
        """
        Create a setting initialized from the environment variable `name`.
        If `parse` fails, the raw string is kept; whoever reads the setting validates it.
        """
        raw = os.environ.get(name)
        if raw is None:
            return cls(default)
        try:
            return cls(parse(raw))
        except ValueError:
            return cls(raw)

    def __eq__(self, other):
        if isinstance(other, Mutable):
            other = other.val
        return self.val == other

    def __bool__(self):
        return bool(self.val)


@dataclass
class Flag(Mutable):
    val: bool = False

    def __bool__(self):
        return self.val


def get_bounded_int(setting: Mutable, lower: int, upper: Optional[int] = None) -> int:
    """
    Return the value of an integer setting.
    Raise ValueError if it is not an int within [lower, upper].
    """
    value = setting.val
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f'expected an integer, got {value!r}')
    if value < lower or (upper is not None and value > upper):
        raise ValueError(f'{value} is outside the allowed range [{lower}, {upper}]')
    return value
