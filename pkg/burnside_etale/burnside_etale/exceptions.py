from abc import abstractmethod, ABCMeta
from dataclasses import dataclass, is_dataclass, fields


class burnside_etaleException(Exception, metaclass=ABCMeta):
    """
    Base class for all exceptions in this package.
    """
    @abstractmethod
    def __str__(self):
        pass

    def __reduce__(self):
        if is_dataclass(self):
            field_values = [getattr(self, f.name) for f in fields(self)]
            return self.__class__, tuple(field_values)
        return super().__reduce__()


class InputException(burnside_etaleException):
    """
    Base class for problems with user-provided input: groups, generator files, tables of marks, arguments.
    The command line reports these with exit code 1.
    """
    pass


class InvariantViolation(burnside_etaleException):
    """
    Base class for a mathematical invariant that was asserted at run time and found not to hold.
    The command line reports these with exit code 1.
    """
    pass


class ResourceException(burnside_etaleException):
    """
    Base class for computations refused because they exceed a configured resource limit.
    The command line reports these with exit code 2.
    """
    pass


@dataclass
class InvalidConfiguration(InputException, ValueError):
    """
    Raised when a setting (typically read from the environment) has an invalid value.
    """
    setting: str
    reason: str

    def __str__(self):
        return f'Invalid value for {self.setting}: {self.reason}'
