from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Any, Union, get_args, get_origin

from burnside_etale.exceptions import InputException


@dataclass
class WrongTypeException(InputException, TypeError):
    """
    Raised when a (parsed) value is of the wrong type.
    """
    message: str = ''

    def __str__(self):
        return self.message


def _type_name(type_) -> str:
    return getattr(type_, '__name__', str(type_))


def check_all_of_type(elements: Iterable, type_: type, description: str = ''):
    for e in elements:
        validate_value_type(e, type_, description)


def validate_value_type(value: Any, type_: Any, description: str = ''):
    """
    Validate that a value, typically loaded from json, matches a type annotation like `list[list[int]]`.
    bool is not accepted where int is expected.
    Raise WrongTypeException otherwise.
    """
    if description:
        description = ' ' + description
    origin_type = get_origin(type_)
    if origin_type is None:
        origin_type = type_
    if origin_type is Any:
        return
    if origin_type is Union:
        options = get_args(type_)
        for option in options:
            try:
                validate_value_type(value, option)
                return
            except WrongTypeException:
                pass
        names = ' or '.join(f'`{_type_name(option)}`' for option in options)
        raise WrongTypeException(f'object{description} must be of type {names}')
    if type_ is None or type_ is type(None):
        if value is not None:
            raise WrongTypeException(f'object{description} must be null')
        return
    if not isinstance(value, origin_type) or (origin_type is int and isinstance(value, bool)):
        raise WrongTypeException(f'object{description} must be of type `{origin_type.__name__}`')

    child_types = get_args(type_)
    if not child_types:
        return
    if isinstance(value, dict):
        check_all_of_type(value.keys(), child_types[0], f'within the dict keys{description}')
        check_all_of_type(value.values(), child_types[1], f'within the dict values{description}')
    elif isinstance(value, list) and len(child_types) == 1:
        check_all_of_type(value, child_types[0], f'within the list{description}')
    else:
        raise NotImplementedError(f'validate_value_type: {type(value)} is not implemented')
