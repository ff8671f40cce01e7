import sys
from contextlib import contextmanager
from functools import partial
from pathlib import Path
from typing import Optional, TextIO

import colorama

from burnside_etale.env import VERBOSE

from .mutable import Mutable

CONSOLE_LOG_FILE = Mutable(None)


def colored_text(text: str, color: str) -> str:
    if not color:
        return text
    return color + text + colorama.Style.RESET_ALL


@contextmanager
def console_log_file_context(file_path: Optional[Path]):
    """
    Context manager to temporarily mirror everything printed with `print_and_log` into a file.
    The file gets the text without colors.
    """
    with CONSOLE_LOG_FILE.temporary_set(file_path):
        yield


def print_and_log(text: str, color: str = '', file: Optional[TextIO] = None, should_log: bool = True, **kwargs):
    """
    Print to the console (stdout unless `file` is given), in color if the stream is a terminal,
    and append the plain text to CONSOLE_LOG_FILE, if set.
    """
    file = file or sys.stdout
    is_tty = hasattr(file, 'isatty') and file.isatty()
    print(colored_text(text, color) if is_tty else text, file=file, **kwargs)
    if should_log and CONSOLE_LOG_FILE.val is not None:
        with open(CONSOLE_LOG_FILE.val, 'a', encoding='utf-8') as f:
            print(text, file=f, **kwargs)


def print_and_log_progress(text: str):
    """
    Report progress of a long computation, on stderr, only when VERBOSE is set.
    """
    if VERBOSE:
        print_and_log(text, color=colorama.Fore.CYAN, file=sys.stderr)


def print_and_log_red(text: str, **kwargs):
    kwargs.setdefault('file', sys.stderr)
    print_and_log(text, color=colorama.Fore.RED, **kwargs)


print_and_log_green = partial(print_and_log, color=colorama.Fore.GREEN)
