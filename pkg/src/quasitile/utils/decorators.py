__all__ = ["experimental"]

import functools
import logging
import warnings
from typing import Callable, Optional, Union

_warned: set[str] = set()


def experimental(reason: Union[str, Callable, None] = None):
    """Mark an entry point as experimental.

    Usable bare (`@experimental`) or with a reason
    (`@experimental("no dual tiling in 3D")`). The first call of each marked
    function emits a `UserWarning` and a log warning; the docstring gets a
    note appended.
    """
    if callable(reason):
        return _mark(reason, None)
    return lambda func: _mark(func, reason)


def _mark(func: Callable, reason: Optional[str]) -> Callable:
    suffix = f": {reason}" if reason else ""
    note = f"\n\nExperimental{suffix}.\n"

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        if func.__qualname__ not in _warned:
            _warned.add(func.__qualname__)
            message = f"{func.__qualname__} is experimental{suffix}"
            warnings.warn(message, category=UserWarning, stacklevel=2)
            logging.warning(message)
        return func(*args, **kwargs)

    wrapper.__doc__ = (func.__doc__ or "") + note
    return wrapper
