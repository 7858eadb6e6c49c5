"""Global size limits.

Every constructor that materializes a Cayley table checks the element count
against the active guard, and every exhaustive search charges its step budget
against SEARCH_BUDGET. Both are module-level so a CLI flag can override them
for a whole run; the library itself never mutates them.
"""

from __future__ import annotations

import contextlib

DEFAULT_SIZE_GUARD = 4096
DEFAULT_SEARCH_BUDGET = 10**6
DEFAULT_SUBSET_BUDGET = 2**16

_size_guard = DEFAULT_SIZE_GUARD


def size_guard() -> int:
    return _size_guard


def set_size_guard(n: int) -> None:
    global _size_guard
    if n < 1:
        raise ValueError("size guard must be positive")
    _size_guard = int(n)


@contextlib.contextmanager
def guard_limit(n: int):
    """Temporarily replace the size guard (used by the evaluator and tests)."""
    old = _size_guard
    set_size_guard(n)
    try:
        yield
    finally:
        set_size_guard(old)
