"""Compiler-directed API migration for MiniLang projects."""

from ._core import (
    DEFAULT_SEED,
    __version__,
    check,
    hungarian,
    levenshtein,
    migrate,
    mine,
    reprint,
    run_suite,
)

__all__ = [
    "DEFAULT_SEED",
    "__version__",
    "check",
    "hungarian",
    "levenshtein",
    "migrate",
    "mine",
    "reprint",
    "run_suite",
]
