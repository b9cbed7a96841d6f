"""Enumeration bounds and the exception types shared by every module."""

from __future__ import annotations

import os


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


ENUM_BOUND = _env_int("NTCODES_ENUM_BOUND", 10**6)
ORBIT_BOUND = _env_int("NTCODES_ORBIT_BOUND", 10**7)
PARTITION_BOUND = _env_int("NTCODES_PARTITION_BOUND", 10**8)
INDEX_BOUND = _env_int("NTCODES_INDEX_BOUND", 10**4)


class BoundExceeded(RuntimeError):
    """A computation would exceed its configured size bound."""

    def __init__(self, what: str, bound: int, size: int | None = None):
        self.what = what
        self.bound = bound
        self.size = size
        msg = f"{what} exceeds bound {bound}"
        if size is not None:
            msg += f" (size {size})"
        super().__init__(msg)


class ParseError(ValueError):
    """Malformed input file; carries the offending line number (1-based)."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class PreconditionError(ValueError):
    """Input falls outside the hypotheses an operation requires."""


def set_bounds(enum: int | None = None, orbit: int | None = None,
               partition: int | None = None, index: int | None = None) -> None:
    """Override the default bounds for the rest of the process."""
    global ENUM_BOUND, ORBIT_BOUND, PARTITION_BOUND, INDEX_BOUND
    for name, value in (("enum", enum), ("orbit", orbit), ("partition", partition),
                        ("index", index)):
        if value is not None and value <= 0:
            raise ValueError(f"{name} bound must be positive, got {value}")
    if enum is not None:
        ENUM_BOUND = enum
    if orbit is not None:
        ORBIT_BOUND = orbit
    if partition is not None:
        PARTITION_BOUND = partition
    if index is not None:
        INDEX_BOUND = index
