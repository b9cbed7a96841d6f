"""Neighbour transitive codes in Hamming graphs."""

from __future__ import annotations

from .hamming import Code, distance, min_distance
from .limits import BoundExceeded, ParseError, PreconditionError
from .perm import PermGroup, Permutation
from .wreath import WreathElement, WreathGroup

__all__ = [
    "BoundExceeded", "Code", "ParseError", "PermGroup", "Permutation",
    "PreconditionError", "WreathElement", "WreathGroup", "distance", "min_distance",
]
