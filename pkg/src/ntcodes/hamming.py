"""Vertices, codes and distance partitions in the Hamming graph H(m, q).

A vertex is a plain tuple of ``m`` integers in ``range(q)``. A :class:`Code`
keeps its words deduplicated and sorted lexicographically.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import limits
from .limits import BoundExceeded

Vertex = tuple


def check_vertex(v: Sequence[int], m: int, q: int) -> Vertex:
    v = tuple(int(a) for a in v)
    if len(v) != m:
        raise ValueError(f"vertex {v} has length {len(v)}, expected {m}")
    for a in v:
        if not 0 <= a < q:
            raise ValueError(f"symbol {a} out of range for q={q}")
    return v


@dataclass(frozen=True)
class Code:
    m: int
    q: int
    words: tuple[Vertex, ...]
    _set: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.m < 1 or self.q < 1:
            raise ValueError("m and q must be positive")
        words = sorted({check_vertex(w, self.m, self.q) for w in self.words})
        if not words:
            raise ValueError("a code must be nonempty")
        object.__setattr__(self, "words", tuple(words))
        object.__setattr__(self, "_set", frozenset(words))

    @classmethod
    def from_words(cls, m: int, q: int, words: Iterable[Sequence[int]]) -> "Code":
        return cls(m, q, tuple(tuple(w) for w in words))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._set

    @property
    def word_set(self) -> frozenset:
        return self._set

    def array(self) -> np.ndarray:
        return np.asarray(self.words, dtype=np.int16).reshape(len(self.words), self.m)

    def space_size(self) -> int:
        return self.q ** self.m

    def is_complete(self) -> bool:
        return len(self.words) == self.q ** self.m


def distance(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(1 for x, y in zip(a, b) if x != y)


def nu(a: Sequence[int], i: int, s: int, q: int | None = None) -> Vertex:
    """``a`` with coordinate ``i`` replaced by ``s``."""
    if not 0 <= i < len(a):
        raise ValueError(f"coordinate {i} out of range")
    if s < 0 or (q is not None and s >= q):
        raise ValueError(f"symbol {s} out of range")
    v = list(a)
    v[i] = s
    return tuple(v)


def sphere(a: Sequence[int], k: int, q: int) -> list[Vertex]:
    m = len(a)
    if not 0 <= k <= m:
        raise ValueError(f"radius {k} out of range 0..{m}")
    out = []
    for coords in itertools.combinations(range(m), k):
        choices = [[s for s in range(q) if s != a[i]] for i in coords]
        for syms in itertools.product(*choices):
            v = list(a)
            for i, s in zip(coords, syms):
                v[i] = s
            out.append(tuple(v))
    out.sort()
    return out


def sphere_size(m: int, q: int, k: int) -> int:
    return comb(m, k) * (q - 1) ** k


def all_vertices(m: int, q: int) -> Iterable[Vertex]:
    return itertools.product(range(q), repeat=m)


def _row_min(arr: np.ndarray, rows: range) -> int:
    best = arr.shape[1] + 1
    for r in rows:
        rest = arr[r + 1:]
        if len(rest) == 0:
            continue
        d = int((rest != arr[r]).sum(axis=1).min())
        if d < best:
            best = d
            if best <= 1:
                break
    return best


def min_distance(C: Code, threads: int = 1) -> int:
    """Least distance between distinct codewords, by a full pairwise scan."""
    if len(C) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    arr = C.array()
    n = len(arr)
    if threads <= 1:
        return _row_min(arr, range(n))
    # interleave rows so chunks carry similar work
    chunks = [range(t, n, threads) for t in range(threads)]
    with ThreadPoolExecutor(threads) as pool:
        return min(pool.map(lambda rows: _row_min(arr, rows), chunks))


def distance_to_code(v: Sequence[int], C: Code) -> int:
    v = check_vertex(v, C.m, C.q)
    if v in C.word_set:
        return 0
    return int((C.array() != np.asarray(v)).sum(axis=1).min())


def neighbours_of(v: Vertex, q: int) -> Iterable[Vertex]:
    for i, a in enumerate(v):
        head, tail = v[:i], v[i + 1:]
        for s in range(q):
            if s != a:
                yield head + (s,) + tail


def neighbour_set(C: Code | Iterable[Vertex], q: int | None = None) -> frozenset:
    """Vertices adjacent to some codeword but outside the code.

    Empty for the complete code; check ``C.is_complete()`` to tell the cases
    apart without comparing sizes.
    """
    if isinstance(C, Code):
        words, q = C.word_set, C.q
    else:
        words = frozenset(C)
    out = set()
    for w in words:
        for nb in neighbours_of(w, q):
            if nb not in words:
                out.add(nb)
    return frozenset(out)


@dataclass(frozen=True)
class DistancePartition:
    cells: tuple[frozenset, ...]
    m: int
    q: int

    @property
    def rho(self) -> int:
        return len(self.cells) - 1

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def cell_code(self, i: int) -> Code:
        return Code(self.m, self.q, tuple(self.cells[i]))

    def index_of(self) -> dict:
        return {v: i for i, cell in enumerate(self.cells) for v in cell}


def distance_partition(C: Code, bound: int | None = None,
                       max_level: int | None = None) -> DistancePartition:
    """Cells ``C_0 = C, C_1, ...`` by frontier expansion.

    ``C_{i+1} = N(C_i) minus (C_i and C_{i-1})``. Stops at the first empty
    frontier or after ``max_level`` cells beyond ``C_0``.
    """
    bound = limits.PARTITION_BOUND if bound is None else bound
    q = C.q
    prev: frozenset = frozenset()
    cur = C.word_set
    cells = [cur]
    visited = len(cur)
    while max_level is None or len(cells) <= max_level:
        nxt = set()
        for v in cur:
            for nb in neighbours_of(v, q):
                if nb not in cur and nb not in prev:
                    nxt.add(nb)
            if visited + len(nxt) > bound:
                raise BoundExceeded("distance partition visited vertices", bound,
                                    visited + len(nxt))
        if not nxt:
            break
        visited += len(nxt)
        prev, cur = cur, frozenset(nxt)
        cells.append(cur)
    return DistancePartition(tuple(cells), C.m, C.q)


def covering_radius(C: Code, bound: int | None = None) -> int:
    return distance_partition(C, bound).rho


def distance_profiles(rows: np.ndarray, code: np.ndarray) -> np.ndarray:
    """For each row ``v``, counts ``|{c : d(v,c) = k}|`` for ``k = 0..m``."""
    m = code.shape[1]
    out = np.zeros((len(rows), m + 1), dtype=np.int64)
    step = max(1, 2_000_000 // max(1, len(code)))
    offsets = None
    for start in range(0, len(rows), step):
        block = rows[start:start + step]
        d = np.zeros((len(block), len(code)), dtype=np.int16)
        for j in range(m):
            d += block[:, j, None] != code[None, :, j]
        if offsets is None or len(offsets) != len(block):
            offsets = (np.arange(len(block)) * (m + 1))[:, None]
        counts = np.bincount((d + offsets).ravel(), minlength=len(block) * (m + 1))
        out[start:start + len(block)] = counts.reshape(len(block), m + 1)
    return out
