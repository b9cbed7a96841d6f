"""Text formats for groups, paired actions, codes and wreath-product groups.

Group file::

    degree 6
    (0 1 2 3 4 5)      # cycle notation
    1 0 2 3 4 5        # or the image array

Paired-action file: a group file followed by ``target_degree n`` and one
``map i -> <perm>`` line per generator.

Code file: a header ``m q`` and one word per line.

Wreath group file: a header ``wreath m q`` and one JSON element per line,
``{"m": .., "q": .., "bottom": [[..], ..], "top": [..]}``.

``#`` starts a comment everywhere. Writers always emit image arrays and
canonical ordering, so output bytes are deterministic.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterator

from .codes import PairedAction
from .hamming import Code
from .limits import ParseError
from .perm import GroupHom, PermGroup, Permutation
from .wreath import WreathElement, WreathGroup


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _read(path_or_text: str | Path, is_text: bool) -> tuple[str, str | None]:
    if is_text:
        return str(path_or_text), None
    p = Path(path_or_text)
    return p.read_text(), str(p)


def _perm(text: str, n: int, no: int, src: str | None) -> Permutation:
    try:
        return Permutation.parse(text, n)
    except ValueError as exc:
        raise ParseError(str(exc), no, src) from None


def _header_int(line: str, key: str, no: int, src: str | None) -> int:
    m = re.fullmatch(rf"{key}\s+(\d+)", line)
    if m is None:
        raise ParseError(f"expected '{key} <n>'", no, src)
    n = int(m.group(1))
    if n <= 0:
        raise ParseError(f"{key} must be positive", no, src)
    return n


# groups and paired actions -------------------------------------------------


def parse_group_and_maps(text: str, src: str | None = None
                         ) -> tuple[PermGroup, int | None, dict[int, Permutation]]:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty group file", None, src)
    no, first = lines[0]
    n = _header_int(first, "degree", no, src)
    gens = []
    target = None
    maps: dict[int, Permutation] = {}
    for no, line in lines[1:]:
        if line.startswith("target_degree"):
            if target is not None:
                raise ParseError("repeated target_degree", no, src)
            target = _header_int(line, "target_degree", no, src)
        elif line.startswith("map"):
            m = re.fullmatch(r"map\s+(\d+)\s*->\s*(.+)", line)
            if m is None:
                raise ParseError("expected 'map <i> -> <perm>'", no, src)
            if target is None:
                raise ParseError("map line before target_degree", no, src)
            i = int(m.group(1))
            if i in maps:
                raise ParseError(f"generator {i} mapped twice", no, src)
            maps[i] = _perm(m.group(2), target, no, src)
        else:
            if target is not None:
                raise ParseError("generator line after target_degree", no, src)
            gens.append(_perm(line, n, no, src))
    return PermGroup(n, gens), target, maps


def read_group(path_or_text: str | Path, is_text: bool = False) -> PermGroup:
    text, src = _read(path_or_text, is_text)
    G, target, _ = parse_group_and_maps(text, src)
    if target is not None:
        raise ParseError("group file contains a map section", None, src)
    return G


def read_hom(path_or_text: str | Path, is_text: bool = False) -> GroupHom:
    text, src = _read(path_or_text, is_text)
    G, target, maps = parse_group_and_maps(text, src)
    if target is None:
        raise ParseError("missing target_degree", None, src)
    k = len(G.generators)
    if sorted(maps) != list(range(k)):
        raise ParseError(f"need map lines for generators 0..{k - 1}", None, src)
    return GroupHom(G, [maps[i] for i in range(k)], target)


def read_paired(path_or_text: str | Path, is_text: bool = False) -> PairedAction:
    hom = read_hom(path_or_text, is_text)
    if hom.target_degree != hom.source.degree:
        raise ParseError("paired actions must have equal degrees")
    return PairedAction(hom.source, hom.target_images)


def format_perm(p: Permutation) -> str:
    return " ".join(map(str, p.images))


def write_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"] + [format_perm(g) for g in G.generators]
    return "\n".join(lines) + "\n"


def write_hom(source: PermGroup, images, target_degree: int) -> str:
    out = write_group(source) + f"target_degree {target_degree}\n"
    out += "".join(f"map {i} -> {format_perm(t)}\n" for i, t in enumerate(images))
    return out


def write_paired(pa: PairedAction) -> str:
    return write_hom(pa.group1, pa.images, pa.q)


# codes -----------------------------------------------------------------------


def read_code(path_or_text: str | Path, is_text: bool = False) -> Code:
    text, src = _read(path_or_text, is_text)
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty code file", None, src)
    no, first = lines[0]
    parts = first.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("expected header 'm q'", no, src)
    m, q = int(parts[0]), int(parts[1])
    if m <= 0 or q <= 0:
        raise ParseError("m and q must be positive", no, src)
    words = []
    for no, line in lines[1:]:
        parts = line.split()
        if len(parts) != m:
            raise ParseError(f"expected {m} symbols, got {len(parts)}", no, src)
        try:
            w = tuple(int(x) for x in parts)
        except ValueError:
            raise ParseError("symbols must be integers", no, src) from None
        if any(not 0 <= a < q for a in w):
            raise ParseError(f"symbol out of range 0..{q - 1}", no, src)
        words.append(w)
    if not words:
        raise ParseError("code has no words", None, src)
    return Code(m, q, tuple(words))


def write_code(C: Code) -> str:
    lines = [f"{C.m} {C.q}"] + [" ".join(map(str, w)) for w in C.words]
    return "\n".join(lines) + "\n"


# wreath groups ---------------------------------------------------------------


def read_wreath_group(path_or_text: str | Path, is_text: bool = False) -> WreathGroup:
    text, src = _read(path_or_text, is_text)
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty wreath group file", None, src)
    no, first = lines[0]
    h = re.fullmatch(r"wreath\s+(\d+)\s+(\d+)", first)
    if h is None:
        raise ParseError("expected header 'wreath m q'", no, src)
    m, q = int(h.group(1)), int(h.group(2))
    gens = []
    for no, line in lines[1:]:
        try:
            x = WreathElement.from_json(json.loads(line))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad element: {exc}", no, src) from None
        if (x.m, x.q) != (m, q):
            raise ParseError(f"element context H({x.m},{x.q}) != H({m},{q})", no, src)
        gens.append(x)
    return WreathGroup(m, q, gens)


def write_wreath_group(X: WreathGroup) -> str:
    lines = [f"wreath {X.m} {X.q}"]
    lines += [json.dumps(g.to_json(), separators=(",", ":")) for g in X.generators]
    return "\n".join(lines) + "\n"


def read_table(path_or_text: str | Path, is_text: bool = False) -> list[list[int]]:
    """Group multiplication table: one row of integers per line."""
    text, src = _read(path_or_text, is_text)
    rows = []
    for no, line in _lines(text):
        try:
            rows.append([int(x) for x in line.split()])
        except ValueError:
            raise ParseError("table entries must be integers", no, src) from None
    if not rows:
        raise ParseError("empty table", None, src)
    return rows
