"""Permutation groups on {0, ..., n-1}.

Permutations are stored as image tuples and compose left to right: ``p * r``
applies ``p`` first, then ``r``. Groups are given by generators; a base and
strong generating set is built on demand with deterministic Schreier-Sims.
"""

from __future__ import annotations

import itertools
import random
import re
from collections import deque
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from . import limits
from .limits import BoundExceeded

Perm = tuple  # raw image tuple, used on hot paths


def _mul(p: Perm, r: Perm) -> Perm:
    return tuple(map(r.__getitem__, p))


def _inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _is_id(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def _first_moved(p: Perm) -> int:
    for i, x in enumerate(p):
        if i != x:
            return i
    return -1


class Permutation:
    """A bijection of ``range(degree)`` stored as its image array."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        if not images:
            raise ValueError("degree must be positive")
        self.images = images
        self._hash = None

    @classmethod
    def _raw(cls, images: Perm) -> "Permutation":
        obj = cls.__new__(cls)
        obj.images = images
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n:
                    raise ValueError(f"point {a} out of range for degree {n}")
                if a in seen:
                    raise ValueError(f"point {a} repeated in cycle notation")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text: str, n: int) -> "Permutation":
        """Parse either ``n`` whitespace-separated images or cycle notation."""
        text = text.strip()
        if text.startswith("("):
            if re.fullmatch(r"(\(\s*\d+(\s*[ ,]\s*\d+)*\s*\)\s*|\(\s*\)\s*)+", text) is None:
                raise ValueError(f"bad cycle notation: {text!r}")
            cycles = []
            for body in re.findall(r"\(([^()]*)\)", text):
                pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
                if pts:
                    cycles.append(pts)
            return cls.from_cycles(n, cycles)
        parts = text.split()
        if len(parts) != n:
            raise ValueError(f"expected {n} images, got {len(parts)}")
        return cls(int(t) for t in parts)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __invert__(self) -> "Permutation":
        return Permutation._raw(_inv(self.images))

    def inverse(self) -> "Permutation":
        return ~self

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else ~self
        out = Permutation.identity(self.degree)
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate(self, by: "Permutation") -> "Permutation":
        """``by^-1 * self * by``."""
        return Permutation._raw(_mul(_mul(_inv(by.images), self.images), by.images))

    def __eq__(self, other) -> bool:
        if isinstance(other, Permutation):
            return self.images == other.images
        return NotImplemented

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def is_identity(self) -> bool:
        return _is_id(self.images)

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def num_moved(self) -> int:
        return sum(1 for i, x in enumerate(self.images) if i != x)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen or self.images[i] == i:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        from math import lcm

        return lcm(1, *(len(c) for c in self.cycles()))

    def is_even(self) -> bool:
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def compose(p: Permutation, r: Permutation) -> Permutation:
    """Apply ``p`` then ``r``: ``result[i] = r[p[i]]``."""
    if p.degree != r.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {r.degree}")
    return Permutation._raw(_mul(p.images, r.images))


def inverse(p: Permutation) -> Permutation:
    return ~p


# ---------------------------------------------------------------------------
# Stabilizer chains
# ---------------------------------------------------------------------------


class StabChain:
    """Base, strong generators and per-level transversals.

    ``transversals[i][pt]`` maps ``base[i]`` to ``pt`` and lies in the
    pointwise stabilizer of ``base[:i]``.
    """

    def __init__(self, degree: int, base: list[int], level_gens: list[list[Perm]],
                 transversals: list[dict[int, Perm]]):
        self.degree = degree
        self.base = base
        self.level_gens = level_gens
        self.transversals = transversals
        self._inv_cache: list[dict[int, Perm]] = [dict() for _ in base]

    @property
    def strong_generators(self) -> list[Perm]:
        seen = {}
        for gens in self.level_gens:
            for g in gens:
                seen.setdefault(g, None)
        return list(seen)

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def _u_inv(self, level: int, pt: int) -> Perm:
        cache = self._inv_cache[level]
        v = cache.get(pt)
        if v is None:
            v = _inv(self.transversals[level][pt])
            cache[pt] = v
        return v

    def strip(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        for level in range(start, len(self.base)):
            pt = g[self.base[level]]
            if pt not in self.transversals[level]:
                return g, level
            if pt != self.base[level]:
                g = _mul(g, self._u_inv(level, pt))
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        h, level = self.strip(g)
        return level == len(self.base) and _is_id(h)

    def stabilizer_generators(self, depth: int) -> list[Perm]:
        """Generators of the pointwise stabilizer of ``base[:depth]``."""
        if depth >= len(self.base):
            return []
        return list(self.level_gens[depth])

    def elements(self) -> Iterator[Perm]:
        """All elements as products ``u_{k-1} ... u_0`` (unsorted)."""
        n = self.degree
        ident = tuple(range(n))
        levels = [list(t.values()) for t in self.transversals]

        def rec(i: int, acc: Perm):
            if i < 0:
                yield acc
                return
            for u in levels[i]:
                yield from rec(i - 1, _mul(acc, u))

        yield from rec(len(levels) - 1, ident)

    def random_element(self, rng: random.Random) -> Perm:
        g = tuple(range(self.degree))
        for t in reversed(self.transversals):
            keys = sorted(t)
            g = _mul(g, t[keys[rng.randrange(len(keys))]])
        return g


def _orbit_transversal(point: int, gens: Sequence[Perm], n: int) -> dict[int, Perm]:
    trans = {point: tuple(range(n))}
    queue = deque([point])
    while queue:
        pt = queue.popleft()
        u = trans[pt]
        for g in gens:
            img = g[pt]
            if img not in trans:
                trans[img] = _mul(u, g)
                queue.append(img)
    return trans


def schreier_sims(gens: Sequence[Perm], n: int, base_prefix: Sequence[int] = ()) -> StabChain:
    """Deterministic Schreier-Sims.

    Base points start with ``base_prefix`` and are then chosen greedily as the
    first moved point of the generator that needs one.
    """
    gens = [g for g in dict.fromkeys(gens) if not _is_id(g)]
    base = list(base_prefix)
    if len(set(base)) != len(base):
        raise ValueError("repeated base point")
    for g in gens:
        if all(g[b] == b for b in base):
            base.append(_first_moved(g))
    distr = [[g for g in gens if all(g[b] == b for b in base[:i])] for i in range(len(base))]
    trans = [_orbit_transversal(base[i], distr[i], n) for i in range(len(base))]
    chain = StabChain(n, base, distr, trans)

    i = len(base) - 1
    while i >= 0:
        restart = False
        t_i = chain.transversals[i]
        for beta in list(t_i):
            u_beta = t_i[beta]
            for s in chain.level_gens[i]:
                img = s[beta]
                sg = _mul(_mul(u_beta, s), chain._u_inv(i, img))
                if _is_id(sg):
                    continue
                h, j = chain.strip(sg, i + 1)
                if j == len(chain.base):
                    if _is_id(h):
                        continue
                    chain.base.append(_first_moved(h))
                    chain.level_gens.append([])
                    chain.transversals.append({})
                    chain._inv_cache.append({})
                for lvl in range(i + 1, j + 1):
                    chain.level_gens[lvl].append(h)
                    chain.transversals[lvl] = _orbit_transversal(
                        chain.base[lvl], chain.level_gens[lvl], n)
                    chain._inv_cache[lvl] = {}
                i = j
                restart = True
                break
            if restart:
                break
        if not restart:
            i -= 1
    return chain


# ---------------------------------------------------------------------------
# Permutation groups
# ---------------------------------------------------------------------------


class PermGroup:
    """A permutation group given by generators of a common degree."""

    def __init__(self, degree: int, generators: Iterable[Permutation] = ()):
        if degree <= 0:
            raise ValueError("degree must be positive")
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
            gens.append(g)
        self.degree = degree
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._chain: StabChain | None = None

    @classmethod
    def _from_raw(cls, degree: int, gens: Iterable[Perm]) -> "PermGroup":
        G = cls(degree)
        G.generators = tuple(Permutation._raw(g) for g in dict.fromkeys(gens) if not _is_id(g))
        return G

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, generators={list(self.generators)})"

    @property
    def _raw_gens(self) -> list[Perm]:
        return [g.images for g in self.generators]

    # chain-backed queries -------------------------------------------------

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = schreier_sims(self._raw_gens, self.degree)
        return self._chain

    def build_chain(self, base_prefix: Sequence[int] = ()) -> StabChain:
        if not base_prefix:
            return self.chain
        return schreier_sims(self._raw_gens, self.degree, base_prefix)

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError(f"degree mismatch: {p.degree} vs {self.degree}")
        return self.chain.contains(p.images)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def equals(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree and self.order() == other.order()
                and self.is_subgroup_of(other))

    def random_element(self, rng: random.Random) -> Permutation:
        return Permutation._raw(self.chain.random_element(rng))

    def elements(self, bound: int | None = None) -> list[Permutation]:
        """All elements, sorted lexicographically by image array."""
        bound = limits.ENUM_BOUND if bound is None else bound
        n = self.order()
        if n > bound:
            raise BoundExceeded("group order", bound, n)
        return [Permutation._raw(p) for p in sorted(self.chain.elements())]

    def enumerate_elements(self, bound: int | None = None) -> Iterator[Permutation]:
        return iter(self.elements(bound))

    # orbits -------------------------------------------------------------------

    def orbit(self, point: int) -> set[int]:
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        seen = {point}
        queue = deque([point])
        gens = self._raw_gens
        while queue:
            pt = queue.popleft()
            for g in gens:
                img = g[pt]
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return seen

    def orbits(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for pt in range(self.degree):
            if pt not in seen:
                orb = self.orbit(pt)
                seen |= orb
                out.append(sorted(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_2transitive(self) -> bool:
        """Single orbit on ordered pairs of distinct points."""
        n = self.degree
        if n < 2:
            raise ValueError("2-transitivity needs degree >= 2")
        start = (0, 1)
        seen = {start}
        queue = deque([start])
        gens = self._raw_gens
        while queue:
            a, b = queue.popleft()
            for g in gens:
                img = (g[a], g[b])
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return len(seen) == n * (n - 1)

    def is_semiregular(self) -> bool:
        order = self.order()
        return all(len(orb) == order for orb in self.orbits())

    def is_regular(self) -> bool:
        return self.is_transitive() and self.is_semiregular()

    # subgroups ------------------------------------------------------------

    def point_stabilizer(self, point: int) -> "PermGroup":
        if not 0 <= point < self.degree:
            raise ValueError(f"point {point} out of range for degree {self.degree}")
        chain = self.build_chain([point])
        return PermGroup._from_raw(self.degree, chain.stabilizer_generators(1))

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        points = list(dict.fromkeys(points))
        chain = self.build_chain(points)
        return PermGroup._from_raw(self.degree, chain.stabilizer_generators(len(points)))

    def setwise_stabilizer(self, subset: Iterable[int], bound: int | None = None) -> "PermGroup":
        start = frozenset(subset)
        if any(not 0 <= a < self.degree for a in start):
            raise ValueError("subset point out of range")
        return self.action_stabilizer(start, lambda s, g: frozenset(g[a] for a in s), bound)

    def action_stabilizer(self, obj: Hashable, act: Callable[[Hashable, Perm], Hashable],
                          bound: int | None = None) -> "PermGroup":
        """Stabilizer of ``obj`` under the action ``act(obj, raw_perm)``.

        Orbit with transversal, then Schreier generators filtered through
        membership in the subgroup built so far.
        """
        bound = limits.ENUM_BOUND if bound is None else bound
        gens = self._raw_gens
        n = self.degree
        trans = {obj: tuple(range(n))}
        queue = deque([obj])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = act(x, g)
                if y not in trans:
                    trans[y] = _mul(trans[x], g)
                    if len(trans) > bound:
                        raise BoundExceeded("stabilizer orbit", bound, len(trans))
                    queue.append(y)
        # orbit-stabilizer gives the target order, so stop once it is reached
        target = self.order() // len(trans)
        stab = _SubgroupBuilder(n)
        for x, u in trans.items():
            if stab.order() == target:
                break
            for g in gens:
                y = act(x, g)
                sg = _mul(_mul(u, g), _inv(trans[y]))
                stab.add(sg)
        assert stab.order() == target
        return stab.group()

    def normal_closure(self, elems: Iterable[Permutation]) -> "PermGroup":
        elems = list(elems)
        for e in elems:
            if not self.contains(e):
                raise ValueError(f"{e!r} is not in the group")
        builder = _SubgroupBuilder(self.degree)
        queue = deque()
        for e in elems:
            if builder.add(e.images):
                queue.append(e.images)
        gens = self._raw_gens
        gens_inv = [_inv(g) for g in gens]
        while queue:
            h = queue.popleft()
            for g, gi in zip(gens, gens_inv):
                c = _mul(_mul(gi, h), g)
                if builder.add(c):
                    queue.append(c)
        # conjugates of the new generators by existing ones are implied: the
        # builder's generating set is closed under conjugation by G-generators
        return builder.group()

    def is_normal_in(self, G: "PermGroup") -> bool:
        for h in self.generators:
            for g in G.generators:
                if not self.contains(h.conjugate(g)):
                    return False
        return True

    def derived_subgroup(self) -> "PermGroup":
        comms = []
        for a, b in itertools.product(self.generators, repeat=2):
            comms.append(~a * ~b * a * b)
        return self.normal_closure(comms)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def conjugacy_classes(self, bound: int | None = None) -> list[list[Permutation]]:
        """Classes by exhaustive enumeration; each class sorted, classes ordered by least element."""
        elems = self.elements(bound)
        gens = self._raw_gens
        gens_inv = [_inv(g) for g in gens]
        seen: set[Perm] = set()
        classes = []
        for e in elems:
            if e.images in seen:
                continue
            cls = {e.images}
            queue = deque([e.images])
            while queue:
                x = queue.popleft()
                for g, gi in zip(gens, gens_inv):
                    c = _mul(_mul(gi, x), g)
                    if c not in cls:
                        cls.add(c)
                        queue.append(c)
            seen |= cls
            classes.append(sorted(Permutation._raw(c) for c in cls))
        return classes

    def minimal_normal_subgroups(self, bound: int | None = None) -> list["PermGroup"]:
        """Inclusion-minimal normal closures of single class representatives."""
        classes = self.conjugacy_classes(bound)
        cands = []
        for cls in classes:
            rep = cls[0]
            if rep.is_identity():
                continue
            cands.append(self.normal_closure([rep]))
        cands.sort(key=lambda H: H.order())
        minimal: list[PermGroup] = []
        for N in cands:
            if any(M.is_subgroup_of(N) for M in minimal):
                continue
            minimal.append(N)
        return minimal

    def socle(self, bound: int | None = None) -> "PermGroup":
        if self.is_trivial():
            return PermGroup(self.degree)
        gens = []
        for N in self.minimal_normal_subgroups(bound):
            gens.extend(N.generators)
        return PermGroup(self.degree, gens)

    def is_simple(self, bound: int | None = None) -> bool:
        if self.is_trivial():
            return False
        mins = self.minimal_normal_subgroups(bound)
        return len(mins) == 1 and mins[0].order() == self.order()

    def minimal_degree(self, bound: int | None = None) -> int:
        if self.is_trivial():
            raise ValueError("minimal degree of the trivial group is undefined")
        bound = limits.ENUM_BOUND if bound is None else bound
        if self.order() > bound:
            raise BoundExceeded("group order", bound, self.order())
        best = self.degree
        for p in self.chain.elements():
            moved = sum(1 for i, x in enumerate(p) if i != x)
            if 0 < moved < best:
                best = moved
                if best == 2:
                    break
        return best

    def coset_action(self, H: "PermGroup", bound: int | None = None
                     ) -> tuple["PermGroup", Callable[[Permutation], Permutation]]:
        """Action on right cosets ``Hg``; the coset ``H`` itself is point 0."""
        bound = limits.INDEX_BOUND if bound is None else bound
        if H.degree != self.degree:
            raise ValueError("degree mismatch")
        if not H.is_subgroup_of(self):
            raise ValueError("H is not a subgroup of G")
        index, rem = divmod(self.order(), H.order())
        assert rem == 0
        if index > bound:
            raise BoundExceeded("coset index", bound, index)
        hchain = H.chain
        n = self.degree

        def canon(g: Perm) -> Perm:
            # least element of Hg by base images of H's base
            for lvl, b in enumerate(hchain.base):
                t = hchain.transversals[lvl]
                best = min(t, key=lambda p: g[p])
                if best != b:
                    g = _mul(t[best], g)
            return g

        ident = tuple(range(n))
        reps = [ident]
        index_of = {canon(ident): 0}
        gens = self._raw_gens
        queue = deque([ident])
        while queue:
            r = queue.popleft()
            for g in gens:
                c = canon(_mul(r, g))
                if c not in index_of:
                    index_of[c] = len(reps)
                    reps.append(c)
                    queue.append(c)
        assert len(reps) == index

        def act(g: Permutation) -> Permutation:
            if g.degree != n:
                raise ValueError("degree mismatch")
            return Permutation._raw(tuple(index_of[canon(_mul(r, g.images))] for r in reps))

        return PermGroup(index, [act(g) for g in self.generators]), act


class _SubgroupBuilder:
    """Grows a generating set, keeping only elements not already generated."""

    def __init__(self, degree: int):
        self.degree = degree
        self.gens: list[Perm] = []
        self._chain: StabChain | None = schreier_sims([], degree)

    def add(self, g: Perm) -> bool:
        if _is_id(g) or self._chain.contains(g):
            return False
        self.gens.append(g)
        self._chain = schreier_sims(self.gens, self.degree)
        return True

    def order(self) -> int:
        return self._chain.order()

    def group(self) -> PermGroup:
        G = PermGroup._from_raw(self.degree, self.gens)
        G._chain = self._chain
        return G


# ---------------------------------------------------------------------------
# Generator-correspondence homomorphisms
# ---------------------------------------------------------------------------


def stack(p: Permutation, r: Permutation) -> Permutation:
    """Disjoint union action: ``p`` on the first block, ``r`` shifted after it."""
    n = p.degree
    return Permutation._raw(p.images + tuple(n + x for x in r.images))


class GroupHom:
    """Map ``source.generators[i] -> target_images[i]`` extended multiplicatively.

    Elements are mapped by sifting through a stabilizer chain of the graph
    group generated by stacked pairs ``g_i (+) image_i``; the chain's
    transversal elements carry their images in the second block.
    """

    def __init__(self, source: PermGroup, target_images: Sequence[Permutation],
                 target_degree: int | None = None):
        target_images = list(target_images)
        if len(target_images) != len(source.generators):
            raise ValueError("need one image per source generator")
        if target_degree is None:
            if not target_images:
                raise ValueError("target_degree required when there are no generators")
            target_degree = target_images[0].degree
        for t in target_images:
            if t.degree != target_degree:
                raise ValueError("image degree mismatch")
        self.source = source
        self.target_images = target_images
        self.target_degree = target_degree
        self._graph: PermGroup | None = None

    @property
    def graph(self) -> PermGroup:
        if self._graph is None:
            n = self.source.degree
            self._graph = PermGroup(
                n + self.target_degree,
                [stack(g, t) for g, t in zip(self.source.generators, self.target_images)])
        return self._graph

    def is_well_defined(self) -> bool:
        """The graph group projects isomorphically onto the source group."""
        return self.graph.order() == self.source.order()

    def image_group(self) -> PermGroup:
        return PermGroup(self.target_degree, self.target_images)

    def is_injective(self) -> bool:
        return self.is_well_defined() and self.image_group().order() == self.source.order()

    def map_element(self, g: Permutation) -> Permutation:
        n = self.source.degree
        if g.degree != n:
            raise ValueError("degree mismatch")
        if not self.is_well_defined():
            raise ValueError("generator correspondence does not define a homomorphism")
        chain = self.graph.chain
        h = g.images
        used = []
        for level, b in enumerate(chain.base):
            if b >= n:
                break
            pt = h[b]
            u = chain.transversals[level].get(pt)
            if u is None:
                raise ValueError(f"{g!r} is not in the source group")
            h = _mul(h, _inv(u[:n]))
            used.append(u)
        if not _is_id(h):
            raise ValueError(f"{g!r} is not in the source group")
        acc = tuple(range(n + self.target_degree))
        for u in reversed(used):
            acc = _mul(acc, u)
        return Permutation._raw(tuple(x - n for x in acc[n:]))

    def __call__(self, g: Permutation) -> Permutation:
        return self.map_element(g)


# ---------------------------------------------------------------------------
# Permutational isomorphism search
# ---------------------------------------------------------------------------


def find_relabeling(gens_a: Sequence[Permutation], gens_b: Sequence[Permutation]
                    ) -> Permutation | None:
    """Bijection ``lam`` with ``lam(x^a_i) = lam(x)^b_i`` for all i, or None.

    Equivalently ``b_i = lam^-1 * a_i * lam``. Orbit representatives of the
    first action are assigned by backtracking; the rest follows by
    propagation along Schreier trees, so transitive inputs cost O(n^2).
    """
    if len(gens_a) != len(gens_b):
        raise ValueError("generator lists differ in length")
    if not gens_a:
        return None
    n = gens_a[0].degree
    if any(g.degree != n for g in list(gens_a) + list(gens_b)):
        raise ValueError("degree mismatch")
    A = [g.images for g in gens_a]
    B = [g.images for g in gens_b]
    # orbits of A with words from their representative
    reps = []
    seen = set()
    for pt in range(n):
        if pt in seen:
            continue
        tree = [(pt, None, None)]
        seen.add(pt)
        k = 0
        while k < len(tree):
            x = tree[k][0]
            for gi, g in enumerate(A):
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    tree.append((y, x, gi))
            k += 1
        reps.append(tree)

    lam = [-1] * n
    used = [False] * n

    def assign(tree, target) -> list[int] | None:
        placed = []
        ok = True
        lam[tree[0][0]] = target
        if used[target]:
            lam[tree[0][0]] = -1
            return None
        used[target] = True
        placed.append(tree[0][0])
        for y, x, gi in tree[1:]:
            img = B[gi][lam[x]]
            if used[img]:
                ok = False
                break
            lam[y] = img
            used[img] = True
            placed.append(y)
        if ok:
            for x, *_ in tree:
                for g, h in zip(A, B):
                    if lam[g[x]] != h[lam[x]]:
                        ok = False
                        break
                if not ok:
                    break
        if not ok:
            for y in placed:
                used[lam[y]] = False
                lam[y] = -1
            return None
        return placed

    def search(k: int) -> bool:
        if k == len(reps):
            return True
        tree = reps[k]
        for target in range(n):
            if used[target]:
                continue
            placed = assign(tree, target)
            if placed is None:
                continue
            if search(k + 1):
                return True
            for y in placed:
                used[lam[y]] = False
                lam[y] = -1
        return False

    if search(0):
        return Permutation._raw(tuple(lam))
    return None


# ---------------------------------------------------------------------------
# Named groups
# ---------------------------------------------------------------------------


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1)
    if n == 2:
        return PermGroup(2, [Permutation([1, 0])])
    return PermGroup(n, [Permutation.from_cycles(n, [list(range(n))]),
                         Permutation.from_cycles(n, [[0, 1]])])


def alternating_group(n: int) -> PermGroup:
    if n < 3:
        return PermGroup(n)
    if n == 3:
        return PermGroup(3, [Permutation.from_cycles(3, [[0, 1, 2]])])
    three = Permutation.from_cycles(n, [[0, 1, 2]])
    if n % 2:
        long = Permutation.from_cycles(n, [list(range(n))])
    else:
        long = Permutation.from_cycles(n, [list(range(1, n))])
    return PermGroup(n, [three, long])


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1)
    return PermGroup(n, [Permutation.from_cycles(n, [list(range(n))])])


def psl3_2() -> PermGroup:
    """PSL(3,2) = GL(3,2) on the 7 nonzero vectors of F_2^3 (vector v -> index v-1)."""

    def act(mat):
        img = []
        for v in range(1, 8):
            bits = [(v >> k) & 1 for k in range(3)]
            w = 0
            for r in range(3):
                s = sum(mat[r][c] * bits[c] for c in range(3)) % 2
                w |= s << r
            img.append(w - 1)
        return Permutation(img)

    singer = [[0, 0, 1], [1, 0, 1], [0, 1, 0]]  # companion matrix of x^3 + x + 1
    transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    return PermGroup(7, [act(singer), act(transvection)])


def psl2(p: int) -> PermGroup:
    """PSL(2,p) for prime p on the projective line; infinity is point p."""
    inf = p

    def mob(a, b, c, d):
        img = []
        for x in range(p + 1):
            if x == inf:
                num, den = a, c
            else:
                num, den = (a * x + b) % p, (c * x + d) % p
            if den % p == 0:
                img.append(inf)
            else:
                img.append(num * pow(den, -1, p) % p)
        return Permutation(img)

    return PermGroup(p + 1, [mob(1, 1, 0, 1), mob(0, p - 1, 1, 0)])


def mathieu12() -> PermGroup:
    gens = [
        [list(range(11))],
        [[2, 6, 10, 7], [3, 9, 4, 5]],
        [[0, 11], [1, 10], [2, 5], [3, 7], [4, 8], [6, 9]],
    ]
    return PermGroup(12, [Permutation.from_cycles(12, c) for c in gens])


def normalizer_in_symmetric(T: PermGroup, max_degree: int = 8) -> PermGroup:
    """N_{S_q}(T) by brute force over S_q; only for q <= ``max_degree``."""
    q = T.degree
    if q > max_degree:
        raise BoundExceeded("normalizer degree", max_degree, q)
    builder = _SubgroupBuilder(q)
    for g in T.generators:
        builder.add(g.images)
    gens = [g.images for g in T.generators]
    for img in itertools.permutations(range(q)):
        if builder._chain.contains(img):
            continue
        gi = _inv(img)
        if all(T.chain.contains(_mul(_mul(gi, h), img)) for h in gens):
            builder.add(img)
    return builder.group()
