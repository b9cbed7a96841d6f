"""Automorphisms of H(m, q): the wreath product S_q wr S_m.

An element ``h sigma`` acts on a vertex by applying ``h_i`` to coordinate
``i`` and then moving coordinate ``i`` to position ``i^sigma``:
``(v^x)[i^sigma] = h_i(v[i])``. With that convention the product ``x * y``
(x first) has top ``sigma_x sigma_y`` and bottom
``(h_x)_i (h_y)_{i^sigma_x}``.

For group computations every element is also written as a permutation of
``m + m*q`` points: the top permutation on ``0..m-1`` followed by the action
on pairs ``(i, a) -> (i^sigma, h_i(a))`` stored at ``m + i*q + a``. That
action is faithful, so a stabilizer chain on it gives orders, membership and
the kernel of the top projection directly.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .hamming import Code, Vertex, check_vertex, nu
from . import limits
from .limits import BoundExceeded
from .perm import PermGroup, Permutation, _inv, _mul


@dataclass(frozen=True)
class WreathElement:
    bottom: tuple[Permutation, ...]
    top: Permutation

    def __post_init__(self):
        bottom = tuple(b if isinstance(b, Permutation) else Permutation(b) for b in self.bottom)
        top = self.top if isinstance(self.top, Permutation) else Permutation(self.top)
        if len(bottom) != top.degree:
            raise ValueError(f"{len(bottom)} bottom entries for top degree {top.degree}")
        if len({b.degree for b in bottom}) != 1:
            raise ValueError("bottom permutations must share one degree")
        object.__setattr__(self, "bottom", bottom)
        object.__setattr__(self, "top", top)

    @property
    def m(self) -> int:
        return self.top.degree

    @property
    def q(self) -> int:
        return self.bottom[0].degree

    @classmethod
    def identity(cls, m: int, q: int) -> "WreathElement":
        e = Permutation.identity(q)
        return cls((e,) * m, Permutation.identity(m))

    @classmethod
    def pure_top(cls, sigma: Permutation, q: int) -> "WreathElement":
        return cls((Permutation.identity(q),) * sigma.degree, sigma)

    @classmethod
    def pure_bottom(cls, bottom: Sequence[Permutation]) -> "WreathElement":
        return cls(tuple(bottom), Permutation.identity(len(bottom)))

    @classmethod
    def diag(cls, h: Permutation, m: int) -> "WreathElement":
        return cls.pure_bottom([h] * m)

    def _check(self, other: "WreathElement"):
        if (self.m, self.q) != (other.m, other.q):
            raise ValueError(f"context mismatch: H({self.m},{self.q}) vs H({other.m},{other.q})")

    def apply(self, v: Sequence[int]) -> Vertex:
        if len(v) != self.m:
            raise ValueError(f"vertex length {len(v)} != m={self.m}")
        out = [0] * self.m
        top = self.top.images
        for i, a in enumerate(v):
            out[top[i]] = self.bottom[i].images[a]
        return tuple(out)

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return compose(self, other)

    def inverse(self) -> "WreathElement":
        top = self.top.images
        bottom = [None] * self.m
        for i in range(self.m):
            bottom[top[i]] = ~self.bottom[i]
        return WreathElement(tuple(bottom), ~self.top)

    def __invert__(self) -> "WreathElement":
        return self.inverse()

    def conjugate(self, by: "WreathElement") -> "WreathElement":
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return self.top.is_identity() and all(b.is_identity() for b in self.bottom)

    def stacked(self) -> tuple:
        """Image tuple of the faithful action on ``m + m*q`` points."""
        m, q = self.m, self.q
        top = self.top.images
        out = list(top)
        for i in range(m):
            base = m + top[i] * q
            out.extend(base + x for x in self.bottom[i].images)
        return tuple(out)

    @classmethod
    def from_stacked(cls, p: Sequence[int], m: int, q: int) -> "WreathElement":
        top = tuple(p[:m])
        bottom = []
        for i in range(m):
            off = m + top[i] * q
            bottom.append(Permutation._raw(tuple(x - off for x in p[m + i * q: m + (i + 1) * q])))
        return cls(tuple(bottom), Permutation._raw(top))

    def to_json(self) -> dict:
        return {"m": self.m, "q": self.q,
                "bottom": [list(b.images) for b in self.bottom],
                "top": list(self.top.images)}

    @classmethod
    def from_json(cls, obj: dict) -> "WreathElement":
        x = cls(tuple(Permutation(b) for b in obj["bottom"]), Permutation(obj["top"]))
        if (x.m, x.q) != (obj["m"], obj["q"]):
            raise ValueError("declared m, q disagree with the element")
        return x

    def __repr__(self) -> str:
        return f"WreathElement(bottom={list(self.bottom)}, top={self.top!r})"


def compose(x: WreathElement, y: WreathElement) -> WreathElement:
    """``x`` first, then ``y``."""
    x._check(y)
    top_x = x.top.images
    bottom = tuple(x.bottom[i] * y.bottom[top_x[i]] for i in range(x.m))
    return WreathElement(bottom, x.top * y.top)


def inverse(x: WreathElement) -> WreathElement:
    return x.inverse()


def apply(x: WreathElement, v: Sequence[int]) -> Vertex:
    return x.apply(v)


def mu(x: WreathElement) -> Permutation:
    return x.top


def phi(x: WreathElement, i: int) -> Permutation:
    """Bottom entry ``h_i`` of an element fixing coordinate ``i``."""
    if x.top.images[i] != i:
        raise ValueError(f"element does not fix coordinate {i}")
    return x.bottom[i]


def neighbour_image_check(x: WreathElement, alpha: Sequence[int], i: int, a: int
                          ) -> tuple[Vertex, Vertex]:
    """Both sides of ``nu(alpha,i,a)^x = nu(alpha^x, i^sigma, h_i(a))``."""
    lhs = x.apply(nu(alpha, i, a))
    rhs = nu(x.apply(alpha), x.top.images[i], x.bottom[i].images[a])
    assert lhs == rhs, (lhs, rhs)
    return lhs, rhs


def chi_restrict(x: WreathElement, J: Iterable[int]) -> WreathElement:
    """Restriction to the coordinates ``J`` (listed ascending); J must be sigma-stable."""
    J = sorted(set(J))
    pos = {j: k for k, j in enumerate(J)}
    top = x.top.images
    try:
        sub_top = Permutation([pos[top[j]] for j in J])
    except KeyError:
        raise ValueError(f"element does not stabilize {J}") from None
    return WreathElement(tuple(x.bottom[j] for j in J), sub_top)


def project_vertex(v: Sequence[int], J: Iterable[int]) -> Vertex:
    return tuple(v[j] for j in sorted(set(J)))


def _apply_stacked(p: tuple, v: Vertex, m: int, q: int) -> Vertex:
    out = [0] * m
    for i, a in enumerate(v):
        t = p[i]
        out[t] = p[m + i * q + a] - m - t * q
    return tuple(out)


class WreathGroup:
    """A subgroup of S_q wr S_m given by generators."""

    def __init__(self, m: int, q: int, generators: Iterable[WreathElement] = ()):
        gens = list(generators)
        for g in gens:
            if (g.m, g.q) != (m, q):
                raise ValueError(f"generator context H({g.m},{g.q}) != H({m},{q})")
        self.m = m
        self.q = q
        self.generators = tuple(gens)
        self._pg: PermGroup | None = None

    def __repr__(self) -> str:
        return f"WreathGroup(m={self.m}, q={self.q}, {len(self.generators)} generators)"

    @classmethod
    def _from_stacked_group(cls, m: int, q: int, G: PermGroup) -> "WreathGroup":
        W = cls(m, q, [WreathElement.from_stacked(g.images, m, q) for g in G.generators])
        W._pg = G
        return W

    @property
    def perm_group(self) -> PermGroup:
        if self._pg is None:
            self._pg = PermGroup(self.m + self.m * self.q,
                                 [Permutation._raw(g.stacked()) for g in self.generators])
        return self._pg

    def order(self) -> int:
        return self.perm_group.order()

    def contains(self, x: WreathElement) -> bool:
        if (x.m, x.q) != (self.m, self.q):
            raise ValueError("context mismatch")
        return self.perm_group.contains(Permutation._raw(x.stacked()))

    def random_element(self, rng: random.Random) -> WreathElement:
        return WreathElement.from_stacked(self.perm_group.random_element(rng).images, self.m, self.q)

    def is_trivial(self) -> bool:
        return all(g.is_identity() for g in self.generators)

    # projections --------------------------------------------------------

    def top_group(self) -> PermGroup:
        return PermGroup(self.m, [g.top for g in self.generators])

    def base_kernel(self) -> "WreathGroup":
        """Elements with trivial top: pointwise stabilizer of the coordinate points."""
        G = self.perm_group.pointwise_stabilizer(range(self.m))
        return WreathGroup._from_stacked_group(self.m, self.q, G)

    def entry_stabilizer(self, i: int) -> "WreathGroup":
        if not 0 <= i < self.m:
            raise ValueError(f"coordinate {i} out of range")
        G = self.perm_group.point_stabilizer(i)
        return WreathGroup._from_stacked_group(self.m, self.q, G)

    def block_stabilizer(self, J: Iterable[int]) -> "WreathGroup":
        J = set(J)
        if any(not 0 <= j < self.m for j in J):
            raise ValueError("coordinate out of range")
        G = self.perm_group.setwise_stabilizer(J)
        return WreathGroup._from_stacked_group(self.m, self.q, G)

    def alphabet_group(self, i: int) -> PermGroup:
        """``phi_i`` of the stabilizer of coordinate ``i``, on ``q`` points."""
        X_i = self.entry_stabilizer(i)
        return PermGroup(self.q, [phi(g, i) for g in X_i.generators])

    def base_action_group(self) -> PermGroup:
        """A group inside the base group, acting on the ``m*q`` pairs."""
        m = self.m
        gens = []
        for g in self.generators:
            if not g.top.is_identity():
                raise ValueError("group is not contained in the base group")
            gens.append(Permutation._raw(tuple(x - m for x in g.stacked()[m:])))
        return PermGroup(m * self.q, gens)

    @classmethod
    def from_base_action(cls, m: int, q: int, G: PermGroup) -> "WreathGroup":
        gens = []
        for g in G.generators:
            p = tuple(range(m)) + tuple(x + m for x in g.images)
            gens.append(WreathElement.from_stacked(p, m, q))
        return cls(m, q, gens)

    # vertex orbits --------------------------------------------------------

    def orbit_transversal(self, v: Sequence[int], bound: int | None = None,
                          limit: int | None = None) -> dict[Vertex, tuple]:
        """Orbit of ``v`` with, for each point, a stacked element mapping ``v`` to it.

        Stops early once more than ``limit`` points have been found.
        """
        bound = limits.ORBIT_BOUND if bound is None else bound
        v = check_vertex(v, self.m, self.q)
        m, q = self.m, self.q
        gens = [g.images for g in self.perm_group.generators] or [tuple(range(m + m * q))]
        trans = {v: tuple(range(m + m * q))}
        queue = deque([v])
        while queue:
            w = queue.popleft()
            for g in gens:
                u = _apply_stacked(g, w, m, q)
                if u not in trans:
                    trans[u] = _mul(trans[w], g)
                    if len(trans) > bound:
                        raise BoundExceeded("vertex orbit", bound, len(trans))
                    if limit is not None and len(trans) > limit:
                        return trans
                    queue.append(u)
        return trans

    def orbit_of_vertex(self, v: Sequence[int], bound: int | None = None) -> Code:
        return Code(self.m, self.q, tuple(self.orbit_transversal(v, bound)))

    def orbit_set(self, v: Sequence[int], bound: int | None = None,
                  limit: int | None = None) -> frozenset:
        return frozenset(self.orbit_transversal(v, bound, limit))

    def is_orbit(self, S: Code | Iterable[Vertex], bound: int | None = None) -> bool:
        S = S.word_set if isinstance(S, Code) else frozenset(S)
        if not S:
            return False
        start = min(S)
        return self.orbit_set(start, bound, limit=len(S)) == S

    def vertex_stabilizer(self, v: Sequence[int], bound: int | None = None) -> "WreathGroup":
        v = check_vertex(v, self.m, self.q)
        m, q = self.m, self.q
        G = self.perm_group.action_stabilizer(
            v, lambda w, g: _apply_stacked(g, w, m, q),
            limits.ORBIT_BOUND if bound is None else bound)
        return WreathGroup._from_stacked_group(m, q, G)

    def element_mapping(self, src: Sequence[int], dst: Sequence[int],
                        bound: int | None = None) -> WreathElement | None:
        """Some group element taking ``src`` to ``dst``, or None."""
        trans = self.orbit_transversal(src, bound)
        p = trans.get(tuple(dst))
        if p is None:
            return None
        return WreathElement.from_stacked(p, self.m, self.q)

    def preserves(self, S: Code | Iterable[Vertex]) -> tuple[bool, tuple | None]:
        """Whether every generator maps ``S`` into itself; else (False, (gen index, word))."""
        S = S.word_set if isinstance(S, Code) else frozenset(S)
        for k, g in enumerate(self.generators):
            for w in sorted(S):
                if g.apply(w) not in S:
                    return False, (k, w)
        return True, None


def image_of_code(C: Code, x: WreathElement) -> Code:
    return Code(C.m, C.q, tuple(x.apply(w) for w in C))


def diag_embed(T: PermGroup, m: int) -> WreathGroup:
    return WreathGroup(m, T.degree, [WreathElement.diag(h, m) for h in T.generators])


def top_embed(L: PermGroup, q: int) -> WreathGroup:
    return WreathGroup(L.degree, q, [WreathElement.pure_top(s, q) for s in L.generators])


def join(*groups: WreathGroup) -> WreathGroup:
    m, q = groups[0].m, groups[0].q
    gens = []
    for G in groups:
        if (G.m, G.q) != (m, q):
            raise ValueError("context mismatch")
        gens.extend(G.generators)
    return WreathGroup(m, q, gens)


def full_automorphism_group(m: int, q: int) -> WreathGroup:
    from .perm import symmetric_group

    return join(diag_embed(symmetric_group(q), m), top_embed(symmetric_group(m), q),
                WreathGroup(m, q, [WreathElement.pure_bottom(
                    [g] + [Permutation.identity(q)] * (m - 1))
                    for g in symmetric_group(q).generators]))


def diag_times_top(T: PermGroup, L: PermGroup) -> WreathGroup:
    """``Diag_m(T) x| L`` with ``m = L.degree``."""
    return join(diag_embed(T, L.degree), top_embed(L, T.degree))
