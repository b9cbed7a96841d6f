"""Code constructions in H(m, q) and the groups that act on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Sequence

from .hamming import Code, Vertex, nu
from . import limits
from .limits import BoundExceeded
from .perm import GroupHom, PermGroup, Permutation, symmetric_group
from .wreath import WreathElement, WreathGroup, diag_times_top

# ---------------------------------------------------------------------------
# Classical codes
# ---------------------------------------------------------------------------


def rep_code(m: int, q: int) -> Code:
    if m < 1 or q < 1:
        raise ValueError("m and q must be positive")
    return Code(m, q, tuple((a,) * m for a in range(q)))


def _multiset_perms(counts: list[int], length: int) -> Iterable[tuple[int, ...]]:
    word = [0] * length

    def rec(pos: int):
        if pos == length:
            yield tuple(word)
            return
        for a, c in enumerate(counts):
            if c:
                counts[a] -= 1
                word[pos] = a
                yield from rec(pos + 1)
                counts[a] += 1

    yield from rec(0)


def all_code(p: int, q: int, bound: int | None = None) -> Code:
    """Words of length ``p*q`` containing every symbol exactly ``p`` times."""
    if p < 1 or q < 1:
        raise ValueError("p and q must be positive")
    bound = limits.ENUM_BOUND if bound is None else bound
    size = factorial(p * q) // factorial(p) ** q
    if size > bound:
        raise BoundExceeded("All code size", bound, size)
    return Code(p * q, q, tuple(_multiset_perms([p] * q, p * q)))


def injective_code(m: int, q: int, bound: int | None = None) -> Code:
    """Words with pairwise distinct entries."""
    if not 1 <= m <= q:
        raise ValueError("injective code needs 1 <= m <= q")
    bound = limits.ENUM_BOUND if bound is None else bound
    size = factorial(q) // factorial(q - m)
    if size > bound:
        raise BoundExceeded("injective code size", bound, size)
    return Code(m, q, tuple(itertools.permutations(range(q), m)))


def weight_code(m: int) -> Code:
    """Binary words of weight (m-1)/2 or (m+1)/2, m odd."""
    if m < 3 or m % 2 == 0:
        raise ValueError("weight code needs odd m >= 3")
    words = []
    for w in ((m - 1) // 2, (m + 1) // 2):
        for ones in itertools.combinations(range(m), w):
            v = [0] * m
            for i in ones:
                v[i] = 1
            words.append(tuple(v))
    assert len(words) == comb(m, (m - 1) // 2) + comb(m, (m + 1) // 2)
    return Code(m, 2, tuple(words))


def prod_code(C: Code, ell: int, bound: int | None = None) -> Code:
    """Concatenations of ``ell`` independent codewords."""
    if ell < 1:
        raise ValueError("ell must be positive")
    bound = limits.ENUM_BOUND if bound is None else bound
    if len(C) ** ell > bound:
        raise BoundExceeded("product code size", bound, len(C) ** ell)
    words = (tuple(itertools.chain.from_iterable(ws)) for ws in itertools.product(C.words, repeat=ell))
    return Code(C.m * ell, C.q, tuple(words))


def rep_l_code(C: Code, ell: int) -> Code:
    """Each codeword repeated ``ell`` times side by side."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return Code(C.m * ell, C.q, tuple(w * ell for w in C))


def is_frequency_array(C: Code) -> int | None:
    """The common multiplicity ``p`` if every word uses each symbol ``p`` times."""
    if C.m % C.q:
        return None
    p = C.m // C.q
    for w in C:
        counts = [0] * C.q
        for a in w:
            counts[a] += 1
        if any(c != p for c in counts):
            return None
    return p


# ---------------------------------------------------------------------------
# Permutation codes
# ---------------------------------------------------------------------------


def alpha(g: Permutation) -> Vertex:
    """The vertex ``(0^g, 1^g, ..., (q-1)^g)``."""
    return g.images


def perm_code(T: PermGroup, bound: int | None = None) -> Code:
    return Code(T.degree, T.degree, tuple(g.images for g in T.elements(bound)))


@dataclass
class PairedAction:
    """A group on ``q`` points with a second degree-``q`` action of it.

    ``images[i]`` is the second action's image of ``group1.generators[i]``.
    """

    group1: PermGroup
    images: list[Permutation]

    def __post_init__(self):
        self.images = list(self.images)
        if len(self.images) != len(self.group1.generators):
            raise ValueError("need one image per generator")
        for t in self.images:
            if t.degree != self.group1.degree:
                raise ValueError("both actions must have the same degree")
        self.hom = GroupHom(self.group1, self.images, self.group1.degree)

    @property
    def q(self) -> int:
        return self.group1.degree

    def group2(self) -> PermGroup:
        return PermGroup(self.q, self.images)

    def diagonal_group(self) -> PermGroup:
        """Group of stacked pairs ``g (+) g^tau`` on ``2q`` points."""
        return self.hom.graph

    def is_consistent(self) -> bool:
        return self.hom.is_well_defined()

    def tau(self, g: Permutation) -> Permutation:
        return self.hom.map_element(g)

    def restrict(self, gens: Sequence[Permutation]) -> "PairedAction":
        """The pairing on the subgroup generated by ``gens``."""
        return PairedAction(PermGroup(self.q, gens), [self.tau(g) for g in gens])


def twisted_code(pa: PairedAction, bound: int | None = None) -> Code:
    """Words ``(alpha(t), alpha(t^tau))`` over the diagonal group."""
    if not pa.is_consistent():
        raise ValueError("generator images do not define a homomorphism")
    q = pa.q
    words = []
    for g in pa.diagonal_group().elements(bound):
        img = g.images
        words.append(img[:q] + tuple(x - q for x in img[q:]))
    return Code(2 * q, q, tuple(words))


def twisted_distance(pa: PairedAction, g: Permutation) -> int:
    """``d(alpha(s,s^tau), alpha(t,t^tau))`` for ``g = s t^-1``: moved(g) + moved(g^tau)."""
    return g.num_moved() + pa.tau(g).num_moved()


def twisted_min_distance(pa: PairedAction, bound: int | None = None) -> int:
    """Least ``moved(g) + moved(g^tau)`` over non-identity ``g``."""
    q = pa.q
    bound = limits.ENUM_BOUND if bound is None else bound
    D = pa.diagonal_group()
    if D.order() > bound:
        raise BoundExceeded("diagonal group elements", bound, D.order())
    best = None
    for g in D.chain.elements():
        moved = sum(1 for i, x in enumerate(g[:q]) if i != x)
        moved += sum(1 for i, x in enumerate(g[q:]) if i + q != x)
        if moved and (best is None or moved < best):
            best = moved
    if best is None:
        raise ValueError("trivial group has no minimum distance")
    return best


# ---------------------------------------------------------------------------
# Cayley codes
# ---------------------------------------------------------------------------


def check_group_table(table: Sequence[Sequence[int]]) -> int:
    """Validate a multiplication table; returns the identity label."""
    q = len(table)
    if q == 0 or any(len(row) != q for row in table):
        raise ValueError("table must be square and nonempty")
    for row in table:
        for x in row:
            if not 0 <= x < q:
                raise ValueError(f"table entry {x} out of range")
    ids = [e for e in range(q)
           if all(table[e][x] == x and table[x][e] == x for x in range(q))]
    if not ids:
        raise ValueError("table has no identity element")
    e = ids[0]
    for x in range(q):
        if e not in table[x]:
            raise ValueError(f"element {x} has no inverse")
    for a in range(q):
        for b in range(q):
            ab = table[a][b]
            for c in range(q):
                if table[ab][c] != table[a][table[b][c]]:
                    raise ValueError(f"not associative at ({a},{b},{c})")
    return e


def right_regular(table: Sequence[Sequence[int]]) -> PermGroup:
    """``x -> x*g`` for every g; identity included only implicitly."""
    check_group_table(table)
    q = len(table)
    return PermGroup(q, [Permutation([table[x][g] for x in range(q)]) for g in range(q)])


def cayley_code(table: Sequence[Sequence[int]], ordering: Sequence[int] | None = None) -> Code:
    """Words ``(o_1 g, ..., o_q g)`` for g in the group."""
    check_group_table(table)
    q = len(table)
    ordering = list(range(q)) if ordering is None else list(ordering)
    if sorted(ordering) != list(range(q)):
        raise ValueError("ordering must list every element exactly once")
    return Code(q, q, tuple(tuple(table[o][g] for o in ordering) for g in range(q)))


def cyclic_table(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def perm_group_table(G: PermGroup) -> tuple[list[list[int]], list[Permutation]]:
    """Multiplication table of a small permutation group, elements sorted."""
    elems = G.elements()
    index = {g: k for k, g in enumerate(elems)}
    return [[index[a * b] for b in elems] for a in elems], elems


# ---------------------------------------------------------------------------
# Projections
# ---------------------------------------------------------------------------


def _coords(J: Iterable[int], m: int) -> list[int]:
    J = sorted(set(J))
    if not J:
        raise ValueError("coordinate set must be nonempty")
    if J[0] < 0 or J[-1] >= m:
        raise ValueError(f"coordinates out of range 0..{m - 1}")
    return J


def project(C: Code, J: Iterable[int]) -> Code:
    J = _coords(J, C.m)
    return Code(len(J), C.q, tuple(tuple(w[j] for j in J) for w in C))


def c1_of_J(C: Code, J: Iterable[int]) -> frozenset:
    """Neighbours ``nu(alpha, j, b)`` outside C with alpha in C and j in J."""
    J = _coords(J, C.m)
    out = set()
    for w in C:
        for j in J:
            for b in range(C.q):
                if b != w[j]:
                    v = nu(w, j, b)
                    if v not in C.word_set:
                        out.add(v)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Groups for the constructions
# ---------------------------------------------------------------------------


def rep_group(m: int, q: int) -> WreathGroup:
    """``Diag_m(S_q) x| S_m``."""
    return diag_times_top(symmetric_group(q), symmetric_group(m))


def x_elem(y: Permutation, m: int) -> WreathElement:
    return WreathElement.diag(y, m)


def sigma_elem(y: Permutation) -> WreathElement:
    """Top element induced by ``y``: maps ``alpha(g)`` to ``alpha(y^-1 g)``."""
    return WreathElement.pure_top(y, y.degree)


def a_elem(t: Permutation) -> WreathElement:
    return x_elem(t, t.degree) * sigma_elem(t)


def perm_code_group(T: PermGroup, normalizer_gens: Sequence[Permutation] | None = None
                    ) -> WreathGroup:
    """``<Diag_q(T), a_t : t in N>`` with N given by generators (default T)."""
    q = T.degree
    gens = [x_elem(t, q) for t in T.generators]
    src = T.generators if normalizer_gens is None else normalizer_gens
    gens += [a_elem(t) for t in src]
    return WreathGroup(q, q, gens)


def _pair_element(x: WreathElement, y: WreathElement) -> WreathElement:
    """``(x, y)`` acting on the two halves of H(2q, q)."""
    m = x.m
    top = Permutation(x.top.images + tuple(m + i for i in y.top.images))
    return WreathElement(x.bottom + y.bottom, top)


def block_swap(m: int, q: int) -> WreathElement:
    return WreathElement.pure_top(Permutation(list(range(m, 2 * m)) + list(range(m))), q)


def twisted_code_group(pa: PairedAction) -> WreathGroup:
    """``<Diag(T,T^tau), A(T,T^tau), swap>``; the swap needs tau to be an involution."""
    q = pa.q
    gens = []
    for g, h in zip(pa.group1.generators, pa.images):
        gens.append(_pair_element(x_elem(g, q), x_elem(h, q)))
        gens.append(_pair_element(a_elem(g), a_elem(h)))
    gens.append(block_swap(q, q))
    return WreathGroup(2 * q, q, gens)


def embed_block(x: WreathElement, block: int, ell: int) -> WreathElement:
    """``x`` acting on block ``block`` of ``ell`` consecutive length-m blocks."""
    m, q = x.m, x.q
    ident = Permutation.identity(q)
    bottom = [ident] * (m * ell)
    top = list(range(m * ell))
    off = block * m
    for i in range(m):
        bottom[off + i] = x.bottom[i]
        top[off + i] = off + x.top.images[i]
    return WreathElement(tuple(bottom), Permutation(top))


def block_permutation(s: Permutation, m: int, q: int) -> WreathElement:
    """Move whole length-m blocks according to ``s``."""
    top = []
    for b in range(s.degree):
        top.extend(s.images[b] * m + i for i in range(m))
    return WreathElement.pure_top(Permutation(top), q)


def product_group(X: WreathGroup, ell: int) -> WreathGroup:
    """``X wr S_ell`` acting on ``Prod_ell``."""
    gens = [embed_block(x, b, ell) for b in range(ell) for x in X.generators]
    gens += [block_permutation(s, X.m, X.q) for s in symmetric_group(ell).generators] if ell > 1 else []
    return WreathGroup(X.m * ell, X.q, gens)


def rep_l_group(X: WreathGroup, ell: int) -> WreathGroup:
    """``X x S_ell`` acting on ``Rep_ell``: X diagonally on all blocks, blocks permuted."""
    gens = []
    for x in X.generators:
        g = embed_block(x, 0, ell)
        for b in range(1, ell):
            g = g * embed_block(x, b, ell)
        gens.append(g)
    gens += [block_permutation(s, X.m, X.q) for s in symmetric_group(ell).generators] if ell > 1 else []
    return WreathGroup(X.m * ell, X.q, gens)
