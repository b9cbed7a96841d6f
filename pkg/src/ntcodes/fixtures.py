"""Named paired actions and the two-block worked example.

Each paired action is built from a concrete second action (one-factorizations
of K_6, or a coset action on a non-conjugate subgroup). It is then aligned:
the second action is relabeled and twisted by an inner automorphism so that
its generator images lie inside the first group and the resulting
automorphism ``tau`` satisfies ``tau^2 = 1``. That is what lets the block
swap preserve the twisted code.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from math import factorial
from typing import Callable

from .codes import PairedAction, block_swap, sigma_elem, x_elem
from .hamming import Code
from .perm import (GroupHom, PermGroup, Permutation, alternating_group, find_relabeling,
                   mathieu12, psl2, symmetric_group)
from .wreath import WreathElement, WreathGroup


class FixtureError(RuntimeError):
    """A fixture failed validation."""


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass
class PairValidation:
    ok: bool
    checks: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)


def fixed_points(g: Permutation) -> int:
    return sum(1 for i, x in enumerate(g.images) if i == x)


def validate_pair(pa: PairedAction, expected_order: int | None = None,
                  rng: random.Random | None = None, samples: int = 200) -> PairValidation:
    """Order, transitivity, 2-transitivity and inequivalence of both actions.

    Inequivalence is certified twice: no relabeling conjugates the first
    action's generators to the second's, and the stabilizer of point 0 in the
    first action fixes no point in the second (for transitive actions of the
    same degree that is equivalent to inequivalence). An element with
    different fixed-point counts is recorded when one turns up, but some
    pairs (PSL(2,11), M12) have equal permutation characters, so it is not
    required.
    """
    rng = rng or random.Random(0)
    checks = {}
    witness = {}
    n1 = pa.group1.order()
    checks["order"] = expected_order is None or n1 == expected_order
    checks["homomorphism"] = pa.is_consistent()
    G2 = pa.group2()
    checks["faithful"] = checks["homomorphism"] and G2.order() == n1
    checks["transitive"] = pa.group1.is_transitive() and G2.is_transitive()
    checks["2-transitive"] = pa.group1.is_2transitive() and G2.is_2transitive()
    checks["no relabeling"] = find_relabeling(pa.group1.generators, pa.images) is None
    stab_ok = False
    if checks["homomorphism"]:
        q = pa.q
        diag = pa.diagonal_group()
        stab = diag.point_stabilizer(0)
        fixed = [p - q for p in range(q, 2 * q)
                 if all(g.images[p] == p for g in stab.generators)]
        stab_ok = not fixed
        if fixed:
            witness["stabilizer fixes"] = fixed
        cands = [Permutation._raw(g.images) for g in diag.generators]
        cands += [diag.random_element(rng) for _ in range(samples)]
        for g in cands:
            a = sum(1 for i in range(q) if g.images[i] == i)
            b = sum(1 for i in range(q) if g.images[q + i] == q + i)
            if a != b:
                witness["fixed point witness"] = {
                    "element": list(g.images[:q]), "fixed": [a, b]}
                break
    checks["stabilizer has no fixed point in second action"] = stab_ok
    return PairValidation(all(checks.values()), checks, witness)


# ---------------------------------------------------------------------------
# Alignment
# ---------------------------------------------------------------------------


def cycle_type(g: Permutation) -> tuple[int, ...]:
    lengths = [len(c) for c in g.cycles()]
    lengths += [1] * fixed_points(g)
    return tuple(sorted(lengths))


def centralizer_in_symmetric(a: Permutation) -> PermGroup:
    """Centralizer of ``a`` in S_q: cycle rotations and swaps of equal cycles."""
    q = a.degree
    cycles = a.cycles() + [(i,) for i in range(q) if a.images[i] == i]
    gens = []
    for c in cycles:
        if len(c) > 1:
            gens.append(Permutation.from_cycles(q, [c]))
    by_len: dict[int, list] = {}
    for c in cycles:
        by_len.setdefault(len(c), []).append(c)
    for cs in by_len.values():
        for c1, c2 in zip(cs, cs[1:]):
            img = list(range(q))
            for x, y in zip(c1, c2):
                img[x], img[y] = y, x
            gens.append(Permutation(img))
    return PermGroup(q, gens)


def _centralizer_order(ct: tuple[int, ...]) -> int:
    out = 1
    for length, k in Counter(ct).items():
        out *= length ** k * factorial(k)
    return out


def align_pair(T: PermGroup, images: list[Permutation], rng: random.Random) -> list[Permutation]:
    """Rewrite a second action so that it lies in T and tau is an involution."""
    hom = GroupHom(T, images, T.degree)
    if not hom.is_injective():
        raise FixtureError("second action is not a faithful image of T")
    elems = T.elements()
    by_type: dict[tuple, list[Permutation]] = {}
    for g in elems:
        by_type.setdefault(cycle_type(g), []).append(g)

    cands = list(T.generators) + [T.random_element(rng) for _ in range(30)]
    best = None
    for s in cands:
        a = hom(s)
        if a.is_identity():
            continue
        ct = cycle_type(a)
        cost = len(by_type.get(ct, [])) * _centralizer_order(ct)
        if cost and (best is None or cost < best[0]):
            best = (cost, a)
    if best is None:
        raise FixtureError("no usable anchor element")
    a = best[1]
    cent = centralizer_in_symmetric(a).elements()
    second = list(images)
    aligned = None
    for u in by_type[cycle_type(a)]:
        lam0 = find_relabeling([a], [u])
        for c in cent:
            lam = c * lam0
            imgs = [g.conjugate(lam) for g in second]
            if all(T.contains(x) for x in imgs):
                aligned = imgs
                break
        if aligned is not None:
            break
    if aligned is None:
        raise FixtureError("second action is not conjugate into T")

    tau = GroupHom(T, aligned, T.degree)
    tau2 = [tau(x) for x in aligned]
    for d in elems:
        td = tau(d)
        w = td * d
        w_inv = ~w
        if all(w_inv * t2 * w == g for t2, g in zip(tau2, T.generators)):
            return [g.conjugate(d) for g in aligned]
    raise FixtureError("no involutory twist of tau by an inner automorphism")


# ---------------------------------------------------------------------------
# Second actions
# ---------------------------------------------------------------------------


def one_factorizations_k6() -> list[frozenset]:
    """The six one-factorizations of K_6, each a frozenset of perfect matchings."""
    pts = range(6)
    matchings = []
    for pairing in itertools.permutations(pts):
        m = frozenset(frozenset(pairing[i:i + 2]) for i in (0, 2, 4))
        if m not in matchings:
            matchings.append(m)
    edges = {frozenset(e) for e in itertools.combinations(pts, 2)}
    facts = set()
    for combo in itertools.combinations(matchings, 5):
        used = set()
        for m in combo:
            used |= m
        if used == edges:
            facts.add(frozenset(combo))
    return sorted(facts, key=lambda f: sorted(sorted(sorted(e) for e in m) for m in f))


def action_on_factorizations(g: Permutation, facts: list[frozenset]) -> Permutation:
    index = {f: k for k, f in enumerate(facts)}
    img = []
    for f in facts:
        moved = frozenset(frozenset(frozenset(g.images[x] for x in e) for e in m) for m in f)
        img.append(index[moved])
    return Permutation(img)


def _find_subgroup(G: PermGroup, order: int, orders: tuple[int, int, int],
                   rng: random.Random, accept: Callable[[PermGroup], bool],
                   tries: int = 200000) -> PermGroup:
    """Random search for ``<a, b>`` of the given order with |a|,|b|,|ab| prescribed."""
    for _ in range(tries):
        a = G.random_element(rng)
        if a.order() != orders[0]:
            continue
        b = G.random_element(rng)
        if b.order() != orders[1] or (a * b).order() != orders[2]:
            continue
        H = PermGroup(G.degree, [a, b])
        if H.order() == order and accept(H):
            return H
    raise FixtureError(f"no subgroup of order {order} found")


def _coset_pair(G: PermGroup, order: int, orders: tuple[int, int, int], seed: int
                ) -> PairedAction:
    """Two inequivalent coset actions of G on subgroups of the given order."""
    rng = random.Random(seed)
    H1 = _find_subgroup(G, order, orders, rng, lambda H: True)
    rho1, _ = G.coset_action(H1)
    rho1_gens = list(rho1.generators)

    def inequivalent(H: PermGroup) -> bool:
        rho2, _ = G.coset_action(H)
        return find_relabeling(rho1_gens, list(rho2.generators)) is None

    H2 = _find_subgroup(G, order, orders, rng, inequivalent)
    rho2, _ = G.coset_action(H2)
    T = PermGroup(rho1.degree, rho1_gens)
    images = list(rho2.generators)
    return PairedAction(T, align_pair(T, images, rng))


# ---------------------------------------------------------------------------
# Named fixtures
# ---------------------------------------------------------------------------


def s6_pair() -> PairedAction:
    S6 = symmetric_group(6)
    facts = one_factorizations_k6()
    images = [action_on_factorizations(g, facts) for g in S6.generators]
    return PairedAction(S6, align_pair(S6, images, random.Random(6)))


def a6_pair() -> PairedAction:
    return s6_pair().restrict(list(alternating_group(6).generators))


def psl2_11_pair() -> PairedAction:
    # two classes of A5 in PSL(2,11), each of index 11
    return _coset_pair(psl2(11), 60, (2, 3, 5), seed=11)


def a7_15_pair() -> PairedAction:
    # two classes of PSL(3,2) in A7, each of index 15
    return _coset_pair(alternating_group(7), 168, (2, 3, 7), seed=15)


def m12_pair() -> PairedAction:
    # point stabilizers versus a transitive class of M11
    M = mathieu12()
    rng = random.Random(12)
    H = _find_subgroup(M, 7920, (2, 4, 11), rng, lambda H: H.is_transitive())
    rho2, _ = M.coset_action(H)
    return PairedAction(M, align_pair(M, list(rho2.generators), rng))


FIXTURES: dict[str, tuple[Callable[[], PairedAction], int]] = {
    "a6_pair": (a6_pair, 360),
    "s6_pair": (s6_pair, 720),
    "psl2_11_pair": (psl2_11_pair, 660),
    "a7_15_pair": (a7_15_pair, 2520),
    "m12_pair": (m12_pair, 95040),
}


def build_fixture(name: str) -> PairedAction:
    """Build and validate a named paired action."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(sorted(FIXTURES))}")
    builder, order = FIXTURES[name]
    pa = builder()
    val = validate_pair(pa, order)
    if not val.ok:
        failed = [k for k, v in val.checks.items() if not v]
        raise FixtureError(f"fixture {name} failed validation: {failed}")
    return pa


# ---------------------------------------------------------------------------
# Worked example: ell blocks of permutation codes with matching parities
# ---------------------------------------------------------------------------


def example_code(q: int = 5, ell: int = 2) -> Code:
    """``{(alpha(t_1),...,alpha(t_ell)) : t_i t_j^-1 even}`` in H(ell*q, q)."""
    elems = symmetric_group(q).elements()
    by_parity = {True: [], False: []}
    for t in elems:
        by_parity[t.is_even()].append(t.images)
    words = []
    for cls in by_parity.values():
        for ts in itertools.product(cls, repeat=ell):
            words.append(tuple(itertools.chain.from_iterable(ts)))
    return Code(ell * q, q, tuple(words))


def _on_block(x: WreathElement, block: int, ell: int) -> WreathElement:
    from .codes import embed_block

    return embed_block(x, block, ell)


def _on_all_blocks(x: WreathElement, ell: int) -> WreathElement:
    g = _on_block(x, 0, ell)
    for b in range(1, ell):
        g = g * _on_block(x, b, ell)
    return g


def example_group(q: int = 5, ell: int = 2) -> WreathGroup:
    """Elements ``(x_{h_i} sigma_i)_i sigma`` with all h_i h_j^-1 and sigma_i sigma_j^-1 even."""
    from .codes import block_permutation

    Sq = symmetric_group(q)
    Aq = alternating_group(q)
    gens = []
    for h in Sq.generators:
        gens.append(_on_all_blocks(x_elem(h, q), ell))
        gens.append(_on_all_blocks(sigma_elem(h), ell))
    for a in Aq.generators:
        gens.append(_on_block(x_elem(a, q), 0, ell))
        gens.append(_on_block(sigma_elem(a), 0, ell))
    if ell > 1:
        for s in symmetric_group(ell).generators:
            gens.append(block_permutation(s, q, q))
    return WreathGroup(ell * q, q, gens)


def twisted_example(name: str = "a6_pair") -> tuple[PairedAction, Code, WreathGroup]:
    from .codes import twisted_code, twisted_code_group

    pa = build_fixture(name)
    return pa, twisted_code(pa), twisted_code_group(pa)


__all__ = [
    "FIXTURES", "FixtureError", "PairValidation", "a6_pair", "a7_15_pair", "align_pair",
    "build_fixture", "centralizer_in_symmetric", "example_code", "example_group",
    "m12_pair", "one_factorizations_k6", "psl2_11_pair", "s6_pair", "twisted_example",
    "validate_pair", "block_swap",
]
