"""Neighbour transitive examples shared by the property suites, with cached
derived data (neighbour sets, stabilizer orbits) so sampled checks stay cheap."""

from __future__ import annotations

from functools import lru_cache

from ntcodes import codes, fixtures
from ntcodes.analyze import check_neighbour_transitive
from ntcodes.hamming import min_distance, neighbour_set, nu
from ntcodes.perm import alternating_group, normalizer_in_symmetric


@lru_cache(maxsize=None)
def nt_examples() -> dict:
    """name -> (code, group, invariant coordinate blocks)."""
    out = {}
    for m, q in [(3, 2), (5, 3), (4, 4), (3, 5)]:
        out[f"rep{m}{q}"] = (codes.rep_code(m, q), codes.rep_group(m, q), [list(range(m))])
    A5 = alternating_group(5)
    out["perm_a5"] = (codes.perm_code(A5),
                      codes.perm_code_group(A5, normalizer_in_symmetric(A5).generators),
                      [list(range(5))])
    r32 = codes.rep_code(3, 2)
    out["prod_rep32"] = (codes.prod_code(r32, 2), codes.product_group(codes.rep_group(3, 2), 2),
                         [[0, 1, 2], [3, 4, 5]])
    _, C, X = fixtures.twisted_example("a6_pair")
    out["twisted_a6"] = (C, X, [list(range(6)), list(range(6, 12))])
    out["worked"] = (fixtures.example_code(), fixtures.example_group(), [list(range(5)), list(range(5, 10))])
    return out


NAMES = ["rep32", "rep53", "rep44", "rep35", "perm_a5", "prod_rep32", "twisted_a6", "worked"]


@lru_cache(maxsize=None)
def verified(name: str) -> bool:
    C, X, _ = nt_examples()[name]
    return check_neighbour_transitive(C, X).verdict is True


@lru_cache(maxsize=None)
def delta(name: str) -> int:
    return min_distance(nt_examples()[name][0])


@lru_cache(maxsize=None)
def neighbours(name: str) -> list:
    return sorted(neighbour_set(nt_examples()[name][0]))


@lru_cache(maxsize=None)
def stabilizer_data(name: str):
    """Codeword alpha, its stabilizer, the stabilizer orbit of its first neighbour."""
    C, X, _ = nt_examples()[name]
    alpha = C.words[0]
    Xa = X.vertex_stabilizer(alpha)
    first = nu(alpha, 0, (alpha[0] + 1) % C.q)
    return alpha, Xa, Xa.orbit_set(first), Xa.top_group().orbit(0)


@lru_cache(maxsize=None)
def entry_data(name: str, i: int):
    """Orbit of the least codeword and the ordered-pair orbit of (0, 1) under X_i."""
    C, X, _ = nt_examples()[name]
    Xi = X.entry_stabilizer(i)
    gens = [g.bottom[i].images for g in Xi.generators]
    seen, todo = {(0, 1)}, [(0, 1)]
    while todo:
        a, b = todo.pop()
        for h in gens:
            p = (h[a], h[b])
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return Xi.orbit_set(C.words[0], limit=len(C)), seen
