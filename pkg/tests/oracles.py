"""Brute-force oracles that share no code with the package."""

from __future__ import annotations

from itertools import combinations, product


def closure(gens: list[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    ident = tuple(range(n))
    seen, todo = {ident}, [ident]
    while todo:
        p = todo.pop()
        for g in gens:
            r = tuple(g[p[i]] for i in range(n))
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return seen


def cycles_eval(n: int, cycles: list[tuple[int, ...]]) -> tuple[int, ...]:
    img = list(range(n))
    for c in cycles:
        for k, a in enumerate(c):
            img[a] = c[(k + 1) % len(c)]
    return tuple(img)


def hamming(u, v) -> int:
    return sum(a != b for a, b in zip(u, v))


def pairwise_min_distance(words) -> int:
    return min(hamming(u, v) for u, v in combinations(words, 2))


def covering_radius(words, m: int, q: int) -> int:
    return max(min(hamming(v, c) for c in words) for v in product(range(q), repeat=m))


def minimal_degree(elems) -> int:
    return min(sum(i != x for i, x in enumerate(g)) for g in elems if any(i != x for i, x in enumerate(g)))
