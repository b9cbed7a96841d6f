from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, strategies as st

from ntcodes.codes import all_code, injective_code, rep_code, weight_code
from ntcodes.hamming import (Code, covering_radius, distance, distance_partition, distance_to_code,
                             min_distance, neighbour_set, nu, sphere, sphere_size)
from ntcodes.limits import BoundExceeded
from oracles import covering_radius as brute_rho, hamming, pairwise_min_distance


def test_distance():
    assert distance((0, 0, 0), (1, 1, 0)) == 2
    assert distance((2, 1), (2, 1)) == 0
    assert distance((0,) * 5, (1,) * 5) == 5
    with pytest.raises(ValueError):
        distance((0, 1), (0,))


def test_nu():
    assert nu((0, 0, 0), 1, 1) == (0, 1, 0)
    assert nu((2, 1, 0), 1, 1) == (2, 1, 0)
    assert distance((2, 1, 0), nu((2, 1, 0), 2, 2)) == 1
    with pytest.raises(ValueError):
        nu((0, 0), 3, 1)


def test_sphere():
    assert sphere((0, 1), 0, 3) == [(0, 1)]
    assert len(sphere((0, 0, 0), 1, 2)) == 3
    s = sphere((0, 1, 2, 0), 2, 3)
    brute = [v for v in product(range(3), repeat=4) if hamming(v, (0, 1, 2, 0)) == 2]
    assert s == sorted(brute) and len(s) == 24 == sphere_size(4, 3, 2)


def test_code_canonical():
    C = Code.from_words(2, 3, [(2, 1), (0, 0), (2, 1)])
    assert C.words == ((0, 0), (2, 1))
    with pytest.raises(ValueError):
        Code.from_words(2, 2, [(0, 2)])
    with pytest.raises(ValueError):
        Code.from_words(2, 2, [])


def test_min_distance():
    assert min_distance(rep_code(5, 3)) == 5
    assert min_distance(all_code(2, 3)) == 2
    assert min_distance(injective_code(2, 3)) == 1


@given(st.sets(st.tuples(*[st.integers(0, 2)] * 4), min_size=2, max_size=20), st.integers(1, 3))
def test_min_distance_matches_pairwise(words, threads):
    C = Code.from_words(4, 3, words)
    assert min_distance(C, threads=threads) == pairwise_min_distance(C.words)


def test_distance_to_code():
    R = rep_code(3, 2)
    assert distance_to_code((1, 1, 1), R) == 0
    assert distance_to_code((0, 1, 1), R) == 1
    for v in product(range(3), repeat=3):
        assert distance_to_code(v, rep_code(3, 3)) <= 3


def test_neighbour_set():
    assert neighbour_set(rep_code(2, 2)) == {(0, 1), (1, 0)}
    full = Code.from_words(2, 2, product(range(2), repeat=2))
    assert neighbour_set(full) == frozenset() and full.is_complete()
    N = neighbour_set(rep_code(3, 2))
    brute = {v for v in product(range(2), repeat=3) if min(hamming(v, c) for c in rep_code(3, 2)) == 1}
    assert N == brute and len(N) == 6


def test_partition_and_covering_radius():
    assert covering_radius(all_code(2, 3)) == 4
    full = Code.from_words(2, 2, product(range(2), repeat=2))
    assert covering_radius(full) == 0
    assert covering_radius(weight_code(3)) == 1
    part = distance_partition(rep_code(4, 3))
    assert sum(part.sizes()) == 3 ** 4
    for i, cell in enumerate(part.cells):
        assert all(distance_to_code(v, rep_code(4, 3)) == i for v in cell)


@given(st.sets(st.tuples(*[st.integers(0, 2)] * 3), min_size=1, max_size=8))
def test_covering_radius_matches_brute(words):
    C = Code.from_words(3, 3, words)
    assert covering_radius(C) == brute_rho(C.words, 3, 3)


def test_partition_bound():
    with pytest.raises(BoundExceeded):
        distance_partition(rep_code(6, 3), bound=50)


@given(*[st.tuples(*[st.integers(0, 3)] * 5)] * 3)
def test_triangle_inequality(u, v, w):
    assert distance(u, w) <= distance(u, v) + distance(v, w)


@pytest.mark.parametrize("C", [rep_code(5, 3), rep_code(7, 2), rep_code(6, 4)])
def test_inner_cells_are_sphere_unions(C):
    delta = min_distance(C)
    part = distance_partition(C)
    for i in range((delta - 1) // 2 + 1):
        spheres = [set(sphere(a, i, C.q)) for a in C]
        union = set().union(*spheres)
        assert sum(map(len, spheres)) == len(union) and part.cells[i] == union


@given(st.sets(st.tuples(*[st.integers(0, 2)] * 4), min_size=1, max_size=15))
def test_neighbour_set_size_bound(words):
    C = Code.from_words(4, 3, words)
    assert len(neighbour_set(C)) <= len(C) * 4 * 2
