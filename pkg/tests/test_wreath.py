from __future__ import annotations

import random

import pytest

from ntcodes.codes import rep_code, rep_group
from ntcodes.fixtures import example_code, example_group
from ntcodes.perm import Permutation, symmetric_group, trivial_group
from ntcodes.wreath import (WreathElement, WreathGroup, apply, chi_restrict, compose, diag_embed,
                            inverse, mu, neighbour_image_check, phi, project_vertex, top_embed)


def rand_elem(rng, m, q):
    bottom = tuple(Permutation(rng.sample(range(q), q)) for _ in range(m))
    return WreathElement(bottom, Permutation(rng.sample(range(m), m)))


def test_apply_examples():
    assert apply(WreathElement.identity(3, 4), (1, 2, 3)) == (1, 2, 3)
    swap = WreathElement.pure_top(Permutation([1, 0]), 5)
    assert apply(swap, (3, 4)) == (4, 3)
    x = WreathElement((Permutation([1, 0]), Permutation([0, 1])), Permutation([1, 0]))
    assert apply(x, (0, 0)) == (0, 1)


def test_compose_inverse():
    rng = random.Random(1)
    for _ in range(50):
        x, y = rand_elem(rng, 4, 3), rand_elem(rng, 4, 3)
        assert compose(x, WreathElement.identity(4, 3)) == x
        assert compose(x, inverse(x)).is_identity()
        for _ in range(100):
            v = tuple(rng.randrange(3) for _ in range(4))
            assert apply(compose(x, y), v) == apply(y, apply(x, v))


def test_context_mismatch():
    with pytest.raises(ValueError):
        WreathElement.identity(2, 3) * WreathElement.identity(3, 3)


def test_neighbour_image():
    lhs, rhs = neighbour_image_check(WreathElement.identity(3, 3), (0, 1, 2), 1, 0)
    assert lhs == rhs == (0, 0, 2)
    top = WreathElement.pure_top(Permutation([2, 0, 1]), 3)
    assert neighbour_image_check(top, (0, 1, 2), 0, 1)[0] == (1, 2, 1)
    rng = random.Random(2)
    for _ in range(100):
        x = rand_elem(rng, 4, 3)
        neighbour_image_check(x, tuple(rng.randrange(3) for _ in range(4)), rng.randrange(4),
                              rng.randrange(3))


def test_mu_phi():
    h = Permutation([1, 2, 0])
    d = WreathElement.diag(h, 3)
    assert mu(d).is_identity() and phi(d, 1) == h
    s = Permutation([1, 0, 2])
    assert mu(WreathElement.pure_top(s, 2)) == s
    with pytest.raises(ValueError):
        phi(WreathElement.pure_top(s, 2), 0)
    rng = random.Random(3)
    for _ in range(50):
        x, y = rand_elem(rng, 4, 3), rand_elem(rng, 4, 3)
        assert mu(x * y) == mu(x) * mu(y)


def test_phi_on_example_stabilizer():
    X = example_group()
    X0 = X.entry_stabilizer(0)
    assert X0.alphabet_group(0).order() == 120
    assert X.alphabet_group(0).order() == 120


def test_diag_embed():
    assert diag_embed(trivial_group(3), 4).order() == 1
    assert diag_embed(symmetric_group(4), 3).order() == 24
    assert diag_embed(symmetric_group(3), 3).is_orbit(rep_code(3, 3))


def test_orbits_of_vertices():
    assert len(WreathGroup(3, 2, []).orbit_of_vertex((0, 1, 0))) == 1
    X = rep_group(3, 3)
    assert X.orbit_of_vertex((0, 0, 0)) == rep_code(3, 3)
    L = top_embed(symmetric_group(4), 2)
    assert len(L.orbit_of_vertex((1, 0, 0, 0))) == 4


def test_top_group_and_kernel():
    D = diag_embed(symmetric_group(3), 4)
    assert D.top_group().order() == 1
    assert top_embed(symmetric_group(4), 2).top_group().order() == 24
    X = rep_group(4, 3)
    K = X.base_kernel()
    assert K.order() == 6 and all(g.top.is_identity() for g in K.generators)
    assert top_embed(symmetric_group(4), 2).base_kernel().order() == 1


def test_example_group_structure():
    X = example_group()
    assert X.top_group().is_transitive()
    assert X.base_kernel().order() == 7200
    assert X.entry_stabilizer(0).is_orbit(example_code())
    assert X.block_stabilizer(range(5)).is_orbit(example_code())


def test_stabilizers():
    D = diag_embed(symmetric_group(3), 4)
    assert D.entry_stabilizer(2).order() == D.order()
    L = top_embed(symmetric_group(4), 2)
    L0 = L.entry_stabilizer(0)
    assert L0.order() == 6 and L0.top_group().orbit(1) == {1, 2, 3}


def test_chi_restrict():
    assert chi_restrict(WreathElement.identity(4, 3), [1, 3]).is_identity()
    h = Permutation([2, 0, 1])
    assert chi_restrict(WreathElement.diag(h, 4), [0, 2]) == WreathElement.diag(h, 2)
    x = WreathElement.pure_top(Permutation([1, 0, 2]), 2)
    with pytest.raises(ValueError):
        chi_restrict(x, [0, 2])
    rng = random.Random(4)
    X = rep_group(4, 3)
    XJ = X.block_stabilizer([0, 1])
    for _ in range(100):
        g = XJ.random_element(rng)
        v = tuple(rng.randrange(3) for _ in range(4))
        assert project_vertex(apply(g, v), [0, 1]) == apply(chi_restrict(g, [0, 1]), project_vertex(v, [0, 1]))


def test_alphabet_group():
    assert rep_group(3, 4).alphabet_group(1).order() == 24
    assert top_embed(symmetric_group(3), 4).alphabet_group(0).order() == 1


def test_kernel_is_normal():
    rng = random.Random(5)
    X = example_group()
    K = X.base_kernel()
    for _ in range(30):
        x = X.random_element(rng)
        for k in K.generators:
            c = k.conjugate(x)
            assert c.top.is_identity() and X.contains(c) and K.contains(c)


def test_json_roundtrip():
    rng = random.Random(6)
    x = rand_elem(rng, 5, 4)
    assert WreathElement.from_json(x.to_json()) == x
    assert WreathElement.from_stacked(x.stacked(), 5, 4) == x
