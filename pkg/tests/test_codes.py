from __future__ import annotations

import random
from itertools import combinations

import pytest

from ntcodes.codes import (PairedAction, all_code, c1_of_J, cayley_code, check_group_table,
                           cyclic_table, injective_code, is_frequency_array, perm_code,
                           perm_group_table, prod_code, project, rep_code, rep_l_code,
                           twisted_code, twisted_distance, twisted_min_distance, weight_code)
from ntcodes.fixtures import a6_pair, example_code
from ntcodes.hamming import Code, covering_radius, distance, min_distance
from ntcodes.perm import (PermGroup, Permutation, alternating_group, cyclic_group, psl3_2,
                          symmetric_group, trivial_group)
from ntcodes.wreath import WreathElement, image_of_code
from oracles import pairwise_min_distance


def test_rep():
    assert rep_code(3, 2).words == ((0, 0, 0), (1, 1, 1))
    assert len(rep_code(4, 7)) == 7
    assert min_distance(rep_code(5, 3)) == 5


def test_all():
    assert len(all_code(1, 5)) == 120
    C = all_code(2, 3)
    assert len(C) == 90 and min_distance(C) == 2
    assert is_frequency_array(C) == 2


def test_injective_and_weight():
    C = injective_code(2, 3)
    assert len(C) == 6 and min_distance(C) == 1 and covering_radius(C) == 1
    W = weight_code(3)
    assert len(W) == 6 and min_distance(W) == 1 and covering_radius(W) == 1
    assert injective_code(1, 4).is_complete()


def test_prod_and_rep_l():
    assert prod_code(rep_code(2, 2), 2).words == ((0, 0, 0, 0), (0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 1))
    R = rep_code(3, 2)
    assert min_distance(prod_code(R, 2)) == 3
    assert min_distance(rep_l_code(R, 2)) == 6


def test_perm_code():
    assert perm_code(cyclic_group(3)).words == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert min_distance(perm_code(cyclic_group(3))) == 3
    S3 = perm_code(symmetric_group(3))
    assert len(S3) == 6 and pairwise_min_distance(S3.words) == 2
    assert perm_code(trivial_group(4)).words == ((0, 1, 2, 3),)


@pytest.mark.parametrize("T", [alternating_group(5), symmetric_group(4), psl3_2()])
def test_perm_code_distance_identity(T):
    els = T.elements()
    for s, t in combinations(els[:40], 2):
        assert distance(s.images, t.images) == (s * ~t).num_moved()
    assert min_distance(perm_code(T)) == T.minimal_degree() == pairwise_min_distance(perm_code(T).words)
    assert is_frequency_array(perm_code(T)) == 1


def test_twisted_identity_pairing():
    T = alternating_group(5)
    pa = PairedAction(T, T.generators)
    C = twisted_code(pa)
    assert len(C) == 60 and min_distance(C) == 2 * T.minimal_degree()


def test_twisted_a6():
    pa = a6_pair()
    C = twisted_code(pa)
    assert len(C) == 360 and C.m == 12
    assert twisted_min_distance(pa) == min_distance(C) == 8
    assert is_frequency_array(C) == 2
    rng = random.Random(0)
    D = pa.diagonal_group()
    for _ in range(50):
        s, t = D.random_element(rng), D.random_element(rng)
        ws = s.images[:6] + tuple(x - 6 for x in s.images[6:])
        wt = t.images[:6] + tuple(x - 6 for x in t.images[6:])
        g = Permutation(s.images[:6]) * ~Permutation(t.images[:6])
        assert distance(ws, wt) == twisted_distance(pa, g)


def test_twisted_rejects_bad_images():
    T = symmetric_group(3)
    pa = PairedAction(T, [Permutation([0, 1, 2]), Permutation([1, 2, 0])])
    with pytest.raises(ValueError):
        twisted_code(pa)


def test_cayley():
    assert cayley_code(cyclic_table(3)).words == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    table, _ = perm_group_table(symmetric_group(3))
    C = cayley_code(table)
    assert len(C) == 6 and min_distance(C) == 6
    order = [3, 1, 4, 0, 5, 2]
    C2 = cayley_code(table, order)
    # ordering change is the coordinate relabelling sending o to position of o in order
    top = Permutation([order.index(o) for o in range(6)])
    assert image_of_code(C, WreathElement.pure_top(top, 6)) == C2


def test_cayley_rejects_non_group():
    with pytest.raises(ValueError):
        check_group_table([[0, 1], [1, 1]])
    with pytest.raises(ValueError):
        cayley_code(cyclic_table(3), [0, 0, 1])


def test_project():
    assert project(rep_code(3, 2), [0, 1]) == rep_code(2, 2)
    C = example_code()
    assert project(C, range(5)) == perm_code(symmetric_group(5))
    assert project(C, range(10)) == C


def test_c1_of_J():
    R = rep_code(3, 2)
    assert c1_of_J(R, [0]) == {(1, 0, 0), (0, 1, 1)}


def test_parameter_validation():
    from ntcodes.limits import BoundExceeded

    with pytest.raises(ValueError):
        rep_code(0, 3)
    with pytest.raises(ValueError):
        weight_code(4)
    with pytest.raises(ValueError):
        injective_code(4, 3)
    with pytest.raises(BoundExceeded):
        all_code(3, 4, bound=1000)
    with pytest.raises(BoundExceeded):
        prod_code(rep_code(2, 10), 4, bound=1000)


def test_frequency_property():
    assert all(sorted(w) == [0, 0, 1, 1, 2, 2] for w in all_code(2, 3))
    assert is_frequency_array(perm_code(alternating_group(5))) == 1
    assert is_frequency_array(rep_code(3, 3)) is None
