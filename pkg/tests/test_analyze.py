from __future__ import annotations

from itertools import product

import pytest

from ntcodes import analyze
from ntcodes.analyze import (check_completely_regular, check_completely_transitive,
                             check_neighbour_transitive, check_prop27, check_projection_structure,
                             check_s_regular, classify_form, decompose, rep_equivalence_witness,
                             rep_equivalent_group, support_partition)
from ntcodes.codes import (cayley_code, cyclic_table, perm_code, perm_code_group,
                           perm_group_table, prod_code, product_group, rep_code, rep_group)
from ntcodes.fixtures import a6_pair, twisted_example
from ntcodes.hamming import Code
from ntcodes.limits import PreconditionError
from ntcodes.perm import Permutation, alternating_group, cyclic_group, normalizer_in_symmetric, symmetric_group
from ntcodes.wreath import WreathElement, WreathGroup, diag_embed, full_automorphism_group, image_of_code
from recheck import recheck


def gens_json(X):
    return [g.to_json() for g in X.generators]


def test_nt_examples():
    assert check_neighbour_transitive(rep_code(3, 3), rep_group(3, 3)).verdict is True
    R = rep_code(3, 3)
    X = WreathGroup(3, 3, [])
    rep = check_neighbour_transitive(R, X)
    assert rep.verdict is False and recheck(rep.to_json(), R.words, gens_json(X))
    A5 = alternating_group(5)
    X = perm_code_group(A5, symmetric_group(5).generators)
    assert check_neighbour_transitive(perm_code(A5), X).verdict is True


def test_nt_neighbour_failure_rechecked():
    R = rep_code(3, 3)
    X = diag_embed(symmetric_group(3), 3)
    rep = check_neighbour_transitive(R, X)
    assert rep.verdict is False and rep.counterexample["reason"].startswith("neighbour")
    assert recheck(rep.to_json(), R.words, gens_json(X))


def test_nt_generator_failure_rechecked():
    R = rep_code(3, 2)
    X = WreathGroup(3, 2, [WreathElement.pure_bottom([Permutation([1, 0]), Permutation([0, 1]),
                                                     Permutation([0, 1])])])
    rep = check_neighbour_transitive(R, X)
    assert rep.verdict is False and recheck(rep.to_json(), R.words, gens_json(X))


def test_nt_complete_code_rejected():
    full = Code.from_words(2, 2, product(range(2), repeat=2))
    with pytest.raises(PreconditionError):
        check_neighbour_transitive(full, rep_group(2, 2))


def test_ct_examples():
    assert check_completely_transitive(rep_code(5, 2), rep_group(5, 2)).verdict is True
    R = rep_code(4, 3)
    X = rep_group(4, 3)
    rep = check_completely_transitive(R, X)
    assert rep.verdict is False and recheck(rep.to_json(), R.words, gens_json(X))
    full = Code.from_words(2, 3, product(range(3), repeat=2))
    rep = check_completely_transitive(full, full_automorphism_group(2, 3))
    assert rep.verdict is True and rep.stats["rho"] == 0


def test_regularity():
    assert check_s_regular(rep_code(3, 3), 1).verdict is True
    C = Code.from_words(3, 2, [(0, 0, 0), (0, 1, 1)])
    rep = check_s_regular(C, 1)
    assert rep.verdict is False and recheck(rep.to_json(), C.words)
    assert check_completely_regular(rep_code(5, 2)).verdict is True
    rep = check_completely_regular(rep_code(4, 3))
    assert rep.verdict is False and recheck(rep.to_json(), rep_code(4, 3).words)


def test_rep_witness():
    y = rep_equivalence_witness(rep_code(4, 3))
    assert image_of_code(rep_code(4, 3), y) == rep_code(4, 3)
    C = perm_code(cyclic_group(5))
    assert image_of_code(C, rep_equivalence_witness(C)) == rep_code(5, 5)
    Z6 = cayley_code(cyclic_table(6))
    assert image_of_code(Z6, rep_equivalence_witness(Z6)) == rep_code(6, 6)
    assert rep_equivalence_witness(perm_code(symmetric_group(3))) is None


def test_rep_equivalent_group_cayley():
    table, _ = perm_group_table(symmetric_group(3))
    C = cayley_code(table)
    X = rep_equivalent_group(C)
    assert X.order() == 720 * 720
    assert check_neighbour_transitive(C, X).verdict is True


def test_support_partition():
    A5 = alternating_group(5)
    sp = support_partition(diag_embed(A5, 3))
    assert sp.blocks == [[0, 1, 2]] and sp.factor_order == 60
    I = Permutation.identity(5)
    gens = [WreathElement.pure_bottom([g if j == i else I for j in range(3)])
            for i in range(3) for g in A5.generators]
    assert support_partition(WreathGroup(3, 5, gens)).blocks == [[0], [1], [2]]


def test_classify_form():
    A5 = alternating_group(5)
    D = diag_embed(A5, 4)
    assert classify_form(D, support_partition(D)).form == 1
    _, C, X = twisted_example("a6_pair")
    socK = WreathGroup.from_base_action(12, 6, X.base_kernel().base_action_group().socle())
    fc = classify_form(socK, support_partition(socK))
    assert fc.form == 2
    assert sorted(map(sorted, fc.halves[0])) == [list(range(6)), list(range(6, 12))]


def test_mixed_forms_rejected():
    pa = a6_pair()
    I = Permutation.identity(6)
    gens = []
    for g, h in zip(pa.group1.generators, pa.images):
        gens.append(WreathElement.pure_bottom([g, g, I, I, I, I]))
        gens.append(WreathElement.pure_bottom([I, I, g, g, h, h]))
    S = WreathGroup(6, 6, gens)
    sp = support_partition(S)
    assert sp.blocks == [[0, 1], [2, 3, 4, 5]]
    with pytest.raises(PreconditionError, match="disagree"):
        classify_form(S, sp)


def test_decompose_rep():
    d = decompose(rep_code(3, 5), rep_group(3, 5))
    assert d.shape == "ProdRep" and all(d.checks.values())


def test_decompose_perm_a5():
    A5 = alternating_group(5)
    C = perm_code(A5)
    d = decompose(C, perm_code_group(A5, normalizer_in_symmetric(A5).generators))
    assert d.shape == "ProdRepPerm" and len(d.translates) == 1 and d.delta_orbit == C
    assert all(d.checks.values())


def test_decompose_s5_rejected():
    S5 = symmetric_group(5)
    with pytest.raises(PreconditionError, match="minimum distance"):
        decompose(perm_code(S5), perm_code_group(S5))


def test_decompose_twisted():
    _, C, X = twisted_example("a6_pair")
    d = decompose(C, X)
    assert d.shape == "ProdRepTwisted" and d.form == 2 and len(d.translates) == 1
    assert all(d.checks.values())
    rep = d.report()
    assert rep.verdict is True and rep.to_json()["witnesses"]["shape"] == "ProdRepTwisted"


def test_projection_structure():
    C = prod_code(rep_code(3, 2), 2)
    X = product_group(rep_group(3, 2), 2)
    rep = check_projection_structure(C, X, [[0, 1, 2], [3, 4, 5]])
    assert rep.verdict is True and [b["kind"] for b in rep.witnesses["blocks"]] == ["rep", "rep"]
    _, T, Y = twisted_example("a6_pair")
    rep = check_projection_structure(T, Y, [range(6), range(6, 12)])
    assert rep.verdict is True
    assert [(b["kind"], b["p"]) for b in rep.witnesses["blocks"]] == [("all-subset", 1)] * 2
    with pytest.raises(PreconditionError):
        check_projection_structure(C, X, [[0, 1], [2, 3, 4, 5]])


def test_prop27():
    assert check_prop27(rep_code(3, 3), rep_group(3, 3)).verdict is True
    A5 = alternating_group(5)
    X = perm_code_group(A5, normalizer_in_symmetric(A5).generators)
    assert check_prop27(perm_code(A5), X).verdict is True
    with pytest.raises(PreconditionError):
        check_prop27(rep_code(3, 3), diag_embed(symmetric_group(3), 3))


def test_block_normalizes():
    _, C, X = twisted_example("a6_pair")
    socK = WreathGroup.from_base_action(12, 6, X.base_kernel().base_action_group().socle())
    assert analyze.check_block_normalizes(X, socK, range(6))


def test_report_json_shape():
    rep = check_neighbour_transitive(rep_code(3, 3), rep_group(3, 3))
    assert list(rep.to_json()) == ["property", "verdict", "witnesses", "counterexample", "stats"]
