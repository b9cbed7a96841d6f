from __future__ import annotations

import pytest

from ntcodes.codes import PairedAction, twisted_code
from ntcodes.fixtures import (FIXTURES, FixtureError, a6_pair, build_fixture,
                              one_factorizations_k6, validate_pair)
from ntcodes.perm import Permutation


def test_one_factorizations():
    assert len(one_factorizations_k6()) == 6


def test_a6_pair_shape():
    pa = a6_pair()
    assert pa.q == 6
    assert pa.diagonal_group().order() == 360
    assert pa.group2().is_2transitive()


def test_tau_is_involution():
    pa = a6_pair()
    for g in pa.group1.generators:
        assert pa.tau(pa.tau(g)) == g


@pytest.mark.parametrize("name", ["a6_pair", "s6_pair", "psl2_11_pair"])
def test_validation_passes(name):
    _, order = FIXTURES[name]
    val = validate_pair(build_fixture(name), order)
    assert val.ok, val.checks


def test_psl2_11_degrees():
    pa = build_fixture("psl2_11_pair")
    assert pa.q == 11 and pa.group1.order() == 660 and pa.group2().order() == 660


def test_corrupted_image_fails():
    pa = a6_pair()
    bad = list(pa.images)
    bad[0] = Permutation(list(reversed(range(6))))
    val = validate_pair(PairedAction(pa.group1, bad), 360)
    assert not val.ok and not val.checks["homomorphism"]


def test_identity_pairing_is_equivalent():
    pa = a6_pair()
    val = validate_pair(PairedAction(pa.group1, pa.group1.generators), 360)
    assert not val.checks["no relabeling"]
    assert not val.checks["stabilizer has no fixed point in second action"]


def test_unknown_fixture():
    with pytest.raises(KeyError, match="available"):
        build_fixture("hs_pair")


def test_twisted_from_fixture_words():
    assert len(twisted_code(a6_pair())) == 360
