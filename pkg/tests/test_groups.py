from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidcleft.cyclotomic import make_field
from braidcleft.groups import (Character, FiniteGroup, automorphism_group, automorphisms, find_isomorphism,
                               is_homomorphism, semidirect_opp, symmetric_group)


@pytest.fixture(scope="module")
def c2cubed():
    return FiniteGroup.cyclic_product([2, 2, 2])


def test_cyclic_product_names_and_words(c2cubed):
    G = c2cubed
    assert G.order == 8
    z = G.word("g1*g2*g3")
    assert G.name(z) == "g1*g2*g3"
    assert G.name(G.identity) == "1"
    assert G.element_order(z) == 2
    C6 = FiniteGroup.cyclic_product([6])
    assert C6.name(C6.word("g1^4")) == "g1^4"
    assert C6.power(C6.word("g1"), -1) == C6.word("g1^5")


def test_table_validation_rejects_non_groups():
    with pytest.raises(ValueError):
        FiniteGroup([[0, 1], [0, 1]])


def test_character_values(c2cubed):
    F = make_field(2)
    chi = Character.from_generators(c2cubed, F, [1, 1, 1])
    assert chi(c2cubed.word("g1*g2*g3")) == -1
    assert chi(c2cubed.word("g1*g2")) == 1
    with pytest.raises(ValueError):
        Character(c2cubed, F, [1] * 8)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5))
def test_character_multiplicative(e, a, b):
    F = make_field(6)
    G = FiniteGroup.cyclic_product([6])
    chi = Character.from_generators(G, F, [e])
    g, h = G.from_exponents([a]), G.from_exponents([b])
    assert chi(G.mul(g, h)) == chi(g) * chi(h)


def test_aut_of_c2cubed_is_gl32(c2cubed):
    assert len(automorphisms(c2cubed)) == 168


def test_aut_chi_z_c2cubed_is_s3(c2cubed):
    F = make_field(2)
    chi = Character.from_generators(c2cubed, F, [1, 1, 1])
    auts = automorphisms(c2cubed, chi, c2cubed.word("g1*g2*g3"))
    assert len(auts) == 6
    assert auts[0] == tuple(c2cubed)
    A = automorphism_group(auts)
    S3 = symmetric_group(3)
    iso = find_isomorphism(A, S3)
    assert iso is not None and is_homomorphism(A, S3, iso)
    assert find_isomorphism(A, FiniteGroup.cyclic_product([6])) is None


def test_aut_chi_z_c6_trivial():
    F = make_field(6)
    G = FiniteGroup.cyclic_product([6])
    chi = Character.from_generators(G, F, [2])
    assert len(automorphisms(G, chi, G.word("g1"))) == 1


def test_max_order_bound():
    with pytest.raises(ValueError, match="exceeds"):
        automorphisms(FiniteGroup.cyclic_product([8, 9]), max_order=64)


def test_semidirect_product(c2cubed):
    F = make_field(2)
    chi = Character.from_generators(c2cubed, F, [1, 1, 1])
    auts = automorphisms(c2cubed, chi, c2cubed.word("g1*g2*g3"))
    P = semidirect_opp(c2cubed, auts)
    assert P.order == 48
    # (g, id)(h, id) = (gh, id)
    idx = {p: i for i, p in enumerate(P.pairs)}
    g, h = c2cubed.word("g1"), c2cubed.word("g2")
    assert P.pairs[P.mul(idx[(g, 0)], idx[(h, 0)])] == (c2cubed.mul(g, h), 0)
    # (1, f)(h, k) = (h, k o f)
    for f in range(len(auts)):
        for k in range(len(auts)):
            got_g, got_aut = P.pairs[P.mul(idx[(c2cubed.identity, f)], idx[(h, k)])]
            assert got_g == h
            assert auts[got_aut] == tuple(auts[k][auts[f][x]] for x in c2cubed)
