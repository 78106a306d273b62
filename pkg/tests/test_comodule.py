from __future__ import annotations

import pytest

from braidcleft.comodule import (GradedSpaceData, GroupSpace, UFamily, build_coaction, build_transposition,
                                 coinvariants, coinvariants_from_coaction, regular_comodule_data, same_span,
                                 validate_graded_data, verify_comodule, verify_left_space, verify_u_family)
from braidcleft.cyclotomic import make_field
from braidcleft.groups import Character, FiniteGroup
from braidcleft.hd import HDAlgebra, HDDatum, taft_datum
from braidcleft.tensor import LinMap


@pytest.fixture(scope="module")
def reg3(H3):
    return regular_comodule_data(H3)


def test_regular_data_valid(H3, reg3):
    assert validate_graded_data(H3, reg3).ok


def test_regular_transposition_is_braid(H3, reg3):
    s = build_transposition(H3, reg3)
    assert all(s.on_basis(k) == H3.braid.on_basis(k) for k in H3.pairs())
    assert verify_left_space(H3, H3.basis, s).ok


def test_regular_coaction_is_comultiplication(H3, reg3):
    nu = build_coaction(H3, reg3)
    assert all(nu.on_basis((b,)) == H3.comul.on_basis((b,)) for b in H3.basis)
    assert verify_comodule(H3, H3.basis, nu, build_transposition(H3, reg3)).ok


def test_u_family(H3, reg3):
    fam = UFamily(H3, reg3)
    assert verify_u_family(H3, reg3, fam).ok
    nu = fam.coaction()
    assert all(nu.on_basis((b,)) == H3.comul.on_basis((b,)) for b in H3.basis)


def test_regular_coinvariants_are_scalars(H3, reg3):
    one = H3.field.one
    a = coinvariants(H3, reg3)
    b = coinvariants_from_coaction(H3, H3.basis, build_coaction(H3, reg3))
    assert same_span(a, [H3.unit], one)
    assert same_span(b, [H3.unit], one)


def _trivial_data(H, degree_elem):
    one = H.field.one
    basis = ["v", "w"]
    return GradedSpaceData(basis, {b: (degree_elem, 0) for b in basis},
                           LinMap(lambda k: {k: one}, 1, 1), LinMap(lambda k: {}, 1, 1))


def test_trivial_comodules(H3):
    one = H3.field.one
    G = H3.group
    d = _trivial_data(H3, G.identity)
    s = build_transposition(H3, d)
    assert s.on_basis(((G.word("g1"), 2), "v")) == {("v", (G.word("g1"), 2)): H3.q ** 0 * one}
    assert len(coinvariants(H3, d)) == 2
    g = G.word("g1")
    d2 = _trivial_data(H3, g)
    nu = build_coaction(H3, d2)
    assert nu.on_basis(("v",)) == {("v", (g, 0)): one}
    assert coinvariants(H3, d2) == []
    assert verify_u_family(H3, d2).ok


def test_ladder_alpha_violation(H3):
    d = regular_comodule_data(H3)
    bad = GradedSpaceData(d.basis, d.degree, LinMap(lambda k: {k: H3.field.one}, 1, 1), d.ladder, H3.name_of)
    r = validate_graded_data(H3, bad)
    assert r["ladder_alpha_commutation"].status == "fail"


def test_alpha_not_component_preserving(H3):
    d = regular_comodule_data(H3)
    G = H3.group
    g = G.word("g1")
    swap = LinMap(lambda k: {((G.mul(k[0][0], g), k[0][1]),): H3.field.one}, 1, 1)
    r = validate_graded_data(H3, GradedSpaceData(d.basis, d.degree, swap, d.ladder, H3.name_of))
    assert r["alpha_preserves_degree"].status == "fail"


def test_long_ladder_rejected():
    H = HDAlgebra(taft_datum(2))
    G = H.group
    one = H.field.one
    g = G.word("g1")
    degree = {"v0": (G.identity, 0), "v1": (g, 0), "v2": (G.identity, 0)}
    step = {"v2": "v1", "v1": "v0"}
    ladder = LinMap(lambda k: {(step[k[0]],): one} if k[0] in step else {}, 1, 1)
    d = GradedSpaceData(["v0", "v1", "v2"], degree, LinMap(lambda k: {k: one}, 1, 1), ladder)
    r = validate_graded_data(H, d)
    assert r["ladder_nilpotent"].status == "fail"
    assert r["ladder_nilpotent"].witness == "v2"
    assert not verify_u_family(H, d).ok


def test_unsupported_parameters_rejected():
    F = make_field(2)
    G = FiniteGroup.cyclic_product([2])
    chi = Character.from_generators(G, F, [0])
    H = HDAlgebra(HDDatum(G, chi, G.identity, F.zero, F(-1)))
    assert (H.p, H.q) == (1, -1)
    with pytest.raises(ValueError, match=r"unsupported \(p,q\)=\(1,-1\)"):
        validate_graded_data(H, regular_comodule_data(H))


def test_group_space_with_inversion():
    G = FiniteGroup.cyclic_product([3])
    F = make_field(3)
    ident = tuple(G)
    inversion = tuple(G.inv(g) for g in G)
    V = GroupSpace(G, F, ["a", "b"], {"a": ident, "b": inversion})
    assert V.verify().ok
    g = G.word("g1")
    assert V.s.on_basis((g, "b")) == {("b", G.inv(g)): F.one}
    trivial = GroupSpace(FiniteGroup.cyclic_product([2]), make_field(2), ["a"], {"a": (0, 1)})
    assert trivial.s.on_basis((1, "a")) == {("a", 1): make_field(2).one}
