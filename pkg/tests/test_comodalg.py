from __future__ import annotations

from braidcleft.comodalg import (ComoduleAlgebraData, build_comodule_algebra, induced_kG_subalgebra,
                                 regular_comodule_algebra_data, validate_comodalg)
from braidcleft.comodule import same_span
from braidcleft.fixtures import group_comodule_algebra_data
from braidcleft.hd import HDAlgebra, taft_datum
from braidcleft.tensor import LinMap


def test_regular_valid_and_coaction_is_comultiplication(H3):
    d = regular_comodule_algebra_data(H3)
    assert validate_comodalg(H3, d).ok
    ca, r = build_comodule_algebra(H3, d)
    assert r.ok
    assert all(ca.nu.on_basis((b,)) == H3.comul.on_basis((b,)) for b in H3.basis)
    assert "lower_component_formula" in validate_comodalg(H3, d)


def test_regular_c2cubed(H2):
    d = regular_comodule_algebra_data(H2)
    r = validate_comodalg(H2, d)
    assert r.ok
    assert "lower_component_formula" not in r


def test_group_algebra_comodule_algebra(H3):
    d = group_comodule_algebra_data(H3)
    assert validate_comodalg(H3, d).ok
    ca, r = build_comodule_algebra(H3, d)
    assert r.ok
    g = H3.group.word("g1")
    one = H3.field.one
    assert ca.nu.on_basis((g,)) == {(g, (g, 0)): one}
    vecs, rs = induced_kG_subalgebra(ca)
    assert rs.ok and len(vecs) == H3.group.order


def test_broken_leibniz(H3):
    d = regular_comodule_algebra_data(H3)
    one = H3.field.one

    def plain_shift(key):
        (g, i), = key
        return {((g, i - 1),): one} if i else {}

    bad = ComoduleAlgebraData(d.algebra, d.degree, d.alpha, LinMap(plain_shift, 1, 1), H3.name_of)
    r = validate_comodalg(H3, bad)
    assert r["twisted_leibniz"].status == "fail"
    assert r["twisted_leibniz"].witness == "('x', 'x')"


def test_derived_operators_match_data(H3):
    d = regular_comodule_algebra_data(H3)
    ca, _ = build_comodule_algebra(H3, d, check=False)
    for b in H3.basis:
        assert ca.alpha_map.on_basis((b,)) == d.alpha.on_basis((b,))
        assert ca.ladder_map.on_basis((b,)) == d.ladder.on_basis((b,))
    g = H3.group.word("g1")
    assert ca.has_degree(H3.g(g), g)
    assert ca.aut_is_identity(H3.elem(g, 2))


def test_induced_subalgebra_regular(H3):
    ca, _ = build_comodule_algebra(H3, regular_comodule_algebra_data(H3), check=False)
    vecs, r = induced_kG_subalgebra(ca)
    assert r.ok
    assert same_span(vecs, [H3.g(g) for g in H3.group], H3.field.one)


def test_induced_subalgebra_sweedler():
    H = HDAlgebra(taft_datum(2))
    ca, r = build_comodule_algebra(H, regular_comodule_algebra_data(H))
    assert r.ok
    vecs, r = induced_kG_subalgebra(ca)
    assert r.ok
    assert same_span(vecs, [H.g(g) for g in H.group], H.field.one)
