from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from braidcleft.cleft import (CleftDatum, CleftExtension, CrossedProductData, build_crossed_product,
                              round_trip, trivial_crossed_product_data)
from braidcleft.cyclotomic import make_field
from braidcleft.fixtures import dual_numbers, regular_extension, trivial_crossed_product
from braidcleft.hd import HDAlgebra, taft_datum
from braidcleft.tensor import LinMap, apply_at, tadd, tscale


@pytest.fixture(params=["ext2", "ext3"])
def ext(request):
    return request.getfixturevalue(request.param)


def test_full_report_regular(ext):
    r = ext.full_report()
    assert r.ok, r.failures()
    assert r["dimension_count"].status == "pass"


def test_gamma_inverse_routes_agree(ext):
    r = ext.verify_gamma()
    assert r["gamma_inverse_closed_equals_solved"].status == "pass"
    assert r["gamma_unit"].status == "pass"


def test_gamma_values(H3, ext3):
    G = H3.group
    g = G.word("g1")
    assert ext3.gamma.on_basis(((G.identity, 0),)) == ext3.B.unit
    expected = tscale(ext3.B.prod_all(ext3.datum.b_x, ext3.b_inv(G.mul(g, H3.z))), -1)
    assert ext3.gamma_inverse().on_basis(((g, 1),)) == expected


def test_coinvariants_are_scalars(ext):
    assert ext.C.labels == ["c0"]
    assert ext.C.vectors["c0"] == ext.B.unit


def test_rho_is_counit_on_scalars(ext):
    rho, r = ext.weak_action()
    assert r.ok
    H = ext.H
    for h in H.basis:
        e = H.counit.on_basis((h,)).get((), 0)
        assert rho.on_basis((h, "c0")) == ({("c0",): e} if e else {})


def test_sigma_normal_and_c6_value(H3, ext3):
    sigma, r = ext3.cocycle()
    assert r.ok
    G = H3.group
    for h in H3.basis:
        e = H3.counit.on_basis((h,)).get((), 0)
        assert sigma.on_basis(((G.identity, 0), h)) == ({("c0",): e} if e else {})
    x = H3.x_label
    x2 = (G.identity, 2)
    assert sigma.on_basis((x2, x)) == {}
    assert sigma.on_basis((x, x2)) == {}


def test_galois_rank(ext):
    r = ext.galois_check()
    n = ext.B.dim * ext.H.dim
    assert r["beta_bijective"].value == f"rank {n} of {n}"


def test_invariant_elements_regular(H2, ext2, ext3):
    (a, bb, cg), r = ext2.invariant_elements()
    assert r.ok
    assert all(a[g] == ext2.B.unit for g in H2.group)
    assert all(v == {} for v in cg.values())
    assert bb == {}
    _, r3 = ext3.invariant_elements()
    assert r3["b_in_C"].status == "informative"


def test_closed_forms_agree_with_definitions(ext2):
    r = ext2.closed_form_report()
    assert all(c.status == "informative" for c in r.checks)
    assert all(c.value.startswith("agrees") for c in r.checks)


def test_c6_table_discrepancy_reported(ext3):
    r = ext3.closed_form_report()
    assert r["tabulated_cyclic_n3_sigma"].value == "72 of 324 cells differ"
    assert r["tabulated_cyclic_n3_sigma"].witness == "(x, x^2)"
    assert r["tabulated_cyclic_n3_rho"].value == "6 of 18 cells differ"
    assert r.ok


def _ext_with(H, bx=None, bg=None):
    ca, d, _ = regular_extension(H)
    return CleftExtension(ca, CleftDatum(bx if bx is not None else d.b_x, {**d.b_g, **(bg or {})}))


def test_scaled_b_x_rejected(H3, ext3):
    ext = _ext_with(H3, bx=tscale(ext3.datum.b_x, 2))
    r = ext.validate()
    assert r["b_x_ladder_one"].status == "fail"
    assert r["b_x_alpha_eigenvalue"].status == "pass"
    assert not ext.full_report().ok


def test_non_invertible_b_g_rejected(H3, ext3):
    G = H3.group
    g = G.word("g1")
    bad = tadd(H3.g(g), H3.g(G.identity))
    ext = _ext_with(H3, bg={g: tadd(bad, {})})
    r = ext.validate()
    assert r["b_g_invertible"].status == "fail"


def test_b_g_wrong_degree_rejected(H3):
    G = H3.group
    g = G.word("g1")
    r = _ext_with(H3, bg={g: H3.g(G.mul(g, g))}).validate()
    assert r["b_g_degree"].status == "fail"
    assert r["b_g_degree"].witness == "g1"


def test_trivial_crossed_product_dual_numbers(H3):
    X, r = build_crossed_product(trivial_crossed_product(H3), H3)
    assert r.ok, r.failures()
    assert X.algebra.dim == 2 * H3.dim
    assert r["coinvariants_are_A"].value == "dim 2"


def test_trivial_crossed_product_round_trip(H2):
    _, r = round_trip(trivial_crossed_product(H2), H2)
    assert r.ok, r.failures()


def test_regular_round_trip(ext3, H3):
    cp = ext3.crossed_product_data()
    ext, r = round_trip(cp, H3)
    assert r.ok, r.failures()
    assert ext.galois_check().ok


def test_perturbed_sigma_breaks_associativity(ext3, H3):
    cp = ext3.crossed_product_data()
    x = H3.x_label
    s0 = cp.sigma
    bumped = LinMap(lambda k: tadd(s0.on_basis(k), {("c0",): H3.field.one}) if k == (x, x) else s0.on_basis(k),
                    2, 1)
    _, r = build_crossed_product(CrossedProductData(cp.A, cp.s_A, cp.rho, bumped), H3)
    assert r["associative"].status == "fail"
    assert r["associative"].witness is not None


def test_crossed_product_iso(ext2):
    X, r = ext2.verify_crossed_product_iso()
    assert r.ok
    assert X.algebra.dim == ext2.B.dim


def test_experimental_diagrams_hold(ext2):
    r = ext2.full_report(experimental=True)
    assert r["cocycle_condition"].value == "holds"
    assert r["twisted_module_condition"].value == "holds"


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_phi_round_trip_on_random_elements(ext3, coefs):
    # phi^{-1}(phi(v)) = v on random combinations of c0 # h
    H = ext3.H
    F = H.field
    phi, phi_inv = ext3.phi(), ext3.phi_inverse()
    hs = [H.x_label, (H.group.word("g1"), 2)]
    v = {}
    for c, h in zip(coefs, hs):
        v = tadd(v, {("c0", h): F(c)})
    assert apply_at(phi_inv, apply_at(phi, v, 0), 0) == v


def test_dual_numbers():
    A = dual_numbers(make_field(2))
    assert A.check_associative() is None
    assert A.product({("t",): A.field.one}, {("t",): A.field.one}) == {}
    cp = trivial_crossed_product_data(HDAlgebra(taft_datum(2)), A)
    assert cp.sigma.on_basis((("g1", 1), ("g1", 1))) == {}
