"""Ready-made data: the C2^3 and C6 data, Taft algebras, regular
extensions and a few small algebras for crossed products."""

from __future__ import annotations

from .algebra import FDAlgebra, group_algebra
from .cleft import CleftDatum, CleftExtension, trivial_crossed_product_data
from .comodalg import ComoduleAlgebraData, build_comodule_algebra, regular_comodule_algebra_data
from .cyclotomic import make_field
from .groups import Character, FiniteGroup, automorphism_group, find_isomorphism, symmetric_group
from .hd import HDAlgebra, HDDatum, taft_datum, verify_hd_extras
from .braided import verify_braided_hopf
from .report import Report
from .tensor import LinMap


def c2cubed_datum():
    """G = C2^3, chi = -1 on each generator, z = g1*g2*g3, lambda = 1, q = 1."""
    F = make_field(2)
    G = FiniteGroup.cyclic_product([2, 2, 2])
    chi = Character.from_generators(G, F, [1, 1, 1])
    return HDDatum(G, chi, G.word("g1*g2*g3"), F.one, F.one)


def c6_datum():
    """G = C6, chi(g) = xi (order 3), z = g, lambda = 1, q = xi."""
    F = make_field(6)
    G = FiniteGroup.cyclic_product([6])
    chi = Character.from_generators(G, F, [2])
    return HDDatum(G, chi, G.word("g1"), F.one, F.zeta(2))


def regular_extension(H, check=False):
    """B = H with nu = Delta, and the datum b_g = g, b_x = x."""
    ca, report = build_comodule_algebra(H, regular_comodule_algebra_data(H), check)
    d = CleftDatum(H.elem(H.group.identity, 1), {g: H.g(g) for g in H.group})
    return ca, d, report


def group_comodule_algebra_data(H):
    """B = kG with degree (g, id), alpha = id and ladder = 0."""
    F = H.field
    one = F.one
    alg, _ = group_algebra(H.group, F)
    ident = LinMap(lambda key: {key: one}, 1, 1, "alpha")
    zero = LinMap(lambda key: {}, 1, 1, "ladder")
    return ComoduleAlgebraData(alg, {g: (g, 0) for g in H.group}, ident, zero, H.group.name)


def dual_numbers(F):
    """k[t]/(t^2) with basis labels "1", "t"."""
    one = F.one

    def mul(key):
        a, b = key
        if a == "1":
            return {(b,): one}
        if b == "1":
            return {(a,): one}
        return {}

    return FDAlgebra(F, ["1", "t"], LinMap(mul, 2, 1, "mu"), {("1",): one}, "k[t]/t^2")


def trivial_crossed_product(H, A=None):
    """A # H with trivial action and cocycle; A defaults to k[t]/(t^2)."""
    return trivial_crossed_product_data(H, A if A is not None else dual_numbers(H.field))


def hopf_report(H, name):
    r = Report(name)
    r.add("dimension", H.dim == H.n * H.group.order, value=str(H.dim))
    r.extend(verify_braided_hopf(H))
    r.extend(verify_hd_extras(H))
    return r


def fixture_reports(max_group_order=64, experimental=False):
    """All built-in fixtures, each as a titled report."""
    out = []

    H = HDAlgebra(c2cubed_datum())
    H.max_group_order = max_group_order
    r = hopf_report(H, "C2^3 datum")
    auts = H.auts
    r.add("aut_order", len(auts) == 6, value=str(len(auts)))
    iso = find_isomorphism(automorphism_group(auts), symmetric_group(3))
    r.add("aut_isomorphic_to_S3", iso is not None, value=None if iso is None else str(iso))
    ca, d, rc = regular_extension(H, check=True)
    r.extend(rc, "regular.")
    r.extend(CleftExtension(ca, d).full_report(experimental), "regular_cleft.")
    out.append(r)

    H = HDAlgebra(c6_datum())
    H.max_group_order = max_group_order
    r = hopf_report(H, "C6 datum")
    r.add("aut_trivial", len(H.auts) == 1, value=str(len(H.auts)))
    ca, d, rc = regular_extension(H, check=True)
    r.extend(rc, "regular.")
    r.extend(CleftExtension(ca, d).full_report(experimental), "regular_cleft.")
    out.append(r)

    for n in (2, 3, 4, 5):
        H = HDAlgebra(taft_datum(n))
        r = hopf_report(H, f"Taft n={n}")
        r.add("x_power_n_zero", not H.algebra.product(H.x_pow(n - 1), H.x_pow(1)))
        r.add("flip_braid", H.q == 1)
        out.append(r)
    return out
