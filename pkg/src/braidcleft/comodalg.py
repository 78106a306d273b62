"""Right H_D-comodule algebras.

``ComoduleAlgebra`` holds an algebra B with a transposition s and a
coaction nu, however they were obtained. Graded data (degrees, alpha,
ladder) is validated and turned into (s, nu) by ``build_comodule_algebra``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .comodule import (build_coaction, build_transposition, coinvariants_from_coaction, map_power,
                       validate_graded_data, verify_comodule, verify_left_space)
from .groups import compose as compose_aut
from .report import Report
from .tensor import LinMap, apply_at, keys_of, run, tadd, tclean, tscale


@dataclass
class ComoduleAlgebraData:
    algebra: object
    degree: dict
    alpha: LinMap
    ladder: LinMap
    label_name: object = str

    @property
    def basis(self):
        return self.algebra.basis


class ComoduleAlgebra:
    """An algebra B with s: H (x) B -> B (x) H and nu: B -> B (x) H."""

    def __init__(self, H, algebra, s, nu, label_name=str, name=""):
        self.H = H
        self.B = algebra
        self.s = s
        self.nu = nu
        self.label_name = label_name
        self.name = name
        one = H.field.one
        x = H.x_label

        def alpha(key):
            return {(w,): c for (w, h), c in apply_at(s, {(x,) + key: one}, 0).items() if h == x}

        def ladder(key):
            return tclean(_collect({(w,): c for (w, (g, i)), c in nu.on_basis(key).items() if i == 1}))

        self.alpha_map = LinMap(alpha, 1, 1, "alpha")
        self.ladder_map = LinMap(ladder, 1, 1, "ladder")

    @property
    def field(self):
        return self.H.field

    def show(self, key):
        if key is None:
            return None
        return "(" + ", ".join(self._name(k) for k in key) + ")"

    def _name(self, k):
        if isinstance(k, tuple) and len(k) == 2 and k in self.H.basis and k not in self.B.basis:
            return self.H.name_of(k)
        return self.label_name(k)

    def alpha(self, v):
        return apply_at(self.alpha_map, v, 0)

    def ladder(self, v):
        return apply_at(self.ladder_map, v, 0)

    def component(self, v, g):
        """U^g_0(v): the G-degree g part of v, read off the coaction."""
        t = apply_at(self.nu, v, 0)
        return tclean(_collect({(w,): c for (w, h), c in t.items() if h == (g, 0)}))

    def has_degree(self, v, g):
        return self.component(v, g) == v

    def aut_is_identity(self, v):
        for g in self.H.group:
            t = {((g, 0),) + k: c for k, c in v.items()}
            if apply_at(self.s, t, 0) != {k + ((g, 0),): c for k, c in v.items()}:
                return False
        return True

    def coinvariants(self):
        return coinvariants_from_coaction(self.H, self.B.basis, self.nu)

    def verify(self):
        """The axioms of a right H-comodule algebra with transposition s."""
        H, B = self.H, self.B
        one = self.field.one
        r = Report("comodule algebra")
        r.expect_none("algebra_associative", self.show(B.check_associative()))
        r.expect_none("algebra_unit", self.show(B.check_unit()))
        r.extend(verify_comodule(H, B.basis, self.nu, self.s, self.show))
        r.extend(verify_left_space(H, B.basis, self.s, self.show))
        t = lambda key: {key: one}
        bad = None
        for h in H.basis:
            lhs = apply_at(self.s, {(h,) + k: c for k, c in B.unit.items()}, 0)
            rhs = {k + (h,): c for k, c in B.unit.items()}
            if lhs != rhs:
                bad = (h,)
                break
        r.expect_none("s_algebra_unit", self.show(bad))
        trip = keys_of(H.basis, B.basis, B.basis)
        r.expect_none("s_algebra_mult", self.show(_first(
            trip, lambda k: run(t(k), (B.mul, 1), (self.s, 0)),
            lambda k: run(t(k), (self.s, 0), (self.s, 1), (B.mul, 0)))))
        pairs = keys_of(B.basis, B.basis)
        r.expect_none("coaction_multiplicative", self.show(_first(
            pairs, lambda k: run(t(k), (B.mul, 0), (self.nu, 0)),
            lambda k: run(t(k), (self.nu, 1), (self.nu, 0), (self.s, 1), (B.mul, 0), (H.mul, 1)))))
        unit_h = (H.group.identity, 0)
        r.add("coaction_unit", apply_at(self.nu, B.unit, 0) == {k + (unit_h,): c for k, c in B.unit.items()})
        return r


def _collect(t):
    out = {}
    for k, v in t.items():
        w = out.get(k)
        out[k] = v if w is None else w + v
    return out


def _first(keys, lhs, rhs):
    for k in keys:
        if lhs(k) != rhs(k):
            return k
    return None


def validate_comodalg(H, data):
    """Structural invariants, gradation compatibility and the twisted Leibniz rule."""
    r = validate_graded_data(H, data)
    r.title = "comodule algebra data"
    B = data.algebra
    G = H.group
    one = H.field.one
    deg = data.degree
    ident = G.identity
    name = data.label_name
    bad = next((w for (w,) in B.unit if deg[w] != (ident, 0)), None)
    r.expect_none("unit_degree", None if bad is None else name(bad))
    r.add("alpha_unit", apply_at(data.alpha, B.unit, 0) == B.unit)
    bad = None
    for a, b in keys_of(B.basis, B.basis):
        lhs = apply_at(data.alpha, B.product({(a,): one}, {(b,): one}), 0)
        rhs = B.product(data.alpha.on_basis((a,)), data.alpha.on_basis((b,)))
        if lhs != rhs:
            bad = (name(a), name(b))
            break
    r.expect_none("alpha_multiplicative", bad)

    auts = H.auts
    aut_index = {a: i for i, a in enumerate(auts)}
    n = H.n
    zn_inv = G.power(G.inv(H.z), n)
    lad = [map_power(data.ladder, j, one) for j in range(n + 1)]
    alp = [map_power(data.alpha, j, one) for j in range(n + 1)]
    fact = [H.q_factorial(j) for j in range(n + 1)]
    bad_grad = bad_comp = bad_leib = None
    for a, b in keys_of(B.basis, B.basis):
        (g, zi), (h, fi) = deg[a], deg[b]
        zeta, phi = auts[zi], auts[fi]
        main = G.mul(phi[g], h)
        tgt_aut = aut_index[compose_aut(phi, zeta)]
        va, vb = {(a,): one}, {(b,): one}
        prod = B.product(va, vb)
        allowed = {(main, tgt_aut)}
        if H.U:
            allowed.add((G.mul(zn_inv, main), tgt_aut))
        if bad_grad is None and any(deg[w] not in allowed for (w,) in prod):
            bad_grad = (name(a), name(b))
        if H.U and bad_comp is None:
            low = G.mul(zn_inv, main)
            comp = tclean({(w,): c for (w,), c in prod.items() if deg[w][0] == low})
            expect = {}
            for j in range(1, n):
                coef = -H.lam * H.p ** (j * j) * H.chi(h) ** j / (fact[j] * fact[n - j])
                term = B.product(apply_at(lad[j], va, 0),
                                 apply_at(alp[j], apply_at(lad[n - j], vb, 0), 0))
                expect = tadd(expect, tscale(term, coef))
            if comp != expect:
                bad_comp = (name(a), name(b))
        if bad_leib is None:
            lhs = apply_at(data.ladder, prod, 0)
            rhs = tadd(B.product(va, apply_at(data.ladder, vb, 0)),
                       tscale(B.product(apply_at(data.ladder, va, 0), apply_at(data.alpha, vb, 0)),
                              H.chi(h)))
            if lhs != rhs:
                bad_leib = (name(a), name(b))
    r.expect_none("gradation_compatible", bad_grad)
    if H.U:
        r.expect_none("lower_component_formula", bad_comp)
    r.expect_none("twisted_leibniz", bad_leib)
    r.add("ladder_of_unit", apply_at(data.ladder, B.unit, 0) == {})
    return r


def build_comodule_algebra(H, data, check=True):
    """(B, s, nu) from graded data, with the full axiom report."""
    s = build_transposition(H, data)
    nu = build_coaction(H, data)
    ca = ComoduleAlgebra(H, data.algebra, s, nu, data.label_name)
    report = ca.verify() if check else Report("comodule algebra")
    return ca, report


def regular_comodule_algebra_data(H):
    from .comodule import regular_comodule_data
    d = regular_comodule_data(H)
    return ComoduleAlgebraData(H.algebra, d.degree, d.alpha, d.ladder, H.name_of)


def induced_kG_subalgebra(ca):
    """B_G = ker(ladder) with its checks: unital subalgebra, s-stable,
    coaction into B_G (x) kG."""
    H, B = ca.H, ca.B
    one = ca.field.one
    r = Report("induced kG-comodule algebra")
    images = {b: ca.ladder_map.on_basis((b,)) for b in B.basis}
    vecs = [tclean({(b,): c for b, c in rel.items()}) for rel in linalg.kernel(images, one)]
    sub = linalg.Subspace(vecs, one)
    r.add("contains_unit", sub.contains(B.unit))
    ok = all(sub.contains(B.product(u, v)) for u in vecs for v in vecs)
    r.add("closed_under_product", ok)
    ok = True
    for h in H.basis:
        for v in vecs:
            t = apply_at(ca.s, {(h,) + k: c for k, c in v.items()}, 0)
            if apply_at(ca.ladder_map, t, 0):
                ok = False
    r.add("s_stable", ok)
    ok = True
    for v in vecs:
        t = apply_at(ca.nu, v, 0)
        if any(hk[1] != 0 for (_, hk) in t) or apply_at(ca.ladder_map, t, 0):
            ok = False
    r.add("coaction_in_kG", ok)
    return vecs, r
