"""Left H_D-spaces and right H_D-comodules given by graded data.

A space is described by a basis, a degree (g, k) for every basis label
(k indexes H.auts), an automorphism ``alpha`` and a ``ladder`` map, the
operator that lowers the G-degree by z.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import group_algebra
from .braided import BraidedBialgebra
from .report import Report
from .tensor import LinMap, apply_at, compose, keys_of, run, scale_map, tadd, tclean


@dataclass
class GradedSpaceData:
    """Basis with degrees (g, aut index), alpha and ladder as LinMaps V -> V."""

    basis: list
    degree: dict
    alpha: LinMap
    ladder: LinMap
    label_name: object = str


def map_power(f, k, one):
    """f^k as a LinMap (identity for k = 0)."""
    if k == 0:
        return LinMap(lambda key: {key: one}, f.n_in, f.n_out, "id")
    out = f
    for _ in range(k - 1):
        out = compose(f, out)
    return out


def show_key(key):
    return None if key is None else str(key)


def build_transposition(H, data):
    """s(g x^i (x) v) = alpha^i(v) (x) zeta_v(g) x^i for v of aut-degree zeta_v."""
    one = H.field.one
    auts = H.auts
    alphas = [map_power(data.alpha, i, one) for i in range(H.n)]

    def fn(key):
        (g, i), v = key
        out = {}
        for (w,), c in alphas[i].on_basis((v,)).items():
            zeta = auts[data.degree[w][1]]
            out[(w, (zeta[g], i))] = c
        return out

    return LinMap(fn, 2, 2, "s")


def verify_left_space(H, basis, s, show=None):
    """Compatibility of s: H (x) V -> V (x) H with the structure of H."""
    r = Report("left H-space")
    show = show or show_key
    one = H.field.one
    t = lambda key: {key: one}
    hb = H.basis
    pairs = keys_of(hb, basis)
    cols = {k: s.on_basis(k) for k in pairs}
    r.add("s_invertible", linalg.rank(cols.values()) == len(cols))
    unit = H.unit
    r.expect_none("s_unit", _first(basis, lambda v: apply_at(s, _pre(unit, v, one), 0),
                                   lambda v: _post(v, unit, one)))
    trip = keys_of(hb, hb, basis)
    r.expect_none("s_mult", show(_first(trip, lambda k: run(t(k), (H.mul, 0), (s, 0)),
                                         lambda k: run(t(k), (s, 1), (s, 0), (H.mul, 1)))))
    r.expect_none("s_counit", show(_first(pairs, lambda k: run(t(k), (s, 0), (H.counit, 1)),
                                           lambda k: run(t(k), (H.counit, 0)))))
    r.expect_none("s_comul", show(_first(pairs, lambda k: run(t(k), (s, 0), (H.comul, 1)),
                                          lambda k: run(t(k), (H.comul, 0), (s, 1), (s, 0)))))
    r.expect_none("s_braid", show(_first(trip, lambda k: run(t(k), (H.braid, 0), (s, 1), (s, 0)),
                                          lambda k: run(t(k), (s, 1), (s, 0), (H.braid, 1)))))
    return r


def _pre(unit, v, one):
    return {k + (v,): c for k, c in unit.items()}


def _post(v, unit, one):
    return {(v,) + k: c for k, c in unit.items()}


def _first(keys, lhs, rhs):
    for k in keys:
        if lhs(k) != rhs(k):
            return k
    return None


def validate_graded_data(H, data):
    """Structural invariants of comodule data; raises on (p,q) = (1,-1)."""
    H.check_supported()
    r = Report("comodule data")
    one = H.field.one
    G = H.group
    n = H.n
    basis = data.basis
    nauts = len(H.auts)
    r.add("degrees_defined", all(b in data.degree and 0 <= data.degree[b][1] < nauts for b in basis))
    alpha, ladder = data.alpha, data.ladder
    cols = {b: alpha.on_basis((b,)) for b in basis}
    r.add("alpha_invertible", linalg.rank(cols.values()) == len(basis))
    bad = None
    for b in basis:
        if any(data.degree[w] != data.degree[b] for (w,) in alpha.on_basis((b,))):
            bad = b
            break
    r.expect_none("alpha_preserves_degree", _lbl(data, bad))
    if H.U:
        an = map_power(alpha, n, one)
        bad = next((b for b in basis if an.on_basis((b,)) != {(b,): one}), None)
        r.expect_none("alpha_power_n_identity", _lbl(data, bad))
    la = compose(ladder, alpha)
    al = scale_map(compose(alpha, ladder), H.q)
    bad = next((b for b in basis if la.on_basis((b,)) != al.on_basis((b,))), None)
    r.expect_none("ladder_alpha_commutation", _lbl(data, bad))
    ln = map_power(ladder, n, one)
    bad = next((b for b in basis if ln.on_basis((b,))), None)
    r.expect_none("ladder_nilpotent", _lbl(data, bad))
    zinv = G.inv(H.z)
    bad = None
    for b in basis:
        g, k = data.degree[b]
        target = (G.mul(g, zinv), k)
        if any(data.degree[w] != target for (w,) in ladder.on_basis((b,))):
            bad = b
            break
    r.expect_none("ladder_shifts_degree", _lbl(data, bad))
    return r


def _lbl(data, b):
    return None if b is None else data.label_name(b)


def build_coaction(H, data):
    """nu(v) = sum_j ladder^j(v) / (j)! (x) z^-j g x^j for v of G-degree g."""
    one = H.field.one
    G = H.group
    zinv = G.inv(H.z)
    powers = [map_power(data.ladder, j, one) for j in range(H.n)]
    inv_fact = [H.q_factorial(j).inverse() for j in range(H.n)]

    def fn(key):
        v, = key
        g = data.degree[v][0]
        out = {}
        for j in range(H.n):
            label = (G.mul(G.power(zinv, j), g), j)
            for (w,), c in powers[j].on_basis((v,)).items():
                out[(w, label)] = c * inv_fact[j]
        return out

    return LinMap(fn, 1, 2, "nu")


def verify_comodule(H, basis, nu, s=None, show=None):
    """Counit, coassociativity and, given s, the compatibility
    (nu (x) H) s = (V (x) c)(s (x) H)(H (x) nu)."""
    r = Report("right H-comodule")
    show = show or show_key
    one = H.field.one
    t = lambda key: {key: one}
    b1 = [(b,) for b in basis]
    r.expect_none("coaction_counit", show(_first(b1, lambda k: run(t(k), (nu, 0), (H.counit, 1)), t)))
    r.expect_none("coaction_coassociative", show(_first(
        b1, lambda k: run(t(k), (nu, 0), (nu, 0)), lambda k: run(t(k), (nu, 0), (H.comul, 1)))))
    if s is not None:
        pairs = keys_of(H.basis, basis)
        r.expect_none("coaction_transposition", show(_first(
            pairs, lambda k: run(t(k), (s, 0), (nu, 0)),
            lambda k: run(t(k), (nu, 1), (s, 0), (H.braid, 1)))))
    return r


def coinvariants(H, data):
    """Basis of V_1 intersected with ker(ladder)."""
    one = H.field.one
    ident = H.group.identity
    images = {b: data.ladder.on_basis((b,)) for b in data.basis if data.degree[b][0] == ident}
    return [tclean({(b,): c for b, c in rel.items()}) for rel in linalg.kernel(images, one)]


def coinvariants_from_coaction(H, basis, nu):
    """Basis of {v : nu(v) = v (x) 1}, computed directly from nu."""
    one = H.field.one
    unit_label = (H.group.identity, 0)
    images = {}
    for b in basis:
        images[b] = tadd(nu.on_basis((b,)), {(b, unit_label): -one})
    return [tclean({(b,): c for b, c in rel.items()}) for rel in linalg.kernel(images, one)]


def same_span(vs, ws, one):
    if len(vs) != len(ws):
        return False
    e = linalg.Echelon()
    for v in vs:
        e.add(v)
    return all(e.contains(w) for w in ws) and len(e) == len(vs)


class UFamily:
    """The maps U^g_i built from projections and the ladder."""

    def __init__(self, H, data):
        self.H = H
        self.data = data
        one = H.field.one
        G = H.group
        self.maps = {}
        for g in G:
            self.maps[(g, 0)] = self.projection(g)
        for g in G:
            gz = G.mul(g, H.z)
            self.maps[(g, 1)] = compose(self.maps[(g, 0)], data.ladder, self.maps[(gz, 0)])
        for i in range(2, H.n):
            c = H.q_factorial(i).inverse()
            for g in G:
                chain = [self.maps[(G.mul(g, G.power(H.z, k)), 1)] for k in range(i)]
                self.maps[(g, i)] = scale_map(compose(*chain), c)
        self.one = one

    def projection(self, g):
        one = self.H.field.one
        deg = self.data.degree
        return LinMap(lambda key: {key: one} if deg[key[0]][0] == g else {}, 1, 1, f"pi_{g}")

    def __getitem__(self, gi):
        return self.maps[gi]

    def coaction(self):
        """nu(v) = sum_{g,i} U^g_i(v) (x) g x^i."""
        def fn(key):
            out = {}
            for (g, i), f in self.maps.items():
                for (w,), c in f.on_basis(key).items():
                    out[(w, (g, i))] = c
            return out
        return LinMap(fn, 1, 2, "nu_U")


def _maps_equal(f, g, basis):
    for b in basis:
        if f.on_basis((b,)) != g.on_basis((b,)):
            return b
    return None


def verify_u_family(H, data, fam=None):
    """The six structural properties of the family plus coassociativity."""
    fam = fam or UFamily(H, data)
    r = Report("U-family")
    G = H.group
    basis = data.basis
    one = H.field.one
    deg = data.degree
    zero_map = LinMap(lambda key: {}, 1, 1, "0")
    ident = LinMap(lambda key: {key: one}, 1, 1, "id")

    bad = None
    for (g, i), f in fam.maps.items():
        if i > 1:
            continue
        for b in basis:
            if any(deg[w][1] != deg[b][1] for (w,) in f.on_basis((b,))):
                bad = (G.name(g), i, data.label_name(b))
                break
        if bad:
            break
    r.expect_none("u_preserves_aut_degree", bad)

    total = LinMap(lambda key: tclean(_sum_over(fam, G, key)), 1, 1, "sum")
    ok = _maps_equal(total, ident, basis) is None
    for g in G:
        for h in G:
            lhs = compose(fam[(g, 0)], fam[(h, 0)])
            rhs = fam[(g, 0)] if g == h else zero_map
            if _maps_equal(lhs, rhs, basis) is not None:
                ok = False
    r.add("u0_orthogonal_idempotents", ok)

    bad = None
    for g in G:
        gz = G.mul(g, H.z)
        u1 = fam[(g, 1)]
        if (_maps_equal(u1, compose(fam[(g, 0)], u1), basis) is not None
                or _maps_equal(u1, compose(u1, fam[(gz, 0)]), basis) is not None):
            bad = G.name(g)
            break
    r.expect_none("u1_projections", bad)

    bad = None
    for i in range(2, H.n):
        c = H.q_factorial(i).inverse()
        for g in G:
            chain = [fam[(G.mul(g, G.power(H.z, k)), 1)] for k in range(i)]
            if _maps_equal(fam[(g, i)], scale_map(compose(*chain), c), basis) is not None:
                bad = (G.name(g), i)
    r.expect_none("u_higher_from_u1", bad)

    bad = None
    for g in G:
        chain = [fam[(G.mul(g, G.power(H.z, k)), 1)] for k in range(H.n)]
        if _maps_equal(compose(*chain), zero_map, basis) is not None:
            bad = G.name(g)
            break
    r.expect_none("u1_chain_vanishes", bad)

    bad = None
    for g in G:
        if _maps_equal(compose(data.alpha, fam[(g, 0)]), compose(fam[(g, 0)], data.alpha), basis) is not None:
            bad = (G.name(g), 0)
            break
        if _maps_equal(scale_map(compose(data.alpha, fam[(g, 1)]), H.q),
                       compose(fam[(g, 1)], data.alpha), basis) is not None:
            bad = (G.name(g), 1)
            break
    r.expect_none("u_alpha_commutation", bad)

    bad = None
    for g in G:
        for j in range(H.n):
            for h in G:
                for l in range(H.n):
                    lhs = compose(fam[(g, j)], fam[(h, l)])
                    if h == G.mul(g, G.power(H.z, j)) and j + l < H.n:
                        rhs = scale_map(fam[(g, j + l)], H.binom(j + l, j))
                    else:
                        rhs = zero_map
                    if _maps_equal(lhs, rhs, basis) is not None:
                        bad = (G.name(g), j, G.name(h), l)
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    r.expect_none("u_coassociativity", bad)
    return r


def _sum_over(fam, G, key):
    out = {}
    for g in G:
        out = tadd(out, fam[(g, 0)].on_basis(key))
    return out


def regular_comodule_data(H):
    """H_D as a comodule over itself: degree(g x^i) = (g z^i, id),
    alpha(g x^i) = q^i g x^i, ladder(g x^i) = (i) g x^(i-1)."""
    from .qcalc import q_int
    G = H.group
    degree = {(g, i): (G.mul(g, G.power(H.z, i)), 0) for g, i in H.basis}
    alpha = LinMap(lambda key: {key: H.q ** key[0][1]}, 1, 1, "alpha")

    def ladder(key):
        (g, i), = key
        if i == 0:
            return {}
        return {((g, i - 1),): q_int(i, H.qp)}

    return GradedSpaceData(list(H.basis), degree, alpha, LinMap(ladder, 1, 1, "ladder"), H.name_of)


def group_hopf(group, field):
    """kG as a Hopf algebra with the flip braid."""
    one = field.one
    alg, coalg = group_algebra(group, field)
    flip = LinMap(lambda key: {(key[1], key[0]): one}, 2, 2, "flip")
    S = LinMap(lambda key: {(group.inv(key[0]),): one}, 1, 1, "S")
    return BraidedBialgebra(field, list(group), alg.mul, alg.unit, coalg.comul, coalg.counit,
                            flip, S, group.name, "kG")


class GroupSpace:
    """A left kG-space from an Aut(G)-gradation: s(x (x) v) = v (x) zeta_v(x)."""

    def __init__(self, group, field, basis, zeta_of):
        self.group = group
        self.field = field
        self.basis = list(basis)
        self.zeta_of = dict(zeta_of)
        self.kG = group_hopf(group, field)
        one = field.one
        self.s = LinMap(lambda key: {(key[1], self.zeta_of[key[1]][key[0]]): one}, 2, 2, "s")

    def alpha(self, x, y):
        """alpha_x^y: identity on components with zeta(x) = y, zero elsewhere."""
        one = self.field.one
        return LinMap(lambda key: {key: one} if self.zeta_of[key[0]][x] == y else {}, 1, 1,
                      f"alpha_{x}^{y}")

    def verify(self):
        G = self.group
        one = self.field.one
        r = Report("kG-space")
        ident = LinMap(lambda key: {key: one}, 1, 1, "id")
        zero = LinMap(lambda key: {}, 1, 1, "0")
        ok = True
        for x in G:
            for y in G:
                for y2 in G:
                    lhs = compose(self.alpha(x, y), self.alpha(x, y2))
                    rhs = self.alpha(x, y) if y == y2 else zero
                    if _maps_equal(lhs, rhs, self.basis) is not None:
                        ok = False
            for b in self.basis:
                acc = {}
                for y in G:
                    acc = tadd(acc, self.alpha(x, y).on_basis((b,)))
                if acc != {(b,): one}:
                    ok = False
        r.add("alpha_complete_orthogonal", ok)
        r.expect_none("alpha_unit", _maps_equal(self.alpha(G.identity, G.identity), ident, self.basis))
        bad = None
        for x in G:
            for y in G:
                for w in G:
                    lhs = self.alpha(G.mul(x, y), w)
                    parts = [compose(self.alpha(x, u), self.alpha(y, G.mul(G.inv(u), w))) for u in G]

                    def summed(key, parts=parts):
                        acc = {}
                        for p in parts:
                            acc = tadd(acc, p.on_basis(key))
                        return acc

                    rhs = LinMap(summed, 1, 1, "sum")
                    if _maps_equal(lhs, rhs, self.basis) is not None:
                        bad = (G.name(x), G.name(y), G.name(w))
                        break
                if bad:
                    break
            if bad:
                break
        r.expect_none("alpha_multiplicative", bad)
        r.extend(verify_left_space(self.kG, self.basis, self.s))
        return r
