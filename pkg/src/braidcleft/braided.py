"""Braided bialgebras and Hopf algebras: containers and exhaustive checks."""

from __future__ import annotations

from . import linalg
from .algebra import FDAlgebra, FDCoalgebra, convolve, maps_differ, unit_counit
from .report import Report
from .tensor import apply_at, keys_of, run, tprod


class BraidedBialgebra:
    """Algebra, coalgebra, braid and (optionally) antipode on one basis.

    ``mul``, ``comul``, ``counit``, ``braid`` and ``antipode`` are LinMaps;
    ``unit`` is a vector. ``label_name`` renders a basis label.
    """

    def __init__(self, field, basis, mul, unit, comul, counit, braid, antipode=None,
                 label_name=str, name=""):
        self.field = field
        self.basis = list(basis)
        self.mul = mul
        self.comul = comul
        self.counit = counit
        self.braid = braid
        self.antipode = antipode
        self.label_name = label_name
        self.name = name
        self.algebra = FDAlgebra(field, self.basis, mul, unit, name)
        self.coalgebra = FDCoalgebra(field, [(b,) for b in self.basis], comul, counit, 1, name)

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def dim(self):
        return len(self.basis)

    def show(self, key):
        if key is None:
            return None
        return "(" + ", ".join(self.label_name(k) for k in key) + ")"

    def one(self):
        return self.field.one

    def pairs(self):
        return keys_of(self.basis, self.basis)

    def triples(self):
        return keys_of(self.basis, self.basis, self.basis)


def _search(keys, lhs, rhs):
    for key in keys:
        if lhs(key) != rhs(key):
            return key
    return None


def verify_braid_compat(H):
    """Compatibility of the braid with unit, product, counit and coproduct
    on both legs, plus invertibility."""
    r = Report("braid compatibility")
    one = H.field.one
    c, mu, eps, dlt = H.braid, H.mul, H.counit, H.comul
    u = H.unit
    basis1 = [(b,) for b in H.basis]
    t = lambda key: {key: one}

    cols = {key: c.on_basis(key) for key in H.pairs()}
    r.add("braid_invertible", linalg.rank(cols.values()) == len(cols),
          value=f"rank {linalg.rank(cols.values())} of {len(cols)}")
    r.expect_none("braid_unit_left", H.show(_search(
        basis1, lambda k: apply_at(c, tprod(u, t(k)), 0), lambda k: tprod(t(k), u))))
    r.expect_none("braid_unit_right", H.show(_search(
        basis1, lambda k: apply_at(c, tprod(t(k), u), 0), lambda k: tprod(u, t(k)))))
    trip = H.triples()
    r.expect_none("braid_mult_left", H.show(_search(
        trip, lambda k: run(t(k), (mu, 0), (c, 0)), lambda k: run(t(k), (c, 1), (c, 0), (mu, 1)))))
    r.expect_none("braid_mult_right", H.show(_search(
        trip, lambda k: run(t(k), (mu, 1), (c, 0)), lambda k: run(t(k), (c, 0), (c, 1), (mu, 0)))))
    pairs = H.pairs()
    r.expect_none("braid_counit_left", H.show(_search(
        pairs, lambda k: run(t(k), (c, 0), (eps, 0)), lambda k: run(t(k), (eps, 1)))))
    r.expect_none("braid_counit_right", H.show(_search(
        pairs, lambda k: run(t(k), (c, 0), (eps, 1)), lambda k: run(t(k), (eps, 0)))))
    r.expect_none("braid_comul_left", H.show(_search(
        pairs, lambda k: run(t(k), (c, 0), (dlt, 0)), lambda k: run(t(k), (dlt, 1), (c, 0), (c, 1)))))
    r.expect_none("braid_comul_right", H.show(_search(
        pairs, lambda k: run(t(k), (c, 0), (dlt, 1)), lambda k: run(t(k), (dlt, 0), (c, 1), (c, 0)))))
    return r


def yang_baxter(H):
    """The braid relation on H (x) H (x) H, reported as informative."""
    r = Report("yang-baxter")
    one = H.field.one
    c = H.braid
    w = _search(H.triples(),
                lambda k: run({k: one}, (c, 0), (c, 1), (c, 0)),
                lambda k: run({k: one}, (c, 1), (c, 0), (c, 1)))
    r.info("yang_baxter", H.show(w), "holds" if w is None else "fails")
    return r


def delta_mu_rhs(H, key):
    """(mu (x) mu)(H (x) c (x) H)(Delta (x) Delta) on a basis pair."""
    one = H.field.one
    return run({key: one}, (H.comul, 1), (H.comul, 0), (H.braid, 1), (H.mul, 0), (H.mul, 1))


def verify_bialgebra(H):
    r = Report("braided bialgebra")
    one = H.field.one
    t = lambda key: {key: one}
    alg, coalg = H.algebra, H.coalgebra
    r.expect_none("associativity", H.show(alg.check_associative()))
    r.expect_none("unit", H.show(alg.check_unit()))
    r.expect_none("coassociativity", H.show(coalg.check_coassociative()))
    r.expect_none("counit", H.show(coalg.check_counit()))
    r.add("counit_of_unit", apply_at(H.counit, H.unit, 0) == {(): one})
    r.add("comul_of_unit", apply_at(H.comul, H.unit, 0) == tprod(H.unit, H.unit))
    r.expect_none("counit_multiplicative", H.show(_search(
        H.pairs(), lambda k: run(t(k), (H.mul, 0), (H.counit, 0)),
        lambda k: run(t(k), (H.counit, 1), (H.counit, 0)))))
    r.expect_none("comul_multiplicative", H.show(_search(
        H.pairs(), lambda k: run(t(k), (H.mul, 0), (H.comul, 0)), lambda k: delta_mu_rhs(H, k))))
    return r


def verify_antipode(H):
    r = Report("antipode")
    one = H.field.one
    S = H.antipode
    if S is None:
        r.add("antipode_present", False)
        return r
    alg, coalg = H.algebra, H.coalgebra
    e = unit_counit(coalg, alg)
    keys = coalg.keys
    r.expect_none("antipode_left", H.show(maps_differ(convolve(S, alg.id, coalg, alg), e, keys)))
    r.expect_none("antipode_right", H.show(maps_differ(convolve(alg.id, S, coalg, alg), e, keys)))
    t = lambda key: {key: one}
    r.expect_none("antipode_braided_antimultiplicative", H.show(_search(
        H.pairs(), lambda k: run(t(k), (H.mul, 0), (S, 0)),
        lambda k: run(t(k), (H.braid, 0), (S, 0), (S, 1), (H.mul, 0)))))
    r.add("antipode_unit", apply_at(S, H.unit, 0) == H.unit)
    r.expect_none("antipode_counit", H.show(_search(
        keys, lambda k: run(t(k), (S, 0), (H.counit, 0)), lambda k: H.counit.on_basis(k))))
    return r


def verify_braided_hopf(H, yb=True):
    r = Report(f"braided Hopf algebra {H.name}".strip())
    r.extend(verify_braid_compat(H))
    r.extend(verify_bialgebra(H))
    r.extend(verify_antipode(H))
    if yb:
        r.extend(yang_baxter(H))
    return r
