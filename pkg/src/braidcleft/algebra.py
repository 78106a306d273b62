"""Finite-dimensional algebras and coalgebras with sparse structure maps,
plus the convolution product and its inverse."""

from __future__ import annotations

from . import linalg
from .tensor import LinMap, apply_at, identity_map, keys_of, run, tadd, tclean, tprod, tscale


class FDAlgebra:
    """Unital algebra on a labelled basis.

    ``mul`` is a LinMap with two input legs and one output leg, ``unit`` a
    vector (dict with 1-tuple keys).
    """

    def __init__(self, field, basis, mul, unit, name=""):
        self.field = field
        self.basis = list(basis)
        self.mul = mul
        self.unit = tclean(unit)
        self.eta = LinMap(lambda key: self.unit, 0, 1, "eta")
        self.id = identity_map(field.one)
        self.name = name

    @property
    def dim(self):
        return len(self.basis)

    def basis_vec(self, label):
        return {(label,): self.field.one}

    def product(self, u, v):
        return apply_at(self.mul, tprod(u, v), 0)

    def prod_all(self, *vs):
        acc = self.unit
        for v in vs:
            acc = self.product(acc, v)
        return acc

    def power(self, u, k):
        if k < 0:
            inv = self.inverse(u)
            if inv is None:
                raise ValueError("negative power of a non-invertible element")
            u, k = inv, -k
        acc = self.unit
        for _ in range(k):
            acc = self.product(acc, u)
        return acc

    def inverse(self, u):
        """Two-sided inverse by solving u w = 1; None if u is not invertible."""
        one = self.field.one
        images = {b: self.product(u, {(b,): one}) for b in self.basis}
        sol = linalg.solve(images, self.unit, one)
        if sol is None:
            return None
        w = tclean({(b,): c for b, c in sol.items()})
        if self.product(w, u) != self.unit:
            return None
        return w

    def check_associative(self, keys=None):
        """First basis triple violating associativity, or None."""
        one = self.field.one
        for key in keys or keys_of(self.basis, self.basis, self.basis):
            t = {key: one}
            if run(t, (self.mul, 0), (self.mul, 0)) != run(t, (self.mul, 1), (self.mul, 0)):
                return key
        return None

    def check_unit(self):
        for b in self.basis:
            v = {(b,): self.field.one}
            if self.product(self.unit, v) != v or self.product(v, self.unit) != v:
                return (b,)
        return None


class FDCoalgebra:
    """Coalgebra whose basis elements are tuples of ``legs`` labels."""

    def __init__(self, field, keys, comul, counit, legs=1, name=""):
        self.field = field
        self.keys = [tuple(k) for k in keys]
        self.comul = comul
        self.counit = counit
        self.legs = legs
        self.name = name

    def check_coassociative(self):
        one = self.field.one
        L = self.legs
        for key in self.keys:
            t = {key: one}
            if run(t, (self.comul, 0), (self.comul, 0)) != run(t, (self.comul, 0), (self.comul, L)):
                return key
        return None

    def check_counit(self):
        one = self.field.one
        L = self.legs
        for key in self.keys:
            t = {key: one}
            d = apply_at(self.comul, t, 0)
            if apply_at(self.counit, d, 0) != t or apply_at(self.counit, d, L) != t:
                return key
        return None


def convolve(f, g, coalg, alg):
    """f * g = mu o (f (x) g) o Delta."""
    L = coalg.legs

    def fn(key):
        t = coalg.comul.on_basis(key)
        t = apply_at(g, t, L)
        t = apply_at(f, t, 0)
        return apply_at(alg.mul, t, 0)

    return LinMap(fn, L, 1, f"({f.name}*{g.name})")


def unit_counit(coalg, alg):
    """The convolution identity eta o epsilon."""
    def fn(key):
        e = coalg.counit.on_basis(key).get((), None)
        return tscale(alg.unit, e) if e else {}
    return LinMap(fn, coalg.legs, 1, "eta.eps")


def conv_inverse(f, coalg, alg):
    """Convolution inverse of f in Hom(coalg, alg) by an exact linear solve.

    Returns None when f is not invertible; a found solution is checked on
    both sides.
    """
    one = alg.field.one
    # column (c2, a) of the map g -> f * g
    columns = {(k, a): {} for k in coalg.keys for a in alg.basis}
    for c in coalg.keys:
        for dkey, coef in coalg.comul.on_basis(c).items():
            left, right = dkey[:coalg.legs], dkey[coalg.legs:]
            fl = f.on_basis(left)
            if not fl:
                continue
            for a in alg.basis:
                prod = alg.product(fl, {(a,): one})
                col = columns[(right, a)]
                for (b,), v in prod.items():
                    eq = (c, b)
                    w = col.get(eq)
                    w = coef * v if w is None else w + coef * v
                    if w:
                        col[eq] = w
                    else:
                        col.pop(eq, None)
    e = unit_counit(coalg, alg)
    target = {}
    for c in coalg.keys:
        for (b,), v in e.on_basis(c).items():
            target[(c, b)] = v
    sol = linalg.solve(columns, target, one)
    if sol is None:
        return None
    table = {}
    for (k, a), v in sol.items():
        table[k] = tadd(table.get(k, {}), {(a,): v})
    g = LinMap(lambda key: table.get(key, {}), coalg.legs, 1, f"{f.name}^-1")
    if maps_differ(convolve(g, f, coalg, alg), e, coalg.keys) is not None:
        return None
    if maps_differ(convolve(f, g, coalg, alg), e, coalg.keys) is not None:
        return None
    return g


def maps_differ(f, g, keys):
    for k in keys:
        if f.on_basis(k) != g.on_basis(k):
            return k
    return None


def group_algebra(group, field):
    """kG with its standard bialgebra maps; labels are group element indices."""
    one = field.one
    mul = LinMap(lambda key: {(group.mul(key[0], key[1]),): one}, 2, 1, "mu")
    alg = FDAlgebra(field, list(group), mul, {(group.identity,): one}, "kG")
    comul = LinMap(lambda key: {(key[0], key[0]): one}, 1, 2, "Delta")
    counit = LinMap(lambda key: {(): one}, 1, 0, "eps")
    coalg = FDCoalgebra(field, [(g,) for g in group], comul, counit)
    return alg, coalg


def element_inverse(alg, a):
    """Two-sided inverse of a in alg, or None."""
    return alg.inverse(a)


def twisted_tensor_algebra(A, B, c, name=""):
    """A (x) B with (a (x) b)(a' (x) b') = a c(b (x) a') b'. ``c`` maps B (x) A -> A (x) B."""
    def fn(key):
        return run({key: A.field.one}, (c, 1), (A.mul, 0), (B.mul, 1))
    basis = keys_of(A.basis, B.basis)
    # labels of the result are pairs; a 4-leg key (a, b, a', b') arrives as ((a,b),(a',b'))
    mul = LinMap(lambda key: {((k[0], k[1]),): v for k, v in fn(key[0] + key[1]).items()}, 2, 1, "mu")
    unit = {((a, b),): u * w for (a,), u in A.unit.items() for (b,), w in B.unit.items()}
    return FDAlgebra(A.field, basis, mul, unit, name or f"{A.name}#{B.name}")


def twisted_tensor_coalgebra(C, D, c, name=""):
    """C (x) D with Delta = (C (x) c (x) D)(Delta_C (x) Delta_D); keys are 2-leg tuples.
    ``c`` maps C (x) D -> D (x) C."""
    def comul(key):
        t = {key: C.field.one}
        return run(t, (D.comul, 1), (C.comul, 0), (c, 1))

    def counit(key):
        return run({key: C.field.one}, (D.counit, 1), (C.counit, 0))

    keys = [ck + dk for ck in C.keys for dk in D.keys]
    return FDCoalgebra(C.field, keys, LinMap(comul, 2, 4, "Delta"), LinMap(counit, 2, 0, "eps"), 2,
                       name or f"{C.name}(x)^c{D.name}")
