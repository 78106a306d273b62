"""Tabulated weak actions and cocycles for two small shapes of data.

These are cross-checks only: a cell that disagrees with the definitional
composite is reported, never treated as an error.

* ``n2``: any datum with n = 2.
* ``cyclic_n3``: n = 3 and G cyclic generated by z; here xi = chi(z).
"""

from __future__ import annotations

from .tensor import tadd, tscale


def _sum(terms):
    out = {}
    for coef, vec in terms:
        out = tadd(out, tscale(vec, coef))
    return out


def n2_forms(ext):
    H, B = ext.H, ext.B
    G = H.group
    bx = ext.datum.b_x
    b, binv = ext.b, ext.b_inv
    z = H.z

    def rho(h, c):
        g, i = h
        out = {}
        for zg, part in ext._split_by_aut(c)(g).items():
            if i == 0:
                out = tadd(out, B.prod_all(b(g), part, binv(zg)))
            else:
                inner = tadd(B.product(bx, part), tscale(B.product(ext.ca.alpha(part), bx), -1))
                out = tadd(out, B.prod_all(b(g), inner, binv(G.mul(zg, z))))
        return out

    def sigma(h, l):
        (g, s), (k, r) = h, l
        gk = G.mul(g, k)
        if (s, r) == (0, 0):
            return B.prod_all(b(g), b(k), binv(gk))
        if (s, r) == (1, 0):
            tail = binv(G.mul(gk, z))
            return _sum([(-H.chi(k), B.prod_all(b(g), b(k), bx, tail)),
                         (1, B.prod_all(b(g), bx, b(k), tail))])
        if (s, r) == (0, 1):
            return {}
        return tscale(B.prod_all(b(g), b(k), B.power(bx, 2), binv(gk)), H.chi(k))

    return rho, sigma


def _dlog(G, z, g):
    e, cur = 0, G.identity
    while cur != g:
        cur = G.mul(cur, z)
        e += 1
        if e > G.order:
            raise ValueError("z does not generate G")
    return e


def cyclic_n3_forms(ext):
    H, B = ext.H, ext.B
    G = H.group
    bx = ext.datum.b_x
    xi = H.chi(H.z)
    zp = lambda e: G.power(H.z, e)
    bz = lambda e: ext.b(zp(e))
    bzi = lambda e: ext.b_inv(zp(e))
    alpha = ext.ca.alpha

    def rho(h, c):
        g, k = h
        i = _dlog(G, H.z, g)
        if k == 0:
            inner = c
        elif k == 1:
            inner = tadd(B.product(bx, c), tscale(B.product(alpha(c), bx), -1))
        else:
            inner = _sum([(1, B.prod_all(B.power(bx, 2), c)),
                          (xi, B.prod_all(bx, alpha(c), bx)),
                          (1, B.prod_all(alpha(alpha(c)), B.power(bx, 2)))])
        return B.prod_all(bz(i), inner, bzi(i + k))

    def sigma(h, l):
        (g, s), (k, r) = h, l
        i, j = _dlog(G, H.z, g), _dlog(G, H.z, k)
        bi, bj = bz(i), bz(j)
        x1, x2, x3, x4 = (B.power(bx, e) for e in (1, 2, 3, 4))
        if r == 0:
            if s == 0:
                return B.prod_all(bi, bj, bzi(i + j))
            if s == 1:
                t = bzi(i + j + 1)
                return _sum([(-xi ** j, B.prod_all(bi, bj, x1, t)), (1, B.prod_all(bi, x1, bj, t))])
            t = bzi(i + j + 2)
            return _sum([(xi ** (2 * j + 2), B.prod_all(bi, bj, x2, t)),
                         (xi ** (j + 1), B.prod_all(bi, x1, bj, x1, t)),
                         (1, B.prod_all(bi, x2, bj, t))])
        if s == 0 or (s, r) == (1, 1):
            return {}
        if (s, r) in ((2, 1), (1, 2)):
            c = xi ** (2 * j) if s == 2 else xi ** j
            return _sum([(-c, B.prod_all(bi, bj, bzi(i + j + 3))),
                         (-c, B.prod_all(bi, bj, bzi(i + j))),
                         (c, B.prod_all(bi, bj, x3, bzi(i + j + 3)))])
        a, bcoef = xi ** (2 * j + 1), xi ** (j + 1)
        return _sum([(-a, B.prod_all(bi, bj, x1, bzi(i + j + 4))),
                     (-a, B.prod_all(bi, bj, x1, bzi(i + j + 1))),
                     (bcoef, B.prod_all(bi, x1, bj, bzi(i + j + 4))),
                     (bcoef, B.prod_all(bi, x1, bj, bzi(i + j + 1))),
                     (a, B.prod_all(bi, bj, x4, bzi(i + j + 4))),
                     (-bcoef, B.prod_all(bi, x1, bj, x3, bzi(i + j + 4)))])

    return rho, sigma


def tabulated_forms(ext):
    """(label, rho, sigma) for every tabulated shape matching the datum."""
    H = ext.H
    out = []
    if H.n == 2:
        out.append(("tabulated_n2", *n2_forms(ext)))
    if H.n == 3:
        try:
            _dlog(H.group, H.z, H.group.identity)
            if all(_dlog(H.group, H.z, g) is not None for g in H.group):
                out.append(("tabulated_cyclic_n3", *cyclic_n3_forms(ext)))
        except ValueError:
            pass
    return out
