"""Sparse tensors and linear maps acting on tensor legs.

An element of V1 (x) ... (x) Vk is a dict from k-tuples of basis labels to
nonzero scalars. A LinMap sends basis tuples of a fixed length to tensors
and can be applied to any contiguous block of legs, which is how composite
maps such as (mu (x) mu)(H (x) c (x) H)(Delta (x) Delta) are evaluated.
"""

from __future__ import annotations

import itertools


def basis_tensor(key, one):
    return {tuple(key): one}


def vec(label, one):
    return {(label,): one}


def tclean(t):
    return {k: v for k, v in t.items() if v}


def tadd(a, b):
    out = dict(a)
    for k, v in b.items():
        w = out.get(k)
        w = v if w is None else w + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def tscale(t, c):
    if not c:
        return {}
    return {k: v * c for k, v in t.items()}


def tsub(a, b):
    return tadd(a, tscale(b, -1))


def tprod(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            out[k1 + k2] = v1 * v2
    return out


def tsum(terms):
    out = {}
    for t in terms:
        for k, v in t.items():
            w = out.get(k)
            out[k] = v if w is None else w + v
    return tclean(out)


class LinMap:
    """A linear map between tensor powers, defined on basis tuples.

    ``fn`` receives a tuple of ``n_in`` labels and returns a tensor whose
    keys have length ``n_out``. Results are memoized.
    """

    def __init__(self, fn, n_in, n_out, name=""):
        self.fn = fn
        self.n_in = n_in
        self.n_out = n_out
        self.name = name
        self._cache = {}

    def on_basis(self, key):
        got = self._cache.get(key)
        if got is None:
            got = tclean(self.fn(key))
            self._cache[key] = got
        return got

    def __call__(self, t):
        return apply_at(self, t, 0)

    def __repr__(self):
        return f"LinMap({self.name or '?'}: {self.n_in} -> {self.n_out})"

    @classmethod
    def from_table(cls, table, n_in, n_out, name=""):
        return cls(lambda key: table.get(key, {}), n_in, n_out, name)


def identity_map(one, n=1):
    return LinMap(lambda key: {key: one}, n, n, "id")


def apply_at(f, t, pos):
    """Apply f to legs pos .. pos + f.n_in - 1 of every term of t."""
    out = {}
    k = f.n_in
    for key, c in t.items():
        pre = key[:pos]
        mid = key[pos:pos + k]
        post = key[pos + k:]
        for okey, d in f.on_basis(mid).items():
            nk = pre + okey + post
            v = c * d
            w = out.get(nk)
            out[nk] = v if w is None else w + v
    return {k2: v for k2, v in out.items() if v}


def run(t, *steps):
    """Apply a sequence of (map, position) steps to a tensor."""
    for f, pos in steps:
        t = apply_at(f, t, pos)
    return t


def compose(*maps, name=""):
    """compose(f, g, h) = f o g o h on full tensors."""
    def fn(key):
        t = None
        for f in reversed(maps):
            t = f.on_basis(key) if t is None else apply_at(f, t, 0)
        return t
    last = maps[-1]
    return LinMap(fn, last.n_in, maps[0].n_out, name)


def tensor_map(f, g, name=""):
    def fn(key):
        return tprod(f.on_basis(key[:f.n_in]), g.on_basis(key[f.n_in:]))
    return LinMap(fn, f.n_in + g.n_in, f.n_out + g.n_out, name)


def add_maps(f, g, name=""):
    return LinMap(lambda key: tadd(f.on_basis(key), g.on_basis(key)), f.n_in, f.n_out, name)


def scale_map(f, c, name=""):
    return LinMap(lambda key: tscale(f.on_basis(key), c), f.n_in, f.n_out, name)


def keys_of(*bases):
    return [tuple(k) for k in itertools.product(*bases)]


def first_mismatch(keys, lhs, rhs):
    """First key where the two tensor-valued callables differ, else None."""
    for key in keys:
        if lhs(key) != rhs(key):
            return key
    return None


def maps_agree(f, g, keys):
    return first_mismatch(keys, f.on_basis, g.on_basis)
