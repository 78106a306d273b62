"""Finite groups as Cayley tables, characters, and automorphism searches."""

from __future__ import annotations

import itertools
import re
from collections import deque


class FiniteGroup:
    """A finite group given by its multiplication table.

    Elements are the integers 0..order-1. ``table[a][b]`` is the index of
    the product ab.
    """

    def __init__(self, table, names=None, check=True):
        self.table = [list(row) for row in table]
        self.order = len(self.table)
        self.names = list(names) if names is not None else [f"e{i}" for i in range(self.order)]
        if check:
            self._validate()
        self.identity = next(a for a in range(self.order)
                             if all(self.table[a][b] == b for b in range(self.order)))
        self._inv = [next(b for b in range(self.order) if self.table[a][b] == self.identity)
                     for a in range(self.order)]
        self._orders = [self._compute_order(a) for a in range(self.order)]
        self.factor_orders = None

    def _validate(self):
        n = self.order
        if n == 0:
            raise ValueError("empty group table")
        full = set(range(n))
        for row in self.table:
            if len(row) != n or set(row) != full:
                raise ValueError("table is not a Latin square")
        for a in range(n):
            if {self.table[r][a] for r in range(n)} != full:
                raise ValueError("table is not a Latin square")
        ids = [a for a in range(n) if all(self.table[a][b] == b and self.table[b][a] == b for b in range(n))]
        if not ids:
            raise ValueError("table has no identity")
        t = self.table
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for c in range(n):
                    if t[ab][c] != t[a][t[b][c]]:
                        raise ValueError(f"table is not associative at ({a},{b},{c})")

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def power(self, a, k):
        if k < 0:
            a, k = self._inv[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    def _compute_order(self, a):
        k, cur = 1, a
        while cur != self.identity:
            cur = self.table[cur][a]
            k += 1
        return k

    def element_order(self, a):
        return self._orders[a]

    def name(self, a):
        return self.names[a]

    def is_central(self, z):
        return all(self.table[z][g] == self.table[g][z] for g in range(self.order))

    def is_abelian(self):
        return all(self.is_central(g) for g in range(self.order))

    def subgroup(self, gens):
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            s = queue.popleft()
            for g in gens:
                t = self.table[s][g]
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen

    def generating_set(self):
        """A small generating set, chosen greedily by decreasing element order."""
        gens = []
        current = {self.identity}
        by_order = sorted(range(self.order), key=lambda a: (-self._orders[a], a))
        while len(current) < self.order:
            g = next(a for a in by_order if a not in current)
            gens.append(g)
            current = self.subgroup(gens)
        # drop redundant generators
        for g in list(gens):
            rest = [h for h in gens if h != g]
            if len(self.subgroup(rest)) == self.order:
                gens = rest
        return gens

    def word(self, text):
        """Parse a word such as ``g1*g2^2*g3`` against the element names of
        the canonical generators (only for groups built from cyclic factors)."""
        text = text.strip()
        if text in ("", "1", "e"):
            return self.identity
        if self.factor_orders is None:
            if text in self.names:
                return self.names.index(text)
            raise ValueError(f"unknown group element {text!r}")
        exps = [0] * len(self.factor_orders)
        for part in text.split("*"):
            part = part.strip()
            mt = re.fullmatch(r"g(\d+)(?:\^(-?\d+))?", part)
            if not mt:
                raise ValueError(f"bad group word component {part!r}")
            k = int(mt.group(1)) - 1
            if not 0 <= k < len(exps):
                raise ValueError(f"no generator g{k + 1}")
            exps[k] += int(mt.group(2) or 1)
        return self.from_exponents(exps)

    def from_exponents(self, exps):
        idx = 0
        for e, n in zip(exps, self.factor_orders):
            idx = idx * n + (e % n)
        return idx

    def exponents(self, a):
        out = []
        for n in reversed(self.factor_orders):
            out.append(a % n)
            a //= n
        return tuple(reversed(out))

    def generators(self):
        """Canonical generators for a product of cyclic groups."""
        if self.factor_orders is None:
            return self.generating_set()
        k = len(self.factor_orders)
        return [self.from_exponents([int(i == j) for i in range(k)]) for j in range(k)]

    @classmethod
    def cyclic_product(cls, orders):
        """The group C_{n1} x ... x C_{nk}, elements in mixed-radix order."""
        orders = list(orders)
        if not orders or any(n < 1 for n in orders):
            raise ValueError("factor orders must be positive")
        elems = list(itertools.product(*[range(n) for n in orders]))
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[tuple((a + b) % n for a, b, n in zip(x, y, orders))] for y in elems] for x in elems]
        names = [_exp_name(e) for e in elems]
        G = cls(table, names, check=False)
        G.factor_orders = orders
        return G


def _exp_name(exps):
    parts = []
    for k, e in enumerate(exps):
        if e == 1:
            parts.append(f"g{k + 1}")
        elif e:
            parts.append(f"g{k + 1}^{e}")
    return "*".join(parts) if parts else "1"


def symmetric_group(n):
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, ["".join(map(str, p)) for p in perms], check=False)


class Character:
    """A homomorphism G -> Q(zeta_m)^x with values zeta_m^e, stored by exponent."""

    def __init__(self, group, field, exponents):
        self.group = group
        self.field = field
        self.exps = [e % field.m for e in exponents]
        if len(self.exps) != group.order:
            raise ValueError("one exponent per group element expected")
        m = field.m
        for a in group:
            for b in group:
                if self.exps[group.mul(a, b)] != (self.exps[a] + self.exps[b]) % m:
                    raise ValueError(f"character is not multiplicative at "
                                     f"({group.name(a)}, {group.name(b)})")

    @classmethod
    def from_generators(cls, group, field, gen_exponents):
        """Character of a cyclic product with chi(g_k) = zeta^e_k."""
        if group.factor_orders is None:
            raise ValueError("generator exponents need a group built from cyclic factors")
        if len(gen_exponents) != len(group.factor_orders):
            raise ValueError("one exponent per cyclic factor expected")
        m = field.m
        for e, n in zip(gen_exponents, group.factor_orders):
            if (e * n) % m:
                raise ValueError("character exponent incompatible with the factor order")
        exps = [sum(a * e for a, e in zip(group.exponents(g), gen_exponents)) % m for g in group]
        return cls(group, field, exps)

    def __call__(self, g):
        return self.field.zeta(self.exps[g])

    def exponent(self, g):
        return self.exps[g]

    def power(self, k):
        return Character(self.group, self.field, [e * k for e in self.exps])

    def is_trivial(self):
        return not any(self.exps)


def _extend(src, tgt, gens, imgs):
    """Extend gens -> imgs to a homomorphism on <gens>, or None if inconsistent."""
    phi = {src.identity: tgt.identity}
    queue = deque([src.identity])
    pairs = list(zip(gens, imgs))
    while queue:
        s = queue.popleft()
        for g, y in pairs:
            t = src.table[s][g]
            val = tgt.table[phi[s]][y]
            got = phi.get(t)
            if got is None:
                phi[t] = val
                queue.append(t)
            elif got != val:
                return None
    if len(set(phi.values())) != len(phi):
        return None
    return phi


def _search_homs(src, tgt, gens, allowed):
    """Injective homomorphisms defined on <gens>, with images of gens[k] in allowed[k]."""
    out = []

    def rec(k, imgs):
        if imgs and _extend(src, tgt, gens[:k], imgs) is None:
            return
        if k == len(gens):
            out.append(_extend(src, tgt, gens, imgs))
            return
        for y in allowed[k]:
            rec(k + 1, imgs + [y])

    rec(0, [])
    return out


def automorphisms(group, chi=None, z=None, max_order=64):
    """All automorphisms fixing z and preserving chi, as permutation tuples.

    The identity comes first; the rest are sorted lexicographically.
    """
    if group.order > max_order:
        raise ValueError(f"group order {group.order} exceeds the brute-force bound {max_order}")
    gens = group.generating_set()
    allowed = []
    for g in gens:
        cands = [y for y in group if group.element_order(y) == group.element_order(g)]
        if chi is not None:
            cands = [y for y in cands if chi.exponent(y) == chi.exponent(g)]
        allowed.append(cands)
    result = []
    for phi in _search_homs(group, group, gens, allowed):
        perm = tuple(phi[g] for g in group)
        if z is not None and perm[z] != z:
            continue
        result.append(perm)
    ident = tuple(group)
    result.sort(key=lambda p: (p != ident, p))
    return result


def compose(sigma, tau):
    """(sigma o tau)(g) = sigma(tau(g))."""
    return tuple(sigma[t] for t in tau)


def automorphism_group(auts):
    """The group of the given automorphisms under composition."""
    index = {a: i for i, a in enumerate(auts)}
    table = [[index[compose(a, b)] for b in auts] for a in auts]
    return FiniteGroup(table, [f"aut{i}" for i in range(len(auts))])


def semidirect_opp(group, auts):
    """G(chi,z)^op with (g, f)(h, k) = (k(g) h, k o f).

    Elements are pairs (g, automorphism index), listed g-major.
    """
    index = {a: i for i, a in enumerate(auts)}
    elems = [(g, i) for g in group for i in range(len(auts))]
    eidx = {e: i for i, e in enumerate(elems)}
    table = []
    for g, f in elems:
        row = []
        for h, k in elems:
            kk = auts[k]
            row.append(eidx[(group.mul(kk[g], h), index[compose(kk, auts[f])])])
        table.append(row)
    names = [f"({group.name(g)},aut{i})" for g, i in elems]
    G = FiniteGroup(table, names)
    G.pairs = elems
    return G


def find_isomorphism(src, tgt):
    """An isomorphism src -> tgt as a list of images, or None."""
    if src.order != tgt.order:
        return None
    gens = src.generating_set()
    allowed = [[y for y in tgt if tgt.element_order(y) == src.element_order(g)] for g in gens]
    for phi in _search_homs(src, tgt, gens, allowed):
        if len(phi) == src.order:
            return [phi[g] for g in src]
    return None


def is_homomorphism(src, tgt, images):
    return all(images[src.mul(a, b)] == tgt.mul(images[a], images[b]) for a in src for b in src)
