"""Exact sparse Gaussian elimination over cyclotomic scalars.

Vectors are dicts from arbitrary hashable coordinates to nonzero scalars.
"""

from __future__ import annotations


def _axpy(row, coef, other):
    # row - coef * other, in place
    for k, v in other.items():
        w = row.get(k)
        w = -coef * v if w is None else w - coef * v
        if w:
            row[k] = w
        else:
            row.pop(k, None)


class Echelon:
    """Incrementally built echelon form that remembers how each pivot row
    was combined from the inserted vectors."""

    def __init__(self):
        self.pivots = {}
        self._rank_of = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row, combo=None):
        row = dict(row)
        combo = dict(combo) if combo else {}
        while True:
            best = None
            for k in row:
                r = self._rank_of.get(k)
                if r is not None and (best is None or r < best[0]):
                    best = (r, k)
            if best is None:
                return row, combo
            col = best[1]
            coef = row[col]
            prow, pcombo = self.pivots[col]
            _axpy(row, coef, prow)
            _axpy(combo, coef, pcombo)

    def add(self, row, tag=None, one=None):
        """Insert a vector. Returns None if it was independent, else the
        relation (dict tag -> coefficient) that expresses the dependency."""
        combo = {tag: one} if tag is not None else None
        row, combo = self.reduce(row, combo)
        if not row:
            return combo
        col = next(iter(row))
        inv = row[col].inverse()
        row = {k: v * inv for k, v in row.items()}
        combo = {k: v * inv for k, v in combo.items()}
        self._rank_of[col] = len(self.pivots)
        self.pivots[col] = (row, combo)
        return None

    def contains(self, row):
        return not self.reduce(row)[0]


def rank(vectors):
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def kernel(images, one):
    """Basis of the kernel of the map tag -> images[tag] (a dict of vectors)."""
    e = Echelon()
    out = []
    for tag, img in images.items():
        rel = e.add(img, tag, one)
        if rel is not None:
            out.append(rel)
    return out


def solve(images, target, one):
    """Some x with sum_tag x[tag] * images[tag] == target, or None."""
    e = Echelon()
    for tag, img in images.items():
        e.add(img, tag, one)
    rest, combo = e.reduce(target)
    if rest:
        return None
    return {k: -v for k, v in combo.items() if v}


class Subspace:
    """A subspace with an echelon basis, supporting coordinates."""

    def __init__(self, vectors, one):
        self.vectors = list(vectors)
        self.one = one
        self._e = Echelon()
        for i, v in enumerate(self.vectors):
            if self._e.add(v, i, one) is not None:
                raise ValueError("vectors are linearly dependent")

    def __len__(self):
        return len(self.vectors)

    def contains(self, v):
        return self._e.contains(v)

    def coordinates(self, v):
        rest, combo = self._e.reduce(v)
        if rest:
            return None
        return {k: -c for k, c in combo.items() if c}
