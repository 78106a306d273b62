"""Quantum integers, factorials and Gaussian binomials.

Numeric values come from the Pascal recurrence evaluated at a point.
Integer polynomials in q, built from the product formula by exact
division, serve as the independent route.
"""

from __future__ import annotations

from functools import lru_cache


class QPoly:
    """Polynomial in q with integer coefficients (low to high)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return QPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self):
        return QPoly([-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly([x * other for x in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def divexact(self, other):
        """Exact division by a polynomial with leading coefficient +-1."""
        num = list(self.coeffs)
        den = other.coeffs
        lead = den[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have a unit leading coefficient")
        if len(num) < len(den):
            if any(num):
                raise ValueError("division is not exact")
            return QPoly()
        quo = [0] * (len(num) - len(den) + 1)
        for k in range(len(quo) - 1, -1, -1):
            c = num[k + len(den) - 1] * lead
            quo[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
        if any(num):
            raise ValueError("division is not exact")
        return QPoly(quo)

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"


def q_int(j, q):
    """(j)_q = 1 + q + ... + q^(j-1)."""
    acc = q * 0
    term = q * 0 + 1
    for _ in range(j):
        acc = acc + term
        term = term * q
    return acc


def q_factorial(j, q):
    acc = q * 0 + 1
    for k in range(1, j + 1):
        acc = acc * q_int(k, q)
    return acc


def binomial_table(n, q):
    """Rows 0..n of Gaussian binomials via C(i,j) = q^(i-j) C(i-1,j-1) + C(i-1,j)."""
    one = q * 0 + 1
    zero = q * 0
    pw = [one]
    for _ in range(n):
        pw.append(pw[-1] * q)
    rows = [[one]]
    for i in range(1, n + 1):
        prev = rows[-1]
        row = []
        for j in range(i + 1):
            left = prev[j - 1] if j >= 1 else zero
            right = prev[j] if j < i else zero
            row.append(pw[i - j] * left + right)
        rows.append(row)
    return rows


def gauss_binomial(i, j, q):
    if j < 0 or j > i:
        return q * 0
    return binomial_table(i, q)[i][j]


class BinomialCache:
    """Memoized Gaussian binomials at a fixed parameter."""

    def __init__(self, q):
        self.q = q
        self.rows = binomial_table(0, q)

    def __call__(self, i, j):
        if j < 0 or j > i or i < 0:
            return self.q * 0
        if i >= len(self.rows):
            self.rows = binomial_table(i, self.q)
        return self.rows[i][j]


def _one_minus_q_pow(k):
    return QPoly([1] + [0] * (k - 1) + [-1]) if k > 0 else QPoly()


@lru_cache(maxsize=None)
def gauss_poly(i, j):
    """The Gaussian binomial as an integer polynomial, by the product formula."""
    if j < 0 or j > i:
        return QPoly()
    num = QPoly([1])
    den = QPoly([1])
    for k in range(j):
        num = num * _one_minus_q_pow(i - k)
        den = den * _one_minus_q_pow(k + 1)
    return num.divexact(den)


def vandermonde_terms(i, j, l, q):
    """Right-hand side of C(i+j, l) = sum_{s+t=l} q^((i-s)t) C(i,s) C(j,t)."""
    binom = BinomialCache(q)
    acc = q * 0
    for s in range(l + 1):
        t = l - s
        acc = acc + q ** ((i - s) * t) * binom(i, s) * binom(j, t)
    return acc


def vandermonde_poly(i, j, l):
    acc = QPoly()
    for s in range(l + 1):
        t = l - s
        acc = acc + QPoly.monomial((i - s) * t) * gauss_poly(i, s) * gauss_poly(j, t)
    return acc


def alt_sum(i, t):
    """sum_j (-1)^j t^(j(j-1)/2) C(i,j)_t."""
    binom = BinomialCache(t)
    acc = t * 0
    for j in range(i + 1):
        acc = acc + (-1) ** j * t ** (j * (j - 1) // 2) * binom(i, j)
    return acc


def _xi(s, r, i, j):
    return s + r - i - j


def _term(s, i, r, j, t, binom):
    x = _xi(s, r, i, j)
    return (-1) ** x * binom(r, j) * t ** (x * (x - 1) // 2 + s * j - i * j)


def signed_binomial_sum(s, i, r, t):
    """sum_{j=0}^r (-1)^xi C(r,j)_t t^(xi(xi-1)/2 + sj - ij) with xi = s+r-i-j."""
    binom = BinomialCache(t)
    acc = t * 0
    for j in range(r + 1):
        acc = acc + _term(s, i, r, j, t, binom)
    return acc


def signed_sum_below(s, i, r, n, t):
    """The same sum restricted to terms with xi < n."""
    binom = BinomialCache(t)
    acc = t * 0
    for j in range(r + 1):
        if _xi(s, r, i, j) < n:
            acc = acc + _term(s, i, r, j, t, binom)
    return acc


def signed_sum_above_negated(s, i, r, n, t):
    """sum over xi >= n of the same terms with sign (-1)^(xi+1)."""
    binom = BinomialCache(t)
    acc = t * 0
    for j in range(r + 1):
        if _xi(s, r, i, j) >= n:
            acc = acc - _term(s, i, r, j, t, binom)
    return acc


def check_sum_identities(n, t):
    """Check the signed-sum vanishing identities for t of multiplicative order n.

    Returns a list of failing (name, s, i, r) tuples; empty means all hold.
    """
    failures = []
    for s in range(n):
        for i in range(s + 1):
            for r in range(n):
                full = signed_binomial_sum(s, i, r, t)
                expect = (-1) ** (s - i) * t ** ((s - i) * (s - i - 1) // 2) if r == 0 else t * 0
                if full != expect:
                    failures.append(("closed_sum", s, i, r))
                below = signed_sum_below(s, i, r, n, t)
                if r == 0 and below != expect:
                    failures.append(("restricted_r0", s, i, r))
                if r > 0 and below != signed_sum_above_negated(s, i, r, n, t):
                    failures.append(("restricted_split", s, i, r))
                if 0 < r < n - s + i and below != 0:
                    failures.append(("restricted_vanish", s, i, r))
    return failures
