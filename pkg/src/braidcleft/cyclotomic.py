"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, t, ..., t^(d-1) modulo the m-th
cyclotomic polynomial, as an integer numerator vector over one positive
common denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod_int(num, den):
    # both low-to-high integer coefficient lists, den monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Integer coefficients (low to high) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("m must be positive")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly, rem = _poly_divmod_int(poly, cyclotomic_poly(d))
            assert not any(rem)
    return tuple(poly)


class CycField:
    """The field Q(zeta_m). Use make_field to obtain shared instances."""

    def __init__(self, m):
        self.m = m
        self.modulus = cyclotomic_poly(m)
        self.deg = len(self.modulus) - 1
        d = self.deg
        # t^k reduced modulo the cyclotomic polynomial, for k < 2d - 1
        red = []
        cur = [0] * d
        cur[0] = 1
        for k in range(max(2 * d - 1, 1)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._red = red
        self._zeta_cache = {}
        self.zero = CycNum._make(self, [0] * d, 1)
        self.one = CycNum._make(self, [1] + [0] * (d - 1), 1)

    def __repr__(self):
        return f"CycField({self.m})"

    def __reduce__(self):
        return make_field, (self.m,)

    def __call__(self, value):
        if isinstance(value, CycNum):
            if value.field is not self:
                raise ValueError(f"element of Q(zeta_{value.field.m}) used in Q(zeta_{self.m})")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return CycNum._make(self, [value] + [0] * (self.deg - 1), 1)
        if isinstance(value, Fraction):
            return CycNum._make(self, [value.numerator] + [0] * (self.deg - 1), value.denominator)
        raise TypeError(f"cannot coerce {value!r} into {self!r}")

    def zeta(self, k=1):
        """The root of unity zeta_m^k."""
        k %= self.m
        got = self._zeta_cache.get(k)
        if got is None:
            vec = [0] * (2 * self.m)
            vec[k] = 1
            got = self.from_poly(vec)
            self._zeta_cache[k] = got
        return got

    def from_poly(self, coeffs):
        """Reduce an arbitrary rational polynomial in t modulo the modulus."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        d = self.deg
        _, rem = _poly_divmod_int(ints + [0] * d, self.modulus) if len(ints) > d else (None, ints)
        rem = list(rem) + [0] * (d - len(rem))
        return CycNum._make(self, rem[:d], den)

    def from_coeffs(self, coeffs):
        if len(coeffs) != self.deg:
            raise ValueError(f"expected {self.deg} coefficients")
        return self.from_poly(coeffs)


@lru_cache(maxsize=None)
def make_field(m):
    """Q(zeta_m) with m >= 1. The instance is shared per m."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    return CycField(m)


class CycNum:
    __slots__ = ("field", "num", "den")

    @staticmethod
    def _make(field, num, den):
        if den < 0:
            num = [-x for x in num]
            den = -den
        g = den
        for x in num:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if not any(num):
            num = [0] * len(num)
            den = 1
        elif g != 1:
            num = [x // g for x in num]
            den //= g
        obj = object.__new__(CycNum)
        obj.field = field
        obj.num = tuple(num)
        obj.den = den
        return obj

    @property
    def coeffs(self):
        return tuple(Fraction(x, self.den) for x in self.num)

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise ValueError(f"mixing Q(zeta_{self.field.m}) and Q(zeta_{other.field.m})")
            return other
        return self.field(other)

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return CycNum._make(self.field, [a + b for a, b in zip(self.num, o.num)], self.den)
        return CycNum._make(self.field, [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
                            self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum._make(self.field, [-a for a in self.num], self.den)

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        F = self.field
        d = F.deg
        a, b = self.num, o.num
        if d == 1:
            return CycNum._make(F, [a[0] * b[0]], self.den * o.den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        res = prod[:d]
        red = F._red
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                rk = red[k]
                for t in range(d):
                    if rk[t]:
                        res[t] += c * rk[t]
        return CycNum._make(F, res, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("zero has no inverse")
        F = self.field
        if F.deg == 1:
            return CycNum._make(F, [self.den], self.num[0])
        # solve a*u + mod*v = 1 over Q[t]
        a = _trim([Fraction(x, self.den) for x in self.num])
        b = [Fraction(x) for x in F.modulus]
        u0, u1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, b
        while len(r1) > 1 or r1[0] != 0:
            q, r = _qdivmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _trim(_qsub(u0, _qmul(q, u1)))
        # r0 is a nonzero constant
        c = r0[0]
        return F.from_poly([x / c for x in u0])

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == self.field(other)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.field.m, self.num, self.den))

    def is_rational(self):
        return not any(self.num[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __repr__(self):
        return format_cyc(self)

    def __str__(self):
        return format_cyc(self)


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p or [Fraction(0)]


def _qsub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _qmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qdivmod(a, b):
    a = list(a)
    b = _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], _trim(a)
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return q, _trim(a[: len(b) - 1] or [Fraction(0)])


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return f"rat({x.numerator})"
    return f"rat({x.numerator}/{x.denominator})"


def format_cyc(a):
    """Render in the literal grammar: sums of rat(p/q)*zeta(k) terms."""
    terms = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(format_rational(c))
        elif c == 1:
            terms.append(f"zeta({k})")
        else:
            terms.append(f"{format_rational(c)}*zeta({k})")
    return " + ".join(terms) if terms else "rat(0)"


def mult_order(a):
    """Least n >= 1 with a**n == 1.

    Every root of unity in Q(zeta_m) has order dividing lcm(2, m), so the
    search stops there; anything else raises ValueError.
    """
    if not a:
        raise ValueError("zero is not a root of unity")
    m = a.field.m
    bound = m if m % 2 == 0 else 2 * m
    cur = a
    for k in range(1, bound + 1):
        if cur == 1:
            return k
        cur = cur * a
    raise ValueError(f"{a} is not a root of unity")


def is_root_of_unity(a):
    try:
        mult_order(a)
    except ValueError:
        return False
    return True
