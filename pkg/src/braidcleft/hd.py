"""The rank-one braided Hopf algebras H_D and their underlying algebras B_E.

Basis labels are pairs (g, i) standing for g x^i with 0 <= i < n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import BraidedBialgebra
from .cyclotomic import format_cyc, mult_order
from .qcalc import BinomialCache, q_factorial
from .report import Report
from .tensor import LinMap, apply_at, tadd, tscale


@dataclass
class AlgebraDatum:
    """Data for the algebra B_E: x^n = sum_g lam[g] g, x g = chi(g) g x."""

    group: object
    chi: object
    n: int
    lam: dict

    @property
    def field(self):
        return self.chi.field


def validate_algebra_datum(E):
    """Problems with an algebra datum, as a list of messages (empty if valid)."""
    G, chi, n = E.group, E.chi, E.n
    errs = []
    if n < 1:
        errs.append("n must be positive")
    for g, v in E.lam.items():
        if v and chi.exponent(g) != 0:
            errs.append(f"chi({G.name(g)}) != 1 although lam_{G.name(g)} != 0")
    zero = E.field.zero
    for h in G:
        chin = chi(h) ** n
        for g in G:
            conj = G.mul(G.mul(h, g), G.inv(h))
            if E.lam.get(conj, zero) != chin * E.lam.get(g, zero):
                errs.append(f"lam is not chi^n-equivariant at h={G.name(h)}, g={G.name(g)}")
                return errs
    return errs


def algebra_multiplication(G, chi, n, lam, field):
    """LinMap for g x^i * h x^j in B_E."""
    lam_items = [(l, v) for l, v in lam.items() if v]

    def fn(key):
        (g, i), (h, j) = key
        coef = chi(h) ** i
        gh = G.mul(g, h)
        if i + j < n:
            return {((gh, i + j),): coef}
        out = {}
        for l, v in lam_items:
            out[((G.mul(gh, l), i + j - n),)] = coef * v
        return out

    return LinMap(fn, 2, 1, "mu")


def build_algebra(E):
    """The algebra B_E as an FDAlgebra with labels (g, i)."""
    from .algebra import FDAlgebra
    errs = validate_algebra_datum(E)
    if errs:
        raise ValueError("; ".join(errs))
    G, F = E.group, E.field
    basis = [(g, i) for g in G for i in range(E.n)]
    mul = algebra_multiplication(G, E.chi, E.n, E.lam, F)
    return FDAlgebra(F, basis, mul, {((G.identity, 0),): F.one}, "B_E")


@dataclass
class HDDatum:
    """(G, chi, z, lambda, q): z central, q * chi(z) of order n > 1."""

    group: object
    chi: object
    z: int
    lam: object
    q: object

    @property
    def field(self):
        return self.chi.field


def analyze_datum(D):
    """Derived quantities (p, qp, n, U) of a datum, or ValueError."""
    G, chi, z = D.group, D.chi, D.z
    F = D.field
    q = F(D.q)
    lam = F(D.lam)
    if not G.is_central(z):
        h = next(h for h in G if G.mul(h, z) != G.mul(z, h))
        raise ValueError(f"z = {G.name(z)} is not central: it does not commute with {G.name(h)}")
    p = chi(z)
    qp = q * p
    try:
        n = mult_order(qp)
    except ValueError:
        raise ValueError("q*chi(z) is not a root of unity") from None
    if n < 2:
        raise ValueError(f"q*chi(z) = {format_cyc(qp)} must have multiplicative order n > 1")
    zn = G.power(z, n)
    if lam and zn != G.identity:
        if not chi.power(n).is_trivial():
            raise ValueError("lambda(z^n - 1) != 0 requires chi^n = 1")
        U = {zn: lam, G.identity: -lam}
    else:
        lam = F.zero
        U = {}
    return p, qp, n, lam, U


class HDAlgebra(BraidedBialgebra):
    """The braided Hopf algebra H_D."""

    def __init__(self, D):
        p, qp, n, lam, U = analyze_datum(D)
        G, chi = D.group, D.chi
        F = D.field
        self.datum = D
        self.group = G
        self.chi = chi
        self.z = D.z
        self.q = F(D.q)
        self.p = p
        self.qp = qp
        self.n = n
        self.lam = lam
        self.U = U
        self.binom = BinomialCache(qp)
        self.max_group_order = 64
        one = F.one
        basis = [(g, i) for g in G for i in range(n)]
        mul = algebra_multiplication(G, chi, n, U, F)
        zpow = [G.power(D.z, j) for j in range(n)]
        binom = self.binom
        q = self.q

        def comul(key):
            (g, i), = key
            return {((g, j), (G.mul(g, zpow[j]), i - j)): binom(i, j) for j in range(i + 1)}

        def counit(key):
            return {(): one} if key[0][1] == 0 else {}

        def braid(key):
            (g, i), (h, j) = key
            return {((h, j), (g, i)): q ** (i * j)}

        self._mul = mul
        super().__init__(F, basis, mul, {((G.identity, 0),): one},
                         LinMap(comul, 1, 2, "Delta"), LinMap(counit, 1, 0, "eps"),
                         LinMap(braid, 2, 2, "c_q"), None, self.name_of, "H_D")

        def antipode(key):
            (g, i), = key
            w = G.mul(G.power(D.z, -i), G.inv(g))
            prod = self.algebra.product(self.x_pow(i), self.g(w))
            return tscale(prod, (-1) ** i * qp ** (i * (i - 1) // 2))

        self.antipode = LinMap(antipode, 1, 1, "S")

    def name_of(self, label):
        g, i = label
        gname = self.group.name(g)
        if i == 0:
            return gname
        xs = "x" if i == 1 else f"x^{i}"
        return xs if g == self.group.identity else f"{gname}*{xs}"

    @property
    def auts(self):
        """Aut_{chi,z}(G), identity first."""
        if getattr(self, "_auts", None) is None:
            from .groups import automorphisms
            self._auts = automorphisms(self.group, self.chi, self.z, self.max_group_order)
        return self._auts

    @property
    def x_label(self):
        return (self.group.identity, 1)

    def check_supported(self):
        if self.p == 1 and self.q == -1:
            raise ValueError("unsupported (p,q)=(1,-1)")

    @property
    def is_nilpotent(self):
        """True when x^n = 0."""
        return not self.U

    def g(self, el):
        return {((el, 0),): self.field.one}

    def elem(self, el, i):
        return {((el, i),): self.field.one}

    def x_pow(self, i):
        """x^i computed by repeated multiplication."""
        x = self.elem(self.group.identity, 1)
        return self.algebra.power(x, i)

    def q_factorial(self, j):
        return q_factorial(j, self.qp)

    def s_squared_expected(self, label):
        g, i = label
        return {(label,): self.q ** (i * (i - 1)) * self.p ** (-i)}


def build_hd(D):
    return HDAlgebra(D)


def verify_hd_extras(H):
    """Checks specific to H_D: S^2 and the value of x^n."""
    r = Report("H_D specifics")
    one = H.field.one
    bad = None
    for b in H.basis:
        got = apply_at(H.antipode, apply_at(H.antipode, {(b,): one}, 0), 0)
        if got != H.s_squared_expected(b):
            bad = b
            break
    r.expect_none("antipode_squared", None if bad is None else H.name_of(bad))
    xn = H.algebra.product(H.x_pow(H.n - 1), H.elem(H.group.identity, 1))
    expect = {}
    for g, v in H.U.items():
        expect = tadd(expect, {((g, 0),): v})
    r.add("x_power_n", xn == expect, value=format_vector(H, xn))
    return r


def format_vector(H, v):
    if not v:
        return "0"
    parts = []
    for key, c in sorted(v.items(), key=lambda kv: str(kv[0])):
        parts.append(f"{c} * {' (x) '.join(H.label_name(k) for k in key)}")
    return " + ".join(parts)


def taft_datum(n):
    """Taft algebra of dimension n^2: G = C_n, chi(g) = zeta_n, z = g, lambda = 1, q = 1."""
    from .cyclotomic import make_field
    from .groups import Character, FiniteGroup
    m = n if n % 2 == 0 else 2 * n
    F = make_field(m)
    G = FiniteGroup.cyclic_product([n])
    chi = Character.from_generators(G, F, [m // n])
    return HDDatum(G, chi, G.word("g1"), F.one, F.one)


def dump_structure(H):
    """Sorted lines ``(label,label) -> [coeff * label, ...]`` for all maps."""
    one = H.field.one
    sections = [("mult", H.mul, H.pairs()), ("comult", H.comul, [(b,) for b in H.basis]),
                ("counit", H.counit, [(b,) for b in H.basis]), ("braid", H.braid, H.pairs())]
    if H.antipode is not None:
        sections.append(("antipode", H.antipode, [(b,) for b in H.basis]))
    out = [f"unit -> {_fmt_terms(H, H.unit)}"]
    for title, f, keys in sections:
        lines = []
        for key in keys:
            img = apply_at(f, {key: one}, 0)
            lines.append(f"{title} ({','.join(H.label_name(k) for k in key)}) -> {_fmt_terms(H, img)}")
        out.extend(sorted(lines))
    return out


def _fmt_terms(H, t):
    terms = []
    for key, c in t.items():
        lab = " (x) ".join(H.label_name(k) for k in key) if key else "1"
        terms.append(f"{c} * {lab}")
    return "[" + ", ".join(sorted(terms)) + "]"
