"""Workbench configuration files.

A config is a sequence of ``[section]`` headers and ``key = expression``
lines; ``#`` starts a comment and an expression may continue over several
lines while brackets are open. Expressions use exact literals::

    rat(-3/4)  zeta(2)  rat(1/2) + rat(-1)*zeta(3)   vec("g1*x")
    cyclic([2, 2, 2])  table([[0, 1], [1, 0]])  symmetric(3)
    exponents([1, 1, 1])  word("g1*g2*g3")  "canonical"

Sections and keys:

    [datum]             group, character, z, lambda, q; optional field (m of Q(zeta_m))
    [comodule_algebra]  source = "regular" | "group_algebra" | "explicit"; an explicit
                        algebra adds basis = ["e", ...], unit = <vector>,
                        degree.<b> = [word("g"), k] (k indexes Aut_{chi,z}, 0 = identity),
                        alpha = [[...]], ladder = [[...]] (row i = image of basis i)
                        and mul.<a>.<b> = <vector> (unlisted products are zero)
    [cleft]             b_x = <vector>; b_g.<element name> = <vector>
                        or datum = "canonical" (b_g = g, b_x = x)
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CycNum, make_field
from .groups import Character, FiniteGroup, symmetric_group


class ConfigError(Exception):
    def __init__(self, msg, line=None, col=None):
        self.msg = msg
        self.line = line
        self.col = col
        where = f"line {line}, column {col}: " if line is not None else ""
        super().__init__(where + msg)


@dataclass
class Node:
    kind: str
    value: object
    line: int
    col: int
    args: list = field(default_factory=list)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<str>"[^"\n]*")
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),\[\]])
""", re.VERBOSE)


def _tokenize(text, line, col0):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ConfigError(f"unexpected character {text[pos]!r}", *_locate(text, pos, line, col0))
        kind = m.lastgroup
        if kind != "ws":
            toks.append((kind, m.group(), *_locate(text, pos, line, col0)))
        pos = m.end()
    toks.append(("end", "", *_locate(text, pos, line, col0)))
    return toks


def _locate(text, pos, line, col0):
    """(line, column) of offset pos in a possibly multi-line expression."""
    before = text[:pos]
    nl = before.count("\n")
    if nl == 0:
        return line, col0 + pos
    return line + nl, pos - before.rfind("\n")


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, want=None):
        tok = self.toks[self.i]
        if want is not None and tok[1] != want:
            raise ConfigError(f"expected {want!r}, found {tok[1] or 'end of expression'!r}", tok[2], tok[3])
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ConfigError(f"unexpected {tok[1]!r}", tok[2], tok[3])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            tok = self.take()
            node = Node("add" if tok[1] == "+" else "sub", None, tok[2], tok[3], [node, self.term()])
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] in ("*", "/"):
            tok = self.take()
            node = Node("mul" if tok[1] == "*" else "div", None, tok[2], tok[3], [node, self.factor()])
        return node

    def factor(self):
        tok = self.peek()
        if tok[1] == "-":
            self.take()
            return Node("neg", None, tok[2], tok[3], [self.factor()])
        node = self.atom()
        if self.peek()[1] == "^":
            t = self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            e = self.take()
            if e[0] != "num":
                raise ConfigError("exponent must be an integer", e[2], e[3])
            node = Node("pow", sign * int(e[1]), t[2], t[3], [node])
        return node

    def atom(self):
        tok = self.take()
        kind, text, line, col = tok
        if kind == "num":
            return Node("num", int(text), line, col)
        if kind == "str":
            return Node("str", text[1:-1], line, col)
        if kind == "ident":
            if self.peek()[1] == "(":
                self.take()
                args = []
                if self.peek()[1] != ")":
                    args.append(self.expr())
                    while self.peek()[1] == ",":
                        self.take()
                        args.append(self.expr())
                self.take(")")
                return Node("call", text, line, col, args)
            if text in ("true", "false"):
                return Node("bool", text == "true", line, col)
            return Node("ident", text, line, col)
        if text == "(":
            node = self.expr()
            self.take(")")
            return node
        if text == "[":
            items = []
            if self.peek()[1] != "]":
                items.append(self.expr())
                while self.peek()[1] == ",":
                    self.take()
                    items.append(self.expr())
            self.take("]")
            return Node("list", None, line, col, items)
        raise ConfigError(f"unexpected {text or 'end of expression'!r}", line, col)


def parse_expression(text, line=1, col=1):
    return _Parser(_tokenize(text, line, col)).parse()


@dataclass
class Entry:
    key: str
    node: Node
    line: int
    col: int


_HEADER = re.compile(r"^\[([A-Za-z_][A-Za-z_0-9]*)\]$")
_KEY = re.compile(r"^([A-Za-z_][A-Za-z_0-9.*^]*)\s*=")


def _strip_comment(line):
    out = []
    in_str = False
    for ch in line:
        if ch == '"':
            in_str = not in_str
        if ch == "#" and not in_str:
            break
        out.append(ch)
    return "".join(out)


def _balance(text):
    return sum(text.count(o) - text.count(c) for o, c in ("()", "[]"))


def parse_config(text):
    """Sections as {name: {key: Entry}}; ConfigError on malformed input."""
    sections = {}
    current = None
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        lineno = i + 1
        raw = _strip_comment(lines[i])
        i += 1
        stripped = raw.strip()
        if not stripped:
            continue
        col = raw.index(stripped[0]) + 1
        m = _HEADER.match(stripped)
        if m:
            current = m.group(1)
            if current in sections:
                raise ConfigError(f"duplicate section [{current}]", lineno, col)
            sections[current] = {}
            continue
        if stripped.startswith("["):
            raise ConfigError("malformed section header", lineno, col)
        m = _KEY.match(stripped)
        if not m:
            raise ConfigError("expected 'key = value'", lineno, col)
        if current is None:
            raise ConfigError("key outside of any section", lineno, col)
        key = m.group(1)
        expr_col = col + m.end()
        expr = stripped[m.end():]
        while _balance(expr) > 0 and i < len(lines):
            expr += "\n" + _strip_comment(lines[i])
            i += 1
        lead = len(expr) - len(expr.lstrip(" \t"))
        if not expr.strip():
            raise ConfigError(f"missing value for {key!r}", lineno, expr_col)
        node = parse_expression(expr[lead:], lineno, expr_col + lead)
        if key in sections[current]:
            raise ConfigError(f"duplicate key {key!r}", lineno, col)
        sections[current][key] = Entry(key, node, lineno, col)
    return sections


# --- evaluation -------------------------------------------------------------------


class Evaluator:
    """Evaluates expression trees; ``F`` is the field once known and
    ``labels`` maps basis names to labels for ``vec``."""

    def __init__(self, F=None, labels=None):
        self.F = F
        self.labels = labels or {}

    def err(self, node, msg):
        return ConfigError(msg, node.line, node.col)

    def scalar(self, v, node):
        if isinstance(v, (Fraction, CycNum)):
            return self.F(v) if self.F is not None else v
        raise self.err(node, "scalar expected")

    def __call__(self, node):
        k = node.kind
        if k == "num":
            return Fraction(node.value)
        if k in ("str", "bool"):
            return node.value
        if k == "list":
            return [self(a) for a in node.args]
        if k == "ident":
            raise self.err(node, f"unknown name {node.value!r}")
        if k == "neg":
            return self._scale(self(node.args[0]), Fraction(-1), node)
        if k == "pow":
            v = self(node.args[0])
            if isinstance(v, dict):
                raise self.err(node, "powers of vectors are not supported")
            if isinstance(v, Fraction) and v == 0 and node.value < 0:
                raise self.err(node, "division by zero")
            return self.scalar(v, node) ** node.value
        if k in ("add", "sub"):
            a, b = self(node.args[0]), self(node.args[1])
            if k == "sub":
                b = self._scale(b, Fraction(-1), node)
            return self._add(a, b, node)
        if k == "mul":
            a, b = self(node.args[0]), self(node.args[1])
            if isinstance(a, dict) and isinstance(b, dict):
                raise self.err(node, "cannot multiply two vectors")
            if isinstance(a, dict):
                return self._scale(a, b, node)
            return self._scale(b, a, node)
        if k == "div":
            a, b = self(node.args[0]), self(node.args[1])
            if isinstance(b, dict):
                raise self.err(node, "cannot divide by a vector")
            if not b:
                raise self.err(node, "division by zero")
            inv = 1 / b if isinstance(b, Fraction) else b.inverse()
            return self._scale(a, inv, node)
        if k == "call":
            return self._call(node)
        raise self.err(node, f"cannot evaluate {k}")

    def _add(self, a, b, node):
        if isinstance(a, dict) != isinstance(b, dict):
            raise self.err(node, "cannot add a scalar and a vector")
        if isinstance(a, dict):
            out = dict(a)
            for key, v in b.items():
                w = out.get(key)
                out[key] = v if w is None else w + v
            return {key: v for key, v in out.items() if v}
        if isinstance(a, list) or isinstance(b, list) or isinstance(a, str) or isinstance(b, str):
            raise self.err(node, "arithmetic on a non-numeric value")
        return self._num(a, node) + self._num(b, node)

    def _num(self, v, node):
        if isinstance(v, Fraction):
            return self.F(v) if self.F is not None else v
        if isinstance(v, CycNum):
            return v
        raise self.err(node, "scalar expected")

    def _scale(self, v, c, node):
        c = self._num(c, node)
        if isinstance(v, dict):
            return {key: x * c for key, x in v.items() if x * c}
        return self._num(v, node) * c

    def _call(self, node):
        name, args = node.value, node.args
        if name == "rat":
            self._arity(node, 1)
            v = Evaluator()(args[0])
            if not isinstance(v, Fraction):
                raise self.err(node, "rat() takes a rational number")
            return v
        if name == "zeta":
            self._arity(node, 1)
            k = Evaluator()(args[0])
            if not isinstance(k, Fraction) or k.denominator != 1:
                raise self.err(node, "zeta() takes an integer")
            if self.F is None:
                raise self.err(node, "zeta() needs a field")
            return self.F.zeta(int(k))
        if name == "vec":
            self._arity(node, 1)
            lab = self(args[0])
            if not isinstance(lab, str):
                raise self.err(node, "vec() takes a basis name in quotes")
            if lab not in self.labels:
                raise self.err(node, f"unknown basis element {lab!r}")
            return {(self.labels[lab],): self.F.one}
        if name in ("cyclic", "table", "exponents"):
            self._arity(node, 1)
            return (name, self._int_list(args[0], nested=(name == "table")))
        if name == "symmetric":
            self._arity(node, 1)
            return ("symmetric", self._int(args[0]))
        if name == "word":
            self._arity(node, 1)
            w = self(args[0])
            if not isinstance(w, str):
                raise self.err(node, "word() takes a string")
            return ("word", w)
        raise self.err(node, f"unknown function {name!r}")

    def _arity(self, node, n):
        if len(node.args) != n:
            raise self.err(node, f"{node.value}() takes {n} argument(s)")

    def _int(self, node):
        v = Evaluator()(node)
        if not isinstance(v, Fraction) or v.denominator != 1:
            raise self.err(node, "integer expected")
        return int(v)

    def _int_list(self, node, nested=False):
        if node.kind != "list":
            raise self.err(node, "list expected")
        if nested:
            return [self._int_list(a) for a in node.args]
        return [self._int(a) for a in node.args]


def _need(section, key, where):
    if key not in section:
        raise ConfigError(f"missing key {key!r} in [{where}]")
    return section[key]


def _group(entry):
    v = Evaluator()(entry.node)
    if not isinstance(v, tuple):
        raise ConfigError("group must be cyclic([...]), table([[...]]) or symmetric(n)", entry.line, entry.col)
    kind, data = v
    try:
        if kind == "cyclic":
            return FiniteGroup.cyclic_product(data)
        if kind == "table":
            return FiniteGroup(data)
        if kind == "symmetric":
            return symmetric_group(data)
    except ValueError as exc:
        raise ConfigError(str(exc), entry.line, entry.col) from None
    raise ConfigError(f"{kind}() does not describe a group", entry.line, entry.col)


def _exponent_lcm(G):
    m = 2
    for g in G:
        m = math.lcm(m, G.element_order(g))
    return m


@dataclass
class WorkbenchConfig:
    sections: dict

    @classmethod
    def from_text(cls, text):
        return cls(parse_config(text))

    @classmethod
    def from_file(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def section(self, name):
        return self.sections.get(name)

    def datum(self):
        """The HDDatum described by [datum]."""
        from .hd import HDDatum
        sec = self.sections.get("datum")
        if sec is None:
            raise ConfigError("missing section [datum]")
        G = _group(_need(sec, "group", "datum"))
        if "field" in sec:
            e = sec["field"]
            m = Evaluator()._int(e.node)
            if m < 1:
                raise ConfigError("field must be a positive integer", e.line, e.col)
        else:
            m = _exponent_lcm(G)
        F = make_field(m)
        ev = Evaluator(F)
        e = _need(sec, "character", "datum")
        v = ev(e.node)
        if not (isinstance(v, tuple) and v[0] == "exponents"):
            raise ConfigError("character must be exponents([...])", e.line, e.col)
        try:
            if G.factor_orders is not None and len(v[1]) == len(G.factor_orders):
                chi = Character.from_generators(G, F, v[1])
            else:
                chi = Character(G, F, v[1])
        except ValueError as exc:
            raise ConfigError(str(exc), e.line, e.col) from None
        e = _need(sec, "z", "datum")
        w = ev(e.node)
        if not (isinstance(w, tuple) and w[0] == "word"):
            raise ConfigError('z must be word("...")', e.line, e.col)
        try:
            z = G.word(w[1])
        except (ValueError, KeyError) as exc:
            raise ConfigError(f"bad group word: {exc}", e.line, e.col) from None
        lam = ev.scalar(ev(_need(sec, "lambda", "datum").node), sec["lambda"].node)
        q = ev.scalar(ev(_need(sec, "q", "datum").node), sec["q"].node)
        return HDDatum(G, chi, z, lam, q)

    def comodule_source(self):
        sec = self.sections.get("comodule_algebra") or {}
        if "source" not in sec:
            return "regular"
        e = sec["source"]
        v = Evaluator()(e.node)
        if v not in ("regular", "group_algebra", "explicit"):
            raise ConfigError('source must be "regular", "group_algebra" or "explicit"', e.line, e.col)
        return v

    def comodule_algebra_data(self, H):
        """ComoduleAlgebraData from an explicit [comodule_algebra] block.

        Matrix rows are the coordinates of the image of each basis element;
        products that are not listed are zero.
        """
        from .algebra import FDAlgebra
        from .comodalg import ComoduleAlgebraData
        from .tensor import LinMap
        sec = self.sections["comodule_algebra"]
        e = _need(sec, "basis", "comodule_algebra")
        basis = Evaluator()(e.node)
        if not (isinstance(basis, list) and basis and all(isinstance(b, str) for b in basis)):
            raise ConfigError("basis must be a non-empty list of names", e.line, e.col)
        bad = next((b for b in basis if not re.fullmatch(r"[A-Za-z_0-9*^]+", b)), None)
        if bad is not None or len(set(basis)) != len(basis):
            raise ConfigError(f"basis names must be distinct and use letters, digits, '*', '^' ({bad!r})",
                              e.line, e.col)
        F = H.field
        ev = Evaluator(F, {b: b for b in basis})
        unit = self._vector(ev, _need(sec, "unit", "comodule_algebra"))
        names = {H.group.name(g): g for g in H.group}
        n_auts = len(H.auts)
        degree, table = {}, {}
        matrices = {}
        for key, e in sec.items():
            head, _, rest = key.partition(".")
            if key in ("source", "basis", "unit"):
                continue
            if key in ("alpha", "ladder"):
                matrices[key] = self._matrix(ev, e, len(basis))
            elif head == "degree" and rest in basis:
                v = ev(e.node)
                ok = (isinstance(v, list) and len(v) == 2 and isinstance(v[0], tuple) and v[0][0] == "word"
                      and isinstance(v[1], Fraction) and v[1].denominator == 1 and 0 <= v[1] < n_auts)
                if not ok:
                    raise ConfigError(f'degree must be [word("..."), k] with 0 <= k < {n_auts}', e.line, e.col)
                if v[0][1] not in names:
                    raise ConfigError(f"unknown group element {v[0][1]!r}", e.line, e.col)
                degree[rest] = (names[v[0][1]], int(v[1]))
            elif head == "mul" and rest.count(".") == 1 and all(p in basis for p in rest.split(".")):
                v = ev(e.node)
                if isinstance(v, (Fraction, CycNum)) and not v:
                    v = {}
                if not isinstance(v, dict):
                    raise ConfigError("product must be a vector or 0", e.line, e.col)
                table[tuple(rest.split("."))] = v
            else:
                raise ConfigError(f"unknown key {key!r} in [comodule_algebra]", e.line, e.col)
        missing = [b for b in basis if b not in degree]
        if missing:
            raise ConfigError(f"missing degree for {missing[0]!r} in [comodule_algebra]")
        for name in ("alpha", "ladder"):
            if name not in matrices:
                raise ConfigError(f"missing key {name!r} in [comodule_algebra]")

        def linmap(rows, name):
            images = {b: {(c,): v for c, v in zip(basis, row) if v} for b, row in zip(basis, rows)}
            return LinMap(lambda key: images[key[0]], 1, 1, name)

        mul = LinMap(lambda key: table.get(key, {}), 2, 1, "mu")
        alg = FDAlgebra(F, list(basis), mul, unit, "B")
        return ComoduleAlgebraData(alg, degree, linmap(matrices["alpha"], "alpha"),
                                   linmap(matrices["ladder"], "ladder"), str)

    @staticmethod
    def _matrix(ev, e, size):
        rows = ev(e.node)
        if not (isinstance(rows, list) and len(rows) == size
                and all(isinstance(r, list) and len(r) == size for r in rows)
                and all(isinstance(v, (Fraction, CycNum)) for r in rows for v in r)):
            raise ConfigError(f"expected a {size}x{size} matrix of scalars", e.line, e.col)
        return [[ev.F(v) if isinstance(v, Fraction) else v for v in r] for r in rows]

    def cleft_datum(self, H, B_labels):
        """CleftDatum from [cleft]; ``B_labels`` maps basis names of B to labels."""
        from .cleft import CleftDatum
        sec = self.sections.get("cleft")
        if sec is None:
            raise ConfigError("missing section [cleft]")
        if "datum" in sec:
            e = sec["datum"]
            if Evaluator()(e.node) != "canonical":
                raise ConfigError('datum must be "canonical"', e.line, e.col)
            return CleftDatum(H.elem(H.group.identity, 1), {g: H.g(g) for g in H.group})
        ev = Evaluator(H.field, B_labels)
        bx = self._vector(ev, _need(sec, "b_x", "cleft"))
        bg = {}
        names = {H.group.name(g): g for g in H.group}
        for key, e in sec.items():
            if key.startswith("b_g."):
                gname = key[4:]
                if gname not in names:
                    raise ConfigError(f"unknown group element {gname!r}", e.line, e.col)
                bg[names[gname]] = self._vector(ev, e)
            elif key != "b_x":
                raise ConfigError(f"unknown key {key!r} in [cleft]", e.line, e.col)
        return CleftDatum(bx, bg)

    @staticmethod
    def _vector(ev, e):
        v = ev(e.node)
        if not isinstance(v, dict):
            raise ConfigError("vector expected", e.line, e.col)
        return v
