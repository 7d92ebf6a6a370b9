#!/usr/bin/python
# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 by the ARFinsler developers
# Licensed under LGPLv3, see file LICENSE in this source tree.
#
"""
SpecFile.py - metric definition files

A file is a list of ``key = value`` statements separated by newlines or
``;``. ``#`` starts a comment. Values are expressions over x1..xn, y1..yn
with rational literals and + - * / ^ (integer exponents), bracketed lists
(vectors, matrices), or bare words (family, weyl, base, name).

    family = mth_root
    m = 3
    A = (1 + x1^2)*y1*y2*y3
    sigma = 1 + x1^2
    point = [[1/2, 1, 1], [1, 2, 3]]

Parsing is done in two passes: the syntax is checked with line and column
positions, then the dimension is settled and expressions are evaluated in
Q(x1..xn, y1..yn).
"""
# --- standard Python modules ---
import re
import typing as t
from dataclasses import dataclass, field
from fractions import Fraction

# --- this application's modules ---
from ..algebra.AlgExt import KernelDesc
from ..algebra.RatField import RatFn, RationalFunctionField, rational_function_field
from ..geometry.Pipeline import VolumeForm, weyl_variant
from ..metrics import Families
from ..metrics.Families import FinslerMetric, OneFormData, RiemannData, RootData
from .ARExceptions import ArityError, ParseError, UnknownKey

# ------------------------------------------------------------------------------

WORD_KEYS = ("family", "name", "weyl", "base")
INT_KEYS = ("n", "k", "m", "precision", "theta_m")
RATIONAL_KEYS = ("a", "c")
EXPRESSION_KEYS = ("A", "sigma", "F2", "theta_A")
VECTOR_KEYS = ("b",)
MATRIX_KEYS = ("alpha",)
KEY_ORDER = (
    "family",
    "name",
    "n",
    "alpha",
    "b",
    "a",
    "c",
    "k",
    "m",
    "base",
    "A",
    "theta_m",
    "theta_A",
    "F2",
    "sigma",
    "weyl",
    "precision",
)
_MU = re.compile(r"^mu_([1-9]+)$")

SPEC_FAMILIES = Families.FAMILIES + ("shen_circles",)

#: keys a family accepts besides the common ones
FAMILY_KEYS = {
    "riemannian": ({"alpha"}, set()),
    "randers": ({"alpha", "b"}, set()),
    "shen_circles": ({"A"}, set()),
    "kropina": ({"alpha", "b"}, set()),
    "gen_kropina": ({"alpha", "b", "k"}, set()),
    "poly_ab": ({"alpha", "b", "a", "c", "k", "m"}, set()),
    "mth_root": ({"m"}, {"A", "mu"}),
    "extended_mth_root": ({"m", "mu"}, set()),
    "kropina_change": ({"base", "m", "b", "k"}, {"A", "mu"}),
    "raw": ({"F2"}, {"theta_m", "theta_A"}),
}
COMMON_KEYS = {"family", "name", "n", "sigma", "weyl", "precision", "point"}


@dataclass
class Token:
    type: str
    value: t.Any
    line: int
    column: int


@dataclass
class Node:
    """
    Expression tree node; ``kind`` is one of num, var, word, neg, + - * / ^,
    list.
    """

    kind: str
    value: t.Any
    token: Token
    children: t.Tuple["Node", ...] = ()


@dataclass
class MetricSpecFile:
    """
    A parsed definition: dimension, family tag, evaluated parameters.

    ``params`` holds RatFn / Fraction / int / str values, vectors as tuples
    and matrices as tuples of tuples; extended m-th root coefficients are
    under ``mu`` keyed by sorted 0-based index tuples.
    """

    n: int
    family: str
    params: t.Dict[str, t.Any] = field(default_factory=dict)
    sigma: t.Optional[RatFn] = None
    points: t.List[t.Tuple[t.Tuple[Fraction, ...], t.Tuple[Fraction, ...]]] = field(default_factory=list)
    options: t.Dict[str, t.Any] = field(default_factory=dict)
    name: str = "metric"

    @property
    def rf(self) -> RationalFunctionField:
        return rational_function_field(self.n)

    def __eq__(self, other):
        if not isinstance(other, MetricSpecFile):
            return NotImplemented
        return print_spec(self) == print_spec(other)

    __hash__ = None

    def volume(self) -> VolumeForm:
        return VolumeForm(self.sigma if self.sigma is not None else self.rf.one).check(self.rf)

    def build_metric(self) -> FinslerMetric:
        return build_metric(self)


# tokenizer, one line at a time so columns are line based
_TOKEN = re.compile(
    r"""
    (?P<space>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<number>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>\*\*|[-+*/^()\[\],=;])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> t.List[Token]:
    tokens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        pos = 0
        while pos < len(line):
            match = _TOKEN.match(line, pos)
            if match is None:
                raise ParseError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
            kind = match.lastgroup
            if kind == "op":
                value = "^" if match.group() == "**" else match.group()
                tokens.append(Token(value, value, lineno, pos + 1))
            elif kind == "number":
                tokens.append(Token("number", int(match.group()), lineno, pos + 1))
            elif kind == "ident":
                tokens.append(Token("ident", match.group(), lineno, pos + 1))
            pos = match.end()
        tokens.append(Token("eol", None, lineno, len(line) + 1))
    return tokens


class _Parser(object):
    """
    Recursive descent over one token list:

        statement := ident "=" value
        value     := list | expr
        list      := "[" value ("," value)* "]"
        expr      := term (("+" | "-") term)*
        term      := factor (("*" | "/") factor)*
        factor    := "-" factor | atom ("^" ["-"] number)?
        atom      := number | ident | "(" expr ")"
    """

    def __init__(self, tokens: t.List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        last = self.tokens[-1] if self.tokens else Token("eol", None, 1, 1)
        return Token("eof", None, last.line, last.column)

    def pop(self) -> Token:
        token = self.peek()
        self.pos += 1
        return token

    def expect(self, kind: str, what: str) -> Token:
        token = self.pop()
        if token.type != kind:
            raise _unexpected(token, what)
        return token

    def statements(self) -> t.List[t.Tuple[Token, Node]]:
        out = []
        while self.peek().type != "eof":
            if self.peek().type in ("eol", ";"):
                self.pop()
                continue
            key = self.expect("ident", "a key")
            self.expect("=", "'='")
            value = self.value()
            end = self.peek()
            if end.type not in ("eol", ";", "eof"):
                raise _unexpected(end, "end of statement")
            out.append((key, value))
        return out

    def value(self) -> Node:
        if self.peek().type == "[":
            return self.list()
        return self.expr()

    def list(self) -> Node:
        start = self.expect("[", "'['")
        items = [self.value()]
        while self.peek().type == ",":
            self.pop()
            items.append(self.value())
        self.expect("]", "',' or ']'")
        return Node("list", None, start, tuple(items))

    def expr(self) -> Node:
        left = self.term()
        while self.peek().type in ("+", "-"):
            op = self.pop()
            left = Node(op.type, None, op, (left, self.term()))
        return left

    def term(self) -> Node:
        left = self.factor()
        while self.peek().type in ("*", "/"):
            op = self.pop()
            left = Node(op.type, None, op, (left, self.factor()))
        return left

    def factor(self) -> Node:
        if self.peek().type == "-":
            op = self.pop()
            return Node("neg", None, op, (self.factor(),))
        base = self.atom()
        if self.peek().type == "^":
            op = self.pop()
            sign = 1
            if self.peek().type == "-":
                self.pop()
                sign = -1
            exponent = self.expect("number", "an integer exponent")
            return Node("^", sign * exponent.value, op, (base,))
        return base

    def atom(self) -> Node:
        token = self.pop()
        if token.type == "number":
            return Node("num", Fraction(token.value), token)
        if token.type == "ident":
            if re.fullmatch(r"[xy][1-9][0-9]*", token.value):
                return Node("var", token.value, token)
            return Node("word", token.value, token)
        if token.type == "(":
            inner = self.expr()
            self.expect(")", "')'")
            return inner
        raise _unexpected(token, "a number, a variable or '('")


def _unexpected(token: Token, what: str) -> ParseError:
    found = {"eol": "end of line", "eof": "end of input"}.get(token.type, repr(token.value))
    return ParseError(f"expected {what}, found {found}", token.line, token.column)


def _max_index(node: Node) -> int:
    best = 0
    if node.kind == "var":
        best = int(node.value[1:])
    for child in node.children:
        best = max(best, _max_index(child))
    return best


def _evaluate(node: Node, rf: RationalFunctionField) -> RatFn:
    kind = node.kind
    if kind == "num":
        return rf.const(node.value)
    if kind == "var":
        if int(node.value[1:]) > rf.n:
            raise ParseError(
                f"{node.value} is not a variable in dimension {rf.n}", node.token.line, node.token.column
            )
        return rf.var(node.value)
    if kind == "word":
        raise ParseError(f"unknown symbol {node.value!r}", node.token.line, node.token.column)
    if kind == "list":
        raise ParseError("a list is not allowed here", node.token.line, node.token.column)
    if kind == "neg":
        return -_evaluate(node.children[0], rf)
    if kind == "^":
        base = _evaluate(node.children[0], rf)
        if node.value < 0:
            if not base:
                raise ParseError("zero to a negative power", node.token.line, node.token.column)
            return rf.inv(base) ** (-node.value)
        return base**node.value
    left = _evaluate(node.children[0], rf)
    right = _evaluate(node.children[1], rf)
    if kind == "+":
        return left + right
    if kind == "-":
        return left - right
    if kind == "*":
        return left * right
    if not right:
        raise ParseError("division by zero", node.token.line, node.token.column)
    return left / right


def _word(node: Node, key: str) -> str:
    if node.kind != "word":
        raise ParseError(f"{key} expects a name", node.token.line, node.token.column)
    return node.value


def _rational(node: Node, key: str, rf: RationalFunctionField) -> Fraction:
    value = _evaluate(node, rf)
    if not rf.is_constant(value):
        raise ParseError(f"{key} must be a rational number", node.token.line, node.token.column)
    return rf.constant_value(value)


def _integer(node: Node, key: str, rf: RationalFunctionField) -> int:
    value = _rational(node, key, rf)
    if value.denominator != 1:
        raise ParseError(f"{key} must be an integer", node.token.line, node.token.column)
    return int(value)


def _vector(node: Node, key: str, rf: RationalFunctionField) -> t.Tuple[RatFn, ...]:
    if node.kind != "list":
        raise ArityError(f"{key} must be a list (line {node.token.line}, column {node.token.column})")
    return tuple(_evaluate(item, rf) for item in node.children)


def _matrix(node: Node, key: str, rf: RationalFunctionField) -> t.Tuple[t.Tuple[RatFn, ...], ...]:
    if node.kind != "list" or any(row.kind != "list" for row in node.children):
        raise ArityError(f"{key} must be a list of rows (line {node.token.line})")
    rows = tuple(_vector(row, key, rf) for row in node.children)
    if len(rows) != rf.n or any(len(row) != rf.n for row in rows):
        raise ArityError(f"{key} must be a {rf.n}x{rf.n} matrix")
    return rows


def _point(node: Node, rf: RationalFunctionField):
    if node.kind != "list" or len(node.children) != 2:
        raise ArityError(f"point must be [[x...], [y...]] (line {node.token.line})")
    coords = []
    for part in node.children:
        if part.kind != "list" or len(part.children) != rf.n:
            raise ArityError(f"point coordinates must have {rf.n} entries (line {part.token.line})")
        coords.append(tuple(_rational(c, "point", rf) for c in part.children))
    return tuple(coords)


def _dimension(statements) -> int:
    """
    Explicit n, else the size of alpha or b, else the largest variable or
    mu index used.
    """
    by_key = {key.value: node for key, node in statements}
    if "n" in by_key:
        node = by_key["n"]
        if node.kind != "num" or node.value.denominator != 1 or node.value < 1:
            raise ParseError("n must be a positive integer", node.token.line, node.token.column)
        return int(node.value)
    if "alpha" in by_key and by_key["alpha"].kind == "list":
        return len(by_key["alpha"].children)
    if "b" in by_key and by_key["b"].kind == "list":
        return len(by_key["b"].children)
    best = 1
    for key, node in statements:
        best = max(best, _max_index(node))
        match = _MU.match(key.value)
        if match:
            best = max(best, max(int(d) for d in match.group(1)))
    return best


def parse_metric_file(text: str) -> MetricSpecFile:
    """
    Parse a metric definition; ParseError carries line and column.
    """
    statements = _Parser(tokenize(text)).statements()
    seen = {}
    family = None
    for key, node in statements:
        name = key.value
        group = "mu" if _MU.match(name) else name
        if group not in COMMON_KEYS and not any(
            group in required | optional for required, optional in FAMILY_KEYS.values()
        ):
            raise UnknownKey(f"unknown key {name!r}", key.line, key.column)
        if name in seen and name != "point":
            raise ParseError(f"key {name!r} given twice", key.line, key.column)
        seen[name] = node
        if name == "family":
            family = _word(node, "family")
            if family not in SPEC_FAMILIES:
                raise ParseError(f"unknown family {family!r}", node.token.line, node.token.column)
    if family is None:
        raise ParseError("missing key 'family'")
    required, optional = FAMILY_KEYS[family]
    for key, _ in statements:
        group = "mu" if _MU.match(key.value) else key.value
        if group not in COMMON_KEYS | required | optional:
            raise UnknownKey(f"key {key.value!r} is not used by family {family}", key.line, key.column)
    present = {"mu" if _MU.match(k) else k for k in seen}
    missing = sorted(required - present)
    if missing:
        raise ParseError(f"family {family} needs {', '.join(missing)}")
    if family in ("mth_root", "kropina_change") and not present & {"A", "mu"}:
        raise ParseError(f"family {family} needs A or mu_... coefficients")

    n = _dimension(statements)
    rf = rational_function_field(n)
    spec = MetricSpecFile(n=n, family=family)
    mu = {}
    for key, node in statements:
        name = key.value
        match = _MU.match(name)
        if match:
            idx = tuple(sorted(int(d) - 1 for d in match.group(1)))
            mu[idx] = _evaluate(node, rf)
        elif name == "family" or name == "n":
            continue
        elif name == "name":
            spec.name = _word(node, name)
        elif name == "weyl":
            try:
                spec.options["weyl"] = weyl_variant(_word(node, name))
            except ValueError as error:
                raise ParseError(str(error), node.token.line, node.token.column) from None
        elif name == "precision":
            spec.options["precision"] = _integer(node, name, rf)
        elif name == "point":
            spec.points.append(_point(node, rf))
        elif name == "sigma":
            spec.sigma = _evaluate(node, rf)
        elif name in WORD_KEYS:
            spec.params[name] = _word(node, name)
        elif name in INT_KEYS:
            spec.params[name] = _integer(node, name, rf)
        elif name in RATIONAL_KEYS:
            spec.params[name] = _rational(node, name, rf)
        elif name in MATRIX_KEYS:
            spec.params[name] = _matrix(node, name, rf)
        elif name in VECTOR_KEYS:
            vector = _vector(node, name, rf)
            if len(vector) != n:
                raise ArityError(f"{name} must have {n} components")
            spec.params[name] = vector
        elif name == "F2" and node.kind == "list":
            spec.params[name] = _vector(node, name, rf)
        else:
            spec.params[name] = _evaluate(node, rf)
    if mu:
        spec.params["mu"] = mu
    return spec


def parse_expression(text: str, rf: RationalFunctionField) -> RatFn:
    "A single expression in the variables of rf."
    parser = _Parser(tokenize(text))
    node = parser.expr()
    while parser.peek().type == "eol":
        parser.pop()
    if parser.peek().type != "eof":
        raise _unexpected(parser.peek(), "end of expression")
    return _evaluate(node, rf)


def _root(spec: MetricSpecFile, extended: bool) -> RootData:
    rf = spec.rf
    m = spec.params["m"]
    if "mu" in spec.params:
        return RootData.from_coefficients(rf, m, spec.params["mu"], extended=extended)
    if extended:
        return RootData(rf, m, RootData.from_form(rf, m, spec.params["A"]).A, ())
    return RootData.from_form(rf, m, spec.params["A"])


def build_metric(spec: MetricSpecFile) -> FinslerMetric:
    """
    Hand the parsed data to the family constructor.
    """
    rf = spec.rf
    p = spec.params
    family = spec.family
    name = spec.name
    points = spec.points
    if family == "shen_circles":
        return Families.shen_circles(rf, p["A"], points, name)
    if family == "raw":
        m = p.get("theta_m", 1)
        kernel = KernelDesc(rf, m, p.get("theta_A")) if m > 1 else KernelDesc.trivial(rf)
        F2 = p["F2"]
        F2 = kernel.element(list(F2)) if isinstance(F2, tuple) else kernel.lift(F2)
        return Families.make_raw(kernel, F2, name)
    if family in ("mth_root", "extended_mth_root"):
        root = _root(spec, family == "extended_mth_root")
        if family == "extended_mth_root":
            return Families.make_extended_mth_root(root, name)
        return Families.make_mth_root(root, name)
    if family == "kropina_change":
        base_family = p["base"]
        if base_family not in ("mth_root", "extended_mth_root"):
            raise ParseError(f"base must be mth_root or extended_mth_root, got {base_family}")
        root = _root(spec, base_family == "extended_mth_root")
        if base_family == "extended_mth_root":
            base = Families.make_extended_mth_root(root, f"{name}-base")
        else:
            base = Families.make_mth_root(root, f"{name}-base")
        return Families.make_kropina_change(base, OneFormData(rf, p["b"]), p["k"], name)
    rd = RiemannData(rf, p["alpha"])
    if family == "riemannian":
        return Families.make_riemannian(rd, name)
    b = OneFormData(rf, p["b"])
    if family == "randers":
        return Families.make_randers(rd, b, points, name)
    if family == "kropina":
        return Families.make_kropina(rd, b, name)
    if family == "gen_kropina":
        return Families.make_gen_kropina(rd, b, p["k"], name)
    return Families.make_poly_ab(rd, b, p["a"], p["c"], p["k"], p["m"], points, name)


# printing
def _fraction_text(value: Fraction) -> str:
    return str(value)


def _value_text(value, rf: RationalFunctionField) -> str:
    if isinstance(value, tuple):
        return "[" + ", ".join(_value_text(v, rf) for v in value) + "]"
    if isinstance(value, (int, Fraction)):
        return _fraction_text(Fraction(value))
    if isinstance(value, str):
        return value
    return rf.render(value)


def print_spec(spec: MetricSpecFile) -> str:
    """
    Canonical text of a spec; parse_metric_file(print_spec(s)) == s.
    """
    rf = spec.rf
    lines = [f"family = {spec.family}", f"name = {spec.name}", f"n = {spec.n}"]
    for key in KEY_ORDER:
        if key in ("family", "name", "n"):
            continue
        if key == "sigma":
            if spec.sigma is not None:
                lines.append(f"sigma = {rf.render(spec.sigma)}")
            continue
        if key in ("weyl", "precision"):
            if key in spec.options:
                lines.append(f"{key} = {spec.options[key]}")
            continue
        if key in spec.params:
            lines.append(f"{key} = {_value_text(spec.params[key], rf)}")
    for idx, value in sorted(spec.params.get("mu", {}).items()):
        digits = "".join(str(i + 1) for i in idx)
        lines.append(f"mu_{digits} = {rf.render(value)}")
    for xs, ys in spec.points:
        lines.append(f"point = [{_value_text(xs, rf)}, {_value_text(ys, rf)}]")
    return "\n".join(lines) + "\n"
