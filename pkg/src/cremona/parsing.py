"""Parser and evaluator for the map-expression language of the CLI.

Grammar (composition binds looser than powers)::

    expr    := term { "." term }          left factor applied last
    term    := atom [ "^" int ]
    atom    := NAME | NAME "(" args ")" | literal | "(" expr ")"
    literal := "[" poly { ":" poly } "]"            projective map
             | "(" "[" ... "]" { "," "[" ... "]" } ")"   multi-projective map
             | "(" ratfun { "," ratfun } ")"        affine map
             | "mat" "[" rows "]" | "mono" "[" rows "]"  matrix literals

Polynomial literals know the variables x0..x9 and y0..y2, the symbolic
constants a..d and lambda1..lambda6, rational coefficients, and the
operators ``+ - * / ^``; ``*`` may be omitted between a coefficient and a
monomial.  The ambient space of a literal is inferred from the variables
it uses.

Negative powers are resolved through constructive inverses only (words,
matrices, named involutions and named inverse pairs); anything else is a
type error, not an elimination computation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import codim1 as c1
from .conics import (
    adjugate_map,
    chi,
    phi,
    phi_dual,
    projection_a,
    projection_a_inverse,
    psi,
    rho,
    rho_inverse,
    secant,
    veronese,
)
from .maps import (
    AffineMap,
    MultiProjectiveMap,
    ProjectiveMap,
    diagonal_map,
    mat,
    mat_det,
    mat_inv,
    mat_mul,
    mat_pow,
    monomial_map,
)
from .rings import Polynomial, RationalFunction, Ring, affine_ring, proj_ring, ring
from .volforms import omega_form
from .words import (
    Cr2Word,
    G0_MATRIX,
    H_MATRIX,
    SIGMA,
    TAU1_MATRIX,
    TAU2_MATRIX,
    f_word,
    linear_word,
    s_word,
)


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


class TypeMismatch(TypeError):
    pass


# -- tokens -------------------------------------------------------------------


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[\[\]():,;.^+\-*/]))")


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def tokenize(src: str):
    out = []
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if not m or m.end() == i and not src[i:].strip():
            break
        if not m:
            raise ParseError(f"unexpected character {src[i]!r}", i)
        if m.lastgroup is None:
            break
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        i = m.end()
    rest = src[i:].strip()
    if rest:
        raise ParseError(f"unexpected character {rest[0]!r}", i)
    out.append(Token("end", "", len(src)))
    return out


# -- evaluated values -----------------------------------------------------------


@dataclass
class Value:
    """A typed run-time value with an optional constructive inverse."""

    kind: str  # word | proj | multi | affine | matrix | scalar | form
    payload: object
    inverse: Optional[Callable] = None

    def space(self) -> str:
        if self.kind == "word":
            return "Cr2 word"
        if self.kind == "proj":
            p = self.payload
            return f"P^{p.source_dim} -> P^{p.target_dim}"
        if self.kind == "multi":
            p = self.payload
            src = " x ".join(f"P^{n - 1}" for n in p.source_blocks)
            tgt = " x ".join(f"P^{n - 1}" for n in p.target_blocks)
            return f"{src} -> {tgt}"
        if self.kind == "affine":
            p = self.payload
            return f"A^{p.arity} -> A^{len(p.components)}"
        if self.kind == "matrix":
            return f"{len(self.payload)}x{len(self.payload)} matrix"
        return self.kind

    def render(self) -> str:
        if self.kind == "word":
            return self.payload.to_map().render()
        if self.kind == "matrix":
            return "mat[" + ", ".join(
                "[" + ", ".join(str(v) for v in row) + "]"
                for row in self.payload) + "]"
        if self.kind == "scalar":
            return str(self.payload)
        return self.payload.render()


# -- variable universe for literals ------------------------------------------------


_XVARS = tuple(f"x{i}" for i in range(10))
_YVARS = ("y0", "y1", "y2")
_CONSTS = ("a", "b", "c", "d") + tuple(f"lambda{i}" for i in range(1, 7))


def _literal_ring(names_used):
    """Infer the ambient ring of a literal from the variables it mentions."""
    xs = sorted((n for n in names_used if n in _XVARS), key=lambda s: int(s[1:]))
    ys = sorted(n for n in names_used if n in _YVARS)
    consts = tuple(sorted(n for n in names_used if n in _CONSTS))
    if ys and xs:
        return ring("x0", "x1", "x2", "y0", "y1", "y2", consts=consts), True
    if ys:
        return ring("y0", "y1", "y2", consts=consts), False
    top = max((int(n[1:]) for n in xs), default=1)
    return proj_ring(max(top, 1), consts=consts), False


# -- parser ---------------------------------------------------------------------


class Parser:
    def __init__(self, src: str, names: dict, functions: dict):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0
        self.names = names
        self.functions = functions

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        t = self.next()
        if t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text!r}", t.pos)
        return t

    # expression level ------------------------------------------------------

    def parse(self) -> Value:
        v = self.parse_expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"trailing input {t.text!r}", t.pos)
        return v

    def parse_expr(self) -> Value:
        factors = [self.parse_term()]
        while self.peek().text == ".":
            self.next()
            factors.append(self.parse_term())
        out = factors[0]
        for f in factors[1:]:
            out = _compose(out, f)
        return out

    def parse_term(self) -> Value:
        v = self.parse_atom()
        if self.peek().text == "^":
            self.next()
            sign = 1
            if self.peek().text == "-":
                self.next()
                sign = -1
            t = self.next()
            if t.kind != "int":
                raise ParseError("expected an integer exponent", t.pos)
            v = _power(v, sign * int(t.text))
        return v

    def parse_atom(self) -> Value:
        t = self.peek()
        if t.text == "[":
            return self.parse_projective_literal()
        if t.text == "(":
            return self.parse_paren()
        if t.kind == "name":
            return self.parse_name()
        raise ParseError(f"unexpected token {t.text!r}", t.pos)

    def parse_name(self) -> Value:
        t = self.next()
        name = t.text
        if name in ("mat", "mono") and self.peek().text == "[":
            return self.parse_matrix_literal(name)
        if self.peek().text == "(":
            if name not in self.functions:
                raise ParseError(f"unknown function {name!r}", t.pos)
            self.next()
            args = self.parse_args()
            self.expect(")")
            return self.functions[name](args, t.pos)
        if name in self.names:
            return self.names[name]()
        if name in _CONSTS:
            r = ring(consts=(name,))
            return Value("scalar", r.var_by_name(name))
        raise ParseError(f"unknown name {name!r}", t.pos)

    def parse_args(self) -> list:
        groups = [[]]
        if self.peek().text == ")":
            return groups
        while True:
            groups[-1].append(self.parse_arg())
            t = self.peek()
            if t.text == ",":
                self.next()
                continue
            if t.text == ";":
                self.next()
                groups.append([])
                continue
            return groups

    def parse_arg(self) -> Value:
        """One argument: a scalar expression if it parses as one, else a map."""
        mark = self.i
        try:
            node = self.parse_scalar_expr()
            if self.peek().text in (",", ";", ")"):
                used = _names_in(node, set())
                if used - set(_CONSTS):
                    raise ParseError("not a scalar", self.peek().pos)
                rf = _eval_scalar(node, ring(consts=tuple(sorted(used))))
                if not rf.is_polynomial:
                    raise ParseError("argument must be polynomial in the constants",
                                     self.peek().pos)
                p = rf.num
                return Value("scalar", p.as_scalar() if p.is_constant else p)
        except (ParseError, TypeMismatch):
            pass
        self.i = mark
        return self.parse_expr()

    # literals -----------------------------------------------------------------

    def parse_paren(self) -> Value:
        open_tok = self.expect("(")
        if self.peek().text == "[":
            blocks = [self.parse_component_list()]
            while self.peek().text == ",":
                self.next()
                blocks.append(self.parse_component_list())
            self.expect(")")
            return _build_multi(blocks, open_tok.pos)
        mark = self.i
        try:
            v = self.parse_expr()
            if self.peek().text == ")":
                self.next()
                return v
        except (ParseError, TypeMismatch):
            pass
        self.i = mark
        entries = [self.parse_scalar_expr()]
        while self.peek().text == ",":
            self.next()
            entries.append(self.parse_scalar_expr())
        self.expect(")")
        return _build_affine(entries, open_tok.pos)

    def parse_component_list(self) -> list:
        self.expect("[")
        comps = [self.parse_scalar_expr()]
        while self.peek().text == ":":
            self.next()
            comps.append(self.parse_scalar_expr())
        self.expect("]")
        return comps

    def parse_projective_literal(self) -> Value:
        pos = self.peek().pos
        comps = self.parse_component_list()
        return _build_projective(comps, pos)

    def parse_matrix_literal(self, kind: str) -> Value:
        self.expect("[")
        rows = []
        while True:
            self.expect("[")
            row = [self.parse_scalar_expr()]
            while self.peek().text == ",":
                self.next()
                row.append(self.parse_scalar_expr())
            self.expect("]")
            rows.append(row)
            if self.peek().text == ",":
                self.next()
                continue
            break
        self.expect("]")
        return _build_matrix(kind, rows, self.peek().pos)

    # scalar / polynomial expressions --------------------------------------------

    def parse_scalar_expr(self):
        node = self.parse_scalar_termchain()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self.parse_scalar_termchain()
            node = ("+" if op == "+" else "-", node, rhs)
        return node

    def parse_scalar_termchain(self):
        sign = 1
        while self.peek().text in ("+", "-"):
            if self.next().text == "-":
                sign = -sign
        node = self.parse_scalar_factor()
        while True:
            t = self.peek()
            if t.text in ("*", "/"):
                self.next()
                rhs = self.parse_scalar_factor()
                node = (t.text, node, rhs)
            elif t.kind in ("int", "name") and t.text not in ("mat", "mono"):
                # implicit multiplication, e.g. "2x3"
                rhs = self.parse_scalar_factor()
                node = ("*", node, rhs)
            else:
                break
        return node if sign == 1 else ("neg", node)

    def parse_scalar_factor(self):
        t = self.next()
        if t.kind == "int":
            node = ("num", Fraction(int(t.text)))
        elif t.kind == "name":
            if t.text not in _XVARS and t.text not in _YVARS and t.text not in _CONSTS:
                raise ParseError(f"unknown variable {t.text!r}", t.pos)
            node = ("var", t.text)
        elif t.text == "(":
            node = self.parse_scalar_expr()
            self.expect(")")
        else:
            raise ParseError(f"unexpected token {t.text!r} in a polynomial", t.pos)
        while self.peek().text == "^":
            self.next()
            e = self.next()
            if e.kind != "int":
                raise ParseError("expected an integer exponent", e.pos)
            node = ("pow", node, int(e.text))
        return node


# -- scalar AST evaluation ----------------------------------------------------------


def _names_in(node, acc: set):
    tag = node[0]
    if tag == "var":
        acc.add(node[1])
    elif tag in ("+", "-", "*", "/"):
        _names_in(node[1], acc)
        _names_in(node[2], acc)
    elif tag == "neg":
        _names_in(node[1], acc)
    elif tag == "pow":
        _names_in(node[1], acc)
    return acc


def _eval_scalar(node, ring_: Ring):
    tag = node[0]
    if tag == "num":
        return RationalFunction.from_poly(ring_.const(node[1]))
    if tag == "var":
        return RationalFunction.from_poly(ring_.var_by_name(node[1]))
    if tag == "neg":
        return -_eval_scalar(node[1], ring_)
    if tag == "pow":
        return _eval_scalar(node[1], ring_) ** node[2]
    a = _eval_scalar(node[1], ring_)
    b = _eval_scalar(node[2], ring_)
    if tag == "+":
        return a + b
    if tag == "-":
        return a - b
    if tag == "*":
        return a * b
    return a / b


def _as_poly(rf: RationalFunction, pos: int) -> Polynomial:
    if not rf.is_polynomial:
        raise ParseError("expected a polynomial, found a proper rational function", pos)
    return rf.num


def _build_projective(nodes, pos: int) -> Value:
    used = set()
    for n in nodes:
        _names_in(n, used)
    r, multi = _literal_ring(used)
    if multi:
        raise ParseError("mixed x/y variables need the ([...],[...]) form", pos)
    comps = [_as_poly(_eval_scalar(n, r), pos) for n in nodes]
    try:
        return Value("proj", ProjectiveMap(comps))
    except ValueError as e:
        raise ParseError(str(e), pos) from None


def _build_multi(blocks, pos: int) -> Value:
    used = set()
    for b in blocks:
        for n in b:
            _names_in(n, used)
    r, _ = _literal_ring(used | {"x0", "y0"})
    polys = [[_as_poly(_eval_scalar(n, r), pos) for n in b] for b in blocks]
    try:
        return Value("multi", MultiProjectiveMap((3, 3), polys))
    except ValueError as e:
        raise ParseError(str(e), pos) from None


def _build_affine(nodes, pos: int) -> Value:
    used = set()
    for n in nodes:
        _names_in(n, used)
    xs = [n for n in used if re.fullmatch(r"x[1-9]", n)]
    arity = max((int(n[1:]) for n in xs), default=len(nodes))
    consts = tuple(sorted(n for n in used if n in _CONSTS))
    r = affine_ring(max(arity, len(nodes)), consts=consts)
    comps = [_eval_scalar(n, r) for n in nodes]
    return Value("affine", AffineMap(comps))


def _build_matrix(kind: str, rows, pos: int) -> Value:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ParseError("matrix literal must be square", pos)
    ev = []
    for row in rows:
        out = []
        for node in row:
            rf = _eval_scalar(node, ring(consts=tuple(sorted(_names_in(node, set())
                                                             & set(_CONSTS)))))
            if kind == "mono":
                if not rf.is_polynomial or not rf.num.is_constant:
                    raise ParseError("monomial-matrix entries must be integers", pos)
                v = rf.num.as_scalar()
                if v.denominator != 1:
                    raise ParseError("monomial-matrix entries must be integers", pos)
                out.append(int(v))
            else:
                if rf.is_polynomial and rf.num.is_constant:
                    out.append(rf.num.as_scalar())
                elif rf.is_polynomial:
                    out.append(rf.num)
                else:
                    raise ParseError("matrix entries must be polynomial", pos)
        ev.append(tuple(out))
    m = tuple(ev)
    if kind == "mono":
        am = monomial_map(m)
        inv = None
        if mat_det(m) in (1, -1):
            inv = lambda: Value("affine", monomial_map(mat_inv(m)))
        return Value("affine", am, inv)
    d = mat_det(m)
    if (isinstance(d, Polynomial) and d.is_zero) or \
            (not isinstance(d, Polynomial) and d == 0):
        raise ParseError("singular matrix literal", pos)
    return Value("matrix", m, lambda: Value("matrix", mat_inv(m)))


# -- composition and powers -----------------------------------------------------------


def _to_mapvalue(v: Value) -> Value:
    if v.kind == "word":
        w = v.payload
        return Value("proj", w.to_map(), lambda: Value("proj", w.inverse().to_map()))
    if v.kind == "matrix":
        m = v.payload
        return Value("proj", _matrix_map(m), lambda: Value("proj", _matrix_map(mat_inv(m))))
    return v


def _matrix_map(m):
    from .maps import from_matrix
    return from_matrix(m)


def _compose(a: Value, b: Value) -> Value:
    if a.kind == "word" and b.kind == "word":
        aw, bw = a.payload, b.payload
        return Value("word", aw * bw)
    if a.kind == "matrix" and b.kind == "matrix":
        am, bm = a.payload, b.payload
        return Value("matrix", mat_mul(am, bm))
    a = _to_mapvalue(a)
    b = _to_mapvalue(b)
    if a.kind == "scalar" or b.kind == "scalar":
        raise TypeMismatch("scalars do not compose")
    if a.kind == "form" or b.kind == "form":
        raise TypeMismatch("forms are pulled back by the volume suite, not composed")
    try:
        if a.kind == "affine" and b.kind == "affine":
            return Value("affine", a.payload.after(b.payload))
        if a.kind == "proj" and b.kind == "proj":
            return Value("proj", a.payload.after(b.payload))
        pa = a.payload if a.kind == "multi" else MultiProjectiveMap.from_projective(a.payload)
        pb = b.payload if b.kind == "multi" else MultiProjectiveMap.from_projective(b.payload)
        return Value("multi", pa.after(pb))
    except Exception as e:
        raise TypeMismatch(
            f"cannot compose {a.space()} after {b.space()}: {e}") from None


def _power(v: Value, k: int) -> Value:
    if v.kind == "word":
        return Value("word", v.payload ** k)
    if v.kind == "matrix":
        return Value("matrix", mat_pow(v.payload, k))
    if v.kind == "scalar":
        return Value("scalar", v.payload ** k)
    if k < 0:
        if v.inverse is None:
            raise TypeMismatch(
                f"no constructive inverse for this {v.space()} map")
        return _power(v.inverse(), -k)
    try:
        return Value(v.kind, v.payload ** k, v.inverse if k else None)
    except ValueError as e:
        raise TypeMismatch(str(e)) from None


# -- the name registry -----------------------------------------------------------------


def _scalar_args(groups, pos, n=None):
    flat = [v for g in groups for v in g]
    out = []
    for v in flat:
        if v.kind != "scalar":
            raise ParseError("expected scalar arguments", pos)
        out.append(v.payload)
    if n is not None and len(out) != n:
        raise ParseError(f"expected {n} arguments", pos)
    return out


def _word_arg(groups, pos) -> Cr2Word:
    flat = [v for g in groups for v in g]
    if len(flat) != 1 or flat[0].kind != "word":
        raise ParseError("expected one word argument", pos)
    return flat[0].payload


def _consts_of_word(w: Cr2Word) -> tuple:
    names = set()
    for l in w.letters:
        if l.matrix is None:
            continue
        for row in l.matrix:
            for v in row:
                if isinstance(v, Polynomial):
                    names.update(v.ring.names)
    return tuple(sorted(names))


def make_default_names() -> dict:
    def wordval(wfn):
        return lambda: Value("word", wfn())

    return {
        "sigma": wordval(lambda: SIGMA),
        "h": wordval(lambda: linear_word(H_MATRIX)),
        "g0": wordval(lambda: linear_word(G0_MATRIX)),
        "tau1": wordval(lambda: linear_word(TAU1_MATRIX)),
        "tau2": wordval(lambda: linear_word(TAU2_MATRIX)),
        "fword": wordval(f_word),
        "sword": wordval(s_word),
        "ad": lambda: Value("proj", adjugate_map(),
                            lambda: Value("proj", adjugate_map())),
        "veronese": lambda: Value("proj", veronese()),
        "secant": lambda: Value("multi", secant()),
        "A": lambda: Value("multi", projection_a(),
                           lambda: Value("multi", projection_a_inverse())),
        "Ainv": lambda: Value("multi", projection_a_inverse(),
                              lambda: Value("multi", projection_a())),
        "rho": lambda: Value("multi", rho(),
                             lambda: Value("multi", rho_inverse())),
        "rhoinv": lambda: Value("multi", rho_inverse(),
                                lambda: Value("multi", rho())),
        "omega": lambda: Value("form", omega_form()),
    }


def make_default_functions() -> dict:
    def f_phi(groups, pos):
        w = _word_arg(groups, pos)
        cs = _consts_of_word(w)
        return Value("proj", phi(w, cs),
                     lambda: Value("proj", phi(w.inverse(), cs)))

    def f_phi_dual(groups, pos):
        w = _word_arg(groups, pos)
        cs = _consts_of_word(w)
        return Value("proj", phi_dual(w, cs),
                     lambda: Value("proj", phi_dual(w.inverse(), cs)))

    def f_psi(i):
        def g(groups, pos):
            w = _word_arg(groups, pos)
            cs = _consts_of_word(w)
            return Value("multi", psi(i, w, cs),
                         lambda: Value("multi", psi(i, w.inverse(), cs)))
        return g

    def f_chi(i):
        def g(groups, pos):
            w = _word_arg(groups, pos)
            cs = _consts_of_word(w)
            return Value("proj", chi(i, w, cs),
                         lambda: Value("proj", chi(i, w.inverse(), cs)))
        return g

    def f_diag(groups, pos):
        cs = _scalar_args(groups, pos)
        if not cs:
            raise ParseError("diag needs at least one scale", pos)
        names = set()
        for v in cs:
            if isinstance(v, Polynomial):
                names.update(v.ring.names)
        r = proj_ring(len(cs) - 1, consts=tuple(sorted(names)))
        return Value("proj", diagonal_map(cs, r))

    def f_psil(groups, pos):
        flat = [v for g in groups for v in g]
        if len(flat) != 2 or flat[0].kind != "scalar" or flat[1].kind != "affine":
            raise ParseError("usage: psil(l, <affine map>)", pos)
        l = flat[0].payload
        if isinstance(l, Polynomial) or Fraction(l).denominator != 1:
            raise ParseError("the twist exponent must be an integer", pos)
        return Value("affine", c1.psi_l(int(l), flat[1].payload))

    def f_psib(groups, pos):
        flat = [v for g in groups for v in g]
        if len(flat) != 1 or flat[0].kind != "affine":
            raise ParseError("usage: psib(<affine self-map of A^2>)", pos)
        return Value("affine", c1.psi_b(flat[0].payload))

    def f_crossratio(groups, pos):
        if len(groups) != 2 or len(groups[0]) != 4 or len(groups[1]) != 4:
            raise ParseError("usage: crossratio(p0,p1,p2,p3; q0,q1,q2,q3)", pos)
        def nums(g):
            out = []
            for v in g:
                if v.kind != "scalar" or isinstance(v.payload, Polynomial):
                    raise ParseError("crossratio arguments must be rationals", pos)
                out.append(v.payload)
            return tuple(out)
        value = c1.cross_ratio(c1.LineInP3(nums(groups[0]), nums(groups[1])))
        return Value("scalar", value)

    return {
        "phi": f_phi,
        "phi_dual": f_phi_dual,
        "psi1": f_psi(1),
        "psi2": f_psi(2),
        "chi1": f_chi(1),
        "chi2": f_chi(2),
        "diag": f_diag,
        "psil": f_psil,
        "psib": f_psib,
        "crossratio": f_crossratio,
    }


def parse_expression(src: str, pipeline: bool = False) -> Value:
    """Parse and evaluate a map expression; `pipeline` flips `.` to left-to-right."""
    names = make_default_names()
    functions = make_default_functions()
    if pipeline:
        # reverse the composition order by re-associating at the top level
        p = Parser(src, names, functions)
        factors = [p.parse_term()]
        while p.peek().text == ".":
            p.next()
            factors.append(p.parse_term())
        t = p.peek()
        if t.kind != "end":
            raise ParseError(f"trailing input {t.text!r}", t.pos)
        out = factors[-1]
        for f in reversed(factors[:-1]):
            out = _compose(out, f)
        return out
    return Parser(src, names, functions).parse()
