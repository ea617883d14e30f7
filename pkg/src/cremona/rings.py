"""Exact multivariate polynomials and rational functions over the rationals.

This is the arithmetic foundation of the package: everything downstream
(rational maps, the conic-space embedding, volume forms) reduces to exact
polynomial algebra in these classes.

Representation
--------------
A :class:`Polynomial` stores an integer-primitive term dict together with
one rational ``scale`` factor, so the hot loops (multiplication, linear
combination, exact division) run on plain integers; see ``_backend``.
Canonical form: the term dict has coefficient gcd 1 and a positive
graded-lex leading coefficient, with sign and content folded into
``scale``.  Two polynomials are equal iff their fields are equal.

A :class:`Ring` may flag a suffix of its variables as *symbolic constants*
(generic scalars such as ``a, b, c`` or ``lambda1``): they participate in
arithmetic and gcd like ordinary variables but are ignored by degree and
homogeneity, which only count the true variables.

Term order is graded lexicographic with the first variable highest.  All
values are immutable after construction; every operation is a pure
function, so values can be shared freely between threads.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as _igcd
from typing import Iterable, Sequence, Union

from ._backend import (
    content_terms,
    divexact_terms,
    lincomb_terms,
    max_key_grlex,
    min_exponents,
    mul_terms,
    scale_terms,
)

_ONE = Fraction(1)

Scalar = Union[int, Fraction]


class RingMismatch(ValueError):
    """Raised when operands live in different polynomial rings."""


class Ring:
    """A named polynomial ring, optionally with trailing symbolic constants."""

    __slots__ = ("names", "nconsts", "index", "_vars", "_zero", "_one")

    _cache: dict = {}

    def __new__(cls, names: Sequence[str], nconsts: int = 0):
        key = (tuple(names), nconsts)
        hit = cls._cache.get(key)
        if hit is not None:
            return hit
        self = object.__new__(cls)
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        if not 0 <= nconsts <= len(self.names):
            raise ValueError("bad constant count")
        self.nconsts = nconsts
        self.index = {n: i for i, n in enumerate(self.names)}
        self._vars = None
        self._zero = None
        self._one = None
        cls._cache[key] = self
        return self

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def npoly(self) -> int:
        """Number of true (non-constant) variables."""
        return len(self.names) - self.nconsts

    def __repr__(self):
        tail = f"; consts {','.join(self.names[self.npoly:])}" if self.nconsts else ""
        return f"Ring({','.join(self.names[:self.npoly])}{tail})"

    # -- element constructors ------------------------------------------------

    @property
    def zero(self) -> "Polynomial":
        if self._zero is None:
            self._zero = Polynomial(self, {}, _ONE)
        return self._zero

    @property
    def one(self) -> "Polynomial":
        if self._one is None:
            self._one = Polynomial(self, {(0,) * self.nvars: 1}, _ONE)
        return self._one

    def const(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.zero
        return Polynomial(self, {(0,) * self.nvars: 1}, c)

    def var(self, i: int) -> "Polynomial":
        if self._vars is None:
            vs = []
            for k in range(self.nvars):
                e = [0] * self.nvars
                e[k] = 1
                vs.append(Polynomial(self, {tuple(e): 1}, _ONE))
            self._vars = tuple(vs)
        return self._vars[i]

    def var_by_name(self, name: str) -> "Polynomial":
        return self.var(self.index[name])

    @property
    def variables(self) -> tuple:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent vector")
        c = Fraction(coeff)
        return Polynomial(self, {exps: 1}, c) if c else self.zero

    def extend_constants(self, extra: Sequence[str]) -> "Ring":
        """Ring with additional symbolic constants appended."""
        return Ring(self.names + tuple(extra), self.nconsts + len(extra))


def ring(*names: str, consts: Sequence[str] = ()) -> Ring:
    return Ring(tuple(names) + tuple(consts), len(tuple(consts)))


def proj_ring(n: int, consts: Sequence[str] = ()) -> Ring:
    """Coordinate ring of P^n with variables x0..xn."""
    return ring(*(f"x{i}" for i in range(n + 1)), consts=consts)


def affine_ring(n: int, consts: Sequence[str] = (), names: Sequence[str] | None = None) -> Ring:
    """Coordinate ring of A^n; default variables x1..xn."""
    if names is None:
        names = tuple(f"x{i}" for i in range(1, n + 1))
    if len(names) != n:
        raise ValueError("name count mismatch")
    return ring(*names, consts=consts)


def _normalize(ring_: Ring, terms: dict, scale: Fraction) -> "Polynomial":
    if not terms or not scale:
        return ring_.zero
    g = content_terms(terms)
    if terms[max_key_grlex(terms)] < 0:
        g = -g
    if g != 1:
        terms = {e: c // g for e, c in terms.items()}
        scale = scale * g
    return Polynomial(ring_, terms, scale)


class Polynomial:
    """Immutable exact multivariate polynomial.

    Do not mutate ``terms``; construct through Ring helpers or arithmetic.
    """

    __slots__ = ("ring", "terms", "scale", "_hash")

    def __init__(self, ring_: Ring, terms: dict, scale: Fraction):
        self.ring = ring_
        self.terms = terms
        self.scale = scale
        self._hash = None

    # -- basic predicates ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        """Constant in the strong sense: no variable at all (constants included)."""
        if not self.terms:
            return True
        if len(self.terms) != 1:
            return False
        (e,) = self.terms
        return not any(e)

    @property
    def is_one(self) -> bool:
        return self.is_constant and bool(self.terms) and self.scale == 1

    def as_scalar(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self.scale if self.terms else Fraction(0)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- degrees -------------------------------------------------------------

    def _true_deg(self, e: tuple) -> int:
        return sum(e[: self.ring.npoly])

    def degree(self) -> int:
        """Total degree in the true variables; raises on the zero polynomial."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._true_deg(e) for e in self.terms)

    def homogeneous_degree(self):
        """Common true-variable degree of all terms, or None if inhomogeneous."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        degs = {self._true_deg(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def multidegree(self, blocks: Sequence[tuple]) -> tuple:
        """Degree vector over index blocks (each block a range of variable indices)."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        out = []
        for lo, hi in blocks:
            out.append(max(sum(e[lo:hi]) for e in self.terms))
        return tuple(out)

    def is_multihomogeneous(self, blocks: Sequence[tuple]):
        degs = {tuple(sum(e[lo:hi]) for lo, hi in blocks) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def max_exponent(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def uses_variable(self, i: int) -> bool:
        return any(e[i] for e in self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring is not other.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        elif isinstance(other, RationalFunction):
            return NotImplemented
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        sa, sb = self.scale, other.scale
        s = Fraction(_igcd(sa.numerator, sb.numerator),
                     sa.denominator * sb.denominator // _igcd(sa.denominator, sb.denominator))
        ca = int(sa / s)
        cb = int(sb / s)
        return _normalize(self.ring, lincomb_terms(self.terms, ca, other.terms, cb), s)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return Polynomial(self.ring, self.terms, -self.scale)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c or self.is_zero:
                return self.ring.zero
            return Polynomial(self.ring, self.terms, self.scale * c)
        if isinstance(other, RationalFunction):
            return NotImplemented
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.ring.zero
        # product of integer-primitive dicts is primitive (Gauss) with a
        # positive leading coefficient, so no renormalization is needed
        return Polynomial(self.ring, mul_terms(self.terms, other.terms),
                          self.scale * other.scale)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power; use RationalFunction")
        out = self.ring.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self * (1 / c)
        if isinstance(other, Polynomial):
            return RationalFunction.make(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction.make(self.ring.const(other), self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self.is_constant and self.as_scalar() == other
            return NotImplemented
        return (self.ring is other.ring and self.scale == other.scale
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, self.scale,
                               frozenset(self.terms.items())))
        return self._hash

    # -- calculus ------------------------------------------------------------

    def derivative(self, i: int) -> "Polynomial":
        if not 0 <= i < self.ring.nvars:
            raise IndexError("variable index out of range")
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = out.get(e2, 0) + k * c
        out = {e: c for e, c in out.items() if c}
        return _normalize(self.ring, out, self.scale)

    # -- normal forms ----------------------------------------------------------

    def primitive(self) -> "Polynomial":
        """Integer-primitive representative with positive leading coefficient."""
        if self.is_zero:
            return self
        return Polynomial(self.ring, self.terms, _ONE)

    def leading_coefficient(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.scale * self.terms[max_key_grlex(self.terms)]

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        c = self.terms.get(tuple(exps))
        return self.scale * c if c else Fraction(0)

    # -- substitution and evaluation ------------------------------------------

    def _full_images(self, images, target: Ring):
        images = list(images)
        r = self.ring
        if len(images) == r.npoly and r.nconsts:
            for name in r.names[r.npoly:]:
                if name not in target.index:
                    raise RingMismatch(f"constant {name} missing from target ring")
                images.append(target.var_by_name(name))
        if len(images) != r.nvars:
            raise ValueError(f"expected {r.npoly} or {r.nvars} images, got {len(images)}")
        return images

    def substitute(self, images, ring_: Ring | None = None):
        """Replace each variable by its image (polynomials or rational functions).

        Accepts one image per true variable (symbolic constants then map to
        the like-named variable of the target ring) or one per variable.
        Returns a Polynomial when every image is polynomial, otherwise a
        reduced RationalFunction.
        """
        target = ring_
        probe = [f for f in images if isinstance(f, (Polynomial, RationalFunction))]
        if target is None:
            if not probe:
                raise ValueError("cannot infer target ring from scalar images")
            f0 = probe[0]
            target = f0.ring if isinstance(f0, Polynomial) else f0.num.ring
        images = self._full_images(images, target)
        lifted = []
        rational = False
        for f in images:
            if isinstance(f, (int, Fraction)):
                lifted.append(target.const(f))
            elif isinstance(f, Polynomial):
                lifted.append(f)
            elif isinstance(f, RationalFunction):
                rational = True
                lifted.append(f)
            else:
                raise TypeError(f"bad image {f!r}")
        if self.is_zero:
            return target.zero if not rational else RationalFunction.make(target.zero, target.one)
        if not rational:
            return self._substitute_poly(lifted, target)
        nums = [f.num if isinstance(f, RationalFunction) else f for f in lifted]
        dens = [f.den if isinstance(f, RationalFunction) else target.one for f in lifted]
        # group variables by their image's denominator so that a shared
        # denominator is only raised to the term's total power, not summed
        # over the variables separately
        groups: dict = {}
        for i, d in enumerate(dens):
            if not d.is_one:
                groups.setdefault(d, []).append(i)
        gdens = list(groups)
        gvars = [groups[d] for d in gdens]
        gmax = []
        for vs in gvars:
            gmax.append(max(sum(e[i] for i in vs) for e in self.terms))
        ncache = _PowerCache(nums)
        dcache = _PowerCache(gdens)
        total = target.zero
        for e, c in self.terms.items():
            term = target.const(self.scale * c)
            for i, k in enumerate(e):
                if k:
                    term = term * ncache.get(i, k)
            for gi, vs in enumerate(gvars):
                m = gmax[gi] - sum(e[i] for i in vs)
                if m:
                    term = term * dcache.get(gi, m)
            total = total + term
        return RationalFunction.from_factored_den(
            total, [(d, m) for d, m in zip(gdens, gmax) if m])

    def _substitute_poly(self, images: list, target: Ring):
        if all(len(f.terms) <= 1 for f in images):
            # monomial images: pure exponent remap
            out = {}
            nz = target.nvars
            for e, c in self.terms.items():
                coeff = Fraction(c)
                acc = [0] * nz
                dead = False
                for i, k in enumerate(e):
                    if not k:
                        continue
                    img = images[i]
                    if img.is_zero:
                        dead = True
                        break
                    (me,) = img.terms
                    mc = img.scale * img.terms[me]
                    coeff *= mc ** k
                    for j, mj in enumerate(me):
                        if mj:
                            acc[j] += mj * k
                if dead:
                    continue
                key = tuple(acc)
                out[key] = out.get(key, Fraction(0)) + coeff
            return _from_fraction_terms(target, {e: c for e, c in out.items() if c},
                                        self.scale)
        cache = _PowerCache(images)
        total = target.zero
        for e, c in self.terms.items():
            factors = sorted(((i, ki) for i, ki in enumerate(e) if ki),
                             key=lambda p: len(images[p[0]].terms))
            term = target.const(self.scale * c)
            for i, k in factors:
                term = term * cache.get(i, k)
                if term.is_zero:
                    break
            total = total + term
        return total

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        """Exact evaluation at a full rational point (constants included)."""
        if len(point) != self.ring.nvars:
            raise ValueError("point arity mismatch")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for i, k in enumerate(e):
                if k:
                    v *= pt[i] ** k
            total += v
        return total * self.scale

    def coerce(self, target: Ring) -> "Polynomial":
        """Name-preserving transport into another ring.

        Only the variables that actually occur need to exist in the target.
        """
        if target is self.ring:
            return self
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        perm = {}
        for i in used:
            n = self.ring.names[i]
            if n not in target.index:
                raise RingMismatch(f"variable '{n}' missing from target ring")
            perm[i] = target.index[n]
        nz = target.nvars
        out = {}
        for e, c in self.terms.items():
            acc = [0] * nz
            for i, k in enumerate(e):
                if k:
                    acc[perm[i]] = k
            out[tuple(acc)] = c
        # renaming can change which term leads, so renormalize the sign
        return _normalize(target, out, self.scale)

    # -- rendering -------------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: descending graded-lex terms, '^' powers."""
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0][::-1]),
                       reverse=True)
        names = self.ring.names
        chunks = []
        for e, c in items:
            coeff = self.scale * c
            mono = "*".join(
                f"{names[i]}^{k}" if k > 1 else names[i]
                for i, k in enumerate(e) if k
            )
            mag = abs(coeff)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()})"


def _from_fraction_terms(ring_: Ring, fterms: dict, extra: Fraction) -> Polynomial:
    """Build a canonical polynomial from Fraction-valued terms times extra."""
    if not fterms or not extra:
        return ring_.zero
    den = reduce(lambda a, b: a * b // _igcd(a, b),
                 (c.denominator for c in fterms.values()), 1)
    iterms = {e: int(c * den) for e, c in fterms.items()}
    return _normalize(ring_, iterms, extra / den)


class _PowerCache:
    """Per-variable powers of substitution images, computed on demand."""

    __slots__ = ("base", "pows")

    def __init__(self, base: Sequence[Polynomial]):
        self.base = base
        self.pows = [None] * len(base)

    def get(self, i: int, k: int) -> Polynomial:
        ps = self.pows[i]
        if ps is None:
            ps = self.pows[i] = [self.base[i].ring.one, self.base[i]]
        while len(ps) <= k:
            ps.append(ps[-1] * self.base[i])
        return ps[k]


# -- division and gcd ----------------------------------------------------------


def exact_div(a: Polynomial, b: Polynomial):
    """Exact quotient a/b, or None when b does not divide a."""
    if isinstance(b, Polynomial) and b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    a._check(b)
    if a.is_zero:
        return a
    q = divexact_terms(a.terms, b.terms)
    if q is None:
        return None
    return Polynomial(a.ring, q, a.scale / b.scale)


def divides(b: Polynomial, a: Polynomial) -> bool:
    return exact_div(a, b) is not None


def _deg_v(terms: dict, v: int) -> int:
    return max(e[v] for e in terms)


def _lead_v_shift(terms: dict, v: int, d: int, shift: int) -> dict:
    """Terms of v-degree d, with the v-exponent replaced by shift."""
    out = {}
    for e, c in terms.items():
        if e[v] == d:
            out[e[:v] + (shift,) + e[v + 1:]] = c
    return out


def _prem(F: dict, G: dict, v: int) -> dict:
    """Pseudo-remainder of F by G with respect to variable v."""
    dG = _deg_v(G, v)
    lcG = _lead_v_shift(G, v, dG, 0)
    R = F
    e = _deg_v(F, v) - dG + 1
    while R:
        dR = _deg_v(R, v)
        if dR < dG:
            break
        lcRs = _lead_v_shift(R, v, dR, dR - dG)
        R = lincomb_terms(mul_terms(lcG, R), 1, mul_terms(lcRs, G), -1)
        e -= 1
    if e > 0 and R:
        lc_pow = lcG
        for _ in range(e - 1):
            lc_pow = mul_terms(lc_pow, lcG)
        R = mul_terms(R, lc_pow)
    return R


def _strip_int_sign(terms: dict) -> dict:
    g = content_terms(terms)
    if terms[max_key_grlex(terms)] < 0:
        g = -g
    if g != 1:
        terms = {e: c // g for e, c in terms.items()}
    return terms


def _cont_pp(terms: dict, v: int):
    """Content and primitive part with respect to variable v."""
    groups: dict = {}
    for e, c in terms.items():
        key = e[v]
        groups.setdefault(key, {})[e[:v] + (0,) + e[v + 1:]] = c
    cont = None
    for g in groups.values():
        cont = g if cont is None else _gcd_terms(cont, g)
        if len(cont) == 1 and not any(next(iter(cont))):
            cont = _strip_int_sign(cont)
            return cont, terms
    cont = _strip_int_sign(cont)
    if len(cont) == 1 and not any(next(iter(cont))):
        return cont, terms
    return cont, divexact_terms(terms, cont)


def _is_unit(terms: dict) -> bool:
    if len(terms) != 1:
        return False
    return not any(next(iter(terms)))


def _gcd_terms(A: dict, B: dict) -> dict:
    """Primitive positive-leading gcd of two nonzero integer term dicts.

    Monomial-content fast path first, then recursive primitive pseudo-
    remainder sequences with the highest occurring variable as main
    variable.
    """
    if A == B:
        return _strip_int_sign(dict(A))
    nv = len(next(iter(A)))
    c = _igcd(content_terms(A), content_terms(B))
    mA = min_exponents(A, nv)
    mB = min_exponents(B, nv)
    m = tuple(min(x, y) for x, y in zip(mA, mB))

    def strip(T, mT):
        if any(mT):
            T = {tuple(map(int.__sub__, e, mT)): v for e, v in T.items()}
        return _strip_int_sign(T)

    A1 = strip(A, mA)
    B1 = strip(B, mB)
    if _is_unit(A1) or _is_unit(B1):
        core = {(0,) * nv: 1}
    else:
        core = _gcd_rec(A1, B1)
    out = {tuple(map(int.__add__, e, m)): v * c for e, v in core.items()} \
        if (any(m) or c != 1) else core
    return out


def _gcd_rec(A: dict, B: dict) -> dict:
    nv = len(next(iter(A)))
    v = -1
    for e in A:
        for i in range(nv - 1, v, -1):
            if e[i]:
                v = i
                break
    for e in B:
        for i in range(nv - 1, v, -1):
            if e[i]:
                v = i
                break
    if v < 0:
        return {(0,) * nv: 1}
    contA, ppA = _cont_pp(A, v)
    contB, ppB = _cont_pp(B, v)
    cont = _gcd_terms(contA, contB)
    if _is_unit(ppA) or _is_unit(ppB):
        return cont
    if _certified_coprime(ppA, ppB, v):
        pp = _unit_like(ppA)
    else:
        pp = _prs_gcd(ppA, ppB, v)
    if _is_unit(cont):
        return pp
    if _is_unit(pp):
        return cont
    return mul_terms(cont, pp)


# fixed evaluation points for the coprimality certificate (determinism matters
# more than randomness here; retried with the next row on leading-term loss)
_EVAL_ROWS = (
    (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41),
    (2, 9, 25, 4, 27, 8, 49, 6, 10, 12, 15, 14),
    (43, 3, 62, 21, 5, 33, 17, 57, 2, 77, 13, 7),
)


def _eval_univariate(T: dict, v: int, row) -> dict:
    """Image of T under substituting fixed integers for every variable but v."""
    out: dict = {}
    nv = len(next(iter(T)))
    for e, c in T.items():
        val = c
        for i in range(nv):
            if i != v and e[i]:
                val *= row[i % len(row)] ** e[i]
        k = e[v]
        out[k] = out.get(k, 0) + val
    return {k: c for k, c in out.items() if c}


def _univ_gcd_degree(f: dict, g: dict) -> int:
    """Degree of gcd of two univariate integer polynomials (deg -> coeff dicts)."""
    while g:
        df, dg = max(f), max(g)
        if df < dg:
            f, g = g, f
            continue
        # one pseudo-division step, content-stripped to tame growth
        lg = g[dg]
        r: dict = {}
        lf = f[df]
        for k, c in f.items():
            r[k] = c * lg
        for k, c in g.items():
            k2 = k + df - dg
            r[k2] = r.get(k2, 0) - c * lf
        r = {k: c for k, c in r.items() if c}
        if r:
            cont = 0
            for c in r.values():
                cont = _igcd(cont, c)
                if cont == 1:
                    break
            if cont > 1:
                r = {k: c // cont for k, c in r.items()}
        f, g = g, r
    return max(f) if f else 0


def _certified_coprime(F: dict, G: dict, v: int) -> bool:
    """True only when an integer evaluation proves gcd(F, G) has no v-part.

    F and G are primitive with respect to v, so a trivial v-part makes the
    gcd trivial outright.  A failed certificate proves nothing and the
    caller falls back to the pseudo-remainder sequence.
    """
    dF = _deg_v(F, v)
    dG = _deg_v(G, v)
    for row in _EVAL_ROWS:
        fh = _eval_univariate(F, v, row)
        gh = _eval_univariate(G, v, row)
        if not fh or not gh:
            continue
        if max(fh) != dF and max(gh) != dG:
            continue  # both leading coefficients vanished: bad point
        if _univ_gcd_degree(fh, gh) == 0:
            return True
    return False


def _prs_gcd(F: dict, G: dict, v: int) -> dict:
    """Primitive PRS gcd of polynomials primitive w.r.t. v, both of positive v-degree."""
    while True:
        if _deg_v(F, v) < _deg_v(G, v):
            F, G = G, F
        R = _prem(F, G, v)
        if not R:
            return _strip_int_sign(dict(G))
        if _deg_v(R, v) == 0:
            return _unit_like(R)
        F, G = G, _cont_pp(_strip_int_sign(R), v)[1]


def _unit_like(T: dict) -> dict:
    nv = len(next(iter(T)))
    return {(0,) * nv: 1}


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Normalized gcd: integer-primitive with positive leading coefficient."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if a.is_zero:
        return b.primitive()
    if b.is_zero:
        return a.primitive()
    a._check(b)
    return Polynomial(a.ring, _gcd_terms(a.terms, b.terms), _ONE)


def poly_gcd_many(polys: Iterable[Polynomial]) -> Polynomial:
    ps = [p for p in polys if not p.is_zero]
    if not ps:
        raise ValueError("gcd of all-zero family is undefined")
    ps.sort(key=lambda p: len(p.terms))
    g = ps[0].primitive()
    for p in ps[1:]:
        if g.is_one:
            break
        g = poly_gcd(g, p)
    return g


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        raise ValueError("lcm with zero")
    q = exact_div(a, poly_gcd(a, b))
    return (q * b).primitive()


# -- rational functions --------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials in reduced canonical form.

    The denominator is integer-primitive with positive leading coefficient
    and shares no factor with the numerator; a constant denominator is
    exactly 1.  Normalizing twice is a no-op, and equality is plain field
    comparison.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        self.num = num
        self.den = den

    @staticmethod
    def make(num: Polynomial, den: Polynomial) -> "RationalFunction":
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        num._check(den)
        if num.is_zero:
            return RationalFunction(num.ring.zero, num.ring.one)
        if den.is_constant:
            return RationalFunction(num * (1 / den.as_scalar()), num.ring.one)
        g = poly_gcd(num, den)
        if not g.is_one:
            num = exact_div(num, g)
            den = exact_div(den, g)
        if den.is_constant:
            return RationalFunction(num * (1 / den.as_scalar()), num.ring.one)
        num = num * (1 / den.scale)
        return RationalFunction(num, den.primitive())

    @staticmethod
    def from_poly(p: Polynomial) -> "RationalFunction":
        return RationalFunction(p, p.ring.one)

    @staticmethod
    def from_factored_den(num: Polynomial, factors) -> "RationalFunction":
        """Reduced quotient of num by a product of factor powers.

        Peels each factor off the numerator by exact division first, so
        powers of a shared denominator never reach the general gcd.
        """
        if num.is_zero:
            return RationalFunction(num.ring.zero, num.ring.one)
        left = []
        for d, k in factors:
            while k:
                q = exact_div(num, d)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                left.append((d, k))
        den = num.ring.one
        for d, k in left:
            den = den * d ** k
        return RationalFunction.make(num, den)

    @property
    def ring(self) -> Ring:
        return self.num.ring

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_one

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial:
            raise ValueError("denominator is not constant")
        return self.num

    def __add__(self, other):
        other = _as_rf(other, self.ring)
        if other is NotImplemented:
            return NotImplemented
        n = self.num * other.den + other.num * self.den
        return RationalFunction.make(n, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = _as_rf(other, self.ring)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rf(other, self.ring)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other, self.ring)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction.make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other, self.ring) / self

    def __pow__(self, k: int):
        if k < 0:
            return RationalFunction.make(self.den ** (-k), self.num ** (-k))
        return RationalFunction.make(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial)):
            other = _as_rf(other, self.ring)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self, i: int) -> "RationalFunction":
        if self.den.is_one:
            return RationalFunction.from_poly(self.num.derivative(i))
        n = self.num.derivative(i) * self.den - self.num * self.den.derivative(i)
        return RationalFunction.make(n, self.den * self.den)

    def substitute(self, images, ring_: Ring | None = None) -> "RationalFunction":
        n = self.num.substitute(images, ring_)
        if self.den.is_one:
            return n if isinstance(n, RationalFunction) else RationalFunction.from_poly(n)
        d = self.den.substitute(images, ring_)
        n = n if isinstance(n, RationalFunction) else RationalFunction.from_poly(n)
        d = d if isinstance(d, RationalFunction) else RationalFunction.from_poly(d)
        return n / d

    def eval(self, point: Sequence[Scalar]) -> Fraction:
        d = self.den.eval(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at the point")
        return self.num.eval(point) / d

    def coerce(self, target: Ring) -> "RationalFunction":
        return RationalFunction(self.num.coerce(target), self.den.coerce(target))

    def render(self) -> str:
        if self.den.is_one:
            return self.num.render()
        d = self.den.render()
        if any(ch in d for ch in "+-*/"):
            d = f"({d})"
        return f"{_wrap(self.num)}/{d}"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RationalFunction({self.render()})"


def _wrap(p: Polynomial) -> str:
    s = p.render()
    return f"({s})" if any(ch in s for ch in "+-/") else s


def _as_rf(v, ring_: Ring):
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction.from_poly(v)
    if isinstance(v, (int, Fraction)):
        return RationalFunction.from_poly(ring_.const(v))
    return NotImplemented


# -- jacobians -----------------------------------------------------------------


def poly_matrix_det(rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free (Bareiss) determinant of a square polynomial matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("non-square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    M = [list(r) for r in rows]
    ring_ = M[0][0].ring
    sign = 1
    prev = ring_.one
    for k in range(n - 1):
        if M[k][k].is_zero:
            for i in range(k + 1, n):
                if not M[i][k].is_zero:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return ring_.zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = t if prev.is_one else exact_div(t, prev)
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return -d if sign < 0 else d


def jacobian_det(fs: Sequence[RationalFunction]) -> RationalFunction:
    """Determinant of the Jacobian of a square rational self-system."""
    fs = [f if isinstance(f, RationalFunction) else RationalFunction.from_poly(f)
          for f in fs]
    if not fs:
        raise ValueError("empty system")
    ring_ = fs[0].ring
    n = ring_.npoly
    if len(fs) != n:
        raise ValueError(f"non-square system: {len(fs)} functions in {n} variables")
    # row i has common denominator den_i^2
    rows = []
    den = ring_.one
    for f in fs:
        if f.den.is_one:
            rows.append([f.num.derivative(j) for j in range(n)])
        else:
            rows.append([f.num.derivative(j) * f.den - f.num * f.den.derivative(j)
                         for j in range(n)])
            den = den * f.den * f.den
    return RationalFunction.make(poly_matrix_det(rows), den)
