"""Rational maps between projective, multi-projective and affine spaces.

A projective map is a tuple of homogeneous polynomials of one degree, kept
in reduced canonical form: the components are divided by their polynomial
gcd and then rescaled so the first nonzero component is integer-primitive
with a positive leading coefficient.  Because that form is unique in each
scalar class, equality up to scalar is decidable by direct comparison; the
cross-product criterion is kept as the algebraic fallback.

Composition substitutes and reduces immediately; unreduced products are
never exposed, so every degree reported here refers to the reduced
representative.  General birational inversion is deliberately absent:
inverses exist only where a construction carries one (matrices, unimodular
monomial maps, named map pairs).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .rings import (
    Polynomial,
    RationalFunction,
    Ring,
    RingMismatch,
    Scalar,
    affine_ring,
    exact_div,
    jacobian_det,
    poly_gcd,
    poly_lcm,
    proj_ring,
)

MatrixEntry = Union[int, Fraction, Polynomial]
Matrix = tuple  # tuple of row tuples


class SpaceMismatch(ValueError):
    """Composition of maps whose spaces do not line up."""


def _join_ring(outer: Ring, inner: Ring) -> Ring:
    """Inner ring, extended by any symbolic constants only the outer map has."""
    missing = [n for n in outer.names[outer.npoly:] if n not in inner.index]
    return inner.extend_constants(missing) if missing else inner


def _coprime_basis(polys: Sequence[Polynomial]) -> list:
    """Pairwise-coprime primitive polynomials spanning the inputs' factors.

    Every input is a product of powers of basis elements (up to a rational
    scalar); the basis is not required to be irreducible.  Splitting always
    lowers total degree, so the refinement terminates.
    """
    basis: list = []
    stack = [p.primitive() for p in polys if not p.is_constant]
    while stack:
        q = stack.pop()
        if q.is_constant:
            continue
        for i, b in enumerate(basis):
            g = poly_gcd(q, b)
            if g.is_one:
                continue
            basis.pop(i)
            stack.append(g)
            bq = exact_div(b, g)
            if not bq.is_constant:
                stack.append(bq.primitive())
            qq = exact_div(q, g)
            if not qq.is_constant:
                stack.append(qq.primitive())
            break
        else:
            basis.append(q)
    return basis


def _exponents_over_basis(p: Polynomial, basis: Sequence[Polynomial]):
    """Exponent vector of a primitive p over a coprime basis covering it."""
    vec = [0] * len(basis)
    for i, b in enumerate(basis):
        while True:
            q = exact_div(p, b)
            if q is None:
                break
            p = q
            vec[i] += 1
    if not p.is_one:
        raise AssertionError("factor escaped the coprime basis")
    return vec


# factored component: (scale, parts); zero components have scale 0
_ZERO_FC = (Fraction(0), ())


def _substitute_fcomps(fparts, images, target: Ring) -> list:
    """Substitute images into factored components, factor by factor."""
    out = []
    for scale, parts in fparts:
        if not scale:
            out.append(_ZERO_FC)
            continue
        new_parts = []
        dead = False
        for p, k in parts:
            q = p.substitute(images, target)
            if q.is_zero:
                dead = True
                break
            new_parts.append((q, k))
        out.append(_ZERO_FC if dead else (scale, tuple(new_parts)))
    return out


def _fc_from_poly(p: Polynomial):
    if p.is_zero:
        return _ZERO_FC
    if p.is_constant:
        return (p.as_scalar(), ())
    return (p.scale, ((p.primitive(), 1),))


def _fc_expand(fc, ring: Ring) -> Polynomial:
    scale, parts = fc
    if not scale:
        return ring.zero
    out = ring.const(scale)
    for p, k in parts:
        out = out * p ** k
    return out


def _fc_degree(fc) -> int:
    return sum(p.degree() * k for p, k in fc[1])


def _reduce_factored(fcomps: list) -> tuple:
    """Cancel the common factor of factored components and fix the scalar.

    Works entirely on the small factor polynomials: builds a coprime basis,
    takes componentwise minimum exponents, and never expands a raw product.
    """
    live = [fc for fc in fcomps if fc[0]]
    if not live:
        raise ValueError("all components vanish")
    basis = _coprime_basis([p for fc in live for p, _ in fc[1]])
    reduced = []
    vecs = []
    scales = []
    for fc in fcomps:
        scale, parts = fc
        if not scale:
            vecs.append(None)
            scales.append(None)
            continue
        vec = [0] * len(basis)
        for p, k in parts:
            scale = scale * p.scale ** k
            pe = _exponents_over_basis(p.primitive(), basis)
            for i, m in enumerate(pe):
                if m:
                    vec[i] += m * k
        vecs.append(vec)
        scales.append(scale)
    mins = None
    for vec in vecs:
        if vec is None:
            continue
        mins = list(vec) if mins is None else [min(a, b) for a, b in zip(mins, vec)]
    s0 = next(s for s in scales if s is not None)
    for vec, scale in zip(vecs, scales):
        if vec is None:
            reduced.append(_ZERO_FC)
            continue
        parts = tuple((basis[i], e - m) for i, (e, m) in enumerate(zip(vec, mins))
                      if e - m)
        reduced.append((scale / s0, parts))
    return tuple(reduced)


class ProjectiveMap:
    """Rational map P^n -> P^m given by homogeneous components, reduced.

    Components are carried both expanded (for equality, rendering, charts)
    and as factor lists (for composition): compositions of these maps shed
    large common factors, and the factored view lets reduction cancel them
    without ever expanding the raw product.
    """

    __slots__ = ("components", "fparts")

    def __init__(self, components: Sequence[Polynomial], *, _canonical=False):
        components = tuple(components)
        if not components:
            raise ValueError("empty component tuple")
        ring = components[0].ring
        for c in components:
            if c.ring is not ring:
                raise RingMismatch("components in different rings")
        if _canonical:
            self.components = components
            self.fparts = tuple(_fc_from_poly(c) for c in components)
            return
        degs = {c.homogeneous_degree() for c in components if not c.is_zero}
        if None in degs or len(degs) != 1:
            raise ValueError("components must be homogeneous of one degree")
        fcomps = _reduce_factored([_fc_from_poly(c) for c in components])
        self.fparts = fcomps
        self.components = tuple(_fc_expand(fc, ring) for fc in fcomps)

    @classmethod
    def from_factors(cls, factor_lists, ring: Ring) -> "ProjectiveMap":
        """Build from components given as [(poly, power), ...] lists."""
        fcomps = []
        for parts in factor_lists:
            scale = Fraction(1)
            norm = []
            for p, k in parts:
                if p.is_zero:
                    scale = Fraction(0)
                    break
                scale *= p.scale ** k
                if not p.is_constant:
                    norm.append((p.primitive(), k))
            fcomps.append((scale, tuple(norm)) if scale else _ZERO_FC)
        return cls._from_fcomps(fcomps, ring)

    @classmethod
    def _from_fcomps(cls, fcomps, ring: Ring) -> "ProjectiveMap":
        fcomps = _reduce_factored(fcomps)
        self = object.__new__(cls)
        self.fparts = fcomps
        self.components = tuple(_fc_expand(fc, ring) for fc in fcomps)
        return self

    @property
    def ring(self) -> Ring:
        return self.components[0].ring

    @property
    def source_dim(self) -> int:
        return self.ring.npoly - 1

    @property
    def target_dim(self) -> int:
        return len(self.components) - 1

    def degree(self) -> int:
        return next(c for c in self.components if not c.is_zero).homogeneous_degree()

    def is_identity(self) -> bool:
        if len(self.components) != self.ring.npoly:
            return False
        return all(self.components[i] == self.ring.var(i)
                   for i in range(self.ring.npoly))

    # -- composition ---------------------------------------------------------

    def after(self, other: "ProjectiveMap") -> "ProjectiveMap":
        """self o other, reduced."""
        if len(other.components) != self.ring.npoly:
            raise SpaceMismatch(
                f"cannot compose: inner map targets P^{other.target_dim}, "
                f"outer map is defined on P^{self.source_dim}")
        target = _join_ring(self.ring, other.ring)
        images = [c.coerce(target) for c in other.components]
        return ProjectiveMap._from_fcomps(
            _substitute_fcomps(self.fparts, images, target), target)

    def __pow__(self, k: int) -> "ProjectiveMap":
        if len(self.components) != self.ring.npoly:
            raise SpaceMismatch("iteration needs a self-map")
        if k < 0:
            raise ValueError("no constructive inverse for a general projective map")
        if k == 0:
            return identity_map(self.ring)
        out = self
        for _ in range(k - 1):
            # keep the factored base map on the outside: its small factors
            # are what get substituted, so raw products never expand
            out = self.after(out)
        return out

    # -- comparisons -----------------------------------------------------------

    def equal_up_to_scalar(self, other: "ProjectiveMap") -> bool:
        if self.ring is not other.ring or len(self.components) != len(other.components):
            raise SpaceMismatch("shape mismatch")
        if self.components == other.components:
            return True
        f, g = self.components, other.components
        if any(a.is_zero != b.is_zero for a, b in zip(f, g)):
            return False
        j0 = next(i for i, c in enumerate(g) if not c.is_zero)
        return all(f[i] * g[j0] == f[j0] * g[i] for i in range(len(f)) if i != j0)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveMap):
            return NotImplemented
        return self.ring is other.ring and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    # -- charts ----------------------------------------------------------------

    def to_affine_chart(self, chart: int) -> "AffineMap":
        """Dehomogenize a self-map in the chart x_chart = 1 (source and target)."""
        n = self.ring.npoly
        if len(self.components) != n:
            raise SpaceMismatch("chart conversion needs a self-map")
        if not 0 <= chart < n:
            raise IndexError("chart index out of range")
        if self.components[chart].is_zero:
            raise ValueError("map undefined on this chart: chart component vanishes")
        names = [nm for i, nm in enumerate(self.ring.names[:n]) if i != chart]
        aring = affine_ring(n - 1, consts=self.ring.names[n:], names=names)
        images: list = []
        j = 0
        for i in range(n):
            if i == chart:
                images.append(aring.one)
            else:
                images.append(aring.var(j))
                j += 1
        dehom = [c.substitute(images, aring) for c in self.components]
        den = dehom[chart]
        return AffineMap([RationalFunction.make(dehom[i], den)
                          for i in range(n) if i != chart])

    def eval_point(self, point: Sequence[Scalar]) -> tuple:
        """Exact image of a rational point (unnormalized coordinate tuple)."""
        pt = list(point)
        return tuple(c.eval(pt) for c in self.components)

    def render(self) -> str:
        return "[" + " : ".join(c.render() for c in self.components) + "]"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"ProjectiveMap({self.render()})"


def identity_map(ring: Ring) -> ProjectiveMap:
    return ProjectiveMap([ring.var(i) for i in range(ring.npoly)])


def compose(f: ProjectiveMap, g: ProjectiveMap) -> ProjectiveMap:
    """f o g (apply g first)."""
    return f.after(g)


def equal_up_to_scalar(f, g) -> bool:
    return f.equal_up_to_scalar(g)


# -- multi-projective maps -------------------------------------------------------


class MultiProjectiveMap:
    """Rational map between products of projective spaces.

    ``source_blocks`` lists the coordinate count of each source factor (so
    P^2 x P^2 is (3, 3)); the ring variables are the concatenation of the
    factors' coordinates.  Each target block is a tuple of polynomials that
    are multi-homogeneous of one common multidegree, reduced blockwise.
    """

    __slots__ = ("source_blocks", "blocks", "fblocks")

    def __init__(self, source_blocks: Sequence[int], blocks, *, _canonical=False):
        self.source_blocks = tuple(source_blocks)
        blocks = tuple(tuple(b) for b in blocks)
        if not blocks or any(not b for b in blocks):
            raise ValueError("empty block")
        ring = blocks[0][0].ring
        if ring.npoly != sum(self.source_blocks):
            raise ValueError("source blocks do not cover the ring variables")
        for b in blocks:
            for c in b:
                if c.ring is not ring:
                    raise RingMismatch("components in different rings")
        if _canonical:
            self.blocks = blocks
            self.fblocks = tuple(tuple(_fc_from_poly(c) for c in b) for b in blocks)
            return
        ranges = self.block_ranges()
        out = []
        fout = []
        for b in blocks:
            degs = {c.is_multihomogeneous(ranges) for c in b if not c.is_zero}
            if None in degs or len(degs) != 1:
                raise ValueError("block components must share one multidegree")
            fb = _reduce_factored([_fc_from_poly(c) for c in b])
            fout.append(fb)
            out.append(tuple(_fc_expand(fc, ring) for fc in fb))
        self.blocks = tuple(out)
        self.fblocks = tuple(fout)

    @classmethod
    def from_factors(cls, source_blocks, factor_blocks, ring: Ring) -> "MultiProjectiveMap":
        """Build from blocks whose components are [(poly, power), ...] lists."""
        fblocks = []
        for factor_lists in factor_blocks:
            fcomps = []
            for parts in factor_lists:
                scale = Fraction(1)
                norm = []
                for p, k in parts:
                    if p.is_zero:
                        scale = Fraction(0)
                        break
                    scale *= p.scale ** k
                    if not p.is_constant:
                        norm.append((p.primitive(), k))
                fcomps.append((scale, tuple(norm)) if scale else _ZERO_FC)
            fblocks.append(fcomps)
        return cls._from_fblocks(tuple(source_blocks), fblocks, ring)

    @classmethod
    def _from_fblocks(cls, source_blocks, fblocks, ring: Ring) -> "MultiProjectiveMap":
        self = object.__new__(cls)
        self.source_blocks = tuple(source_blocks)
        self.fblocks = tuple(tuple(_reduce_factored(list(fb))) for fb in fblocks)
        self.blocks = tuple(tuple(_fc_expand(fc, ring) for fc in fb)
                            for fb in self.fblocks)
        return self

    def block_ranges(self):
        ranges = []
        off = 0
        for n in self.source_blocks:
            ranges.append((off, off + n))
            off += n
        return tuple(ranges)

    @property
    def ring(self) -> Ring:
        return self.blocks[0][0].ring

    @property
    def target_blocks(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    def multidegree(self, block: int = 0) -> tuple:
        b = self.blocks[block]
        return next(c for c in b if not c.is_zero).is_multihomogeneous(self.block_ranges())

    @property
    def all_components(self) -> tuple:
        return tuple(c for b in self.blocks for c in b)

    def after(self, other: "MultiProjectiveMap") -> "MultiProjectiveMap":
        if other.target_blocks != self.source_blocks:
            raise SpaceMismatch(
                f"cannot compose: inner map targets blocks {other.target_blocks}, "
                f"outer map source blocks are {self.source_blocks}")
        target = _join_ring(self.ring, other.ring)
        images = [c.coerce(target) for c in other.all_components]
        fblocks = [_substitute_fcomps(fb, images, target) for fb in self.fblocks]
        return MultiProjectiveMap._from_fblocks(other.source_blocks, fblocks, target)

    def __pow__(self, k: int) -> "MultiProjectiveMap":
        if k < 1 or self.target_blocks != self.source_blocks:
            raise SpaceMismatch("iteration needs a self-map and k >= 1")
        out = self
        for _ in range(k - 1):
            out = self.after(out)
        return out

    def equal_up_to_scalar(self, other: "MultiProjectiveMap") -> bool:
        if (self.ring is not other.ring or self.source_blocks != other.source_blocks
                or self.target_blocks != other.target_blocks):
            raise SpaceMismatch("shape mismatch")
        for a, b in zip(self.blocks, other.blocks):
            if a == b:
                continue
            if any(p.is_zero != q.is_zero for p, q in zip(a, b)):
                return False
            j0 = next(i for i, c in enumerate(b) if not c.is_zero)
            if not all(a[i] * b[j0] == a[j0] * b[i] for i in range(len(a)) if i != j0):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, MultiProjectiveMap):
            return NotImplemented
        return (self.ring is other.ring and self.source_blocks == other.source_blocks
                and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.source_blocks, self.blocks))

    @staticmethod
    def from_projective(f: ProjectiveMap) -> "MultiProjectiveMap":
        self = object.__new__(MultiProjectiveMap)
        self.source_blocks = (f.ring.npoly,)
        self.blocks = (f.components,)
        self.fblocks = (f.fparts,)
        return self

    def to_projective(self) -> ProjectiveMap:
        if len(self.blocks) != 1:
            raise ValueError("more than one target block")
        f = object.__new__(ProjectiveMap)
        f.components = self.blocks[0]
        f.fparts = self.fblocks[0]
        return f

    def block_map(self, i: int, ring: Ring) -> ProjectiveMap:
        """Extract one target block as a projective map on ``ring``.

        Only valid when that block uses a single source factor's variables;
        callers check this (see the fibration extraction in conics).
        """
        return ProjectiveMap([c.coerce(ring) for c in self.blocks[i]])

    def eval_point(self, point: Sequence[Scalar]) -> tuple:
        pt = list(point)
        return tuple(tuple(c.eval(pt) for c in b) for b in self.blocks)

    def render(self) -> str:
        return "(" + ", ".join(
            "[" + " : ".join(c.render() for c in b) + "]" for b in self.blocks) + ")"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MultiProjectiveMap({self.render()})"


def compose_mp(f, g) -> MultiProjectiveMap:
    if isinstance(f, ProjectiveMap):
        f = MultiProjectiveMap.from_projective(f)
    if isinstance(g, ProjectiveMap):
        g = MultiProjectiveMap.from_projective(g)
    return f.after(g)


# -- affine maps -------------------------------------------------------------------


class AffineMap:
    """Tuple of reduced rational functions in the affine variables."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Union[RationalFunction, Polynomial]]):
        comps = []
        ring = None
        for c in components:
            if isinstance(c, Polynomial):
                c = RationalFunction.from_poly(c)
            if not isinstance(c, RationalFunction):
                raise TypeError("affine components must be rational functions")
            if ring is None:
                ring = c.ring
            elif c.ring is not ring:
                raise RingMismatch("components in different rings")
            comps.append(c)
        if not comps:
            raise ValueError("empty component tuple")
        self.components = tuple(comps)

    @property
    def ring(self) -> Ring:
        return self.components[0].ring

    @property
    def arity(self) -> int:
        return self.ring.npoly

    def after(self, other: "AffineMap") -> "AffineMap":
        if len(other.components) != self.arity:
            raise SpaceMismatch(
                f"cannot compose: inner map has {len(other.components)} outputs, "
                f"outer map has arity {self.arity}")
        target = _join_ring(self.ring, other.ring)
        images = [c.coerce(target) for c in other.components]
        return AffineMap([c.substitute(images, target)
                          for c in self.components])

    def __pow__(self, k: int) -> "AffineMap":
        if k < 0:
            raise ValueError("no constructive inverse for a general affine map")
        if len(self.components) != self.arity:
            raise SpaceMismatch("iteration needs a self-map")
        if k == 0:
            return affine_identity(self.ring)
        out = self
        for _ in range(k - 1):
            out = out.after(self)
        return out

    def __eq__(self, other):
        if not isinstance(other, AffineMap):
            return NotImplemented
        return self.ring is other.ring and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_identity(self) -> bool:
        if len(self.components) != self.arity:
            return False
        return all(c.is_polynomial and c.num == self.ring.var(i)
                   for i, c in enumerate(self.components))

    @property
    def is_polynomial(self) -> bool:
        return all(c.is_polynomial for c in self.components)

    def jacobian_determinant(self) -> RationalFunction:
        if len(self.components) != self.arity:
            raise SpaceMismatch("jacobian needs a square system")
        return jacobian_det(self.components)

    def to_projective(self, ring: Ring | None = None, chart: int = 0) -> ProjectiveMap:
        """Homogenize; the default sends A^n into P^n via the chart x_chart."""
        n = self.arity
        if len(self.components) != n:
            raise SpaceMismatch("homogenization implemented for self-maps")
        if ring is None:
            ring = proj_ring(n, consts=self.ring.names[n:])
        if ring.npoly != n + 1:
            raise ValueError("projective ring has wrong dimension")
        # affine variable i corresponds to the projective variable skipping chart
        pvars = [ring.var(i) for i in range(n + 1) if i != chart]
        nums = []
        den = ring.one
        for c in self.components:
            nums.append(c.num.substitute(pvars, ring))
            d = c.den.substitute(pvars, ring)
            den = den if d.is_one else poly_lcm(den, d)
        comps = [den]
        for c, nh in zip(self.components, nums):
            d = c.den.substitute(pvars, ring)
            comps.append(nh * exact_div(den, d))
        deg = max(c.degree() for c in comps if not c.is_zero)
        t = ring.var(chart)
        np = ring.npoly
        homog = [sum((ring.monomial(e, Fraction(v) * c.scale)
                      * t ** (deg - sum(e[:np]))
                      for e, v in c.terms.items()), ring.zero)
                 for c in comps]
        # target coordinate order: chart coordinate first, then the rest
        ordered = [None] * (n + 1)
        ordered[chart] = homog[0]
        j = 1
        for i in range(n + 1):
            if i != chart:
                ordered[i] = homog[j]
                j += 1
        return ProjectiveMap(ordered)

    def degree(self) -> int:
        """Degree of the reduced homogenization (the projective degree)."""
        return self.to_projective().degree()

    def eval_point(self, point: Sequence[Scalar]) -> tuple:
        pt = list(point)
        return tuple(c.eval(pt) for c in self.components)

    def render(self) -> str:
        return "(" + ", ".join(c.render() for c in self.components) + ")"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"AffineMap({self.render()})"


def affine_identity(ring: Ring) -> AffineMap:
    return AffineMap([RationalFunction.from_poly(ring.var(i))
                      for i in range(ring.npoly)])


def affine_compose(f: AffineMap, g: AffineMap) -> AffineMap:
    return f.after(g)


# -- matrices ------------------------------------------------------------------------


def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def mat_identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, k2, p = len(a), len(a[0]), len(b), len(b[0])
    if k != k2:
        raise ValueError("matrix shape mismatch")
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(p))
        for i in range(n))

def mat_scale(m: Matrix, c) -> Matrix:
    return tuple(tuple(c * v for v in r) for r in m)


def mat_det(m: Matrix):
    """Cofactor-expansion determinant; works for any commutative entries."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("non-square matrix")
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = tuple(r[:j] + r[j + 1:] for r in m[1:])
        term = m[0][j] * mat_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def mat_adjugate(m: Matrix) -> Matrix:
    n = len(m)
    if n == 1:
        return ((1,),)
    cof = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(r[:j] + r[j + 1:] for k, r in enumerate(m) if k != i)
            d = mat_det(minor)
            row.append(-d if (i + j) % 2 else d)
        cof.append(tuple(row))
    return mat_transpose(tuple(cof))


def mat_inv(m: Matrix) -> Matrix:
    """Exact inverse over the rationals; integer result for |det| = 1."""
    d = mat_det(m)
    if isinstance(d, Polynomial):
        raise ValueError("use mat_adjugate for symbolic matrices")
    if d == 0:
        raise ValueError("singular matrix")
    adj = mat_adjugate(m)
    if d == 1:
        return adj
    if d == -1:
        return mat_scale(adj, -1)
    return mat_scale(adj, Fraction(1, 1) / d)


def mat_is_unimodular(m: Matrix) -> bool:
    return mat_det(m) in (1, -1)


def mat_pow(m: Matrix, k: int) -> Matrix:
    if k < 0:
        return mat_pow(mat_inv(m), -k)
    out = mat_identity(len(m))
    for _ in range(k):
        out = mat_mul(out, m)
    return out


def matrix_word(*factors) -> Matrix:
    """Exact product of matrices and formal inverses.

    Each factor is a matrix or a pair ``(matrix, -1)`` denoting its inverse.
    """
    out = None
    for f in factors:
        if isinstance(f, tuple) and len(f) == 2 and f[1] == -1:
            m = mat_inv(f[0])
        else:
            m = f
        out = m if out is None else mat_mul(out, m)
    return out


# -- matrix-built maps ------------------------------------------------------------------


def _entry_poly(v: MatrixEntry, ring: Ring) -> Polynomial:
    if isinstance(v, Polynomial):
        return v.coerce(ring)
    return ring.const(v)


def from_matrix(m: Matrix, ring: Ring | None = None) -> ProjectiveMap:
    """Linear map [row_0 . x : ... : row_n . x] of an invertible matrix."""
    n = len(m)
    if ring is None:
        ring = proj_ring(n - 1)
    if ring.npoly != n:
        raise ValueError("matrix size does not match the ring")
    d = mat_det(m)
    if (isinstance(d, Polynomial) and d.is_zero) or \
            (not isinstance(d, Polynomial) and d == 0):
        raise ValueError("singular matrix")
    comps = []
    for row in m:
        c = ring.zero
        for j, v in enumerate(row):
            if isinstance(v, Polynomial) or v:
                c = c + _entry_poly(v, ring) * ring.var(j)
        comps.append(c)
    return ProjectiveMap(comps)


def diagonal_map(scales: Sequence[MatrixEntry], ring: Ring | None = None) -> ProjectiveMap:
    n = len(scales)
    if ring is None:
        ring = proj_ring(n - 1)
    for c in scales:
        if (isinstance(c, Polynomial) and c.is_zero) or \
                (not isinstance(c, Polynomial) and not c):
            raise ValueError("zero diagonal scale")
    return ProjectiveMap([_entry_poly(c, ring) * ring.var(i)
                          for i, c in enumerate(scales)])


def monomial_map(m: Matrix) -> AffineMap:
    """The monomial self-map (prod_j x_j^{a_ij})_i of the torus."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("non-square exponent matrix")
    ring = affine_ring(n)
    comps = []
    for row in m:
        num = ring.one
        den = ring.one
        for j, a in enumerate(row):
            if a > 0:
                num = num * ring.var(j) ** a
            elif a < 0:
                den = den * ring.var(j) ** (-a)
        comps.append(RationalFunction.make(num, den))
    return AffineMap(comps)


# -- degree sequences ----------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees of the reduced iterates f, f^2, ..., f^N."""

    tag: str
    degrees: tuple

    def first_differences(self) -> tuple:
        return tuple(b - a for a, b in zip(self.degrees, self.degrees[1:]))


def degree_sequence(f: ProjectiveMap, count: int, tag: str = "") -> DegreeSequence:
    if count < 1:
        raise ValueError("need at least one iterate")
    degs = []
    cur = f
    degs.append(cur.degree())
    for _ in range(count - 1):
        cur = cur.after(f)
        degs.append(cur.degree())
    return DegreeSequence(tag or "map", tuple(degs))


# -- hypersurface pullback and contraction ---------------------------------------------------


@dataclass(frozen=True)
class PullbackFactorization:
    """Result of pulling a hypersurface back under a self-map.

    ``divisible`` certifies H | H o f; ``cofactor`` is (H o f)/H when it
    exists, else None; ``multiplicities[i]`` counts how often the i-th
    candidate divisor divides the cofactor, and ``residual`` is what is
    left of the cofactor afterwards.
    """

    pullback: Polynomial
    divisible: bool
    cofactor: object
    multiplicities: tuple
    residual: object


def pullback_hypersurface(f: ProjectiveMap, h: Polynomial,
                          candidates: Sequence[Polynomial] = ()) -> PullbackFactorization:
    if h.is_zero:
        raise ValueError("zero hypersurface")
    if h.ring is not f.ring or len(f.components) != f.ring.npoly:
        raise SpaceMismatch("hypersurface must live on the target of a self-map")
    hf = h.substitute(f.components, f.ring)
    q = exact_div(hf, h)
    mults = []
    residual = q
    if q is not None:
        for cand in candidates:
            k = 0
            while residual is not None and not residual.is_constant:
                nxt = exact_div(residual, cand)
                if nxt is None:
                    break
                residual = nxt
                k += 1
            mults.append(k)
    return PullbackFactorization(hf, q is not None, q, tuple(mults), residual)


def image_in_subspace(f: ProjectiveMap, hyperplane: int,
                      vanishing: Sequence[int]) -> bool:
    """Does f map {x_hyperplane = 0} into the listed coordinate subspace?

    Substitutes x_hyperplane = 0 (parametrizing the hyperplane by the
    remaining coordinates) and checks the listed target components vanish
    identically.
    """
    ring = f.ring
    images = [ring.zero if i == hyperplane else ring.var(i)
              for i in range(ring.npoly)]
    for idx in vanishing:
        if not f.components[idx].substitute(images, ring).is_zero:
            return False
    return True
