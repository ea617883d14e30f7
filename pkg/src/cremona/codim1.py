"""Codimension-one embeddings and the Grassmannian cross-ratio obstruction.

Two families of embeddings of affine Cremona transformations one dimension
up, both driven by the differential:

  * ``psi_l``: append a fiber coordinate scaled by the inverse Jacobian
    determinant to the l-th power (l = 0 is the standard embedding).
  * ``psi_b``: append the projectivized differential acting on a slope
    coordinate by the Moebius action of the Jacobian matrix columns.

Both are group homomorphisms by the chain rule, which the test suite
exercises on random composable pairs.

The cross-ratio machinery certifies the obstruction for the line
Grassmannian of P^3: the cross ratio of a line's intersections with the
four coordinate planes is preserved by one coordinate permutation class
and moved with order three by another, which is incompatible with the
integer-matrix relation verified in ``gl3z_identities``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .maps import (
    AffineMap,
    Matrix,
    ProjectiveMap,
    from_matrix,
    mat,
    mat_adjugate,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_transpose,
)
from .rings import (
    Polynomial,
    RationalFunction,
    Ring,
    affine_ring,
    exact_div,
    proj_ring,
    ring,
)

Entry = Union[int, Fraction, Polynomial, RationalFunction]


def psi_l(l: int, f: AffineMap) -> AffineMap:
    """(f(x), J(f)^(-l) * x_{n+1}) on one more affine variable."""
    if l < 0:
        raise ValueError("the twist exponent is nonnegative")
    n = f.arity
    if len(f.components) != n:
        raise ValueError("psi_l needs a self-map")
    jac = f.jacobian_determinant()
    if jac.is_zero:
        raise ValueError("degenerate map: Jacobian determinant vanishes")
    big = affine_ring(n + 1, consts=f.ring.names[n:])
    lift = [big.var(i) for i in range(n)]
    comps = [c.substitute(lift, big) for c in f.components]
    jl = jac.substitute(lift, big) ** (-l) if l else RationalFunction.from_poly(big.one)
    comps.append(jl * big.var(n))
    return AffineMap(comps)


def psi_b(f: AffineMap) -> AffineMap:
    """(f(x1,x2), Moebius action of the differential on the slope x3).

    The slope convention is pinned by the diagonal case: (a*x1, b*x2) must
    go to (a*x1, b*x2, (b/a)*x3), which forces
    x3 -> (J21 + J22*x3)/(J11 + J12*x3) for J_ij = dF_i/dx_j.
    """
    if f.arity != 2 or len(f.components) != 2:
        raise ValueError("psi_b is defined for self-maps of the affine plane")
    jac = f.jacobian_determinant()
    if jac.is_zero:
        raise ValueError("degenerate map: Jacobian determinant vanishes")
    big = affine_ring(3, consts=f.ring.names[2:])
    lift = [big.var(0), big.var(1)]
    j = [[f.components[i].derivative(jv).substitute(lift, big) for jv in range(2)]
         for i in range(2)]
    x3 = RationalFunction.from_poly(big.var(2))
    comps = [c.substitute(lift, big) for c in f.components]
    comps.append((j[1][0] + j[1][1] * x3) / (j[0][0] + j[0][1] * x3))
    return AffineMap(comps)


# -- the reciprocal involution and its linear partner in any dimension -----------


def reciprocal_map(n: int) -> ProjectiveMap:
    """[x0^{-1} : ... : xn^{-1}] on P^n, cleared to degree n."""
    r = proj_ring(n)
    x = r.variables
    prod = r.one
    for v in x:
        prod = prod * v
    return ProjectiveMap([exact_div(prod, v) for v in x])


def g_matrix(n: int) -> Matrix:
    """[x_n - x_0 : x_n - x_1 : ... : x_n - x_{n-1} : x_n]."""
    rows = []
    for i in range(n):
        row = [0] * (n + 1)
        row[i] = -1
        row[n] = 1
        rows.append(tuple(row))
    rows.append(tuple([0] * n + [1]))
    return tuple(rows)


def g_map(n: int) -> ProjectiveMap:
    return from_matrix(g_matrix(n), proj_ring(n))


def g_map_twisted(n: int) -> ProjectiveMap:
    """The same linear map twisted by g -> (g^T)^{-1}."""
    return from_matrix(mat_adjugate(mat_transpose(g_matrix(n))), proj_ring(n))


# -- cross ratio of a line's intersections with the coordinate planes -------------


@dataclass(frozen=True)
class LineInP3:
    """A line spanned by two non-proportional points of P^3."""

    p: tuple
    q: tuple

    def __post_init__(self):
        if len(self.p) != 4 or len(self.q) != 4:
            raise ValueError("points of P^3 have four coordinates")

    def transformed(self, m: Matrix) -> "LineInP3":
        return LineInP3(_apply(m, self.p), _apply(m, self.q))


def _apply(m: Matrix, pt: tuple) -> tuple:
    return tuple(sum(m[i][j] * pt[j] for j in range(4)) for i in range(4))


def cross_ratio(line: LineInP3):
    """Cross ratio of the four plane traces, convention
    (t0,t1;t2,t3) = ((t0-t2)(t1-t3)) / ((t1-t2)(t0-t3)).

    Parametrize the line as p + t*q; the trace on {x_i = 0} sits at
    t_i = -p_i/q_i.  Raises on lines inside a coordinate plane or with a
    degenerate trace.
    """
    ts = []
    for pi, qi in zip(line.p, line.q):
        if _is_zero(qi):
            if _is_zero(pi):
                raise ValueError("line lies inside a coordinate plane")
            raise ValueError("degenerate trace: direction coordinate vanishes")
        ts.append(_div(-pi, qi))
    num = (ts[0] - ts[2]) * (ts[1] - ts[3])
    den = (ts[1] - ts[2]) * (ts[0] - ts[3])
    if _is_zero(den):
        raise ValueError("degenerate trace: coincident intersection points")
    return _div(num, den)


def _is_zero(v) -> bool:
    if isinstance(v, Polynomial):
        return v.is_zero
    if isinstance(v, RationalFunction):
        return v.is_zero
    return v == 0


def _div(a, b):
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return Fraction(a) / Fraction(b)
    return a / b


def symbolic_line() -> LineInP3:
    """A fully general line with symbolic coordinates p0..p3, q0..q3."""
    r = ring(consts=("p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3"))
    p = tuple(r.var(i) for i in range(4))
    q = tuple(r.var(i) for i in range(4, 8))
    return LineInP3(p, q)


# the permutations realizing the two anharmonic behaviours: tau1 is the
# double transposition (it fixes the cross ratio), tau2 the 3-cycle whose
# action on cross-ratio values has order three; their monomial matrices
# are exactly the two integer matrices of the obstruction identity below
TAU1_P3 = mat([(0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)])
TAU2_P3 = mat([(1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0)])

S1 = mat([(0, 0, 1), (1, 0, 0), (0, 1, 0)])
S2 = mat([(0, -1, 1), (0, -1, 0), (1, -1, 0)])
A_GL3 = mat([(1, 0, 0), (0, 1, 0), (0, -1, 1)])
B_GL3 = mat([(-1, 1, 0), (0, 0, 1), (1, 0, 0)])
T_GL3 = mat([(1, 0, 0), (0, -1, 0), (0, 0, -1)])

# generator images in the larger torus normalizer (appendix identities)
C_GL = mat([(-1, 2), (0, 1)])
D_GL = mat([(-1, 0), (-1, 1)])
E_GL = mat([(0, 1), (1, 0)])
B_GL = mat([(1, 1), (0, 1)])


def monomial_matrix_of_permutation(perm_matrix: Matrix) -> Matrix:
    """GL_n(Z) exponent matrix of a coordinate permutation of P^n (chart x0)."""
    n = len(perm_matrix) - 1
    # row i of the result: exponents of (x_{perm(i)} / x_{perm(0)})
    perm = [row.index(1) for row in perm_matrix]
    out = []
    for i in range(1, n + 1):
        row = [0] * n
        if perm[i] != 0:
            row[perm[i] - 1] += 1
        if perm[0] != 0:
            row[perm[0] - 1] -= 1
        out.append(tuple(row))
    return tuple(out)


def anharmonic_images(r):
    """The six classical values a cross ratio takes under reordering."""
    one = 1
    return (r, one / r, one - r, one / (one - r), (r - one) / r, r / (r - one))
