"""The conic-space embedding of the plane Cremona group into Bir(P^5).

P^5 is identified with the projectivized space of symmetric 3x3 matrices
through the fixed bijection

    (a_ij) <-> [a00 : a11 : a22 : a12 : a02 : a01],

so the point [x0:...:x5] carries the matrix [[x0,x5,x4],[x5,x1,x3],[x4,x3,x2]].
Every P^5 formula in this module uses that identification; the linear
action is computed structurally from it (S |-> g S g^T) rather than from a
transcribed matrix table.

Contents: the embedding ``phi`` and its dual, the adjugate involution, the
Veronese and secant maps, the projection to P^2 x P^2 with its inverse,
the induced embeddings ``psi`` and the fibration quotients ``chi``, and
the de Jonquieres image formulas with their two-term recursion family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .maps import (
    AffineMap,
    MultiProjectiveMap,
    ProjectiveMap,
    from_matrix,
    identity_map,
    mat,
    mat_adjugate,
    mat_transpose,
)
from .rings import (
    Polynomial,
    RationalFunction,
    Ring,
    affine_ring,
    poly_matrix_det,
    proj_ring,
    ring,
)
from .words import Cr2Word, Letter, f_word, s_word


class FibrationError(ValueError):
    """The second factor of a conjugated map failed to be x-free."""


def p5_ring(consts: tuple = ()) -> Ring:
    return proj_ring(5, consts=consts)


def p2_ring(consts: tuple = ()) -> Ring:
    return proj_ring(2, consts=consts)


def biproj_ring(consts: tuple = ()) -> Ring:
    return ring("x0", "x1", "x2", "y0", "y1", "y2", consts=consts)


def y_ring(consts: tuple = ()) -> Ring:
    return ring("y0", "y1", "y2", consts=consts)


def sym_matrix(r5: Ring):
    """The symmetric matrix carried by a point of P^5."""
    x = [r5.var(i) for i in range(6)]
    return ((x[0], x[5], x[4]),
            (x[5], x[1], x[3]),
            (x[4], x[3], x[2]))


def conic_coordinates(m) -> list:
    """Read a symmetric 3x3 matrix back off as P^5 coordinates."""
    return [m[0][0], m[1][1], m[2][2], m[1][2], m[0][2], m[0][1]]


def phi_linear(g, consts: tuple = ()) -> ProjectiveMap:
    """Image of a linear map of P^2 under the conic action S |-> g S g^T."""
    r5 = p5_ring(consts)
    rows = tuple(tuple(_lift(v, r5) for v in row) for row in g)
    s = sym_matrix(r5)
    gs = tuple(tuple(sum((rows[i][k] * s[k][j] for k in range(3)), r5.zero)
                     for j in range(3)) for i in range(3))
    n = tuple(tuple(sum((gs[i][k] * rows[j][k] for k in range(3)), r5.zero)
                    for j in range(3)) for i in range(3))
    return ProjectiveMap(conic_coordinates(n))


def _lift(v, r: Ring) -> Polynomial:
    return v.coerce(r) if isinstance(v, Polynomial) else r.const(v)


def phi_sigma(consts: tuple = ()) -> ProjectiveMap:
    r5 = p5_ring(consts)
    x = [r5.var(i) for i in range(6)]
    return ProjectiveMap([x[1] * x[2], x[0] * x[2], x[0] * x[1],
                          x[3] * x[0], x[4] * x[1], x[5] * x[2]])


def alpha(g):
    """The outer automorphism g -> (g^T)^(-1), projectively the adjugate transpose."""
    return mat_adjugate(mat_transpose(g))


def phi_dual_sigma(consts: tuple = ()) -> ProjectiveMap:
    r5 = p5_ring(consts)
    x = [r5.var(i) for i in range(6)]
    q1 = x[1] * x[2] - x[3] ** 2
    q2 = x[0] * x[2] - x[4] ** 2
    q3 = x[0] * x[1] - x[5] ** 2
    return ProjectiveMap.from_factors([
        [(q1, 2), (x[0], 1)],
        [(q2, 2), (x[1], 1)],
        [(q3, 2), (x[2], 1)],
        [(q2, 1), (q3, 1), (x[3], 1)],
        [(q1, 1), (q3, 1), (x[4], 1)],
        [(q1, 1), (q2, 1), (x[5], 1)],
    ], r5)


def phi(w: Cr2Word, consts: tuple = ()) -> ProjectiveMap:
    """The embedding on words: linear letters act on conics, sigma as printed."""
    return _fold(w, consts, dual=False)


def phi_dual(w: Cr2Word, consts: tuple = ()) -> ProjectiveMap:
    """The dual embedding: linear letters are twisted by alpha."""
    return _fold(w, consts, dual=True)


def _fold(w: Cr2Word, consts: tuple, dual: bool) -> ProjectiveMap:
    cur = None
    for letter in reversed(w.letters):
        m = _letter_image(letter, consts, dual)
        cur = m if cur is None else m.after(cur)
    return cur if cur is not None else identity_map(p5_ring(consts))


def _letter_image(letter: Letter, consts: tuple, dual: bool) -> ProjectiveMap:
    if letter.is_sigma:
        return phi_dual_sigma(consts) if dual else phi_sigma(consts)
    g = letter.effective_matrix()
    if dual:
        g = alpha(g)
    return phi_linear(g, consts)


def adjugate_map(consts: tuple = ()) -> ProjectiveMap:
    """The degree-2 involution of P^5 sending a conic to its adjugate (dual)."""
    r5 = p5_ring(consts)
    x = [r5.var(i) for i in range(6)]
    return ProjectiveMap([
        x[1] * x[2] - x[3] ** 2,
        x[0] * x[2] - x[4] ** 2,
        x[0] * x[1] - x[5] ** 2,
        x[4] * x[5] - x[0] * x[3],
        x[3] * x[5] - x[1] * x[4],
        x[3] * x[4] - x[2] * x[5],
    ])


def secant_cubic(consts: tuple = ()) -> Polynomial:
    """Determinant of the symmetric matrix: the cubic cutting out the secant variety."""
    return poly_matrix_det(sym_matrix(p5_ring(consts)))


def exceptional_quadrics(consts: tuple = ()) -> tuple:
    """The three rank-2 quadrics z1*z2-z3^2, z0*z2-z4^2, z0*z1-z5^2."""
    r5 = p5_ring(consts)
    x = [r5.var(i) for i in range(6)]
    return (x[1] * x[2] - x[3] ** 2,
            x[0] * x[2] - x[4] ** 2,
            x[0] * x[1] - x[5] ** 2)


def veronese(consts: tuple = ()) -> ProjectiveMap:
    """P^2 -> P^5, [X:Y:Z] -> [X^2:Y^2:Z^2:YZ:XZ:XY] (the double-line conics)."""
    r2 = p2_ring(consts)
    x, y, z = (r2.var(i) for i in range(3))
    return ProjectiveMap([x * x, y * y, z * z, y * z, x * z, x * y])


def secant(consts: tuple = (), printed_variant: bool = False) -> MultiProjectiveMap:
    """P^2 x P^2 -> P^5 onto the secant variety, generically 2:1.

    The fourth coordinate is the symmetric polarization (Y*W + V*Z)/2; the
    variant with (Y*W + U*Z)/2 is kept only as a foil (it fails both the
    diagonal restriction and sigma-equivariance; see the tests).
    """
    rb = biproj_ring(consts)
    X, Y, Z, U, V, W = (rb.var(i) for i in range(6))
    half = Fraction(1, 2)
    fourth = half * ((Y * W + U * Z) if printed_variant else (Y * W + V * Z))
    comps = [X * U, Y * V, Z * W,
             fourth,
             half * (X * W + U * Z),
             half * (X * V + U * Y)]
    return MultiProjectiveMap((3, 3), (comps,))


def diagonal_embedding(consts: tuple = ()) -> MultiProjectiveMap:
    """The diagonal P^2 -> P^2 x P^2."""
    r2 = p2_ring(consts)
    comps = tuple(r2.var(i) for i in range(3))
    return MultiProjectiveMap((3,), (comps, comps))


def product_action(w: Cr2Word, consts: tuple = ()) -> MultiProjectiveMap:
    """The word acting diagonally on P^2 x P^2 (same map on both factors)."""
    rb = biproj_ring(consts)
    m = w.to_map(p2_ring(consts))
    xs = [rb.var(i) for i in range(3)]
    ys = [rb.var(i) for i in range(3, 6)]
    bx = tuple(c.substitute(xs, rb) for c in m.components)
    by = tuple(c.substitute(ys, rb) for c in m.components)
    return MultiProjectiveMap((3, 3), (bx, by))


def projection_a(consts: tuple = ()) -> MultiProjectiveMap:
    """Projection of the secant cubic onto the two disjoint planes inside it."""
    r5 = p5_ring(consts)
    x = [r5.var(i) for i in range(6)]
    return MultiProjectiveMap((6,), ((x[1], x[2], x[3]), (x[0], x[4], x[5])))


def projection_a_inverse(consts: tuple = ()) -> MultiProjectiveMap:
    rb = biproj_ring(consts)
    x0, x1, x2, y0, y1, y2 = (rb.var(i) for i in range(6))
    p1 = x0 * y1 ** 2 + x1 * y2 ** 2 - 2 * x2 * y1 * y2
    conic = x0 * x1 - x2 ** 2
    return MultiProjectiveMap.from_factors(
        (3, 3),
        ([[(conic, 1), (y0, 2)],
          [(p1, 1), (x0, 1)],
          [(p1, 1), (x1, 1)],
          [(p1, 1), (x2, 1)],
          [(conic, 1), (y0, 1), (y1, 1)],
          [(conic, 1), (y0, 1), (y2, 1)]],),
        rb)


def rho(consts: tuple = ()) -> MultiProjectiveMap:
    rb = biproj_ring(consts)
    x0, x1, x2, y0, y1, y2 = (rb.var(i) for i in range(6))
    return MultiProjectiveMap(
        (3, 3),
        ((x2 * y0, x0 * y1, x2 * y1),
         (x0 * y1 ** 2, x1 * y2 ** 2, x2 * y1 * y2)))


def rho_inverse(consts: tuple = ()) -> MultiProjectiveMap:
    rb = biproj_ring(consts)
    x0, x1, x2, y0, y1, y2 = (rb.var(i) for i in range(6))
    return MultiProjectiveMap(
        (3, 3),
        ((x1 ** 2 * y2 ** 2, x2 ** 2 * y0 * y1, x1 * x2 * y2 ** 2),
         (x0 * y0, x2 * y0, x1 * y2)))


def psi(i: int, w: Cr2Word, consts: tuple = ()) -> MultiProjectiveMap:
    """The two embeddings into Bir(P^2 x P^2): conjugates of phi / phi_dual."""
    if i not in (1, 2):
        raise ValueError("psi index must be 1 or 2")
    inner = phi(w, consts) if i == 1 else phi_dual(w, consts)
    mid = MultiProjectiveMap.from_projective(inner).after(projection_a_inverse(consts))
    return projection_a(consts).after(mid)


def chi(i: int, w: Cr2Word, consts: tuple = ()) -> ProjectiveMap:
    """Action on the second factor after straightening by rho.

    Requires the conjugated map to preserve the second-factor fibration
    exactly: any surviving x-variable raises FibrationError instead of
    projecting silently.
    """
    m = rho(consts).after(psi(i, w, consts)).after(rho_inverse(consts))
    second = m.blocks[1]
    for c in second:
        for v in range(3):
            if c.uses_variable(v):
                raise FibrationError(
                    f"x{v} survives in the second factor: {c.render()}")
    return ProjectiveMap([c.coerce(y_ring(consts)) for c in second])


# -- the de Jonquieres family ------------------------------------------------------


AFF5 = affine_ring(5)
LAMBDA = "lambda1"
AFF5L = affine_ring(5, consts=(LAMBDA,))


@dataclass(frozen=True)
class ABFamily:
    """The two-term recursion pair attached to the n-th shear image."""

    n: int
    a: Polynomial  # degree n-1 for n >= 1; a_0 = 0
    b: Polynomial  # degree n;   b_0 = 1


@lru_cache(maxsize=None)
def ab_family(n: int) -> ABFamily:
    """a_n = 2*x5*a_{n-1} - x1*a_{n-2} (a_0=0, a_1=2), same recursion for b."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    x1 = AFF5.var(0)
    x5 = AFF5.var(4)
    if n == 0:
        return ABFamily(0, AFF5.zero, AFF5.one)
    if n == 1:
        return ABFamily(1, AFF5.const(2), x5)
    prev, prev2 = ab_family(n - 1), ab_family(n - 2)
    return ABFamily(n,
                    2 * x5 * prev.a - x1 * prev2.a,
                    2 * x5 * prev.b - x1 * prev2.b)


def elementary_word(n: int, lam: Polynomial | Fraction | int) -> Cr2Word:
    """Word for the shear (X, Y + lam*X^n): conjugate the linear case by s."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        base = Cr2Word((Letter(mat([(1, 0, 0), (0, 1, 0), (lam, 0, 1)])),))
    else:
        base = Cr2Word((Letter(mat([(1, 0, 0), (0, 1, 0), (0, lam, 1)])),))
    if n <= 1:
        return base
    s = s_word()
    return s ** (n - 1) * base * s.inverse() ** (n - 1)


def phi_elementary(n: int, lam=None) -> AffineMap:
    """Closed form of the shear image on A^5 (chart x0), symbolic by default."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    r = AFF5L if lam is None else AFF5
    if lam is None:
        lam = AFF5L.var_by_name(LAMBDA)
    else:
        lam = r.const(lam)
    x1, x2, x3, x4, x5 = (r.var(i) for i in range(5))
    if n == 0:
        comps = (x1, x2 + 2 * lam * x4 + lam * lam, x3 + lam * x5, x4 + lam, x5)
    else:
        fam, prev = ab_family(n), ab_family(n - 1)
        a_n, a_p = fam.a.coerce(r), prev.a.coerce(r)
        b_n, b_p = fam.b.coerce(r), prev.b.coerce(r)
        comps = (x1,
                 x2 + lam * lam * x1 ** n + lam * x3 * a_n - lam * x4 * x1 * a_p,
                 x3 + lam * x1 * b_p,
                 x4 + lam * b_n,
                 x5)
    return AffineMap([RationalFunction.from_poly(c) for c in comps])


def phi_s_affine() -> AffineMap:
    """Image of (X, XY) on the chart x0 = 1 of P^5."""
    x1, x2, x3, x4, x5 = (AFF5.var(i) for i in range(5))
    return AffineMap([x1, x1 * x2, x1 * x4, 2 * x4 * x5 - x3, x5])


def phi_s_inverse_affine() -> AffineMap:
    x1, x2, x3, x4, x5 = (AFF5.var(i) for i in range(5))
    one = AFF5.one
    return AffineMap([
        RationalFunction.from_poly(x1),
        RationalFunction.make(x2, x1),
        RationalFunction.make(2 * x3 * x5 - x4 * x1, x1),
        RationalFunction.make(x3, x1),
        RationalFunction.from_poly(x5),
    ])


def phi_elementary_by_word(n: int) -> AffineMap:
    """Shear image computed by conjugating with the printed s-images.

    Independent of the closed form: the base cases come from the conic
    action of the shear matrices, the step from s f s^(-1).
    """
    if n <= 1:
        w = elementary_word(n, _lambda_entry())
        return phi(w, consts=(LAMBDA,)).to_affine_chart(0)
    prev = phi_elementary_by_word(n - 1)
    return phi_s_affine().after(prev).after(phi_s_inverse_affine())


def _lambda_entry() -> Polynomial:
    scalars = ring(consts=(LAMBDA,))
    return scalars.var_by_name(LAMBDA)


def phi_affine_chart0(w: Cr2Word, consts: tuple = ()) -> AffineMap:
    """phi(w) in the affine chart x0 = 1 (the polynomial-automorphism chart)."""
    return phi(w, consts).to_affine_chart(0)


FWORD = f_word
SWORD = s_word
