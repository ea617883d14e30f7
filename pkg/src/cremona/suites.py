"""The named verification suites behind `verify <suite>`.

Each suite re-derives its claims from scratch (words, generator images,
recursions) and checks them by exact algebra; nothing is compared against
floating point or cached intermediate state.  Random sampling is driven
entirely by the seed recorded in the report, so reports are reproducible
bit for bit.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import codim1 as c1
from .conics import (
    AFF5,
    LAMBDA,
    ab_family,
    adjugate_map,
    alpha,
    biproj_ring,
    chi,
    diagonal_embedding,
    exceptional_quadrics,
    p2_ring,
    p5_ring,
    phi,
    phi_dual,
    phi_dual_sigma,
    phi_elementary,
    phi_elementary_by_word,
    phi_linear,
    phi_s_affine,
    phi_s_inverse_affine,
    phi_sigma,
    product_action,
    projection_a,
    projection_a_inverse,
    psi,
    rho,
    rho_inverse,
    secant,
    secant_cubic,
    veronese,
    y_ring,
)
from .maps import (
    AffineMap,
    MultiProjectiveMap,
    ProjectiveMap,
    affine_identity,
    degree_sequence,
    from_matrix,
    identity_map,
    image_in_subspace,
    mat,
    mat_identity,
    mat_mul,
    mat_pow,
    matrix_word,
    monomial_map,
    pullback_hypersurface,
)
from .report import VerificationReport
from .rings import RationalFunction, affine_ring, exact_div, ring
from .volforms import omega_form, pullback
from .words import (
    Cr2Word,
    G0_MATRIX,
    GS_MATRIX,
    H_MATRIX,
    SIGMA,
    TAU1_MATRIX,
    TAU2_MATRIX,
    f_word,
    linear_word,
    s_word,
    word,
)

DEFAULT_SEED = 0


# -- shared sampling ------------------------------------------------------------


_NAMED_POOL = (H_MATRIX, G0_MATRIX, TAU1_MATRIX, TAU2_MATRIX, GS_MATRIX)


def _random_linear(rng: random.Random):
    """Invertible 3x3 matrices biased toward sparse shears and permutations."""
    kind = rng.randrange(4)
    if kind == 0:
        return _NAMED_POOL[rng.randrange(len(_NAMED_POOL))]
    if kind == 1:  # permutation
        p = list(range(3))
        rng.shuffle(p)
        return tuple(tuple(1 if j == p[i] else 0 for j in range(3)) for i in range(3))
    if kind == 2:  # diagonal
        return tuple(tuple(rng.choice((1, 2, 3, -1)) if i == j else 0 for j in range(3))
                     for i in range(3))
    i, j = rng.sample(range(3), 2)  # elementary shear
    m = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
    m[i][j] = rng.choice((1, -1, 2))
    return tuple(tuple(r) for r in m)


def _random_word(rng: random.Random, maxlen: int) -> Cr2Word:
    n = rng.randint(1, maxlen)
    letters = []
    for _ in range(n):
        letters.append("sigma" if rng.random() < 0.5 else _random_linear(rng))
    return word(*letters)


def _random_unimodular(rng: random.Random):
    m = mat_identity(3)
    for _ in range(4):
        i, j = rng.sample(range(3), 2)
        e = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
        e[i][j] = rng.randint(-2, 2)
        m = mat_mul(m, tuple(tuple(r) for r in e))
    return m


def _perm_matrices():
    out = []
    for p in itertools.permutations(range(3)):
        out.append((p, tuple(tuple(1 if j == p[i] else 0 for j in range(3))
                             for i in range(3))))
    return out


def _witness(a, b):
    return lambda: f"lhs = {a.render() if hasattr(a, 'render') else a}; " \
                   f"rhs = {b.render() if hasattr(b, 'render') else b}"


# -- relations -------------------------------------------------------------------


def suite_relations(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("relations", seed)
    r5 = p5_ring()
    x = r5.variables
    ps = phi_sigma()

    printed = ProjectiveMap([x[1] * x[2], x[0] * x[2], x[0] * x[1],
                             x[3] * x[0], x[4] * x[1], x[5] * x[2]])
    rep.check("rel-00-printed-sigma-image",
              "conic action of the quadratic involution: printed sextuple",
              lambda: ps.equal_up_to_scalar(printed))
    rep.check("rel-01-sigma-involution", "image of sigma squares to the identity",
              lambda: (ps ** 2).is_identity())

    for p, m in _perm_matrices():
        pm = phi_linear(m)
        rep.check(f"rel-10-commute-perm-{''.join(map(str, p))}",
                  "sigma commutes with coordinate permutations",
                  lambda pm=pm: ps.after(pm).equal_up_to_scalar(pm.after(ps)))

    for k in range(5):
        a, b, c = (Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3))
        d = phi_linear(((a, 0, 0), (0, b, 0), (0, 0, c)))
        dinv = phi_linear(((1 / a, 0, 0), (0, 1 / b, 0), (0, 0, 1 / c)))
        rep.check(f"rel-20-diagonal-{k}",
                  "sigma conjugates a diagonal map to its inverse",
                  lambda d=d, dinv=dinv:
                  ps.after(d).after(ps).equal_up_to_scalar(dinv))

    k3 = (ps.after(phi_linear(H_MATRIX))) ** 3
    rep.check("rel-30-sigma-h-cube", "(sigma h)^3 = id transported to conic space",
              k3.is_identity, _witness(k3, "id"))

    prod = r5.one
    for v in x:
        prod = prod * v
    naive = ProjectiveMap([exact_div(prod, v) for v in x])
    nh3 = (naive.after(phi_linear(H_MATRIX))) ** 3
    rep.check("rel-40-naive-cube-fails",
              "the coordinatewise-reciprocal candidate breaks the cube relation",
              lambda: not nh3.is_identity())

    for k in range(20):
        w = _random_word(rng, 4)
        cut = rng.randint(0, len(w.letters))
        w1 = Cr2Word(w.letters[:cut])
        w2 = Cr2Word(w.letters[cut:])
        rep.check(f"rel-50-homomorphism-{k:02d}",
                  "image of a concatenation equals the composed images",
                  lambda w=w, w1=w1, w2=w2:
                  phi(w).equal_up_to_scalar(phi(w1).after(phi(w2))))
    return rep


# -- dual embedding ----------------------------------------------------------------


def suite_dual(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("dual", seed)
    r5 = p5_ring()
    x = r5.variables
    ps = phi_sigma()
    ad = adjugate_map()
    pds = phi_dual_sigma()

    printed_ad = ProjectiveMap([
        x[1] * x[2] - x[3] ** 2, x[0] * x[2] - x[4] ** 2, x[0] * x[1] - x[5] ** 2,
        x[4] * x[5] - x[0] * x[3], x[3] * x[5] - x[1] * x[4],
        x[3] * x[4] - x[2] * x[5]])
    rep.check("dual-00-printed-adjugate", "printed quadratic involution of conic space",
              lambda: ad.equal_up_to_scalar(printed_ad))
    rep.check("dual-01-adjugate-degree", "adjugate involution has degree 2",
              lambda: ad.degree() == 2)
    rep.check("dual-02-adjugate-involution", "adjugate squares to the identity",
              lambda: (ad ** 2).is_identity())

    q1, q2, q3 = exceptional_quadrics()
    printed_dual = ProjectiveMap([q1 * q1 * x[0], q2 * q2 * x[1], q3 * q3 * x[2],
                                  q2 * q3 * x[3], q1 * q3 * x[4], q1 * q2 * x[5]])
    rep.check("dual-10-printed-sigma-image", "printed quintic sextuple of the dual",
              lambda: pds.equal_up_to_scalar(printed_dual))
    rep.check("dual-11-degree-five", "dual image of sigma has degree 5",
              lambda: pds.degree() == 5)
    rep.check("dual-12-homogeneous-five",
              "every component of the dual image is homogeneous of degree 5",
              lambda: all(c.homogeneous_degree() == 5 for c in pds.components))
    rep.check("dual-13-conjugate", "dual sigma image = Ad o (sigma image) o Ad",
              lambda: pds.equal_up_to_scalar(ad.after(ps).after(ad)))
    rep.check("dual-14-dual-involution", "dual sigma image is an involution",
              lambda: (pds ** 2).is_identity())

    for k in range(5):
        g = _random_unimodular(rng)
        rep.check(f"dual-20-conjugation-{k}",
                  "Ad conjugates the conic action to its contragredient",
                  lambda g=g: ad.after(phi_linear(g)).after(ad)
                  .equal_up_to_scalar(phi_linear(alpha(g))))

    fw = f_word()
    g0 = (x[0] * x[1] - x[5] ** 2) ** 2 * x[0]
    g1 = (x[0] ** 2 * x[1] ** 2 * x[2] - 2 * x[0] * x[1] * x[2] * x[5] ** 2
          - 4 * x[0] * x[1] * x[3] * x[4] * x[5] + 4 * x[0] * x[3] ** 2 * x[5] ** 2
          + 4 * x[1] * x[4] ** 2 * x[5] ** 2 + x[2] * x[5] ** 4
          - 4 * x[3] * x[4] * x[5] ** 3)
    g2 = (x[0] * x[2] - x[4] ** 2) ** 2 * x[1]
    g3 = (x[0] * x[2] - x[4] ** 2) * (x[0] * x[1] * x[3] - 2 * x[1] * x[4] * x[5]
                                      + x[3] * x[5] ** 2)
    g4 = -(x[0] * x[2] - x[4] ** 2) * (x[0] * x[1] - x[5] ** 2) * x[5]
    g5 = (x[0] * x[1] - x[5] ** 2) * (x[0] * x[1] * x[4] - 2 * x[0] * x[3] * x[5]
                                      + x[4] * x[5] ** 2)
    rep.check("dual-30-printed-f-image",
              "printed quintic sextuple of the dual image of [XY:YZ:Z^2]",
              lambda: phi_dual(fw).equal_up_to_scalar(
                  ProjectiveMap([g0, g1, g2, g3, g4, g5])))

    for p, m in _perm_matrices():
        pm = phi_linear(alpha(m))
        rep.check(f"dual-40-commute-perm-{''.join(map(str, p))}",
                  "dual: sigma commutes with coordinate permutations",
                  lambda pm=pm: pds.after(pm).equal_up_to_scalar(pm.after(pds)))
    for k in range(5):
        a, b, c = (Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(3))
        d = phi_linear(alpha(((a, 0, 0), (0, b, 0), (0, 0, c))))
        dinv = phi_linear(alpha(((1 / a, 0, 0), (0, 1 / b, 0), (0, 0, 1 / c))))
        rep.check(f"dual-50-diagonal-{k}",
                  "dual: sigma conjugates a diagonal map to its inverse",
                  lambda d=d, dinv=dinv:
                  pds.after(d).after(pds).equal_up_to_scalar(dinv))
    kd3 = (pds.after(phi_linear(alpha(H_MATRIX)))) ** 3
    rep.check("dual-60-sigma-h-cube", "dual: (sigma h)^3 = id", kd3.is_identity)

    for k in range(8):
        w = _random_word(rng, 3)
        rep.check(f"dual-70-ad-transport-{k}",
                  "dual word image = Ad o word image o Ad",
                  lambda w=w: phi_dual(w).equal_up_to_scalar(
                      ad.after(phi(w)).after(ad)))
    return rep


# -- equivariance -------------------------------------------------------------------


def suite_equivariance(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("equivariance", seed)
    r2 = p2_ring()
    v = veronese()
    s = secant()

    X, Y, Z = r2.variables
    rep.check("equiv-00-printed-veronese", "printed quadratic parametrization",
              lambda: v == ProjectiveMap([X * X, Y * Y, Z * Z, Y * Z, X * Z, X * Y]))
    rep.check("equiv-01-veronese-point", "all-ones point maps to all-ones",
              lambda: len(set(v.eval_point((1, 1, 1)))) == 1)
    rep.check("equiv-02-secant-diagonal",
              "secant map restricted to the diagonal is the Veronese map",
              lambda: s.after(diagonal_embedding()).to_projective()
              .equal_up_to_scalar(v))
    s_bad = secant(printed_variant=True)
    rep.check("equiv-03-asymmetric-variant-fails",
              "the asymmetric fourth coordinate breaks the diagonal restriction",
              lambda: not s_bad.after(diagonal_embedding()).to_projective()
              .equal_up_to_scalar(v))
    rep.check("equiv-04-veronese-in-secant-cubic",
              "the double-line surface lies in the secant cubic",
              lambda: secant_cubic().substitute(v.components, r2).is_zero)

    gens = [("sigma", SIGMA), ("h", linear_word(H_MATRIX)),
            ("g0", linear_word(G0_MATRIX)), ("fword", f_word())]
    samples = gens + [(f"random-{k}", _random_word(rng, 3)) for k in range(10)]
    for name, w in samples:
        pw = phi(w)
        wm = w.to_map()
        rep.check(f"equiv-10-veronese-{name}",
                  "conic action intertwines the Veronese with the plane action",
                  lambda pw=pw, wm=wm: pw.after(v).equal_up_to_scalar(v.after(wm)))
        rep.check(f"equiv-20-secant-{name}",
                  "conic action intertwines the secant map with the product action",
                  lambda pw=pw, w=w: MultiProjectiveMap.from_projective(pw).after(s)
                  .equal_up_to_scalar(s.after(product_action(w))))
    return rep


# -- secant invariance ----------------------------------------------------------------


def suite_secant_invariance(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport("secant-invariance", seed)
    r5 = p5_ring()
    x = r5.variables
    f = secant_cubic()
    ps = phi_sigma()
    pds = phi_dual_sigma()

    r1 = pullback_hypersurface(ps, f, candidates=[x[0], x[1], x[2]])
    rep.check("secant-00-pullback-divides",
              "secant cubic divides its pullback under the sigma image",
              lambda: r1.divisible)
    rep.check("secant-01-cofactor",
              "cofactor is the coordinate-hyperplane product x0*x1*x2",
              lambda: r1.multiplicities == (1, 1, 1) and r1.residual.is_constant)
    q = exceptional_quadrics()
    r2 = pullback_hypersurface(pds, f, candidates=list(q))
    rep.check("secant-10-dual-pullback-divides",
              "secant cubic divides its pullback under the dual sigma image",
              lambda: r2.divisible)
    rep.check("secant-11-dual-cofactor",
              "dual cofactor is the squared product of the three rank-2 quadrics",
              lambda: r2.multiplicities == (2, 2, 2) and r2.residual.is_constant)

    ainv = projection_a_inverse()
    rb = biproj_ring()
    rep.check("secant-20-inverse-projection-in-cubic",
              "the plane-pair parametrization lands inside the secant cubic",
              lambda: f.substitute(ainv.all_components, rb).is_zero)
    a = projection_a()
    idmp = MultiProjectiveMap((3, 3), ((rb.var(0), rb.var(1), rb.var(2)),
                                       (rb.var(3), rb.var(4), rb.var(5))))
    rep.check("secant-21-projection-roundtrip",
              "projection composed with its inverse is the identity",
              lambda: a.after(ainv).equal_up_to_scalar(idmp))
    rep.check("secant-22-inverse-welldefined-point",
              "the inverse projection has a clean value at ([0:0:1],[1:0:0])",
              lambda: any(ainv.eval_point((0, 0, 1, 1, 0, 0))[0]))
    rep.check("secant-30-straightening-roundtrip",
              "the torus straightening map and its inverse cancel",
              lambda: rho().after(rho_inverse()).equal_up_to_scalar(idmp)
              and rho_inverse().after(rho()).equal_up_to_scalar(idmp))
    return rep


# -- contraction ------------------------------------------------------------------------


def suite_contraction(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport("contraction", seed)
    ps = phi_sigma()
    planes = [(0, (1, 2, 3)), (1, (0, 2, 4)), (2, (0, 1, 5))]
    for h, vanish in planes:
        rep.check(f"contract-0{h}-hyperplane-{h}",
                  "sigma image contracts each exceptional hyperplane to a plane",
                  lambda h=h, vanish=vanish: image_in_subspace(ps, h, vanish))
    rep.check("contract-10-identity-control",
              "the identity contracts nothing",
              lambda: not image_in_subspace(identity_map(p5_ring()), 0, (1,)))
    return rep


# -- volume form --------------------------------------------------------------------------


def suite_omega(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("omega", seed)
    om = omega_form()
    ps5 = phi_sigma().to_affine_chart(5)
    rep.check("omega-00-printed-chart-map",
              "sigma image in the chart x5 = 1: printed five rational functions",
              lambda: ps5 == _printed_sigma_chart5())
    rep.check("omega-01-sigma-invariance",
              "pullback under the sigma image fixes the form",
              lambda: pullback(ps5, om) == om)
    g = phi_linear(((-1, 0, 0), (0, -1, 0), (0, 0, 1))).to_affine_chart(5)
    rep.check("omega-02-halfturn-invariance",
              "pullback under the image of [-X:-Y:Z] fixes the form",
              lambda: pullback(g, om) == om)
    for k in range(3):
        m = mat_mul(_random_linear(rng), _random_linear(rng))
        gm = phi_linear(m).to_affine_chart(5)
        rep.check(f"omega-10-linear-{k}",
                  "pullback under a sampled linear word fixes the form",
                  lambda gm=gm: pullback(gm, om) == om)
    rep.note("omega-90-pole-order",
             "pole order along the secant cubic",
             "the invariant form has a double pole along the secant cubic in "
             "this chart (coefficient 1/Fbar^2); the order-three reading of the "
             "headline statement is recorded here without being adjudicated")
    return rep


def _printed_sigma_chart5() -> AffineMap:
    aring = affine_ring(5, names=("x0", "x1", "x2", "x3", "x4"))
    x0, x1, x2, x3, x4 = aring.variables
    return AffineMap([
        RationalFunction.from_poly(x1),
        RationalFunction.from_poly(x0),
        RationalFunction.make(x0 * x1, x2),
        RationalFunction.make(x0 * x3, x2),
        RationalFunction.make(x1 * x4, x2),
    ])


# -- the two-term recursion family ------------------------------------------------------------


def suite_ab_family(seed: int = DEFAULT_SEED, nmax: int = 8) -> VerificationReport:
    rep = VerificationReport("ab-family", seed)
    x1 = AFF5.var(0)
    x5 = AFF5.var(4)

    f2 = ab_family(2)
    rep.check("ab-00-first-values", "one recursion step from the seeds",
              lambda: f2.a == 4 * x5 and f2.b == 2 * x5 ** 2 - x1)
    rep.check("ab-01-degrees", "deg a_n = n-1 and deg b_n = n up to n = 8",
              lambda: all(ab_family(n).a.degree() == n - 1
                          and ab_family(n).b.degree() == n
                          for n in range(1, nmax + 1)))
    rep.check("ab-02-derivative-degree",
              "d(b_n)/dx5 has degree n-1 for n <= 6",
              lambda: all(ab_family(n).b.derivative(4).degree() == n - 1
                          for n in range(1, 7)))

    def cross(n, m):
        return ab_family(n).a * ab_family(m - 1).b - ab_family(n - 1).a * ab_family(m).b

    rep.check("ab-10-cross-identity",
              "a_n b_{m-1} - a_{n-1} b_m = x1 (a_{n-1} b_{m-2} - a_{n-2} b_{m-1})",
              lambda: all(cross(n, m) == x1 * cross(n - 1, m - 1)
                          for n in range(2, nmax + 1) for m in range(2, nmax + 1)))
    rep.check("ab-11-instance",
              "the smallest instance a2*b1 - a1*b2 evaluates to 2*x1, degree 1 < 2",
              lambda: cross(2, 2) == 2 * x1 and cross(2, 2).degree() == 1)

    def bound_ok(n, m):
        d = cross(n, m)
        return d.is_zero or d.degree() < max(m, n)

    rep.check("ab-12-degree-bound",
              "deg(a_n b_{m-1} - a_{n-1} b_m) < max(m, n) for n, m <= 8",
              lambda: all(bound_ok(n, m)
                          for n in range(1, nmax + 1) for m in range(1, nmax + 1)))

    rep.check("ab-20-printed-s-image",
              "word evaluation reproduces the printed image of (X, XY)",
              lambda: phi(s_word()).to_affine_chart(0) == phi_s_affine())
    rep.check("ab-21-printed-s-inverse",
              "word evaluation reproduces the printed image of (X, XY)^(-1)",
              lambda: phi(s_word().inverse()).to_affine_chart(0)
              == phi_s_inverse_affine())
    for n in range(6):
        rep.check(f"ab-30-closed-form-{n}",
                  "closed form of the shear image agrees with word evaluation",
                  lambda n=n: phi_elementary(n) == phi_elementary_by_word(n))
    return rep


# -- polynomial automorphisms ------------------------------------------------------------------


def suite_aut_a2(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("aut-a2-degrees", seed)
    for k in range(5):
        while True:
            m = ((1, 0, 0),
                 (rng.randint(-3, 3), rng.randint(-2, 2), rng.randint(-2, 2)),
                 (rng.randint(-3, 3), rng.randint(-2, 2), rng.randint(-2, 2)))
            det = m[1][1] * m[2][2] - m[1][2] * m[2][1]
            if det:
                break
        am = phi_linear(m).to_affine_chart(0)
        rep.check(f"aut-00-affine-to-affine-{k}",
                  "affine plane maps go to affine maps of the big chart",
                  lambda am=am: am.is_polynomial
                  and all(c.num.degree() <= 1 for c in am.components
                          if not c.num.is_zero))

    specs = [(1,), (0, 2), (1, 0, 1), (0, 0, 0, 3), (2, 1, 0, 0, 1), (0, 1, 0, 0, 0, 5)]
    for idx, spec in enumerate(specs):
        comp = None
        fplane = None
        a2 = affine_ring(2)
        for k, lam in enumerate(spec, start=1):
            if not lam:
                continue
            m = phi_elementary(k, Fraction(lam))
            comp = m if comp is None else comp.after(m)
            shear = AffineMap([a2.var(0), a2.var(1) + Fraction(lam) * a2.var(0) ** k])
            fplane = shear if fplane is None else fplane.after(shear)
        n = max(k for k, lam in enumerate(spec, start=1) if lam)
        rep.check(f"aut-10-composite-{idx}",
                  "image of a shear product is polynomial of the same degree",
                  lambda comp=comp, fplane=fplane, n=n:
                  comp.is_polynomial and comp.degree() == n
                  and fplane.degree() == n)
    return rep


def suite_degree_lower_bound(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("degree-lower-bound", seed)
    named = [("sigma", SIGMA), ("fword", f_word()),
             ("sigma-h", SIGMA * linear_word(H_MATRIX)), ("sword", s_word())]
    samples = named + [(f"random-{k}", _random_word(rng, 4)) for k in range(10)]
    for name, w in samples:
        rep.check(f"deg-00-{name}",
                  "plane degree never exceeds the conic-space degree",
                  lambda w=w: w.to_map().degree() <= phi(w).degree())
    rep.check("deg-10-sigma-exact", "sigma: both degrees equal 2",
              lambda: SIGMA.to_map().degree() == 2 and phi(SIGMA).degree() == 2)
    rep.check("deg-11-fword-exact", "[XY:YZ:Z^2]: both degrees equal 2",
              lambda: f_word().to_map().degree() == 2 and phi(f_word()).degree() == 2)
    return rep


# -- degree growth through the straightened second factor ----------------------------------------


def suite_chi_growth(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport("chi-growth", seed)
    yr = y_ring()
    y0, y1, y2 = yr.variables
    fw = f_word()
    r5 = p5_ring()
    x = r5.variables

    rep.check("chi-00-printed-f-image",
              "printed quadratic sextuple of the image of [XY:YZ:Z^2]",
              lambda: phi(fw).equal_up_to_scalar(ProjectiveMap(
                  [x[0] * x[1], x[1] * x[2], x[2] ** 2, x[2] * x[3],
                   -x[2] * x[5] + 2 * x[3] * x[4], x[1] * x[4]])))

    consts = ("a", "b", "c")
    sc = ring(consts=consts)
    a, b, c = (sc.var_by_name(n) for n in consts)
    dw = word(((a, 0, 0), (0, b, 0), (0, 0, c)))
    rb = biproj_ring(consts)
    xv = [rb.var(i) for i in range(6)]
    al, bl, cl = (v.coerce(rb) for v in (a, b, c))

    def conj(i):
        return rho(consts).after(psi(i, dw, consts)).after(rho_inverse(consts))

    exp1 = MultiProjectiveMap((3, 3), ((al * xv[0], bl * xv[1], cl * xv[2]),
                                       (xv[3], xv[4], xv[5])))
    rep.check("chi-10-straightened-diagonal",
              "straightened first embedding acts as the diagonal itself",
              lambda: conj(1).equal_up_to_scalar(exp1))
    exp2 = MultiProjectiveMap((3, 3),
                              ((bl * cl * xv[0], al * cl * xv[1], al * bl * xv[2]),
                               (xv[3], xv[4], xv[5])))
    rep.check("chi-11-straightened-diagonal-dual",
              "straightened second embedding acts by the inverse diagonal",
              lambda: conj(2).equal_up_to_scalar(exp2))

    c1m = chi(1, fw)
    rep.check("chi-20-printed-first-quotient",
              "printed quadratic action on the second factor",
              lambda: c1m.equal_up_to_scalar(ProjectiveMap(
                  [(y1 - 2 * y2) ** 2, y0 * y1, -y2 * (y1 - 2 * y2)])))
    c2m = chi(2, fw)
    rep.check("chi-21-printed-second-quotient",
              "printed cubic action on the second factor",
              lambda: c2m.equal_up_to_scalar(ProjectiveMap([
                  y0 ** 2 * y1 + 4 * y0 * y1 ** 2 - 6 * y0 * y1 * y2
                  - 3 * y1 * y2 ** 2 + 4 * y2 ** 3,
                  y0 * (y0 + 2 * y1 - 3 * y2) ** 2,
                  (2 * y0 * y1 - y0 * y2 - y2 ** 2) * (y0 + 2 * y1 - 3 * y2)])))
    rep.check("chi-22-identity", "empty word gives the identity on the quotient",
              lambda: chi(1, Cr2Word()).is_identity())

    seq = degree_sequence(c1m, 10, "chi1(f)")
    rep.check("chi-30-linear-growth",
              "degrees of the iterates: strictly increasing, constant steps",
              lambda: seq.degrees == (2, 4, 6, 8, 10, 12, 14, 16, 18, 20)
              and all(d2 > d1 for d1, d2 in zip(seq.degrees[1:], seq.degrees[2:]))
              and len(set(seq.first_differences()[1:])) == 1,
              lambda: f"degrees {seq.degrees}")

    ap = from_matrix(((1, 0, -1), (0, 1, -1), (0, 0, 1)), yr)
    apinv = from_matrix(((1, 0, 1), (0, 1, 1), (0, 0, 1)), yr)
    t = ap.after(c2m.after(c2m)).after(apinv)
    degs = []
    cur = t
    degs.append(cur.degree())
    for _ in range(7):
        cur = t.after(cur)
        degs.append(cur.degree())
    rep.check("chi-31-bounded-conjugate",
              "conjugated even iterates of the cubic quotient stay at degree 5",
              lambda: degs == [5] * 8, lambda: f"degrees {degs}")
    return rep


# -- codimension-one embeddings -------------------------------------------------------------------


def suite_codim1(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("codim1-relations", seed)
    a2 = affine_ring(2)

    def rand_plane_map():
        kind = rng.randrange(3)
        if kind == 0:
            while True:
                m = ((rng.randint(-2, 2), rng.randint(-2, 2)),
                     (rng.randint(-2, 2), rng.randint(-2, 2)))
                if m[0][0] * m[1][1] - m[0][1] * m[1][0]:
                    break
            return AffineMap([
                m[0][0] * a2.var(0) + m[0][1] * a2.var(1) + rng.randint(-2, 2),
                m[1][0] * a2.var(0) + m[1][1] * a2.var(1) + rng.randint(-2, 2)])
        if kind == 1:
            e = ((rng.choice((1, -1)), rng.randint(-1, 1)),
                 (0, rng.choice((1, -1))))
            return monomial_map(e)
        return AffineMap([a2.var(0),
                          a2.var(1) + rng.randint(1, 3) * a2.var(0) ** rng.randint(1, 2)])

    sig_aff = monomial_map(((-1, 0), (0, -1)))
    a3 = affine_ring(3)
    rep.check("codim1-00-twist-formula",
              "the twisted suspension of the reciprocal involution",
              lambda: c1.psi_l(1, sig_aff) == AffineMap([
                  RationalFunction.make(a3.one, a3.var(0)),
                  RationalFunction.make(a3.one, a3.var(1)),
                  RationalFunction.from_poly(a3.var(0) ** 2 * a3.var(1) ** 2
                                             * a3.var(2))]))
    rep.check("codim1-01-untwisted-is-standard",
              "exponent zero leaves the fiber coordinate alone",
              lambda: c1.psi_l(0, sig_aff).components[2]
              == RationalFunction.from_poly(a3.var(2)))

    for k in range(10):
        f, g = rand_plane_map(), rand_plane_map()
        rep.check(f"codim1-10-twist-chain-rule-{k}",
                  "twisted suspension is a homomorphism (all twists 0,1,2)",
                  lambda f=f, g=g: all(
                      c1.psi_l(l, f.after(g)) == c1.psi_l(l, f).after(c1.psi_l(l, g))
                      for l in (0, 1, 2)))
    for k in range(10):
        f, g = rand_plane_map(), rand_plane_map()
        rep.check(f"codim1-20-slope-chain-rule-{k}",
                  "projectivized differential is a homomorphism",
                  lambda f=f, g=g: c1.psi_b(f.after(g))
                  == c1.psi_b(f).after(c1.psi_b(g)))

    for n in (2, 3):
        sg = c1.reciprocal_map(n).after(c1.g_map(n))
        rep.check(f"codim1-30-reciprocal-cube-{n}",
                  "reciprocal involution and its linear partner satisfy the cube",
                  lambda sg=sg: (sg ** 3).is_identity())
        sga = c1.reciprocal_map(n).after(c1.g_map_twisted(n))
        rep.check(f"codim1-31-twisted-cube-fails-{n}",
                  "contragredient twist breaks the cube relation",
                  lambda sga=sga: not (sga ** 3).is_identity())

    h_aff = from_matrix(H_MATRIX).to_affine_chart(0)
    for l in (0, 1, 2):
        k = c1.psi_l(l, sig_aff).after(c1.psi_l(l, h_aff))
        rep.check(f"codim1-40-transported-cube-l{l}",
                  "the suspension transports the sigma-h cube to the identity",
                  lambda k=k: (k ** 3).is_identity())
    kb = c1.psi_b(sig_aff).after(c1.psi_b(h_aff))
    rep.check("codim1-41-transported-cube-slope",
              "the slope embedding transports the sigma-h cube to the identity",
              lambda: (kb ** 3).is_identity())

    fa = monomial_map(((-1, 0), (0, 1)))
    hline = AffineMap([1 - a2.var(0), a2.var(1)])
    for l in (0, 1, 2):
        k = c1.psi_l(l, hline).after(c1.psi_l(l, fa))
        rep.check(f"codim1-50-inversion-cube-l{l}",
                  "the realized coordinate-inversion cube transports to the identity",
                  lambda k=k: (k ** 3).is_identity())
    return rep


def suite_gl3z(seed: int = DEFAULT_SEED) -> VerificationReport:
    rep = VerificationReport("gl3z", seed)
    rep.check("gl3z-00-main-identity",
              "A s2 (B s2 B^-1) A^-1 equals s1 T exactly",
              lambda: matrix_word(c1.A_GL3, c1.S2, c1.B_GL3, c1.S2,
                                  (c1.B_GL3, -1), (c1.A_GL3, -1))
              == mat_mul(c1.S1, c1.T_GL3))
    rep.check("gl3z-01-s1-order", "s1 has order 3",
              lambda: mat_pow(c1.S1, 3) == mat_identity(3)
              and mat_pow(c1.S1, 1) != mat_identity(3))
    rep.check("gl3z-02-s2-order", "s2 has order 2",
              lambda: mat_pow(c1.S2, 2) == mat_identity(3))
    rep.check("gl3z-03-t-order", "T has order 2",
              lambda: mat_pow(c1.T_GL3, 2) == mat_identity(3))

    def pad(m, n):
        k = len(m)
        rows = []
        for i in range(n):
            row = [0] * n
            if i < k:
                for j in range(k):
                    row[j] = m[i][j]
            else:
                row[i] = 1
            rows.append(tuple(row))
        return tuple(rows)

    for n in (2, 3):
        rep.check(f"gl3z-10-conjugated-shear-{n}",
                  "D C E D^-1 equals the elementary shear matrix",
                  lambda n=n: matrix_word(pad(c1.D_GL, n), pad(c1.C_GL, n),
                                          pad(c1.E_GL, n), (pad(c1.D_GL, n), -1))
                  == pad(c1.B_GL, n))
    return rep


def suite_crossratio(seed: int = DEFAULT_SEED) -> VerificationReport:
    rng = random.Random(seed)
    rep = VerificationReport("crossratio-action", seed)
    rep.check("cr-00-numeric-example",
              "line (1,2,3,4)+t(1,1,1,1) has cross ratio 4/3",
              lambda: c1.cross_ratio(c1.LineInP3((1, 2, 3, 4), (1, 1, 1, 1)))
              == Fraction(4, 3))

    line = c1.symbolic_line()
    r = c1.cross_ratio(line)
    imgs = c1.anharmonic_images(r)
    rep.check("cr-10-tau1-invariance",
              "the double transposition fixes the cross ratio of a general line",
              lambda: c1.cross_ratio(line.transformed(c1.TAU1_P3)) == r)
    r2 = c1.cross_ratio(line.transformed(c1.TAU2_P3))
    rep.check("cr-11-tau2-order-three-branch",
              "the 3-cycle sends the cross ratio to an order-three anharmonic value",
              lambda: r2 in (imgs[3], imgs[4]))
    rep.check("cr-12-tau2-squared",
              "applying the 3-cycle twice gives the other order-three value",
              lambda: c1.cross_ratio(line.transformed(
                  mat_mul(c1.TAU2_P3, c1.TAU2_P3))) in (imgs[3], imgs[4]))
    rep.check("cr-13-tau2-cubed", "three applications restore the cross ratio",
              lambda: c1.cross_ratio(line.transformed(mat_pow(c1.TAU2_P3, 3))) == r)
    rep.check("cr-14-branch-has-order-three",
              "the induced anharmonic map has exact order three",
              lambda: r2 != r and c1.cross_ratio(line.transformed(
                  mat_mul(c1.TAU2_P3, c1.TAU2_P3))) != r)

    rep.check("cr-20-monomial-matrices",
              "the two permutations carry exactly the obstruction matrices",
              lambda: c1.monomial_matrix_of_permutation(c1.TAU1_P3) == c1.S2
              and c1.monomial_matrix_of_permutation(c1.TAU2_P3) == c1.S1)

    rt = ring(consts=("t0", "t1", "t2", "t3"))
    ts = [RationalFunction.from_poly(rt.var(i)) for i in range(4)]

    def conv(seq):
        return (((seq[0] - seq[2]) * (seq[1] - seq[3]))
                / ((seq[1] - seq[2]) * (seq[0] - seq[3])))

    base = conv(ts)
    rep.check("cr-30-klein-invariance",
              "the convention is invariant under the double transpositions",
              lambda: all(conv([ts[i] for i in p]) == base
                          for p in ((1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))))

    for k in range(3):
        p = tuple(rng.randint(1, 9) for _ in range(4))
        q = tuple(rng.randint(1, 9) for _ in range(4))
        al, be, ga, de = (rng.randint(1, 5) for _ in range(4))
        if al * de == be * ga:
            de += 1
        try:
            v1 = c1.cross_ratio(c1.LineInP3(p, q))
            p2 = tuple(al * a + be * b for a, b in zip(p, q))
            q2 = tuple(ga * a + de * b for a, b in zip(p, q))
            v2 = c1.cross_ratio(c1.LineInP3(p2, q2))
            ok = v1 == v2
        except ValueError:
            ok = True  # degenerate sample: nothing to compare
        rep.check(f"cr-40-respanning-{k}",
                  "the cross ratio does not depend on the spanning points",
                  lambda ok=ok: ok)
    return rep


# -- registry -----------------------------------------------------------------------


SUITES = {
    "relations": suite_relations,
    "dual": suite_dual,
    "equivariance": suite_equivariance,
    "secant-invariance": suite_secant_invariance,
    "contraction": suite_contraction,
    "omega": suite_omega,
    "ab-family": suite_ab_family,
    "aut-a2-degrees": suite_aut_a2,
    "degree-lower-bound": suite_degree_lower_bound,
    "chi-growth": suite_chi_growth,
    "codim1-relations": suite_codim1,
    "gl3z": suite_gl3z,
    "crossratio-action": suite_crossratio,
}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> VerificationReport:
    if name == "all":
        rep = VerificationReport("all", seed)
        for key in SUITES:
            rep.extend(SUITES[key](seed))
        return rep.sorted()
    if name not in SUITES:
        known = ", ".join(list(SUITES) + ["all"])
        raise KeyError(f"unknown suite '{name}'; known suites: {known}")
    return SUITES[name](seed).sorted()
