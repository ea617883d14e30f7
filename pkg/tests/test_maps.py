"""Projective, multi-projective and affine maps: reduction, composition, charts."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cremona.maps import (
    AffineMap,
    DegreeSequence,
    MultiProjectiveMap,
    ProjectiveMap,
    SpaceMismatch,
    affine_identity,
    degree_sequence,
    diagonal_map,
    from_matrix,
    identity_map,
    image_in_subspace,
    mat,
    mat_adjugate,
    mat_det,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_pow,
    matrix_word,
    monomial_map,
    pullback_hypersurface,
)
from cremona.rings import RationalFunction, affine_ring, proj_ring
from cremona.words import SIGMA, sigma_map

P2 = proj_ring(2)
X0, X1, X2 = P2.variables


def test_reduce_common_factor():
    f = ProjectiveMap([X0 * X1 * X2 * X0, X0 * X1 * X2 * X1, X0 * X1 * X2 * X2])
    assert f.is_identity()


def test_reduce_idempotent_and_scalar_normalization():
    f = ProjectiveMap([2 * X1 * X2, 2 * X0 * X2, 2 * X0 * X1])
    assert f == sigma_map()
    g = ProjectiveMap(list(f.components))
    assert g == f


def test_inhomogeneous_rejected():
    with pytest.raises(ValueError):
        ProjectiveMap([X0, X0 + X1 * X2])


def test_sigma_involution_and_degree_sequence():
    s = sigma_map()
    assert s.after(s).is_identity()
    seq = degree_sequence(s, 5)
    assert seq.degrees == (2, 1, 2, 1, 2)


def test_equal_up_to_scalar():
    f = ProjectiveMap([X0, X1])
    g = ProjectiveMap([2 * X0, 2 * X1])
    assert f.equal_up_to_scalar(g)
    h = ProjectiveMap([X1, X0])
    assert not f.equal_up_to_scalar(h)
    with pytest.raises(SpaceMismatch):
        f.equal_up_to_scalar(sigma_map())


def test_from_matrix():
    assert from_matrix(mat_identity(3), P2).is_identity()
    perm = from_matrix(((0, 0, 1), (0, 1, 0), (1, 0, 0)), P2)
    assert perm == ProjectiveMap([X2, X1, X0])
    h = from_matrix(((-1, 0, 1), (0, -1, 1), (0, 0, 1)), P2)
    assert h == ProjectiveMap([X2 - X0, X2 - X1, X2])
    with pytest.raises(ValueError):
        from_matrix(((1, 0, 0), (1, 0, 0), (0, 0, 1)), P2)


def test_from_matrix_homomorphism_up_to_scalar():
    rng = random.Random(5)
    for _ in range(5):
        m = tuple(tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(3))
        n = tuple(tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(3))
        if mat_det(m) == 0 or mat_det(n) == 0:
            continue
        lhs = from_matrix(m, P2).after(from_matrix(n, P2))
        rhs = from_matrix(mat_mul(m, n), P2)
        assert lhs.equal_up_to_scalar(rhs)


def test_monomial_functor():
    a = ((0, 1), (1, 0))
    f = monomial_map(a)
    assert f.after(f).is_identity()
    rng = random.Random(9)
    for _ in range(6):
        def unimod(k):
            m = mat_identity(k)
            for _ in range(3):
                i, j = rng.sample(range(k), 2)
                e = [[1 if p == q else 0 for q in range(k)] for p in range(k)]
                e[i][j] = rng.randint(-2, 2)
                m = mat_mul(m, tuple(tuple(r) for r in e))
            return m
        for k in (2, 3):
            a, b = unimod(k), unimod(k)
            assert monomial_map(a).after(monomial_map(b)) == monomial_map(mat_mul(a, b))


def test_monomial_map_negative_identity_is_reciprocal():
    f = monomial_map(((-1, 0), (0, -1)))
    a2 = affine_ring(2)
    assert f == AffineMap([RationalFunction.make(a2.one, a2.var(0)),
                           RationalFunction.make(a2.one, a2.var(1))])


def test_diagonal_map_conjugation():
    rng = random.Random(3)
    s = sigma_map()
    for _ in range(4):
        c = [Fraction(rng.randint(1, 7), rng.randint(1, 7)) for _ in range(3)]
        d = diagonal_map(c, P2)
        dinv = diagonal_map([1 / v for v in c], P2)
        assert s.after(d).after(s).equal_up_to_scalar(dinv)
    assert diagonal_map([1, 1, 1], P2).is_identity()
    with pytest.raises(ValueError):
        diagonal_map([1, 0, 1], P2)


def test_affine_chart_round_trip():
    s = sigma_map()
    aff = s.to_affine_chart(0)
    a2 = affine_ring(2)
    assert aff == AffineMap([RationalFunction.make(a2.one, a2.var(0)),
                             RationalFunction.make(a2.one, a2.var(1))])
    back = aff.to_projective(P2)
    assert back.equal_up_to_scalar(s)


def test_chart_round_trip_random():
    rng = random.Random(21)
    for _ in range(5):
        m = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
        if mat_det(m) == 0:
            continue
        f = from_matrix(m, P2)
        if f.components[0].coefficient((1, 0, 0)) == 0 and \
                f.components[0].coefficient((0, 1, 0)) == 0 and \
                f.components[0].coefficient((0, 0, 1)) == 0:
            continue
        assert f.to_affine_chart(0).to_projective(P2).equal_up_to_scalar(f)


def test_chart_requires_nonzero_component():
    f = ProjectiveMap([X1 * X2, X0 * X2, P2.zero])
    with pytest.raises(ValueError):
        f.to_affine_chart(2)


def test_affine_degree_via_homogenization():
    a2 = affine_ring(2)
    x, y = a2.variables
    shear = AffineMap([x, y + 3 * x ** 4])
    assert shear.degree() == 4
    recip = monomial_map(((-1, 0), (0, -1)))
    assert recip.degree() == 2  # the quadratic involution


def test_compose_associativity():
    rng = random.Random(13)
    s = sigma_map()
    for _ in range(4):
        m = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
        if mat_det(m) == 0:
            continue
        g = from_matrix(m, P2)
        lhs = s.after(g).after(s)
        rhs = s.after(g.after(s))
        assert lhs == rhs


def test_degree_submultiplicative():
    rng = random.Random(17)
    s = sigma_map()
    for _ in range(5):
        m = tuple(tuple(rng.randint(-2, 2) for _ in range(3)) for _ in range(3))
        if mat_det(m) == 0:
            continue
        g = from_matrix(m, P2)
        assert s.after(g).degree() <= s.degree() * g.degree()
        assert g.after(s).degree() == s.degree() * g.degree()  # linear case: equality


def test_power_and_identity():
    s = sigma_map()
    assert (s ** 2).is_identity()
    assert (s ** 0).is_identity()
    with pytest.raises(ValueError):
        s ** -1


def test_multi_projective_blocks():
    rb = proj_ring(2).extend_constants(())  # placeholder ring check below
    from cremona.rings import ring
    r = ring("x0", "x1", "x2", "y0", "y1", "y2")
    xs = [r.var(i) for i in range(3)]
    ys = [r.var(i) for i in range(3, 6)]
    m = MultiProjectiveMap((3, 3), ((xs[1] * ys[0], xs[0] * ys[0], xs[2] * ys[0]),
                                    (ys[1], ys[0], ys[2])))
    # per-block gcd removed: first block loses the y0 factor
    assert m.blocks[0] == (xs[1], xs[0], xs[2])
    assert m.multidegree(0) == (1, 0)
    with pytest.raises(ValueError):
        MultiProjectiveMap((3, 3), ((xs[0], ys[0], xs[2]), (ys[0], ys[1], ys[2])))


def test_multi_projective_compose_and_eq():
    from cremona.rings import ring
    r = ring("x0", "x1", "x2", "y0", "y1", "y2")
    xs = [r.var(i) for i in range(3)]
    ys = [r.var(i) for i in range(3, 6)]
    swap = MultiProjectiveMap((3, 3), ((ys[0], ys[1], ys[2]), (xs[0], xs[1], xs[2])))
    assert (swap ** 2).equal_up_to_scalar(
        MultiProjectiveMap((3, 3), (tuple(xs), tuple(ys))))
    with pytest.raises(SpaceMismatch):
        swap.after(MultiProjectiveMap.from_projective(sigma_map()))


def test_matrix_helpers():
    m = ((2, 1), (1, 1))
    assert mat_mul(m, mat_inv(m)) == mat_identity(2)
    assert mat_det(m) == 1
    assert mat_adjugate(((1, 0), (0, 1))) == mat_identity(2)
    assert matrix_word(m, (m, -1)) == mat_identity(2)
    assert mat_pow(m, 0) == mat_identity(2)
    with pytest.raises(ValueError):
        mat_inv(((1, 1), (1, 1)))


def test_pullback_hypersurface_identity():
    f = identity_map(P2)
    res = pullback_hypersurface(f, X0)
    assert res.divisible and res.cofactor.is_one


def test_image_in_subspace_basics():
    s = sigma_map()
    # sigma contracts {x0 = 0} onto the point [1:0:0] = {x1 = x2 = 0}
    assert image_in_subspace(s, 0, (1, 2))
    assert not image_in_subspace(identity_map(P2), 0, (1,))


def test_degree_sequence_guards():
    with pytest.raises(ValueError):
        degree_sequence(sigma_map(), 0)
    v = ProjectiveMap([X0 * X0, X1 * X1, X2 * X2, X1 * X2, X0 * X2, X0 * X1])
    with pytest.raises(SpaceMismatch):
        v ** 2
