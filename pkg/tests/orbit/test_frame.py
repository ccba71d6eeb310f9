import numpy as np
import pytest

from rigiditybench.complex import ProjPoint, enumerate_p1
from rigiditybench.errors import NotAUnit, TupleNotGP
from rigiditybench.orbit import (
    OrbitSimplex,
    ProjectiveMatrix,
    act,
    canonical_frame,
    frame_matrix,
    mobius,
    orbit_face,
)
from rigiditybench.ring.ring import RingDescriptor


@pytest.fixture
def f7():
    return RingDescriptor.create(7)


def test_standard_frame_is_identity(f7):
    """(0, ∞, 1) を送る行列が恒等であることをテスト"""
    zero, inf, one = ProjPoint.zero(f7), ProjPoint.infinity(f7), ProjPoint.one(f7)
    assert frame_matrix(zero, inf, one).is_identity()
    g, simplex = canonical_frame((zero, inf, one, ProjPoint.affine(f7.constant(3))))
    assert g.is_identity()
    assert simplex == OrbitSimplex((f7.constant(3),))


def test_frame_sends_points_to_standard_position():
    """frame_matrix が v0, v1, v2 を 0, ∞, 1 に送ることをテスト"""
    ring = RingDescriptor.create(5, 1, 2)
    t = ring.variable(0)
    v0, v1, v2 = ProjPoint.affine(2 + t), ProjPoint.affine(ring.constant(4)), ProjPoint.infinity(ring)
    g = frame_matrix(v0, v1, v2)
    assert act(g, (v0, v1, v2)) == (ProjPoint.zero(ring), ProjPoint.infinity(ring), ProjPoint.one(ring))


def test_projective_matrix_normalization(f7):
    """スカラー倍した行列が同じ代表になり、逆行列との積が恒等であることをテスト"""
    c = f7.constant
    g = ProjectiveMatrix.create(c(2), c(3), c(1), c(4))
    h = ProjectiveMatrix.create(c(4), c(6), c(2), c(1))
    assert g == h
    assert g.a == f7.one
    assert (g @ g.inverse()).is_identity()
    with pytest.raises(NotAUnit):
        ProjectiveMatrix.create(c(1), c(2), c(2), c(4))


def test_mobius_matches_action(f7):
    """mobius と点への作用が一致することをテスト"""
    c = f7.constant
    g = ProjectiveMatrix.create(c(1), c(2), c(3), c(1))
    z = c(4)
    assert mobius(g, z) == f7.zero
    assert ProjPoint.affine(mobius(g, z)) == g.apply(ProjPoint.affine(z))
    with pytest.raises(ValueError):
        mobius(g, c(3))


@pytest.mark.parametrize("count", [0, 2])
def test_too_few_points(f7, count):
    """3 点未満の組は TupleNotGP になることをテスト"""
    points = enumerate_p1(f7)[:count]
    with pytest.raises(TupleNotGP):
        canonical_frame(points)


def test_not_general_position():
    """剰余点が重なる組は TupleNotGP になることをテスト"""
    ring = RingDescriptor.create(5, 1, 2)
    t = ring.variable(0)
    points = (ProjPoint.zero(ring), ProjPoint.infinity(ring), ProjPoint.affine(t))
    with pytest.raises(TupleNotGP):
        canonical_frame(points)


@pytest.mark.parametrize("i, expected", [(0, 4), (1, 6), (2, 5), (3, 3), (4, 2)])
def test_faces_of_two_simplex_f7(f7, i, expected):
    """F_7 の (2, 3) の面の α と符号をテスト"""
    sign, face = orbit_face(OrbitSimplex((f7.constant(2), f7.constant(3))), i, f7)
    assert sign == (-1) ** i
    assert face == OrbitSimplex((f7.constant(expected),))


def test_face_index_out_of_range(f7):
    """範囲外の面の添字は ValueError になることをテスト"""
    with pytest.raises(ValueError):
        orbit_face(OrbitSimplex((f7.constant(2),)), 4, f7)
    with pytest.raises(ValueError):
        orbit_face(OrbitSimplex(()), 0, f7)


def test_canonical_frame_is_invariant():
    """g·σ と σ の α が一致することを乱数の組でテスト"""
    ring = RingDescriptor.create(5, 1, 2)
    points = enumerate_p1(ring)
    rng = np.random.default_rng(3)
    c = ring.constant
    g = ProjectiveMatrix.create(c(1) + ring.variable(0), c(2), c(3), c(2))
    for _ in range(20):
        picks = rng.choice(len(points), size=5, replace=False)
        sigma = tuple(points[k] for k in picks)
        try:
            _, alphas = canonical_frame(sigma)
        except TupleNotGP:
            continue
        assert canonical_frame(act(g, sigma))[1] == alphas


def test_admissible_and_rational():
    """許容性と有理性の判定をテスト"""
    ring = RingDescriptor.create(5, 1, 2)
    t = ring.variable(0)
    assert OrbitSimplex((ring.constant(2), 3 + t)).is_admissible()
    assert not OrbitSimplex((ring.constant(2), 2 + t)).is_admissible()
    assert not OrbitSimplex((1 + t,)).is_admissible()
    assert OrbitSimplex((ring.constant(2),)).is_rational
    assert not OrbitSimplex((2 + t,)).is_rational


def test_swapped_frame_is_inversion(f7):
    """(∞, 0, 1) の枠が z ↦ 1/z になることをテスト"""
    zero, inf, one = ProjPoint.zero(f7), ProjPoint.infinity(f7), ProjPoint.one(f7)
    g, simplex = canonical_frame((inf, zero, one, ProjPoint.affine(f7.constant(3))))
    assert g == ProjectiveMatrix.create(f7.zero, f7.one, f7.one, f7.zero)
    assert simplex == OrbitSimplex((f7.constant(5),))
