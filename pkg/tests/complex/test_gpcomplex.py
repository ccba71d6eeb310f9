import pytest

from rigiditybench.complex import build_gp_complex, gp_basis_size, homology_dims
from rigiditybench.linalg import DenseRankBackend, SparseRankBackend
from rigiditybench.ring.ring import RingDescriptor


def test_basis_sizes_f5():
    """F_5 の C_• の基底の大きさが単射語の個数 6, 30, 120 であることをテスト"""
    built = build_gp_complex(RingDescriptor.create(5), 2, 3)
    assert built.basis_sizes == (6, 30, 120)
    assert built.basis_sizes == tuple(gp_basis_size(built.ring, d) for d in range(3))


@pytest.mark.parametrize("q", [7, 11])
def test_boundary_squared_and_homology_fields(q):
    """F_7, F_11 で ∂² = 0 かつ次数 2 まで被約ホモロジーが消えることをテスト"""
    built = build_gp_complex(RingDescriptor.create(q), 3, 3)
    assert built.chain.check_boundary_squared()
    assert built.validity_window == 2
    assert homology_dims(built, 2) == (0, 0, 0)


def test_sparse_and_dense_agree_on_f7():
    """F_7 の複体で疎と密のバックエンドのホモロジーが一致することをテスト"""
    built = build_gp_complex(RingDescriptor.create(7), 3, 5)
    permuted = built.chain.permuted(seed=1)
    assert built.chain.homology_dims(2, SparseRankBackend()) == permuted.homology_dims(2, DenseRankBackend())


@pytest.mark.slow
def test_local_ring_homology_vanishes_low_degrees():
    """F_5[t]/(t²) の複体で Z/3 係数の被約ホモロジーが次数 1 まで消えることをテスト"""
    built = build_gp_complex(RingDescriptor.create(5, 1, 2), 2, 3)
    assert built.basis_sizes == (30, 750, 15000)
    assert built.chain.check_boundary_squared()
    assert homology_dims(built, 1) == (0, 0)


def test_homology_requires_next_boundary():
    """最高次数のホモロジーを求めるとValueErrorになることをテスト"""
    built = build_gp_complex(RingDescriptor.create(5), 2, 3)
    with pytest.raises(ValueError):
        homology_dims(built, 2)


def test_cache_round_trip(tmp_path):
    """キャッシュの有無で同じ複体が得られることをテスト"""
    ring = RingDescriptor.create(5)
    fresh = build_gp_complex(ring, 2, 3, str(tmp_path))
    assert (tmp_path / f"p1_{ring.descriptor_hash()}.dat").exists()
    cached = build_gp_complex(ring, 2, 3, str(tmp_path))
    assert cached.chain == fresh.chain
