from rigiditybench.complex import ChainComplex
from rigiditybench.linalg import PrimeFieldMatrix


def _interval(prime: int) -> ChainComplex:
    """区間 [a, b]（頂点 2 個と辺 1 本）の添加複体"""
    epsilon = PrimeFieldMatrix.from_dense(prime, [[1, 1]])
    edge = PrimeFieldMatrix.from_dense(prime, [[prime - 1], [1]])
    return ChainComplex(prime, (2, 1), (epsilon, edge))


def test_interval_is_acyclic():
    """可縮な区間の被約ホモロジーが消えることをテスト"""
    chain = _interval(3)
    assert chain.augmented
    assert chain.check_boundary_squared()
    assert chain.homology_dims(0) == (0,)


def test_two_points_have_reduced_h0():
    """2 点の被約 H₀ が 1 次元であることをテスト"""
    epsilon = PrimeFieldMatrix.from_dense(5, [[1, 1]])
    empty = PrimeFieldMatrix.zeros(5, (2, 0))
    chain = ChainComplex(5, (2, 0), (epsilon, empty))
    assert chain.homology_dims(0) == (1,)


def test_permutation_keeps_ranks():
    """基底を並べ替えても各境界の階数が変わらないことをテスト"""
    chain = _interval(7)
    assert chain.permuted(seed=3).ranks() == chain.ranks()
