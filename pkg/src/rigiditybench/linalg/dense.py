import numpy as np

from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.linalg.matrix import PrimeFieldMatrix


class DenseRankBackend(BaseRankBackend):
    """numpy による密なガウス消去（独立な検算用）"""

    name = "dense"

    def rank(self, matrix: PrimeFieldMatrix) -> int:
        p = matrix.modulus
        dense = matrix.to_dense() % p
        # 列の走査回数を小さい方の辺に合わせる
        if dense.shape[1] > dense.shape[0]:
            dense = dense.T.copy()
        nrows, ncols = dense.shape
        rank = 0
        for col in range(ncols):
            if rank == nrows:
                break
            candidates = np.nonzero(dense[rank:, col])[0]
            if candidates.size == 0:
                continue
            pivot = rank + int(candidates[0])
            if pivot != rank:
                dense[[rank, pivot]] = dense[[pivot, rank]]
            inv = pow(int(dense[rank, col]), -1, p)
            dense[rank] = dense[rank] * inv % p
            below = np.nonzero(dense[rank + 1 :, col])[0] + rank + 1
            if below.size:
                dense[below] = (dense[below] - np.outer(dense[below, col], dense[rank])) % p
            rank += 1
        return rank


def dense_rank(matrix: PrimeFieldMatrix) -> int:
    """Z/p 上の階数（密消去）"""
    return DenseRankBackend().rank(matrix)
