"""Z/p 係数の有限鎖複体"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.linalg.matrix import PrimeFieldMatrix
from rigiditybench.linalg.sparse import SparseRankBackend


@dataclass(frozen=True)
class ChainComplex:
    """C_0 ← C_1 ← ... ← C_top

    Attributes:
        prime: 係数素数
        sizes: 各次数の基底の大きさ
        boundaries: ``boundaries[d]`` は ∂_d: C_d → C_{d-1}（行が C_{d-1}）。
            ``boundaries[0]`` は添加写像 ε（1 行）か None（添加なし）
    """

    prime: int
    sizes: Tuple[int, ...]
    boundaries: Tuple[Optional[PrimeFieldMatrix], ...]

    @property
    def top(self) -> int:
        return len(self.sizes) - 1

    @property
    def augmented(self) -> bool:
        return self.boundaries[0] is not None

    def boundary(self, d: int) -> Optional[PrimeFieldMatrix]:
        return self.boundaries[d]

    def check_boundary_squared(self) -> bool:
        """∂_d ∘ ∂_{d+1} = 0（添加写像を含む）"""
        for d in range(self.top):
            lower, upper = self.boundaries[d], self.boundaries[d + 1]
            if lower is None or upper is None:
                continue
            if not lower.matmul(upper).is_zero():
                return False
        return True

    def ranks(self, backend: Optional[BaseRankBackend] = None) -> List[int]:
        backend = backend or SparseRankBackend()
        return [0 if b is None else backend.rank(b) for b in self.boundaries]

    def homology_dims(
        self, through: int, backend: Optional[BaseRankBackend] = None
    ) -> Tuple[int, ...]:
        """次数 0..through の（添加があれば被約）ホモロジーの次元

        Raises:
            ValueError: through + 1 次の境界が作られていない場合
        """
        if through >= self.top:
            raise ValueError(f"homology through degree {through} needs degree {through + 1}")
        ranks = self.ranks(backend)
        return tuple(
            self.sizes[d] - ranks[d] - ranks[d + 1] for d in range(through + 1)
        )

    def permuted(self, seed: int) -> "ChainComplex":
        """各次数の基底の順序を乱数で並べ替えた複体"""
        rng = np.random.default_rng(seed)
        perms = [rng.permutation(n).tolist() for n in self.sizes]
        boundaries: List[Optional[PrimeFieldMatrix]] = []
        for d, b in enumerate(self.boundaries):
            if b is None:
                boundaries.append(None)
            elif d == 0:
                boundaries.append(b.permuted([0], perms[0]))
            else:
                boundaries.append(b.permuted(perms[d - 1], perms[d]))
        return ChainComplex(self.prime, self.sizes, tuple(boundaries))


def boundary_from_faces(
    prime: int,
    shape: Tuple[int, int],
    face_rows: Sequence[np.ndarray],
    signs: Sequence[np.ndarray],
) -> PrimeFieldMatrix:
    """各面 i について「列 c の面の行番号」と符号から境界行列を組み立てる"""
    nrows, ncols = shape
    cols = np.arange(ncols, dtype=np.int64)
    all_rows = np.concatenate([np.asarray(r, dtype=np.int64) for r in face_rows] or [cols[:0]])
    all_cols = np.concatenate([cols for _ in face_rows] or [cols[:0]])
    all_vals = np.concatenate([np.asarray(s, dtype=np.int64) for s in signs] or [cols[:0]])
    keep = all_rows >= 0
    return PrimeFieldMatrix.from_arrays(
        prime, shape, all_rows[keep], all_cols[keep], all_vals[keep] % prime
    )
