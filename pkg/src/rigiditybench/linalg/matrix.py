"""行列の担体：素体上の疎行列と任意精度の整数行列"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np
from scipy.sparse import coo_matrix, csr_matrix


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """Z/p 上の疎行列（三つ組表現）

    Attributes:
        modulus: 素数 p
        nrows: 行数
        ncols: 列数
        triplets: (行, 列, 値) の組。値は 1..p-1、位置の重複なし
    """

    modulus: int
    nrows: int
    ncols: int
    triplets: Tuple[Tuple[int, int, int], ...]

    @classmethod
    def from_entries(
        cls, modulus: int, shape: Tuple[int, int], entries: Iterable[Tuple[int, int, int]]
    ) -> "PrimeFieldMatrix":
        """重複を足し合わせ、p で割った余りが 0 の成分を落として作る"""
        entries = list(entries)
        nrows, ncols = shape
        if not entries:
            return cls(modulus, nrows, ncols, ())
        rows, cols, vals = (np.array(x, dtype=np.int64) for x in zip(*entries))
        return cls._from_csr(
            modulus, coo_matrix((vals, (rows, cols)), shape=shape).tocsr()
        )

    @classmethod
    def from_arrays(
        cls, modulus: int, shape: Tuple[int, int], rows, cols, vals
    ) -> "PrimeFieldMatrix":
        """行・列・値の配列から作る（from_entries と同じ正規化）"""
        rows, cols, vals = (np.asarray(x, dtype=np.int64) for x in (rows, cols, vals))
        if rows.size == 0:
            return cls(modulus, shape[0], shape[1], ())
        return cls._from_csr(modulus, coo_matrix((vals, (rows, cols)), shape=shape).tocsr())

    @classmethod
    def from_dense(cls, modulus: int, array) -> "PrimeFieldMatrix":
        array = np.asarray(array, dtype=np.int64)
        return cls._from_csr(modulus, csr_matrix(array))

    @classmethod
    def _from_csr(cls, modulus: int, csr: csr_matrix) -> "PrimeFieldMatrix":
        csr.sum_duplicates()
        csr.data %= modulus
        csr.eliminate_zeros()
        coo = csr.tocoo()
        order = np.lexsort((coo.col, coo.row))
        triplets = tuple(
            (int(coo.row[k]), int(coo.col[k]), int(coo.data[k])) for k in order
        )
        return cls(modulus, csr.shape[0], csr.shape[1], triplets)

    @classmethod
    def zeros(cls, modulus: int, shape: Tuple[int, int]) -> "PrimeFieldMatrix":
        return cls(modulus, shape[0], shape[1], ())

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return len(self.triplets)

    def is_zero(self) -> bool:
        return not self.triplets

    def to_csr(self) -> csr_matrix:
        if not self.triplets:
            return csr_matrix(self.shape, dtype=np.int64)
        rows, cols, vals = (np.array(x, dtype=np.int64) for x in zip(*self.triplets))
        return coo_matrix((vals, (rows, cols)), shape=self.shape).tocsr()

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.shape, dtype=np.int64)
        for r, c, v in self.triplets:
            dense[r, c] = v
        return dense

    def transpose(self) -> "PrimeFieldMatrix":
        return PrimeFieldMatrix.from_entries(
            self.modulus, (self.ncols, self.nrows), ((c, r, v) for r, c, v in self.triplets)
        )

    def matmul(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        if self.ncols != other.nrows or self.modulus != other.modulus:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        return PrimeFieldMatrix._from_csr(self.modulus, self.to_csr() @ other.to_csr())

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PrimeFieldMatrix":
        """指定した行・列だけを残し、その順に番号を付け直す"""
        row_pos = {r: i for i, r in enumerate(rows)}
        col_pos = {c: j for j, c in enumerate(cols)}
        return PrimeFieldMatrix.from_entries(
            self.modulus,
            (len(rows), len(cols)),
            (
                (row_pos[r], col_pos[c], v)
                for r, c, v in self.triplets
                if r in row_pos and c in col_pos
            ),
        )

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "PrimeFieldMatrix":
        """行 r を row_perm[r] へ、列 c を col_perm[c] へ移す"""
        return PrimeFieldMatrix.from_entries(
            self.modulus,
            self.shape,
            ((row_perm[r], col_perm[c], v) for r, c, v in self.triplets),
        )


@dataclass(frozen=True)
class IntegerMatrix:
    """任意精度整数の密行列"""

    nrows: int
    ncols: int
    rows: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged integer matrix")
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntegerMatrix":
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence[int], ncols: int | None = None) -> "IntegerMatrix":
        ncols = len(entries) if ncols is None else ncols
        return cls.from_rows(
            [[d if j == i else 0 for j in range(ncols)] for i, d in enumerate(entries)],
            ncols,
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            self.nrows,
        )

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        cols = other.transpose().rows
        return IntegerMatrix.from_rows(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows],
            other.ncols,
        )

    def row_times(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """行ベクトル × 行列"""
        if len(vector) != self.nrows:
            raise ValueError(f"vector of length {len(vector)} against {self.shape}")
        out = [0] * self.ncols
        for coeff, row in zip(vector, self.rows):
            if coeff:
                for j, x in enumerate(row):
                    if x:
                        out[j] += coeff * x
        return tuple(out)

    def stack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        """縦に連結"""
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in stack")
        return IntegerMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def columns(self, start: int, stop: int) -> "IntegerMatrix":
        return IntegerMatrix.from_rows([row[start:stop] for row in self.rows], stop - start)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)
