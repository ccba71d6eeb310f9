"""整数行列のスミス標準形（証明書付き）

``U·M·V = D`` となるユニモジュラ行列 U, V と V の逆行列を同時に追跡します。
係数の膨張は実際に起こるので、すべて Python の任意精度整数で計算します。
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from rigiditybench.linalg.matrix import IntegerMatrix


@dataclass(frozen=True)
class SmithForm:
    """スミス標準形の結果

    Attributes:
        diagonal: 非零の対角成分 d₁ | d₂ | ...（正）
        left: U（行数 × 行数）
        right: V（列数 × 列数）
        right_inverse: V⁻¹
    """

    diagonal: Tuple[int, ...]
    left: IntegerMatrix
    right: IntegerMatrix
    right_inverse: IntegerMatrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self, shape: Tuple[int, int]) -> IntegerMatrix:
        nrows, ncols = shape
        return IntegerMatrix.from_rows(
            [
                [self.diagonal[i] if i == j and i < self.rank else 0 for j in range(ncols)]
                for i in range(nrows)
            ],
            ncols,
        )

    def verify(self, matrix: IntegerMatrix) -> bool:
        """U·M·V が対角行列に一致し、V·V⁻¹ = I であることを確かめる"""
        product = self.left.matmul(matrix).matmul(self.right)
        if product != self.diagonal_matrix(matrix.shape):
            return False
        n = matrix.ncols
        return self.right.matmul(self.right_inverse) == IntegerMatrix.identity(n)


class _Workspace:
    def __init__(self, matrix: IntegerMatrix):
        self.a = matrix.to_lists()
        self.m, self.n = matrix.shape
        self.u = IntegerMatrix.identity(self.m).to_lists()
        self.v = IntegerMatrix.identity(self.n).to_lists()
        self.v_inv = IntegerMatrix.identity(self.n).to_lists()

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.v:
            row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """行 target += factor · 行 source"""
        for mat in (self.a, self.u):
            src, dst = mat[source], mat[target]
            for k, x in enumerate(src):
                if x:
                    dst[k] += factor * x

    def add_col(self, target: int, source: int, factor: int) -> None:
        """列 target += factor · 列 source"""
        for mat in (self.a, self.v):
            for row in mat:
                if row[source]:
                    row[target] += factor * row[source]
        # V⁻¹ には逆の基本変形が行として掛かる
        src, dst = self.v_inv[target], self.v_inv[source]
        for k, x in enumerate(src):
            if x:
                dst[k] -= factor * x

    def negate_row(self, i: int) -> None:
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def smallest(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best[1], best[2]
        return None if best is None else (best[1], best[2])

    def non_divisible(self, t: int) -> Optional[int]:
        d = self.a[t][t]
        for i in range(t + 1, self.m):
            row = self.a[i]
            for j in range(t + 1, self.n):
                if row[j] % d:
                    return i
        return None


def smith_normal_form(matrix: IntegerMatrix) -> SmithForm:
    """スミス標準形と変換証明書を計算する

    Args:
        matrix: 整数行列

    Returns:
        SmithForm: 対角成分と U, V, V⁻¹
    """
    ws = _Workspace(matrix)
    t = 0
    while t < min(ws.m, ws.n):
        found = ws.smallest(t)
        if found is None:
            break
        ws.swap_rows(t, found[0])
        ws.swap_cols(t, found[1])
        while True:
            pivot = ws.a[t][t]
            dirty = False
            for i in range(t + 1, ws.m):
                if ws.a[i][t]:
                    ws.add_row(i, t, -(ws.a[i][t] // pivot))
                    dirty = dirty or ws.a[i][t] != 0
            for j in range(t + 1, ws.n):
                if ws.a[t][j]:
                    ws.add_col(j, t, -(ws.a[t][j] // pivot))
                    dirty = dirty or ws.a[t][j] != 0
            if dirty:
                _promote_smallest_remainder(ws, t)
                continue
            bad_row = ws.non_divisible(t)
            if bad_row is not None:
                ws.add_row(t, bad_row, 1)
                continue
            break
        if ws.a[t][t] < 0:
            ws.negate_row(t)
        t += 1

    diagonal = tuple(ws.a[i][i] for i in range(t))
    logging.debug(f"[snf] {matrix.shape} -> diagonal {diagonal}")
    return SmithForm(
        diagonal=diagonal,
        left=IntegerMatrix.from_rows(ws.u, ws.m),
        right=IntegerMatrix.from_rows(ws.v, ws.n),
        right_inverse=IntegerMatrix.from_rows(ws.v_inv, ws.n),
    )


def _promote_smallest_remainder(ws: _Workspace, t: int) -> None:
    best = (abs(ws.a[t][t]), t, t)
    for i in range(t + 1, ws.m):
        x = ws.a[i][t]
        if x and abs(x) < best[0]:
            best = (abs(x), i, t)
    for j in range(t + 1, ws.n):
        x = ws.a[t][j]
        if x and abs(x) < best[0]:
            best = (abs(x), t, j)
    ws.swap_rows(t, best[1])
    ws.swap_cols(t, best[2])


def left_kernel(matrix: IntegerMatrix) -> IntegerMatrix:
    """x·M = 0 となる整数行ベクトル全体の基底（行として並べる）"""
    form = smith_normal_form(matrix)
    rows = form.left.rows[form.rank :]
    return IntegerMatrix.from_rows(rows, matrix.nrows)


def solve_left(matrix: IntegerMatrix, target: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """x·M = target の整数解を一つ返す（なければ None）"""
    form = smith_normal_form(matrix)
    return solve_left_with(form, matrix.nrows, target)


def solve_left_with(
    form: SmithForm, nrows: int, target: Sequence[int]
) -> Optional[Tuple[int, ...]]:
    """計算済みのスミス標準形を使って x·M = target を解く"""
    w = form.right.row_times(target)
    y: List[int] = [0] * nrows
    for i, d in enumerate(form.diagonal):
        if w[i] % d:
            return None
        y[i] = w[i] // d
    if any(w[form.rank :]):
        return None
    return form.left.row_times(y)
