import heapq
import logging
from collections import defaultdict
from typing import Dict, Set

from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.linalg.matrix import PrimeFieldMatrix


class SparseRankBackend(BaseRankBackend):
    """疎ガウス消去による階数計算

    ピボット列は非零成分の最も少ない列、ピボット行はその列の中で最も短い行を
    選びます（Markowitz 型の選択）。作業用のコピーを消費するので入力は不変です。
    """

    name = "sparse"

    def rank(self, matrix: PrimeFieldMatrix) -> int:
        p = matrix.modulus
        rows: Dict[int, Dict[int, int]] = defaultdict(dict)
        col_rows: Dict[int, Set[int]] = defaultdict(set)
        for r, c, v in matrix.triplets:
            rows[r][c] = v
            col_rows[c].add(r)

        heap = [(len(rs), c) for c, rs in col_rows.items()]
        heapq.heapify(heap)
        rank = 0
        while heap:
            count, col = heapq.heappop(heap)
            members = col_rows.get(col)
            if not members:
                continue
            if len(members) != count:
                heapq.heappush(heap, (len(members), col))
                continue

            pivot_row = min(members, key=lambda r: (len(rows[r]), r))
            pivot = rows.pop(pivot_row)
            for c in pivot:
                col_rows[c].discard(pivot_row)
            changed = set(pivot)
            inv = pow(pivot[col], -1, p)
            rank += 1

            for r in list(col_rows[col]):
                row = rows[r]
                factor = row[col] * inv % p
                for c, v in pivot.items():
                    value = (row.get(c, 0) - factor * v) % p
                    if value:
                        if c not in row:
                            col_rows[c].add(r)
                        row[c] = value
                    elif c in row:
                        del row[c]
                        col_rows[c].discard(r)
            del col_rows[col]
            changed.discard(col)
            for c in changed:
                if col_rows.get(c):
                    heapq.heappush(heap, (len(col_rows[c]), c))

        logging.debug(f"[sparse] rank {rank} of {matrix.shape} matrix mod {p}")
        return rank


def gf_rank(matrix: PrimeFieldMatrix) -> int:
    """Z/p 上の階数（疎消去）"""
    return SparseRankBackend().rank(matrix)
