"""スペクトル系列の E¹ ページの次元表"""

import logging
from dataclasses import dataclass
from typing import Tuple

from rigiditybench.homology import FiniteAbelianGroup, homology_dims_formula
from rigiditybench.orbit.orbitcomplex import orbit_basis_size
from rigiditybench.ring.ring import RingDescriptor
from rigiditybench.ring.units import unit_group_invariants


@dataclass(frozen=True)
class E1Page:
    """dim E¹_{p,q}（Z/p 係数）

    Attributes:
        columns: ``columns[p][q]``
    """

    ring: RingDescriptor
    prime: int
    columns: Tuple[Tuple[int, ...], ...]

    @property
    def pmax(self) -> int:
        return len(self.columns) - 1

    @property
    def qmax(self) -> int:
        return len(self.columns[0]) - 1

    def dim(self, p: int, q: int) -> int:
        return self.columns[p][q]

    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """行 q ごとに並べ直した表"""
        return tuple(
            tuple(col[q] for col in self.columns) for q in range(self.qmax + 1)
        )


def e1_page(ring: RingDescriptor, prime: int, qmax: int, pmax: int = 4) -> E1Page:
    """E¹_{p,q} = ⊕_σ H_q(G_σ, Z/p) の次元

    列 0, 1 の固定部分群はボレル部分群/D とトーラス/D で、どちらも A^× と同じ
    ホモロジーを持ちます。列 2 の固定部分群は自明、列 p ≥ 3 は α の組ごとに
    自明な固定部分群を持ちます。
    """
    units = FiniteAbelianGroup(unit_group_invariants(ring))
    unit_dims = homology_dims_formula(units, prime, qmax)
    trivial = (1,) + (0,) * qmax
    columns = [unit_dims, unit_dims]
    if pmax >= 2:
        columns.append(trivial)
    for p in range(3, pmax + 1):
        count = orbit_basis_size(ring, p - 3)
        columns.append((count,) + (0,) * qmax)
    page = E1Page(ring, prime, tuple(columns[: pmax + 1]))
    logging.debug(f"[e1] {ring} mod {prime}: {page.columns}")
    return page


def compare_low_columns(first: E1Page, second: E1Page, through: int = 2) -> bool:
    """列 0..through の次元が一致するか"""
    return first.columns[: through + 1] == second.columns[: through + 1]
