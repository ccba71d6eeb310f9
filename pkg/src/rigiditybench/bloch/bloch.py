"""Bloch 群 B(A) = ker(φ̄: 𝔭(A) → (A^×⊗A^×)_σ) と、その比較・検算"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import List, Optional, Sequence, Tuple

from rigiditybench.bloch.presentation import (
    PreBlochPresentation,
    build_presentation,
    five_term_relation,
)
from rigiditybench.errors import PhiNotWellDefined
from rigiditybench.linalg.abelian import (
    PresentedAbelianGroup,
    abelian_kernel,
    check_compatible,
    image_order,
    induced_map_mod_p,
    tensor_mod_p,
)
from rigiditybench.linalg.matrix import IntegerMatrix
from rigiditybench.linalg.snf import solve_left
from rigiditybench.linalg.sparse import gf_rank
from rigiditybench.orbit.frame import OrbitSimplex, orbit_face
from rigiditybench.ring.ring import RingDescriptor, RingElement
from rigiditybench.ring.units import UnitGroupData, unit_group


@dataclass(frozen=True)
class SigmaTensorSquare:
    """(A^×⊗A^×)_σ：生成元 gᵢ⊗gⱼ、関係式は gcd(dᵢ, dⱼ)·eᵢⱼ と eᵢⱼ + eⱼᵢ"""

    units: UnitGroupData
    group: PresentedAbelianGroup

    @classmethod
    def create(cls, units: UnitGroupData) -> "SigmaTensorSquare":
        factors = units.invariant_factors
        r = len(factors)
        rows: List[List[int]] = []
        for i in range(r):
            for j in range(r):
                row = [0] * (r * r)
                row[i * r + j] = gcd(factors[i], factors[j])
                rows.append(row)
        for i in range(r):
            for j in range(i, r):
                row = [0] * (r * r)
                row[i * r + j] += 1
                row[j * r + i] += 1
                rows.append(row)
        return cls(units, PresentedAbelianGroup(r * r, IntegerMatrix.from_rows(rows, r * r)))

    @property
    def rank(self) -> int:
        return self.units.rank

    def word(self, x: RingElement, y: RingElement) -> Tuple[int, ...]:
        """x⊗y を gᵢ⊗gⱼ の語で表す"""
        return self.word_from_logs(self.units.log(x), self.units.log(y))

    def word_from_logs(self, a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
        return tuple(a[i] * b[j] for i in range(self.rank) for j in range(self.rank))


def phi_matrix(presentation: PreBlochPresentation, tensor: SigmaTensorSquare) -> IntegerMatrix:
    """φ([x]) = x⊗(1−x) を生成元ごとに並べた行列"""
    rows = [tensor.word(x, 1 - x) for x in presentation.generators]
    return IntegerMatrix.from_rows(rows, tensor.group.num_generators)


@dataclass(frozen=True)
class BlochResult:
    """𝔭(A) と B(A) の構造

    Attributes:
        pre_bloch_factors: 𝔭(A) の不変因子（0 は Z）
        bloch_factors: B(A) の不変因子
        bloch_mod_p: dim B(A)⊗Z/p
        image_order: |im φ̄|（無限なら None）
    """

    ring: RingDescriptor
    prime: int
    pre_bloch_factors: Tuple[int, ...]
    bloch_factors: Tuple[int, ...]
    bloch_mod_p: int
    image_order: Optional[int]
    presentation: PreBlochPresentation = field(repr=False, compare=False)
    tensor: SigmaTensorSquare = field(repr=False, compare=False)
    phi: IntegerMatrix = field(repr=False, compare=False)
    bloch: PresentedAbelianGroup = field(repr=False, compare=False)

    @property
    def pre_bloch(self) -> PresentedAbelianGroup:
        return self.presentation.group


def compute_bloch(
    ring: RingDescriptor, prime: int, order_seed: Optional[int] = None
) -> BlochResult:
    """𝔭(A)、φ̄、B(A) を計算する

    Raises:
        PhiNotWellDefined: φ̄ が五項関係式を消さない場合
    """
    presentation = build_presentation(ring, order_seed)
    tensor = SigmaTensorSquare.create(unit_group(ring))
    phi = phi_matrix(presentation, tensor)
    for (x, y), row in zip(presentation.pairs, presentation.relations.rows):
        if not tensor.group.is_zero(phi.row_times(row)):
            raise PhiNotWellDefined(f"phi does not kill the five-term relation of ({x}, {y})")
    pre_bloch = presentation.group
    bloch = abelian_kernel(phi, pre_bloch, tensor.group)
    result = BlochResult(
        ring=ring,
        prime=prime,
        pre_bloch_factors=pre_bloch.invariant_factors,
        bloch_factors=bloch.invariant_factors,
        bloch_mod_p=tensor_mod_p(bloch, prime),
        image_order=image_order(phi, pre_bloch, tensor.group),
        presentation=presentation,
        tensor=tensor,
        phi=phi,
        bloch=bloch,
    )
    logging.info(f"[bloch] {ring}: pre-Bloch {pre_bloch}, Bloch {bloch}")
    return result


@dataclass(frozen=True)
class BlochComparison:
    """B(k)⊗Z/p → B(R)⊗Z/p の報告

    Attributes:
        natural: すべての生成元で φ̄_R(incl ξ) = incl(φ̄_k ξ)
        into_bloch: B(k) の生成元の像が B(R) に入る
        rank: 誘導写像の Z/p 上の階数
    """

    prime: int
    residue_dim: int
    ring_dim: int
    natural: bool
    into_bloch: bool
    rank: int

    @property
    def injective(self) -> bool:
        return self.rank == self.residue_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.ring_dim

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective


def _tensor_inclusion(small: SigmaTensorSquare, big: SigmaTensorSquare) -> IntegerMatrix:
    ring = big.units.ring
    logs = [big.units.log(ring.constant(g.constant_term)) for g in small.units.generators]
    rows = [big.word_from_logs(logs[i], logs[j]) for i in range(small.rank) for j in range(small.rank)]
    return IntegerMatrix.from_rows(rows, big.group.num_generators)


def bloch_comparison_mod_p(
    residue_ring: RingDescriptor, ring: RingDescriptor, prime: int
) -> BlochComparison:
    """定数としての包含 k ⊂ R が誘導する B(k)⊗Z/p → B(R)⊗Z/p を調べる

    有限体の上での結果は報告値です。
    """
    small = compute_bloch(residue_ring, prime)
    big = compute_bloch(ring, prime)
    inclusion = IntegerMatrix.from_rows(
        [big.presentation.word(ring.constant(x.constant_term)) for x in small.presentation.generators],
        len(big.presentation.generators),
    )
    check_compatible(inclusion, small.pre_bloch, big.pre_bloch)

    tensor_map = _tensor_inclusion(small.tensor, big.tensor)
    natural = True
    for k, row in enumerate(small.phi.rows):
        lhs = big.phi.row_times(inclusion.rows[k])
        rhs = tensor_map.row_times(row)
        if not big.tensor.group.is_zero([a - b for a, b in zip(lhs, rhs)]):
            natural = False

    # B(R) の生成元を 𝔭(R) の語で並べ、その下に 𝔭(R) の関係式を積む
    big_gens = big.bloch.inclusion
    lattice = big_gens.stack(big.pre_bloch.relations)
    rows, into = [], True
    for word in small.bloch.inclusion.rows:
        image = inclusion.row_times(word)
        solution = solve_left(lattice, image)
        if solution is None:
            into = False
            rows.append([0] * big_gens.nrows)
        else:
            rows.append(list(solution[: big_gens.nrows]))
    induced = IntegerMatrix.from_rows(rows, big_gens.nrows)
    rank = gf_rank(induced_map_mod_p(induced, small.bloch, big.bloch, prime)) if into else 0
    comparison = BlochComparison(
        prime=prime,
        residue_dim=small.bloch_mod_p,
        ring_dim=big.bloch_mod_p,
        natural=natural,
        into_bloch=into,
        rank=rank,
    )
    logging.info(
        f"[bloch] B({residue_ring})/{prime} -> B({ring})/{prime}: "
        f"dims {comparison.residue_dim} -> {comparison.ring_dim}, rank {rank}"
    )
    return comparison


@dataclass(frozen=True)
class FaceCrossCheck:
    pairs: int
    matched: int
    diagonal_skipped: bool
    mismatches: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.matched == self.pairs and self.diagonal_skipped


def face_five_term_crosscheck(ring: RingDescriptor) -> FaceCrossCheck:
    """(0, ∞, 1, v_α, v_β) の 5 つの面と五項関係式の項を照合する

    面 i は関係式の 4−i 番目の項に、同じ符号で対応します。
    """
    generators = build_presentation(ring).generators
    pairs = matched = 0
    diagonal_skipped = True
    mismatches = []
    for x in generators:
        diagonal_skipped = diagonal_skipped and five_term_relation(x, x) is None
        diagonal_skipped = diagonal_skipped and not OrbitSimplex((x, x)).is_admissible()
        for y in generators:
            relation = five_term_relation(x, y)
            if relation is None:
                continue
            pairs += 1
            simplex = OrbitSimplex((x, y))
            faces = [orbit_face(simplex, i, ring) for i in range(5)]
            expected = [
                (relation[4 - i][0], OrbitSimplex((relation[4 - i][1],))) for i in range(5)
            ]
            if faces == expected:
                matched += 1
            elif len(mismatches) < 5:
                mismatches.append(f"({x}, {y})")
    return FaceCrossCheck(pairs, matched, diagonal_skipped, tuple(mismatches))
