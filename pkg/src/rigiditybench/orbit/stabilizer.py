"""PGL₂(A) の全数列挙による固定部分群と軌道の検査、正規化の乱択検査"""

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from rigiditybench.complex.p1 import ProjPoint, enumerate_p1
from rigiditybench.errors import GuardExceeded
from rigiditybench.orbit.frame import ProjectiveMatrix, act, canonical_frame
from rigiditybench.orbit.orbitcomplex import orbit_basis_size
from rigiditybench.ring.ring import RingDescriptor

PGL2_GUARD = 10**5
ORBIT_WORK_GUARD = 10**5


def pgl2_order(ring: RingDescriptor) -> int:
    """|PGL₂(A)| = |GL₂(F_q)|·q^{4(M−1)} / |A^×|"""
    q, extra = ring.q, ring.num_monomials - 1
    gl2 = (q**2 - 1) * (q**2 - q) * q ** (4 * extra)
    return gl2 // ring.num_units


def enumerate_pgl2(ring: RingDescriptor) -> Tuple[ProjectiveMatrix, ...]:
    """読み順で最初の単元成分が 1 の代表をすべて列挙する

    Raises:
        GuardExceeded: |PGL₂(A)| が上限を超える場合
    """
    order = pgl2_order(ring)
    if order > PGL2_GUARD:
        raise GuardExceeded("PGL2 elements", order, PGL2_GUARD)
    elements = list(ring.elements())
    found = []
    for entries in itertools.product(elements, repeat=4):
        lead = next((x for x in entries if x.is_unit), None)
        if lead is None or lead != ring.one:
            continue
        a, b, c, d = entries
        if (a * d - b * c).is_unit:
            found.append(ProjectiveMatrix(a, b, c, d))
    if len(found) != order:
        raise ArithmeticError(f"enumerated {len(found)} elements of PGL2, expected {order}")
    return tuple(found)


def _count_orbits(group: Sequence[ProjectiveMatrix], tuples: List[Tuple[ProjPoint, ...]]) -> int:
    remaining = set(tuples)
    orbits = 0
    while remaining:
        base = remaining.pop()
        for g in group:
            remaining.discard(act(g, base))
        orbits += 1
    return orbits


def _gp_tuples(points: Sequence[ProjPoint], length: int) -> List[Tuple[ProjPoint, ...]]:
    return [
        combo
        for combo in itertools.permutations(points, length)
        if len({pt.residue_index for pt in combo}) == length
    ]


@dataclass(frozen=True)
class StabilizerReport:
    """固定部分群の位数と軌道数

    Attributes:
        group_order: |PGL₂(A)|
        stabilizer_orders: 0、(0, ∞)、(0, ∞, 1) の固定部分群の位数
        expected_orders: (|A^×|·|A|, |A^×|, 1)
        orbit_counts: C₀、C₁、C₂ 上の軌道数
        c3_orbits: C₃ 上の軌道数
        expected_c3_orbits: D₀ の基底の大きさ
        c3_stabilizers_trivial: C₃ のすべての組の固定部分群が自明か
    """

    group_order: int
    stabilizer_orders: Tuple[int, int, int]
    expected_orders: Tuple[int, int, int]
    orbit_counts: Tuple[int, int, int]
    c3_orbits: int
    expected_c3_orbits: int
    c3_stabilizers_trivial: bool

    @property
    def passed(self) -> bool:
        return (
            self.stabilizer_orders == self.expected_orders
            and self.orbit_counts == (1, 1, 1)
            and self.c3_orbits == self.expected_c3_orbits
            and self.c3_stabilizers_trivial
        )


def stabilizer_orders(ring: RingDescriptor) -> StabilizerReport:
    """固定部分群の位数と 3 重推移性を全数で確かめる

    Raises:
        GuardExceeded: 群または軌道計算が上限を超える場合
    """
    group = enumerate_pgl2(ring)
    points = enumerate_p1(ring)
    zero, inf, one = ProjPoint.zero(ring), ProjPoint.infinity(ring), ProjPoint.one(ring)
    frames = ((zero,), (zero, inf), (zero, inf, one))
    stabs = tuple(
        sum(1 for g in group if act(g, frame) == frame) for frame in frames
    )
    c3 = _gp_tuples(points, 4)
    work = len(group) * len(c3)
    if work > ORBIT_WORK_GUARD:
        raise GuardExceeded("orbit enumeration work", work, ORBIT_WORK_GUARD)
    counts = tuple(_count_orbits(group, _gp_tuples(points, k)) for k in (1, 2, 3))
    c3_orbits = _count_orbits(group, c3)
    # 軌道の大きさの和が |C₃| = 軌道数·|G| となるのは固定部分群がすべて自明なとき
    c3_trivial = c3_orbits * len(group) == len(c3)
    units = ring.num_units
    report = StabilizerReport(
        group_order=len(group),
        stabilizer_orders=stabs,
        expected_orders=(units * ring.size, units, 1),
        orbit_counts=counts,
        c3_orbits=c3_orbits,
        expected_c3_orbits=orbit_basis_size(ring, 0),
        c3_stabilizers_trivial=c3_trivial,
    )
    logging.info(f"[stabilizer] {ring}: |PGL2|={len(group)}, stabilizers {stabs}, orbits {counts}")
    return report


def random_gp_tuple(
    points: Sequence[ProjPoint], length: int, rng: np.random.Generator
) -> Tuple[ProjPoint, ...]:
    """剰余点が相異なる点の組を一様に選ぶ"""
    by_residue = {}
    for pt in points:
        by_residue.setdefault(pt.residue_index, []).append(pt)
    residues = sorted(by_residue)
    chosen = rng.choice(len(residues), size=length, replace=False)
    return tuple(
        by_residue[residues[r]][rng.integers(len(by_residue[residues[r]]))] for r in chosen
    )


def random_projective_matrix(ring: RingDescriptor, rng: np.random.Generator) -> ProjectiveMatrix:
    while True:
        a, b, c, d = (ring.decode(int(code)) for code in rng.integers(ring.size, size=4))
        if (a * d - b * c).is_unit:
            return ProjectiveMatrix.create(a, b, c, d)


@dataclass(frozen=True)
class InvarianceReport:
    trials: int
    invariant: int
    idempotent: int

    @property
    def passed(self) -> bool:
        return self.invariant == self.trials and self.idempotent == self.trials


def orbit_invariance_check(
    ring: RingDescriptor, trials: int, seed: int, length: int = 5
) -> InvarianceReport:
    """canonical_frame(g·σ) と canonical_frame(σ) の α が一致し、正規形の正規化が恒等か"""
    rng = np.random.default_rng(seed)
    points = enumerate_p1(ring)
    length = min(length, ring.q + 1)
    invariant = idempotent = 0
    for _ in range(trials):
        sigma = random_gp_tuple(points, length, rng)
        g = random_projective_matrix(ring, rng)
        _, alphas = canonical_frame(sigma)
        _, moved = canonical_frame(act(g, sigma))
        invariant += alphas == moved
        frame, again = canonical_frame(alphas.points(ring))
        idempotent += frame.is_identity() and again == alphas
    return InvarianceReport(trials, invariant, idempotent)
