"""射影直線 P¹(A) の点と一般の位置"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from rigiditybench.errors import GuardExceeded
from rigiditybench.ring.ring import RingDescriptor, RingElement, ring_inv

P1_GUARD = 10**5


@dataclass(frozen=True)
class ProjPoint:
    """単模ベクトル (u, w)ᵀ の射影同値類

    正規形は (1, b) か、a が単元でない (a, 1) のどちらかです。
    """

    u: RingElement
    w: RingElement

    @classmethod
    def from_vector(cls, u: RingElement, w: RingElement) -> "ProjPoint":
        """任意の単模ベクトルを正規形に直す

        Raises:
            ValueError: どちらの成分も単元でない場合
        """
        if u.is_unit:
            return cls(u.ring.one, w * ring_inv(u))
        if w.is_unit:
            return cls(u * ring_inv(w), w.ring.one)
        raise ValueError(f"({u}, {w}) is not unimodular")

    @classmethod
    def affine(cls, b: RingElement) -> "ProjPoint":
        """(1, b)ᵀ"""
        return cls(b.ring.one, b)

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "ProjPoint":
        return cls(ring.one, ring.zero)

    @classmethod
    def infinity(cls, ring: RingDescriptor) -> "ProjPoint":
        return cls(ring.zero, ring.one)

    @classmethod
    def one(cls, ring: RingDescriptor) -> "ProjPoint":
        return cls(ring.one, ring.one)

    @property
    def ring(self) -> RingDescriptor:
        return self.u.ring

    @property
    def is_affine(self) -> bool:
        return self.u.is_unit

    @property
    def residue_index(self) -> int:
        """剰余体上の点 v̄ の番号（F_q の元 b̄ は b̄、∞ は q）"""
        if self.is_affine:
            return self.w.constant_term
        return self.ring.q

    @property
    def codes(self) -> Tuple[int, int]:
        return (self.ring.encode(self.u), self.ring.encode(self.w))

    def __str__(self) -> str:
        return f"({self.u}, {self.w})"


def determinant(a: ProjPoint, b: ProjPoint) -> RingElement:
    """det [a b] = u_a·w_b − w_a·u_b"""
    return a.u * b.w - a.w * b.u


def is_general_position(points: Sequence[ProjPoint]) -> bool:
    """どの 2 点の行列式も単元なら True"""
    for i, a in enumerate(points):
        for b in points[i + 1 :]:
            if not determinant(a, b).is_unit:
                return False
    return True


def p1_size(ring: RingDescriptor) -> int:
    return ring.q ** (ring.num_monomials - 1) * (ring.q + 1)


def enumerate_p1(ring: RingDescriptor) -> Tuple[ProjPoint, ...]:
    """P¹(A) の全点：(1, b) を符号順に並べ、続けて a ∈ 𝔪 の (a, 1)

    Raises:
        GuardExceeded: 点の個数が上限を超える場合
    """
    count = p1_size(ring)
    if count > P1_GUARD:
        raise GuardExceeded("P1 points", count, P1_GUARD)
    points = [ProjPoint.affine(b) for b in ring.elements()]
    points.extend(ProjPoint(a, ring.one) for a in ring.maximal_ideal())
    return tuple(points)
