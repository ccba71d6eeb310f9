"""PGL₂(A) の作用と (0, ∞, 1, α₁, ...) への正規化"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from rigiditybench.complex.p1 import ProjPoint, determinant, is_general_position
from rigiditybench.errors import NotAUnit, TupleNotGP
from rigiditybench.ring.ring import RingDescriptor, RingElement, ring_inv


@dataclass(frozen=True)
class ProjectiveMatrix:
    """PGL₂(A) の元 [[a, b], [c, d]]

    読み順で最初の単元成分が 1 になるようにスカラー倍した代表を持ちます。
    """

    a: RingElement
    b: RingElement
    c: RingElement
    d: RingElement

    @classmethod
    def create(
        cls, a: RingElement, b: RingElement, c: RingElement, d: RingElement
    ) -> "ProjectiveMatrix":
        """
        Raises:
            NotAUnit: 行列式が単元でない場合
        """
        det = a * d - b * c
        if not det.is_unit:
            raise NotAUnit(f"determinant {det} is not a unit")
        # 行列式が単元なら少なくとも一つの成分は単元
        lead = next(x for x in (a, b, c, d) if x.is_unit)
        scale = ring_inv(lead)
        return cls(a * scale, b * scale, c * scale, d * scale)

    @classmethod
    def identity(cls, ring: RingDescriptor) -> "ProjectiveMatrix":
        return cls(ring.one, ring.zero, ring.zero, ring.one)

    @property
    def ring(self) -> RingDescriptor:
        return self.a.ring

    @property
    def entries(self) -> Tuple[RingElement, RingElement, RingElement, RingElement]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> RingElement:
        return self.a * self.d - self.b * self.c

    def apply(self, point: ProjPoint) -> ProjPoint:
        """列ベクトルへの作用 g·v"""
        u = self.a * point.u + self.b * point.w
        w = self.c * point.u + self.d * point.w
        return ProjPoint.from_vector(u, w)

    def __matmul__(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        return ProjectiveMatrix.create(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix.create(self.d, -self.b, -self.c, self.a)

    def is_identity(self) -> bool:
        return self == ProjectiveMatrix.identity(self.ring)

    def __str__(self) -> str:
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


@dataclass(frozen=True)
class OrbitSimplex:
    """(0, ∞, 1, v_{α₁}, ..., v_{αₙ}) の軌道を表す α の組"""

    alphas: Tuple[RingElement, ...]

    @property
    def length(self) -> int:
        return len(self.alphas)

    def points(self, ring: RingDescriptor) -> Tuple[ProjPoint, ...]:
        special = (ProjPoint.zero(ring), ProjPoint.infinity(ring), ProjPoint.one(ring))
        return special + tuple(ProjPoint.affine(a) for a in self.alphas)

    def is_admissible(self) -> bool:
        """αᵢ, 1−αᵢ, αᵢ−αⱼ (i≠j) がすべて単元か"""
        for i, a in enumerate(self.alphas):
            if not (a.is_unit and (1 - a).is_unit):
                return False
            for b in self.alphas[i + 1 :]:
                if not (a - b).is_unit:
                    return False
        return True

    @property
    def is_rational(self) -> bool:
        """すべての αᵢ が定数（剰余体の元）か"""
        return all(a.is_constant for a in self.alphas)

    def __str__(self) -> str:
        return "(" + ", ".join(str(a) for a in self.alphas) + ")"


def frame_matrix(v0: ProjPoint, v1: ProjPoint, v2: ProjPoint) -> ProjectiveMatrix:
    """v0 ↦ 0, v1 ↦ ∞, v2 ↦ 1 となる唯一の g（3 点が一般の位置にあること）

    g = diag(det(v2, v0), det(v2, v1))·[[w1, −u1], [w0, −u0]]
    """
    lam = determinant(v2, v0)
    mu = determinant(v2, v1)
    return ProjectiveMatrix.create(lam * v1.w, -(lam * v1.u), mu * v0.w, -(mu * v0.u))


def canonical_frame(points: Sequence[ProjPoint]) -> Tuple[ProjectiveMatrix, OrbitSimplex]:
    """一般の位置にある組を (0, ∞, 1, (1, α₁), ...) に移す g と α の組

    Raises:
        TupleNotGP: 3 点未満か、一般の位置にない場合
    """
    if len(points) < 3:
        raise TupleNotGP(f"a frame needs at least 3 points, got {len(points)}")
    if not is_general_position(points):
        raise TupleNotGP("points are not pairwise in general position")
    g = frame_matrix(points[0], points[1], points[2])
    alphas = []
    for point in points[3:]:
        image = g.apply(point)
        # ∞ と一般の位置にあるので (1, α) の形
        alphas.append(image.w)
    return g, OrbitSimplex(tuple(alphas))


def orbit_face(simplex: OrbitSimplex, i: int, ring: RingDescriptor) -> Tuple[int, OrbitSimplex]:
    """(0, ∞, 1, v_{α₁}, ...) の i 番目の点を除いて正規化し直す

    Returns:
        Tuple[int, OrbitSimplex]: 符号 (−1)^i と新しい α の組
    """
    if simplex.length < 1:
        raise ValueError("orbit faces need at least one alpha")
    points = simplex.points(ring)
    if not 0 <= i < len(points):
        raise ValueError(f"face index {i} out of range 0..{len(points) - 1}")
    rest = points[:i] + points[i + 1 :]
    if i >= 3:
        return (-1) ** i, OrbitSimplex(simplex.alphas[: i - 3] + simplex.alphas[i - 2 :])
    _, alphas = canonical_frame(rest)
    return (-1) ** i, alphas


def act(g: ProjectiveMatrix, points: Sequence[ProjPoint]) -> Tuple[ProjPoint, ...]:
    return tuple(g.apply(pt) for pt in points)


def mobius(g: ProjectiveMatrix, z: RingElement) -> RingElement:
    """(1, z) の像の α 座標（像が (1, ·) の形であること）"""
    image = g.apply(ProjPoint.affine(z))
    if not image.is_affine:
        raise ValueError(f"{z} is sent to a non-affine point")
    return image.w
