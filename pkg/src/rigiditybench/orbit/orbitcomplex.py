"""最下行の複体 D_•(A) = E¹_{3,0} ← E¹_{4,0} ← ... と商複体 Q_•"""

import logging
from dataclasses import dataclass
from math import perm
from typing import Dict, List, Optional, Tuple

import numpy as np

from rigiditybench.cache import cache_path, load_arrays, save_arrays
from rigiditybench.complex.chain import ChainComplex, boundary_from_faces
from rigiditybench.complex.gpcomplex import tuple_codes
from rigiditybench.complex.p1 import ProjPoint
from rigiditybench.errors import GuardExceeded
from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.linalg.matrix import PrimeFieldMatrix
from rigiditybench.orbit.frame import OrbitSimplex, canonical_frame
from rigiditybench.ring.ring import RingDescriptor, RingElement

ORBIT_BASIS_GUARD = 10**6


def admissible_elements(ring: RingDescriptor) -> Tuple[RingElement, ...]:
    """α と 1−α がともに単元である元（符号順）"""
    return tuple(x for x in ring.units() if (1 - x).is_unit)


def orbit_basis_size(ring: RingDescriptor, d: int) -> int:
    """次数 d（長さ d+1）の α の組の個数"""
    fiber = ring.q ** (ring.num_monomials - 1)
    return perm(ring.q - 2, d + 1) * fiber ** (d + 1)


def _face_tables(ring: RingDescriptor, elements: Tuple[RingElement, ...]) -> np.ndarray:
    """tables[i, a, b]：面 i (0, 1, 2) で第 1 の α が elements[a] のとき elements[b] の行き先

    最初の 3 点のどれかを除くと、残る特別な 2 点と v_{α₁} で枠が決まるので、
    変換は α₁ だけに依存します。
    """
    count = len(elements)
    index = {ring.encode(x): k for k, x in enumerate(elements)}
    special = (ProjPoint.zero(ring), ProjPoint.infinity(ring), ProjPoint.one(ring))
    tables = np.full((3, count, count), -1, dtype=np.int64)
    for i in range(3):
        kept = special[:i] + special[i + 1 :]
        for a, alpha in enumerate(elements):
            g, _ = canonical_frame(kept + (ProjPoint.affine(alpha),))
            for b, beta in enumerate(elements):
                if not (alpha - beta).is_unit:
                    continue
                image = g.apply(ProjPoint.affine(beta))
                tables[i, a, b] = index[ring.encode(image.w)]
    return tables


@dataclass(frozen=True)
class OrbitComplex:
    """D_•(A)

    Attributes:
        ring: 環 A
        prime: 係数素数
        elements: 許容元（α の候補）。基底は elements の添字で持ちます
        bases: 次数 d の基底（添字の (d+1) 組、辞書式順）
        rational: 各基底元がすべて定数の α からなるか
        chain: 鎖複体（添加なし）
    """

    ring: RingDescriptor
    prime: int
    elements: Tuple[RingElement, ...]
    bases: Tuple[np.ndarray, ...]
    rational: Tuple[np.ndarray, ...]
    chain: ChainComplex

    @property
    def dmax(self) -> int:
        return len(self.bases) - 1

    @property
    def basis_sizes(self) -> Tuple[int, ...]:
        return self.chain.sizes

    def simplex(self, d: int, index: int) -> OrbitSimplex:
        return OrbitSimplex(tuple(self.elements[k] for k in self.bases[d][index]))

    def rational_face_closed(self) -> bool:
        """有理的な基底元の面がすべて有理的か"""
        for d in range(1, self.dmax + 1):
            boundary = self.chain.boundary(d)
            rational_cols = self.rational[d]
            for r, c, _ in boundary.triplets:
                if rational_cols[c] and not self.rational[d - 1][r]:
                    return False
        return True


def _enumerate_orbit_bases(residues: np.ndarray, dmax: int) -> List[np.ndarray]:
    count = len(residues)
    bases = [np.arange(count, dtype=np.int64)[:, None]]
    for d in range(1, dmax + 1):
        prev = bases[-1]
        used = residues[prev]
        allowed = ~np.any(used[:, :, None] == residues[None, None, :], axis=1)
        rows, cols = np.nonzero(allowed)
        bases.append(np.hstack([prev[rows], cols[:, None]]))
    return bases


def build_orbit_complex(
    ring: RingDescriptor, dmax: int, prime: int, cache_dir: Optional[str] = None
) -> OrbitComplex:
    """次数 dmax までの D_•(A)

    微分は Σ (−1)^i orbit_face_i です（i は (0, ∞, 1, v_{α₁}, ...) での位置）。

    Raises:
        GuardExceeded: 基底の個数が上限を超える場合
    """
    for d in range(dmax + 1):
        size = orbit_basis_size(ring, d)
        if size > ORBIT_BASIS_GUARD:
            raise GuardExceeded(f"orbit basis in degree {d}", size, ORBIT_BASIS_GUARD)
    elements = admissible_elements(ring)
    residues = np.array([x.constant_term for x in elements], dtype=np.int64)
    constant = np.array([x.is_constant for x in elements], dtype=bool)
    radix = max(len(elements), 1)

    digest = ring.descriptor_hash()
    path = cache_path(cache_dir, "orbits", digest)
    cached = load_arrays(path, digest)
    if cached is not None and all(f"basis_{d}" in cached for d in range(dmax + 1)):
        logging.debug(f"[orbit] cache hit {path}")
        bases = [cached[f"basis_{d}"].astype(np.int64) for d in range(dmax + 1)]
    else:
        bases = _enumerate_orbit_bases(residues, dmax)
        if path is not None:
            codes = np.array([ring.encode(x) for x in elements], dtype=np.int64)
            arrays: Dict[str, np.ndarray] = {"elements": codes}
            arrays.update({f"basis_{d}": b for d, b in enumerate(bases)})
            save_arrays(path, digest, arrays)

    tables = _face_tables(ring, elements)
    sizes = tuple(len(b) for b in bases)
    boundaries: List[Optional[PrimeFieldMatrix]] = [None]
    prev_codes = tuple_codes(bases[0], radix)
    for d in range(1, dmax + 1):
        basis = bases[d]
        faces, signs = [], []
        first = basis[:, 0]
        for i in range(3):
            image = tables[i][first[:, None], basis[:, 1:]]
            faces.append(np.searchsorted(prev_codes, tuple_codes(image, radix)))
            signs.append(np.full(sizes[d], (-1) ** i))
        for k in range(d + 1):
            image = np.delete(basis, k, axis=1)
            faces.append(np.searchsorted(prev_codes, tuple_codes(image, radix)))
            signs.append(np.full(sizes[d], (-1) ** (k + 3)))
        boundaries.append(boundary_from_faces(prime, (sizes[d - 1], sizes[d]), faces, signs))
        prev_codes = tuple_codes(basis, radix)

    rational = tuple(np.all(constant[b], axis=1) for b in bases)
    logging.info(f"[orbit] D({ring}) mod {prime}: basis sizes {sizes}")
    chain = ChainComplex(prime, sizes, tuple(boundaries))
    return OrbitComplex(ring, prime, elements, tuple(bases), rational, chain)


@dataclass(frozen=True)
class QuotientComplex:
    """Q_• = D_•(R)/D_•(k)

    Attributes:
        chain: 非有理的な基底元だけからなる鎖複体
        subcomplex_verified: D_•(k) が D_•(R) の面で閉じた部分複体であることを確認したか
        homology: 次数 0..dmax-1 のホモロジーの次元（報告値）
    """

    residue_ring: RingDescriptor
    ring: RingDescriptor
    prime: int
    chain: ChainComplex
    subcomplex_verified: bool
    homology: Tuple[int, ...]

    @property
    def basis_sizes(self) -> Tuple[int, ...]:
        return self.chain.sizes


def _embed_residue_complex(small: OrbitComplex, big: OrbitComplex) -> bool:
    """D_•(k) の基底と境界が D_•(R) の有理的な部分とちょうど一致するか"""
    big_index = {big.ring.encode(x): k for k, x in enumerate(big.elements)}
    to_big = np.array(
        [big_index[big.ring.encode(big.ring.constant(x.constant_term))] for x in small.elements],
        dtype=np.int64,
    )
    row_maps = []
    for d in range(small.dmax + 1):
        rational_rows = np.nonzero(big.rational[d])[0]
        embedded = to_big[small.bases[d]] if len(small.bases[d]) else small.bases[d]
        if not np.array_equal(big.bases[d][rational_rows], embedded):
            return False
        row_maps.append(rational_rows)
    for d in range(1, small.dmax + 1):
        restricted = big.chain.boundary(d).submatrix(row_maps[d - 1], row_maps[d])
        if restricted != small.chain.boundary(d):
            return False
    return big.rational_face_closed()


def build_quotient_complex(
    residue_ring: RingDescriptor,
    ring: RingDescriptor,
    prime: int,
    dmax: int = 2,
    backend: Optional[BaseRankBackend] = None,
    cache_dir: Optional[str] = None,
) -> QuotientComplex:
    """D_•(k) ⊂ D_•(R) を確かめ、商複体とそのホモロジーを返す

    ホモロジーは有限体の上での観測値であり、消えることは主張しません。
    """
    if residue_ring.field != ring.field or not residue_ring.is_field:
        raise ValueError(f"{residue_ring} is not the residue field of {ring}")
    small = build_orbit_complex(residue_ring, dmax, prime, cache_dir)
    big = build_orbit_complex(ring, dmax, prime, cache_dir)
    verified = _embed_residue_complex(small, big)

    keep = [np.nonzero(~r)[0] for r in big.rational]
    sizes = tuple(len(k) for k in keep)
    boundaries: List[Optional[PrimeFieldMatrix]] = [None]
    for d in range(1, dmax + 1):
        boundaries.append(big.chain.boundary(d).submatrix(keep[d - 1], keep[d]))
    chain = ChainComplex(prime, sizes, tuple(boundaries))
    homology = chain.homology_dims(dmax - 1, backend)
    logging.info(
        f"[orbit] Q({ring}/{residue_ring}) mod {prime}: sizes {sizes}, homology {homology}"
    )
    return QuotientComplex(residue_ring, ring, prime, chain, verified, homology)
