"""一般の位置にある点の組の単体的鎖複体 C_•(A)"""

import logging
from dataclasses import dataclass
from math import perm
from typing import List, Optional, Tuple

import numpy as np

from rigiditybench.cache import cache_path, load_arrays, save_arrays
from rigiditybench.complex.chain import ChainComplex, boundary_from_faces
from rigiditybench.complex.p1 import ProjPoint, enumerate_p1
from rigiditybench.errors import GuardExceeded
from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.linalg.matrix import PrimeFieldMatrix
from rigiditybench.ring.ring import RingDescriptor

BASIS_GUARD = 10**6


def tuple_codes(tuples: np.ndarray, radix: int) -> np.ndarray:
    """固定長の添字組を radix 進の整数に詰める（辞書式順を保つ）"""
    length = tuples.shape[1]
    if length and radix**length >= 2**62:
        raise GuardExceeded("tuple code range", radix**length, 2**62)
    weights = radix ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return tuples @ weights


def face_rows(tuples: np.ndarray, prev_codes: np.ndarray, radix: int) -> List[np.ndarray]:
    """i 番目の点を除いた組が前の次数の基底の何行目か（i = 0..d）"""
    rows = []
    for i in range(tuples.shape[1]):
        codes = tuple_codes(np.delete(tuples, i, axis=1), radix)
        index = np.searchsorted(prev_codes, codes)
        if len(codes) and not np.array_equal(prev_codes[np.minimum(index, len(prev_codes) - 1)], codes):
            raise ArithmeticError("a face of a general-position tuple is missing from the basis")
        rows.append(index)
    return rows


@dataclass(frozen=True)
class GPComplex:
    """C_•(A) とその添加写像

    Attributes:
        ring: 環 A
        prime: 係数素数
        points: P¹(A) の点（添字の順）
        bases: 次数 d の基底（点の添字の (d+1) 組、辞書式順）
        chain: 境界行列を持つ鎖複体（添加写像つき）
    """

    ring: RingDescriptor
    prime: int
    points: Tuple[ProjPoint, ...]
    bases: Tuple[np.ndarray, ...]
    chain: ChainComplex

    @property
    def dmax(self) -> int:
        return len(self.bases) - 1

    @property
    def basis_sizes(self) -> Tuple[int, ...]:
        return self.chain.sizes

    @property
    def validity_window(self) -> int:
        """有限の剰余体で主張してよい最高次数 min(dmax-1, q-2)"""
        return min(self.dmax - 1, self.ring.q - 2)

    def basis_tuple(self, d: int, index: int) -> Tuple[ProjPoint, ...]:
        return tuple(self.points[i] for i in self.bases[d][index])

    def degree_label(self, d: int) -> str:
        return "valid" if d <= self.validity_window else "exploratory"


def gp_basis_size(ring: RingDescriptor, d: int) -> int:
    """次数 d の基底の大きさ：剰余点が相異なる (d+1) 組の個数"""
    fiber = ring.q ** (ring.num_monomials - 1)
    return perm(ring.q + 1, d + 1) * fiber ** (d + 1)


def _enumerate_bases(residues: np.ndarray, dmax: int) -> List[np.ndarray]:
    count = len(residues)
    bases = [np.arange(count, dtype=np.int64)[:, None]]
    for d in range(1, dmax + 1):
        prev = bases[-1]
        used = residues[prev]
        allowed = ~np.any(used[:, :, None] == residues[None, None, :], axis=1)
        rows, cols = np.nonzero(allowed)
        bases.append(np.hstack([prev[rows], cols[:, None]]))
    return bases


def build_gp_complex(
    ring: RingDescriptor, dmax: int, prime: int, cache_dir: Optional[str] = None
) -> GPComplex:
    """次数 dmax までの C_•(A) を作る

    次数 d の基底は互いに一般の位置にある点の (d+1) 組です。2 点の行列式が
    単元であることは剰余点が異なることと同値なので、剰余点の番号で判定します。

    Raises:
        GuardExceeded: 点や基底の個数が上限を超える場合
    """
    for d in range(dmax + 1):
        size = gp_basis_size(ring, d)
        if size > BASIS_GUARD:
            raise GuardExceeded(f"GP basis in degree {d}", size, BASIS_GUARD)
    points = enumerate_p1(ring)
    residues = np.array([pt.residue_index for pt in points], dtype=np.int64)
    radix = len(points)

    digest = ring.descriptor_hash()
    path = cache_path(cache_dir, "p1", digest)
    cached = load_arrays(path, digest)
    if cached is not None and all(f"basis_{d}" in cached for d in range(dmax + 1)):
        logging.debug(f"[gpcomplex] cache hit {path}")
        bases = [cached[f"basis_{d}"].astype(np.int64) for d in range(dmax + 1)]
    else:
        bases = _enumerate_bases(residues, dmax)
        if path is not None:
            codes = np.array([pt.codes for pt in points], dtype=np.int64)
            arrays = {"points": codes}
            arrays.update({f"basis_{d}": b for d, b in enumerate(bases)})
            save_arrays(path, digest, arrays)

    sizes = tuple(len(b) for b in bases)
    boundaries: List[PrimeFieldMatrix] = [
        PrimeFieldMatrix.from_arrays(
            prime, (1, sizes[0]), np.zeros(sizes[0]), np.arange(sizes[0]), np.ones(sizes[0])
        )
    ]
    prev_codes = tuple_codes(bases[0], radix)
    for d in range(1, dmax + 1):
        rows = face_rows(bases[d], prev_codes, radix)
        signs = [np.full(sizes[d], (-1) ** i) for i in range(d + 1)]
        boundaries.append(boundary_from_faces(prime, (sizes[d - 1], sizes[d]), rows, signs))
        prev_codes = tuple_codes(bases[d], radix)

    logging.info(f"[gpcomplex] {ring} mod {prime}: basis sizes {sizes}")
    chain = ChainComplex(prime, sizes, tuple(boundaries))
    return GPComplex(ring, prime, points, tuple(bases), chain)


def homology_dims(
    complex_: GPComplex, through: int, backend: Optional[BaseRankBackend] = None
) -> Tuple[int, ...]:
    """次数 0..through の被約ホモロジー H̃_d の次元（H̃₀ は添加写像を使う）"""
    return complex_.chain.homology_dims(through, backend)
