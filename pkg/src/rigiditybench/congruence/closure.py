"""有限部分群の生成（右剰余類ごとの幅優先探索）"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from rigiditybench.congruence.slgroup import SpecialLinearGroup
from rigiditybench.errors import GuardExceeded

CLOSURE_GUARD = 2 * 10**4


@dataclass(frozen=True, eq=False)
class FiniteSubgroup:
    """列挙済みの部分群

    Attributes:
        group: 外側の SL_n(A)
        elements: (N, M, n, n)
        index: 元のバイト列 → 添字
        generators: 生成系
    """

    group: SpecialLinearGroup
    elements: np.ndarray
    index: Dict[bytes, int]
    generators: Tuple[np.ndarray, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, x: np.ndarray) -> bool:
        return self.group.key(x) in self.index

    def min_level(self) -> int:
        """単位元以外の元の合同レベルの最小値（自明群なら L）"""
        levels = self.group.level(self.elements)
        return int(levels.min()) if len(levels) else self.group.trunc


def trivial_subgroup(group: SpecialLinearGroup) -> FiniteSubgroup:
    identity = group.identity_array
    return FiniteSubgroup(group, identity[None].copy(), {group.key(identity): 0}, ())


def subgroup_closure(
    group: SpecialLinearGroup,
    generators: Sequence[np.ndarray],
    guard: int = CLOSURE_GUARD,
    base: Optional[FiniteSubgroup] = None,
) -> FiniteSubgroup:
    """⟨base, generators⟩ を列挙する

    集合を base の右剰余類 H·y の和として育て、代表 y に生成元を右から掛けます。
    どの剰余類の代表にどの生成元を掛けても集合から出なくなれば群です。

    Raises:
        GuardExceeded: 位数が上限を超える場合
    """
    base = base or trivial_subgroup(group)
    gens = tuple(base.generators) + tuple(np.asarray(g) for g in generators)
    blocks = [base.elements]
    index = dict(base.index)
    queue = deque([group.identity_array])
    while queue:
        rep = queue.popleft()
        for s in gens:
            z = group.mul(rep, s)
            if group.key(z) in index:
                continue
            coset = group.mul(base.elements, z)
            start = len(index)
            for k, key in enumerate(group.keys(coset)):
                index[key] = start + k
            blocks.append(coset)
            queue.append(z)
            if len(index) > guard:
                raise GuardExceeded("subgroup closure", len(index), guard)
    elements = np.concatenate(blocks)
    logging.debug(f"[closure] {group}: subgroup of order {len(elements)}")
    return FiniteSubgroup(group, elements, index, gens)


def normal_closure(
    group: SpecialLinearGroup,
    generators: Sequence[np.ndarray],
    ambient_generators: Sequence[np.ndarray],
    guard: int = CLOSURE_GUARD,
) -> FiniteSubgroup:
    """generators の ⟨ambient_generators⟩ における正規閉包

    有限群では s による共役が部分群を自身に移せば s⁻¹ でも同じなので、
    生成元 s による共役だけを調べれば足ります。
    """
    nontrivial = [g for g in generators if not np.array_equal(g, group.identity_array)]
    closure = subgroup_closure(group, nontrivial, guard)
    inverses = [group.inverse(s) for s in ambient_generators]
    changed = True
    while changed:
        changed = False
        for x in closure.generators:
            for s, s_inv in zip(ambient_generators, inverses):
                conjugate = group.mul(group.mul(s, x), s_inv)
                if not closure.contains(conjugate):
                    closure = subgroup_closure(group, [conjugate], guard, base=closure)
                    changed = True
            if changed:
                break
    return closure


def commutator_subgroup(
    group: SpecialLinearGroup, generators: Sequence[np.ndarray], guard: int = CLOSURE_GUARD
) -> FiniteSubgroup:
    """[G, G] = 生成元どうしの交換子の正規閉包"""
    commutators = [
        group.commutator(a, b)
        for k, a in enumerate(generators)
        for b in generators[k + 1 :]
    ]
    return normal_closure(group, commutators, generators, guard)


def relative_commutator(
    group: SpecialLinearGroup,
    generators: Sequence[np.ndarray],
    subgroup: FiniteSubgroup,
    guard: int = CLOSURE_GUARD,
) -> FiniteSubgroup:
    """[G, H]（H は G の正規部分群）= [s, h] の正規閉包"""
    commutators = [group.commutator(s, h) for s in generators for h in subgroup.generators]
    return normal_closure(group, commutators, generators, guard)
