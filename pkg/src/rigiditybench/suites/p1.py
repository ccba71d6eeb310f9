from itertools import combinations

from rigiditybench.complex.gpcomplex import gp_basis_size
from rigiditybench.complex.p1 import P1_GUARD, enumerate_p1, is_general_position, p1_size
from rigiditybench.errors import GuardExceeded
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite

PAIR_GUARD = 2 * 10**6


class P1Suite(BaseSuite):
    """射影直線 P¹(A) の列挙と一般の位置にある対"""

    name = "p1"

    def checks(self):
        return [("p1_enumeration", self.enumeration), ("gp_pairs", self.gp_pairs)]

    def enumeration(self):
        ring = self.context.ring
        points = enumerate_p1(ring)
        distinct = len(set(p.codes for p in points)) == len(points)
        return CheckRecord.verdict(
            "p1_enumeration",
            distinct and len(points) == p1_size(ring),
            size=len(points),
            expected=p1_size(ring),
        )

    def gp_pairs(self):
        """一般の位置にある順序対の個数が C₁ の基底の大きさと一致するか"""
        ring = self.context.ring
        size = p1_size(ring)
        if size > P1_GUARD or size * size > PAIR_GUARD:
            raise GuardExceeded("P1 pairs", size * size, PAIR_GUARD)
        points = enumerate_p1(ring)
        count = 2 * sum(1 for pair in combinations(points, 2) if is_general_position(pair))
        return CheckRecord.verdict(
            "gp_pairs", count == gp_basis_size(ring, 1), count=count, expected=gp_basis_size(ring, 1)
        )
