from rigiditybench.orbit.e1 import compare_low_columns, e1_page
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite

E1_ROWS = 4


class E1Suite(BaseSuite):
    """スペクトル系列の E¹ 項を剰余体と環で比べる"""

    name = "e1"

    def checks(self):
        return [("e1_low_columns", self.low_columns)]

    def low_columns(self):
        skip = self.requires_invertible_prime("e1_low_columns")
        if skip:
            return skip
        ctx = self.context
        small = e1_page(ctx.residue_ring, ctx.prime, E1_ROWS)
        big = e1_page(ctx.ring, ctx.prime, E1_ROWS)
        return [
            CheckRecord.verdict(
                "e1_low_columns",
                compare_low_columns(small, big),
                residue=small.rows(),
                ring=big.rows(),
            )
        ]
