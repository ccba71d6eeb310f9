from rigiditybench.bloch.bloch import bloch_comparison_mod_p, compute_bloch
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite


class BlochSuite(BaseSuite):
    """前ブロッホ群とブロッホ群、剰余体との比較"""

    name = "bloch"

    def checks(self):
        return [("bloch_group", self.bloch_group), ("bloch_comparison", self.comparison)]

    def bloch_group(self):
        """φ̄ が五項関係式を消すこと（消さなければ PhiNotWellDefined で fail）"""
        ctx = self.context
        result = compute_bloch(ctx.ring, ctx.prime)
        return [
            CheckRecord.verdict(
                "phi_kills_five_term",
                True,
                generators=len(result.presentation.generators),
                relations=result.presentation.relations.nrows,
            ),
            CheckRecord.reported(
                "bloch_group",
                pre_bloch=result.pre_bloch_factors,
                bloch=result.bloch_factors,
                bloch_mod_p=result.bloch_mod_p,
                image_order=result.image_order,
            ),
        ]

    def comparison(self):
        """B(k)⊗Z/p → B(A)⊗Z/p：自然性は検査し、同型かどうかは報告する"""
        skip = self.requires_invertible_prime("bloch_comparison")
        if skip:
            return skip
        ctx = self.context
        if ctx.ring.is_field:
            return CheckRecord.skipped("bloch_comparison", "the ring is its own residue field")
        comparison = bloch_comparison_mod_p(ctx.residue_ring, ctx.ring, ctx.prime)
        return [
            CheckRecord.verdict(
                "bloch_naturality", comparison.natural and comparison.into_bloch
            ),
            CheckRecord.reported(
                "bloch_comparison",
                residue_dim=comparison.residue_dim,
                ring_dim=comparison.ring_dim,
                rank=comparison.rank,
                injective=comparison.injective,
                surjective=comparison.surjective,
            ),
        ]
