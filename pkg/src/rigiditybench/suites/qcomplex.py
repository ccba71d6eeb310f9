from rigiditybench.orbit.orbitcomplex import build_quotient_complex
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite


class QuotientComplexSuite(BaseSuite):
    """商複体 Q_• = D_•(A)/D_•(k)

    ホモロジーは有限体では何も保証されないので reported として出します。
    """

    name = "qcomplex"

    def checks(self):
        return [("quotient_complex", self.quotient)]

    def quotient(self):
        ctx = self.context
        if ctx.ring.is_field:
            return CheckRecord.skipped("quotient_complex", "the ring is its own residue field")
        q = build_quotient_complex(
            ctx.residue_ring, ctx.ring, ctx.prime, max(ctx.dmax, 2), ctx.backend, ctx.cache_dir
        )
        return [
            CheckRecord.verdict("residue_subcomplex", q.subcomplex_verified),
            CheckRecord.verdict("quotient_boundary_squared", q.chain.check_boundary_squared()),
            CheckRecord.reported(
                "quotient_homology", prime=ctx.prime, sizes=q.basis_sizes, dims=q.homology
            ),
        ]
