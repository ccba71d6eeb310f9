from rigiditybench.complex.gpcomplex import build_gp_complex, gp_basis_size, homology_dims
from rigiditybench.errors import GuardExceeded
from rigiditybench.linalg.dense import DenseRankBackend
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite

DENSE_GUARD = 4000


class ComplexSuite(BaseSuite):
    """一般の位置の複体 C_•(A) の構成とホモロジー"""

    name = "complex"

    def checks(self):
        return [("gp_complex", self.gp_complex)]

    def gp_complex(self):
        ctx = self.context
        built = build_gp_complex(ctx.ring, ctx.dmax, ctx.prime, ctx.cache_dir)
        records = [
            CheckRecord.verdict(
                "basis_sizes",
                built.basis_sizes == tuple(gp_basis_size(ctx.ring, d) for d in range(ctx.dmax + 1)),
                sizes=built.basis_sizes,
            ),
            CheckRecord.verdict("boundary_squared", built.chain.check_boundary_squared()),
        ]
        through = ctx.dmax - 1
        dims = homology_dims(built, through, ctx.backend)
        window = built.validity_window
        valid = dims[: window + 1]
        records.append(
            CheckRecord.verdict(
                "reduced_homology_vanishes",
                not any(valid),
                prime=ctx.prime,
                through=window,
                dims=valid,
            )
        )
        if through > window:
            records.append(
                CheckRecord.reported("exploratory_homology", degrees=list(range(window + 1, through + 1)), dims=dims[window + 1 :])
            )
        records.append(self._backend_agreement(built, through))
        if ctx.second_prime:
            other = build_gp_complex(ctx.ring, ctx.dmax, ctx.second_prime, ctx.cache_dir)
            records.append(
                CheckRecord.reported(
                    "second_prime_homology",
                    prime=ctx.second_prime,
                    dims=homology_dims(other, through, ctx.backend),
                )
            )
        return records

    def _backend_agreement(self, built, through):
        """疎と密のバックエンドで、基底を並べ替えても階数が一致するか"""
        if max(built.basis_sizes[: through + 2]) > DENSE_GUARD:
            return CheckRecord.skipped(
                "backend_agreement",
                str(GuardExceeded("dense rank oracle", max(built.basis_sizes), DENSE_GUARD)),
            )
        permuted = built.chain.permuted(self.context.seed)
        sparse = built.chain.ranks(self.context.backend)
        dense = permuted.ranks(DenseRankBackend())
        return CheckRecord.verdict("backend_agreement", sparse == dense, ranks=sparse)
