from rigiditybench.bloch.bloch import face_five_term_crosscheck
from rigiditybench.orbit.orbitcomplex import build_orbit_complex, orbit_basis_size
from rigiditybench.orbit.stabilizer import orbit_invariance_check, stabilizer_orders
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite


class OrbitsSuite(BaseSuite):
    """PGL₂(A) の作用、標準形、軌道の複体 D_•(A)"""

    name = "orbits"

    def checks(self):
        return [
            ("stabilizers", self.stabilizers),
            ("frame_invariance", self.frame_invariance),
            ("orbit_complex", self.orbit_complex),
            ("face_five_term", self.face_five_term),
        ]

    def stabilizers(self):
        report = stabilizer_orders(self.context.ring)
        return CheckRecord.verdict(
            "stabilizers",
            report.passed,
            group_order=report.group_order,
            stabilizer_orders=report.stabilizer_orders,
            orbit_counts=report.orbit_counts,
            c3_orbits=report.c3_orbits,
        )

    def frame_invariance(self):
        ctx = self.context
        report = orbit_invariance_check(ctx.ring, ctx.trials, ctx.seed)
        return CheckRecord.verdict(
            "frame_invariance",
            report.passed,
            trials=report.trials,
            invariant=report.invariant,
            idempotent=report.idempotent,
        )

    def orbit_complex(self):
        ctx = self.context
        built = build_orbit_complex(ctx.ring, ctx.dmax, ctx.prime, ctx.cache_dir)
        expected = tuple(orbit_basis_size(ctx.ring, d) for d in range(ctx.dmax + 1))
        return [
            CheckRecord.verdict("orbit_basis_sizes", built.basis_sizes == expected, sizes=built.basis_sizes),
            CheckRecord.verdict("orbit_boundary_squared", built.chain.check_boundary_squared()),
        ]

    def face_five_term(self):
        """D₁ の面と五項関係式の項が一致するか"""
        check = face_five_term_crosscheck(self.context.ring)
        return CheckRecord.verdict(
            "face_five_term",
            check.passed,
            pairs=check.pairs,
            matched=check.matched,
            mismatches=check.mismatches,
        )
