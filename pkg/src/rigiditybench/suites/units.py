from rigiditybench.report import CheckRecord
from rigiditybench.ring.units import (
    UNIT_GUARD,
    hensel_kernel_check,
    roots_of_unity,
    unit_group,
    unit_group_invariants,
    unit_group_structure,
)
from rigiditybench.suites.base import BaseSuite


class UnitsSuite(BaseSuite):
    """単元群の構造、Hensel 持ち上げ、1 の p 乗根"""

    name = "units"

    def checks(self):
        return [
            ("unit_invariants", self.unit_invariants),
            ("unit_structure", self.unit_structure),
            ("hensel_kernel", self.hensel_kernel),
            ("roots_of_unity", self.roots_match),
        ]

    def unit_invariants(self):
        ring = self.context.ring
        structural = unit_group_invariants(ring)
        if ring.num_units > UNIT_GUARD:
            return CheckRecord.reported("unit_invariants", invariant_factors=structural)
        data = unit_group(ring)
        return CheckRecord.verdict(
            "unit_invariants",
            data.invariant_factors == structural,
            invariant_factors=data.invariant_factors,
            structural=structural,
            splitting=data.splitting,
        )

    def unit_structure(self):
        skip = self.requires_invertible_prime("unit_structure")
        if skip:
            return skip
        report = unit_group_structure(self.context.ring, self.context.prime)
        return CheckRecord.verdict(
            "unit_structure",
            report.kernel_is_pth_powers,
            invariant_factors=report.data.invariant_factors,
            splitting=report.data.splitting,
            kernel_size=report.kernel_size,
            pth_powers_size=report.pth_powers_size,
            r=report.r,
            s=report.s,
        )

    def hensel_kernel(self):
        skip = self.requires_invertible_prime("hensel_kernel")
        if skip:
            return skip
        check = hensel_kernel_check(self.context.ring, self.context.prime)
        return CheckRecord.verdict(
            "hensel_kernel",
            check.passed,
            units=check.units,
            kernel_size=check.kernel_size,
            roots_found=check.roots_found,
        )

    def roots_match(self):
        """μ_p(A) が剰余体の μ_p(k) を定数として埋め込んだものに一致するか"""
        skip = self.requires_invertible_prime("roots_of_unity")
        if skip:
            return skip
        ring, p = self.context.ring, self.context.prime
        big = [ring.encode(x) for x in roots_of_unity(ring, p)]
        small = [ring.encode(ring.constant(x.constant_term)) for x in roots_of_unity(ring.residue_field, p)]
        return CheckRecord.verdict(
            "roots_of_unity", sorted(big) == sorted(small), ring_codes=sorted(big), residue_count=len(small)
        )
