from rigiditybench.homology import (
    FiniteAbelianGroup,
    cyclic_oracle,
    homology_dims_formula,
    unit_homology_compare,
)
from rigiditybench.report import CheckRecord
from rigiditybench.ring.units import unit_group_invariants
from rigiditybench.suites.base import BaseSuite

ORACLE_MAX_ORDER = 24


class AbelianSuite(BaseSuite):
    """単元群のホモロジー H_•(−, Z/p) の比較と巡回群の検算"""

    name = "abelian"

    def checks(self):
        return [("unit_homology", self.unit_homology), ("cyclic_oracle", self.oracle)]

    def unit_homology(self):
        skip = self.requires_invertible_prime("unit_homology")
        if skip:
            return skip
        ctx = self.context
        records = []
        primes = [ctx.prime]
        if ctx.second_prime and ctx.second_prime != ctx.ring.characteristic:
            primes.append(ctx.second_prime)
        for p in primes:
            comparison = unit_homology_compare(ctx.residue_ring, ctx.ring, p)
            s_ok = comparison.ring_s_from_roots in (None, comparison.ring_rs[1])
            records.append(
                CheckRecord.verdict(
                    f"unit_homology_mod_{p}",
                    comparison.equal and s_ok,
                    residue_dims=comparison.residue_dims,
                    ring_dims=comparison.ring_dims,
                    ring_rs=comparison.ring_rs,
                    s_from_roots=comparison.ring_s_from_roots,
                )
            )
        return records

    def oracle(self):
        """各巡回因子について Λ⊗Γ の式と周期的分解が一致するか"""
        ctx = self.context
        factors = [d for d in unit_group_invariants(ctx.ring) if d <= ORACLE_MAX_ORDER]
        mismatched = [
            d
            for d in factors
            if homology_dims_formula(FiniteAbelianGroup((d,)), ctx.prime) != cyclic_oracle(d, ctx.prime)
        ]
        return CheckRecord.verdict("cyclic_oracle", not mismatched, factors=factors, mismatched=mismatched)
