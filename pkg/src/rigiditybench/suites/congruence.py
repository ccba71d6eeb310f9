from functools import cached_property

from rigiditybench.congruence.filtration import (
    abelianization_small,
    commutator_check,
    layer_acyclicity,
    layer_iso_check,
    lower_central_series,
    pth_root_check,
    rho_additivity_check,
)
from rigiditybench.congruence.slgroup import SpecialLinearGroup
from rigiditybench.report import CheckRecord
from rigiditybench.suites.base import BaseSuite


class CongruenceSuite(BaseSuite):
    """SL_n(A) の合同部分群のフィルトレーション"""

    name = "congruence"

    def checks(self):
        if self.context.ring.trunc < 2:
            return [("congruence", self.trivial)]
        return [
            ("rho_additivity", self.rho_additivity),
            ("commutators", self.commutators),
            ("layers", self.layers),
            ("abelianization", self.abelianization),
            ("lower_central_series", self.lower_central),
            ("layer_acyclicity", self.acyclicity),
            ("pth_roots", self.pth_roots),
        ]

    @cached_property
    def group(self) -> SpecialLinearGroup:
        return SpecialLinearGroup(self.context.ring, self.context.n)

    def trivial(self):
        return CheckRecord.skipped("congruence", "C is trivial when the ring is a field")

    def rho_additivity(self):
        ctx = self.context
        records = []
        for i in range(1, ctx.ring.trunc):
            report = rho_additivity_check(self.group, i, ctx.trials, ctx.seed + i)
            records.append(
                CheckRecord.verdict(f"rho_additivity_{i}", report.ok, trials=report.trials, passed=report.passed)
            )
        return records

    def commutators(self):
        ctx = self.context
        records = []
        for i in range(1, ctx.ring.trunc):
            for j in range(i, ctx.ring.trunc):
                report = commutator_check(self.group, i, j, ctx.trials, ctx.seed + 100 * i + j)
                records.append(
                    CheckRecord.verdict(
                        f"commutator_{i}_{j}",
                        report.passed,
                        trials=report.trials,
                        level_ok=report.level_ok,
                        bracket_ok=report.bracket_ok,
                    )
                )
        return records

    def layers(self):
        ctx = self.context
        records = []
        for i in range(1, ctx.ring.trunc):
            report = layer_iso_check(ctx.ring, ctx.n, i, ctx.trials, ctx.seed + i)
            records.append(
                CheckRecord.verdict(
                    f"layer_{i}",
                    report.passed,
                    mode=report.mode,
                    expected_size=report.expected_size,
                    image_size=report.image_size,
                    kernel_size=report.kernel_size,
                )
            )
        return records

    def abelianization(self):
        """C/[C, C] を出し、[C, C] = C² は例外でなければ検査、例外なら報告する"""
        ctx = self.context
        report = abelianization_small(ctx.ring, ctx.n)
        data = dict(
            order=report.order,
            abelianization=report.abelianization,
            commutator_order=report.commutator_order,
            c2_order=report.c2_order,
        )
        if report.exception:
            return [
                CheckRecord.verdict("commutator_in_c2", report.commutator_in_c2),
                CheckRecord.reported("abelianization", **data),
            ]
        return CheckRecord.verdict("abelianization", report.commutator_equals_c2, **data)

    def lower_central(self):
        ctx = self.context
        report = lower_central_series(ctx.ring, ctx.n)
        return CheckRecord.verdict(
            "lower_central_series",
            report.passed,
            gamma_orders=report.gamma_orders,
            congruence_orders=report.congruence_orders,
            exception=report.exception,
        )

    def acyclicity(self):
        skip = self.requires_invertible_prime("layer_acyclicity")
        if skip:
            return skip
        ctx = self.context
        report = layer_acyclicity(ctx.ring, ctx.n, ctx.ring.trunc, ctx.prime, ctx.trials, ctx.seed)
        return CheckRecord.verdict(
            "layer_acyclicity",
            report.passed,
            quotient_order=report.quotient_order,
            h1_mod_p=report.h1_mod_p,
        )

    def pth_roots(self):
        skip = self.requires_invertible_prime("pth_roots")
        if skip:
            return skip
        ctx = self.context
        report = pth_root_check(ctx.ring, ctx.n, ctx.prime, ctx.trials, ctx.seed)
        return CheckRecord.verdict(
            "pth_roots",
            report.passed,
            exponent_bound=report.exponent_bound,
            multiplier=report.multiplier,
            samples=report.samples,
        )
