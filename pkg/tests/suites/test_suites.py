import pytest

from rigiditybench.errors import GuardExceeded
from rigiditybench.linalg import SparseRankBackend
from rigiditybench.report import CheckRecord
from rigiditybench.ring.ring import RingDescriptor
from rigiditybench.suites import (
    SUITES,
    AbelianSuite,
    BaseSuite,
    BlochSuite,
    ComplexSuite,
    CongruenceSuite,
    E1Suite,
    OrbitsSuite,
    P1Suite,
    QuotientComplexSuite,
    SuiteContext,
    UnitsSuite,
)


def _context(args, prime=3, **kwargs):
    options = dict(n=2, dmax=2, seed=0, trials=50, backend=SparseRankBackend())
    options.update(kwargs)
    return SuiteContext(ring=RingDescriptor.create(*args), prime=prime, **options)


def _statuses(result):
    return {record.name: record.status for record in result.records}


def test_suite_registry():
    """スイート名とクラスの対応をテスト"""
    assert sorted(SUITES) == [
        "abelian", "bloch", "complex", "congruence", "e1", "orbits", "p1", "qcomplex", "units",
    ]
    assert SUITES["units"] is UnitsSuite


def test_units_suite():
    """F_7[t]/(t²) の単元群の検査がすべて通ることをテスト"""
    result = UnitsSuite(_context((7, 1, 2))).run()
    assert result.suite == "units"
    assert _statuses(result) == {
        "unit_invariants": "pass",
        "unit_structure": "pass",
        "hensel_kernel": "pass",
        "roots_of_unity": "pass",
    }


def test_units_suite_skips_characteristic_prime():
    """p が標数なら p を可逆とする検査が skipped になることをテスト"""
    result = UnitsSuite(_context((7, 1, 2), prime=7)).run()
    statuses = _statuses(result)
    assert statuses["unit_invariants"] == "pass"
    assert statuses["unit_structure"] == "skipped"
    assert statuses["hensel_kernel"] == "skipped"


def test_p1_suite():
    """P¹ の列挙と一般の位置の対の個数をテスト"""
    result = P1Suite(_context((5, 1, 2))).run()
    assert _statuses(result) == {"p1_enumeration": "pass", "gp_pairs": "pass"}
    assert result.records[0].data == {"size": 30, "expected": 30}


def test_complex_suite_f5():
    """F_5 の複体の検査が通り、疎と密の階数が一致することをテスト"""
    result = ComplexSuite(_context((5,))).run()
    statuses = _statuses(result)
    assert statuses["basis_sizes"] == "pass"
    assert statuses["boundary_squared"] == "pass"
    assert statuses["reduced_homology_vanishes"] == "pass"
    assert statuses["backend_agreement"] == "pass"
    assert result.records[0].data["sizes"] == [6, 30, 120]


def test_complex_suite_second_prime():
    """2 つ目の素数のホモロジーが reported として出ることをテスト"""
    result = ComplexSuite(_context((7,), second_prime=5)).run()
    assert _statuses(result)["second_prime_homology"] == "reported"


def test_orbits_suite_f5():
    """F_5 の固定部分群・正規形・軌道複体・五項関係式の照合をテスト"""
    result = OrbitsSuite(_context((5,))).run()
    assert set(_statuses(result).values()) == {"pass"}
    assert set(_statuses(result)) == {
        "stabilizers", "frame_invariance", "orbit_basis_sizes", "orbit_boundary_squared", "face_five_term",
    }


def test_quotient_suite():
    """体では skipped、F_5[t]/(t²) では部分複体の検査とホモロジーの報告になることをテスト"""
    assert _statuses(QuotientComplexSuite(_context((5,))).run()) == {"quotient_complex": "skipped"}
    result = QuotientComplexSuite(_context((5, 1, 2))).run()
    assert _statuses(result) == {
        "residue_subcomplex": "pass",
        "quotient_boundary_squared": "pass",
        "quotient_homology": "reported",
    }


def test_e1_suite():
    """E¹ の列 0..2 が剰余体と一致することをテスト"""
    result = E1Suite(_context((5, 1, 2))).run()
    assert _statuses(result) == {"e1_low_columns": "pass"}
    assert result.records[0].data["ring"][0] == [1, 1, 1, 15, 150]


def test_bloch_suite_field():
    """体ではブロッホ群を報告し、比較は skipped になることをテスト"""
    result = BlochSuite(_context((5,))).run()
    assert _statuses(result) == {
        "phi_kills_five_term": "pass",
        "bloch_group": "reported",
        "bloch_comparison": "skipped",
    }
    assert result.records[1].data["bloch"] == [3]


def test_bloch_suite_local_ring():
    """F_5[t]/(t²) で自然性を検査し、比較を報告することをテスト"""
    result = BlochSuite(_context((5, 1, 2))).run()
    statuses = _statuses(result)
    assert statuses["bloch_naturality"] == "pass"
    assert statuses["bloch_comparison"] == "reported"


def test_congruence_suite_f3():
    """F_3[t]/(t²) の合同部分群の検査（例外の場合を含む）をテスト"""
    result = CongruenceSuite(_context((3, 1, 2), prime=2)).run()
    statuses = _statuses(result)
    assert "fail" not in statuses.values()
    assert statuses["rho_additivity_1"] == "pass"
    assert statuses["commutator_1_1"] == "pass"
    assert statuses["layer_1"] == "pass"
    assert statuses["commutator_in_c2"] == "pass"
    assert statuses["abelianization"] == "reported"
    assert statuses["lower_central_series"] == "pass"
    assert statuses["layer_acyclicity"] == "pass"
    assert statuses["pth_roots"] == "pass"


def test_congruence_suite_field():
    """体では合同部分群が自明なので skipped になることをテスト"""
    result = CongruenceSuite(_context((5,))).run()
    assert _statuses(result) == {"congruence": "skipped"}


def test_abelian_suite():
    """単元群のホモロジーの比較を 2 つの素数でテスト"""
    result = AbelianSuite(_context((7, 1, 2), second_prime=2)).run()
    assert _statuses(result) == {
        "unit_homology_mod_3": "pass",
        "unit_homology_mod_2": "pass",
        "cyclic_oracle": "pass",
    }


class _ExplodingSuite(BaseSuite):
    name = "exploding"

    def checks(self):
        return [("guarded", self.guarded), ("broken", self.broken), ("fine", self.fine)]

    def guarded(self):
        raise GuardExceeded("things", 10, 5)

    def broken(self):
        raise ZeroDivisionError("boom")

    def fine(self):
        return CheckRecord.verdict("fine", True, value=1)


def test_base_suite_records_errors():
    """上限超過は skipped、その他の例外は fail として記録し、残りを続けることをテスト"""
    result = _ExplodingSuite(_context((5,), seed=42)).run()
    assert _statuses(result) == {"guarded": "skipped", "broken": "fail", "fine": "pass"}
    assert "ZeroDivisionError" in result.records[1].reason
    assert result.seed == 42
    assert result.elapsed_us is not None and result.elapsed_us >= 0


@pytest.mark.slow
def test_complex_suite_local_ring():
    """F_5[t]/(t²) の複体の検査が通ることをテスト"""
    result = ComplexSuite(_context((5, 1, 2))).run()
    statuses = _statuses(result)
    assert statuses["reduced_homology_vanishes"] == "pass"
    assert statuses["backend_agreement"] == "skipped"
