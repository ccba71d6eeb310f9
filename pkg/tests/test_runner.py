import pytest

from rigiditybench.linalg import SparseRankBackend
from rigiditybench.report import CheckRecord
from rigiditybench.ring.ring import RingDescriptor
from rigiditybench.runner import SuiteRunner, derive_seed
from rigiditybench.suites import BaseSuite, P1Suite, SuiteContext, UnitsSuite


def _context(seed):
    return SuiteContext(
        ring=RingDescriptor.create(5, 1, 2),
        prime=3,
        n=2,
        dmax=2,
        seed=seed,
        trials=20,
        backend=SparseRankBackend(),
    )


def _runner(timings=False):
    suites = [UnitsSuite(_context(derive_seed(0, "units"))), P1Suite(_context(derive_seed(0, "p1")))]
    return SuiteRunner(suites, instance={"char": 5}, seed=0, version="0.0.0", timings=timings)


def test_derive_seed():
    """スイート専用のシードが親シードとスイート名だけで決まることをテスト"""
    assert derive_seed(0, "units") == derive_seed(0, "units")
    assert derive_seed(0, "units") != derive_seed(0, "p1")
    assert derive_seed(0, "units") != derive_seed(1, "units")
    assert 0 <= derive_seed(7, "bloch") < 2**32


@pytest.mark.asyncio
async def test_arun_orders_suites_by_name():
    """結果がスイート名の昇順に並ぶことをテスト"""
    report = await _runner().arun()
    assert [s.suite for s in report.suites] == ["p1", "units"]
    assert all(s.elapsed_us is None for s in report.suites)
    assert not report.has_failures


def test_run_is_deterministic(tmp_path):
    """同じ設定とシードで 2 回実行するとバイト列まで一致することをテスト"""
    out = tmp_path / "report.json"
    first = _runner().run(str(out))
    second = _runner().run()
    assert first.to_canonical_json() == second.to_canonical_json()
    assert out.read_text(encoding="utf-8") == first.to_canonical_json()


def test_timings_are_optional():
    """timings を有効にしたときだけ経過時間が残ることをテスト"""
    report = _runner(timings=True).run()
    assert all(s.elapsed_us is not None for s in report.suites)


class _CrashingSuite(BaseSuite):
    name = "crashing"

    def checks(self):
        return []

    def run(self):
        raise RuntimeError("crashed")


def test_suite_crash_becomes_fail():
    """スイート全体が落ちても fail の記録になり、他のスイートは続くことをテスト"""
    runner = SuiteRunner(
        [_CrashingSuite(_context(1)), P1Suite(_context(2))], instance={}, seed=0, version="0.0.0"
    )
    report = runner.run()
    assert [s.suite for s in report.suites] == ["crashing", "p1"]
    assert report.suites[0].records == [CheckRecord.failed("crashing", "RuntimeError: crashed")]
    assert report.has_failures
