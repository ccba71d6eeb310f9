import asyncio
import hashlib
import logging
import traceback
from typing import Any, Dict, List, Optional, Sequence

from rigiditybench.report import CheckRecord, Report, SuiteResult
from rigiditybench.suites.base import BaseSuite


def derive_seed(seed: int, suite: str) -> int:
    """親シードとスイート名から決まるスイート専用のシード"""
    digest = hashlib.sha256(f"{seed}:{suite}".encode("utf-8")).hexdigest()
    return int(digest[:8], 16)


class SuiteRunner:
    """スイートを並行に実行してレポートにまとめる

    各スイートは ``run_in_executor`` で別スレッドに載せます。結果はスイート名の
    昇順に並べるので、完了順はレポートに影響しません。

    Attributes:
        suites: 実行するスイート
        instance: レポートに書く設定
        seed: 親シード
        version: ツールのバージョン
        timings: 経過時間をレポートに含めるか
    """

    def __init__(
        self,
        suites: Sequence[BaseSuite],
        *,
        instance: Dict[str, Any],
        seed: int,
        version: str,
        timings: bool = False,
    ):
        self.suites = list(suites)
        self.instance = instance
        self.seed = seed
        self.version = version
        self.timings = timings

    async def _arun_suite(self, suite: BaseSuite) -> SuiteResult:
        loop = asyncio.get_running_loop()
        logging.info(f"[Runner] {suite.name}: start")
        try:
            result = await loop.run_in_executor(None, suite.run)
        except Exception as e:
            logging.error(f"[Runner] {suite.name} Error: {e}")
            logging.error(traceback.format_exc())
            result = SuiteResult(
                suite=suite.name,
                seed=suite.context.seed,
                records=[CheckRecord.failed(suite.name, f"{type(e).__name__}: {e}")],
            )
        statuses = [r.status for r in result.records]
        logging.info(
            f"[Runner] {suite.name}: done "
            f"({statuses.count('pass')} pass, {statuses.count('fail')} fail, "
            f"{statuses.count('reported')} reported, {statuses.count('skipped')} skipped)"
        )
        return result

    async def arun(self) -> Report:
        results: List[SuiteResult] = await asyncio.gather(
            *(self._arun_suite(suite) for suite in self.suites)
        )
        ordered = sorted(results, key=lambda r: r.suite)
        if not self.timings:
            ordered = [r.model_copy(update={"elapsed_us": None}) for r in ordered]
        return Report(
            version=self.version,
            instance=self.instance,
            seed=self.seed,
            suites=ordered,
        )

    def run(self, out: Optional[str] = None) -> Report:
        """同期版。out を指定すればレポートを書き出す"""
        report = asyncio.run(self.arun())
        if out:
            report.write(out)
            logging.info(f"[Runner] report written to {out}")
        return report
