import logging
import time
import traceback
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple, Union

from rigiditybench.errors import GuardExceeded
from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.report import CheckRecord, SuiteResult
from rigiditybench.ring.ring import RingDescriptor

CheckResult = Union[CheckRecord, Iterable[CheckRecord]]


@dataclass(frozen=True)
class SuiteContext:
    """スイートが共有する実験インスタンス

    Attributes:
        ring: 検査対象の環 A
        prime: 係数素数 p
        n: SL_n の n
        dmax: 複体を作る最高次数
        seed: このスイート専用のシード
        trials: 乱択検査の試行回数
        backend: 階数の計算に使うバックエンド
        cache_dir: 列挙結果のキャッシュ置き場
        second_prime: 階数を照合する 2 つ目の素数
    """

    ring: RingDescriptor
    prime: int
    n: int
    dmax: int
    seed: int
    trials: int
    backend: BaseRankBackend
    cache_dir: Optional[str] = None
    second_prime: Optional[int] = None

    @property
    def residue_ring(self) -> RingDescriptor:
        return self.ring.residue_field

    @property
    def prime_is_characteristic(self) -> bool:
        return self.prime == self.ring.characteristic


class BaseSuite(ABC):
    """検査スイートの基底クラス

    サブクラスは ``checks`` で (検査名, 検査関数) の列を返します。検査関数が
    ``GuardExceeded`` を送出したらその検査は skipped、それ以外の例外は fail として
    記録し、残りの検査を続けます。
    """

    name: str = ""

    def __init__(self, context: SuiteContext):
        self.context = context

    @abstractmethod
    def checks(self) -> List[Tuple[str, Callable[[], CheckResult]]]:
        pass

    def run(self) -> SuiteResult:
        records: List[CheckRecord] = []
        started = time.perf_counter_ns()
        for check_name, check in self.checks():
            logging.debug(f"[{self.name}] running {check_name}")
            try:
                result = check()
            except GuardExceeded as e:
                logging.info(f"[{self.name}] {check_name} skipped: {e}")
                records.append(CheckRecord.skipped(check_name, str(e)))
                continue
            except Exception as e:
                logging.error(f"[{self.name}] {check_name} Error: {e}")
                logging.error(traceback.format_exc())
                records.append(CheckRecord.failed(check_name, f"{type(e).__name__}: {e}"))
                continue
            if isinstance(result, CheckRecord):
                records.append(result)
            else:
                records.extend(result)
        elapsed_us = (time.perf_counter_ns() - started) // 1000
        return SuiteResult(suite=self.name, seed=self.context.seed, records=records, elapsed_us=elapsed_us)

    def requires_invertible_prime(self, check_name: str) -> Optional[CheckRecord]:
        """p が標数に等しければ skipped の記録を返す"""
        if self.context.prime_is_characteristic:
            return CheckRecord.skipped(
                check_name, f"p = {self.context.prime} equals the residue characteristic"
            )
        return None
