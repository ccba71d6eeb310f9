"""rigiditybench - 切断冪級数環の上の剛性定理を有限計算で確かめるワークベンチ

このモジュールは以下の主要なクラスと関数を提供します：

- :class:`rigiditybench.factory.ExperimentConfig`: 実験インスタンスの設定
- :class:`rigiditybench.runner.SuiteRunner`: スイートを並行に実行するランナー
- :class:`rigiditybench.report.Report`: 正準 JSON に書き出すレポート
- :func:`rigiditybench.factory.create_runner`: SuiteRunner インスタンスを作成するファクトリ関数
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("rigiditybench")
except PackageNotFoundError:
    __version__ = "0.0.0"

from .factory import ExperimentConfig, create_runner, create_suite
from .report import CheckRecord, Report
from .runner import SuiteRunner

# パブリックAPIとして公開するクラスと関数
__all__ = [
    "CheckRecord",
    "ExperimentConfig",
    "Report",
    "SuiteRunner",
    "create_runner",
    "create_suite",
    "__version__",
]
