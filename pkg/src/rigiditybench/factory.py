from typing import Literal, Optional

from pydantic import Field, ValidationInfo, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict
from sympy import isprime

from rigiditybench.linalg.base import BaseRankBackend
from rigiditybench.linalg.dense import DenseRankBackend
from rigiditybench.linalg.sparse import SparseRankBackend
from rigiditybench.ring.ring import RingDescriptor
from rigiditybench.runner import SuiteRunner, derive_seed
from rigiditybench.suites import SUITES, BaseSuite, SuiteContext

SuiteName = Literal[
    "units", "p1", "complex", "orbits", "qcomplex", "e1", "bloch", "congruence", "abelian", "all"
]

# p が剰余体で可逆であることを前提にするスイート
INVERTIBLE_PRIME_SUITES = {"units", "e1", "abelian", "bloch", "congruence", "all"}

# レポートの instance 欄に書く設定（結果に影響するものだけ）
INSTANCE_FIELDS = {
    "char", "ext", "vars", "trunc", "prime", "n", "dmax", "suite", "second_prime", "trials", "backend",
}


class ExperimentConfig(BaseSettings):
    """実験インスタンスの設定

    環境変数は RGB_ プレフィックスを使用します。\n
    例：RGB_CHAR, RGB_CACHE_DIR など

    エントリポイントでは同じ設定を CLI 引数としても指定できます。\n
    例：\\--char, \\--cache-dir など
    """

    # 環 F_q[t_1..t_m]/𝔪^l
    char: int = Field(default=5, description="剰余体の標数")
    ext: int = Field(default=1, ge=1, le=3, description="剰余体の拡大次数")
    vars: int = Field(default=1, ge=0, description="変数の個数 m")
    trunc: int = Field(default=2, ge=1, description="切断次数 l（𝔪^l = 0）")

    # 係数と各スイートの大きさ
    prime: int = Field(default=3, description="係数素数 p")
    n: int = Field(default=2, ge=2, description="SL_n の n")
    dmax: int = Field(default=2, ge=1, description="複体を作る最高次数")
    trials: int = Field(default=1000, ge=1, description="乱択検査の試行回数")
    second_prime: Optional[int] = Field(default=None, description="ホモロジーを照合する 2 つ目の素数")
    backend: Literal["sparse", "dense"] = Field(default="sparse", description="階数計算のバックエンド")

    # 実行
    seed: int = Field(default=0, ge=0, description="親シード")
    suite: SuiteName = Field(default="all", description="実行するスイート")
    out: Optional[str] = Field(default=None, description="レポートの出力先（省略時は標準出力）")
    cache_dir: Optional[str] = Field(default=None, description="列挙結果のキャッシュ置き場")
    timings: bool = Field(default=False, description="経過時間（マイクロ秒）をレポートに含める")
    loglevel: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="INFO", description="ログレベル"
    )

    model_config = SettingsConfigDict(
        env_prefix="RGB_",
        case_sensitive=False,
        env_file=".env",
        env_file_encoding="utf-8",
        cli_kebab_case=True,
        cli_implicit_flags=True,
        extra="ignore",
    )

    @field_validator("char", "prime")
    @classmethod
    def _must_be_prime(cls, value: int, info: ValidationInfo) -> int:
        if not isprime(value):
            raise ValueError(f"{info.field_name} must be prime: {value}")
        return value

    @field_validator("second_prime")
    @classmethod
    def _second_prime(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and not isprime(value):
            raise ValueError(f"second_prime must be prime: {value}")
        return value

    @model_validator(mode="after")
    def _prime_invertible(self) -> "ExperimentConfig":
        if self.suite in INVERTIBLE_PRIME_SUITES and self.prime == self.char:
            raise ValueError(
                f"suite '{self.suite}' needs a prime invertible in the residue field: "
                f"prime = {self.prime} equals char = {self.char}"
            )
        return self

    def instance(self) -> dict:
        return self.model_dump(include=INSTANCE_FIELDS)


def create_ring(config: ExperimentConfig) -> RingDescriptor:
    """設定から環 F_q[t_1..t_m]/𝔪^l を作る

    Raises:
        ReducibleModulus: 既定の定義多項式が既約でない場合
    """
    return RingDescriptor.create(config.char, config.vars, config.trunc, config.ext)


def create_rank_backend(name: str = "sparse") -> BaseRankBackend:
    if name == "sparse":
        return SparseRankBackend()
    elif name == "dense":
        return DenseRankBackend()
    else:
        raise ValueError(f"Invalid backend type: {name}")


def create_suite(name: str, config: ExperimentConfig) -> BaseSuite:
    """スイート名と設定からスイートを作る（シードは親シードから導く）"""
    if name not in SUITES:
        raise ValueError(f"Invalid suite: {name}")
    context = SuiteContext(
        ring=create_ring(config),
        prime=config.prime,
        n=config.n,
        dmax=config.dmax,
        seed=derive_seed(config.seed, name),
        trials=config.trials,
        backend=create_rank_backend(config.backend),
        cache_dir=config.cache_dir,
        second_prime=config.second_prime,
    )
    return SUITES[name](context)


def create_runner(config: Optional[ExperimentConfig] = None, **kwargs) -> SuiteRunner:
    """SuiteRunner インスタンスを作成

    Args:
        config: 実験の設定。None の場合はデフォルト値と環境変数が使用されます。
        **kwargs: 設定を上書きするための追加の引数

    Returns:
        SuiteRunner: 作成された SuiteRunner インスタンス

    Raises:
        ValueError: 無効な設定が指定された場合
    """
    from rigiditybench import __version__

    if config is None:
        config = ExperimentConfig(**kwargs)
    elif kwargs:
        config = ExperimentConfig(**{**config.model_dump(), **kwargs})

    names = sorted(SUITES) if config.suite == "all" else [config.suite]
    return SuiteRunner(
        [create_suite(name, config) for name in names],
        instance=config.instance(),
        seed=config.seed,
        version=__version__,
        timings=config.timings,
    )
