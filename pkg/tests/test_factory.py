import sys
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from rigiditybench.factory import (
    ExperimentConfig,
    create_rank_backend,
    create_ring,
    create_runner,
    create_suite,
)
from rigiditybench.linalg import DenseRankBackend, SparseRankBackend
from rigiditybench.runner import SuiteRunner, derive_seed
from rigiditybench.suites import CongruenceSuite, UnitsSuite


def test_create_runner_default():
    """デフォルト設定ですべてのスイートを持つ SuiteRunner が作成できることをテスト"""
    with patch.dict("os.environ", {}, clear=True):  # 環境変数をクリア
        runner = create_runner()
        assert isinstance(runner, SuiteRunner)
        assert [s.name for s in runner.suites] == sorted(s.name for s in runner.suites)
        assert len(runner.suites) == 9
        assert runner.instance["char"] == 5
        assert "out" not in runner.instance


def test_create_runner_with_config():
    """設定を指定して単一スイートの SuiteRunner が作成できることをテスト"""
    with patch.dict("os.environ", {}, clear=True):  # 環境変数をクリア
        config = ExperimentConfig(char=7, trunc=3, suite="congruence", seed=4)
        runner = create_runner(config)
        assert len(runner.suites) == 1
        suite = runner.suites[0]
        assert isinstance(suite, CongruenceSuite)
        assert suite.context.ring.trunc == 3
        assert suite.context.seed == derive_seed(4, "congruence")


def test_create_runner_with_kwargs():
    """キーワード引数で設定を上書きできることをテスト"""
    with patch.dict("os.environ", {}, clear=True):  # 環境変数をクリア
        runner = create_runner(ExperimentConfig(suite="units"), backend="dense", prime=2)
        suite = runner.suites[0]
        assert isinstance(suite, UnitsSuite)
        assert isinstance(suite.context.backend, DenseRankBackend)
        assert suite.context.prime == 2


def test_create_suite_invalid():
    """存在しないスイート名は ValueError になることをテスト"""
    with patch.dict("os.environ", {}, clear=True):
        with pytest.raises(ValueError):
            create_suite("nonexistent", ExperimentConfig())
    with pytest.raises(ValueError):
        create_rank_backend("gpu")
    assert isinstance(create_rank_backend(), SparseRankBackend)


def test_create_ring_extension():
    """拡大次数を含めて環が作られることをテスト"""
    with patch.dict("os.environ", {}, clear=True):
        ring = create_ring(ExperimentConfig(char=3, ext=2, vars=2, trunc=3, prime=2))
        assert ring.q == 9
        assert ring.num_monomials == 6


@pytest.mark.parametrize(
    "kwargs",
    [dict(char=6), dict(prime=4), dict(char=5, prime=5), dict(second_prime=9), dict(n=1), dict(ext=4)],
)
def test_invalid_config(kwargs):
    """素数でない値や p = 標数などの不正な設定が ValidationError になることをテスト"""
    with patch.dict("os.environ", {}, clear=True):
        with pytest.raises(ValidationError):
            ExperimentConfig(**kwargs)


def test_characteristic_prime_allowed_for_complex_suites():
    """p を可逆と仮定しないスイートでは p = 標数を許すことをテスト"""
    with patch.dict("os.environ", {}, clear=True):
        config = ExperimentConfig(char=5, prime=5, suite="complex")
        assert config.prime == config.char


def test_config_from_env():
    """RGB_ プレフィックスの環境変数から設定を読み込めることをテスト"""
    with patch.dict(
        "os.environ",
        {"RGB_CHAR": "7", "RGB_TRUNC": "3", "RGB_SUITE": "p1", "RGB_TIMINGS": "true"},
        clear=True,
    ):
        config = ExperimentConfig()
        assert config.char == 7
        assert config.trunc == 3
        assert config.suite == "p1"
        assert config.timings is True


def test_config_from_cli():
    """CLI 引数から設定を読み込めることをテスト"""
    test_args = [
        "script.py",
        "--char",
        "3",
        "--ext",
        "2",
        "--prime",
        "2",
        "--cache-dir",
        "/tmp/rgb",
        "--timings",
    ]
    with patch.object(sys, "argv", test_args), patch.dict("os.environ", {}, clear=True):
        config = ExperimentConfig(_cli_parse_args=True)
        assert config.char == 3
        assert config.ext == 2
        assert config.prime == 2
        assert config.cache_dir == "/tmp/rgb"
        assert config.timings is True


def test_config_from_cli_with_env():
    """環境変数と CLI 引数の組み合わせで設定を読み込めることをテスト"""
    test_args = ["script.py", "--suite", "bloch", "--seed", "9"]
    with (
        patch.object(sys, "argv", test_args),
        patch.dict(
            "os.environ",
            {
                "RGB_SUITE": "units",  # CLIで上書きされる
                "RGB_TRIALS": "50",  # 環境変数のみ
            },
            clear=True,
        ),
    ):
        config = ExperimentConfig(_cli_parse_args=True)
        # CLI引数が環境変数より優先される
        assert config.suite == "bloch"
        assert config.seed == 9
        # 環境変数のみの設定は反映される
        assert config.trials == 50


def test_instance_excludes_runtime_options():
    """instance が結果に影響しない設定を含まないことをテスト"""
    with patch.dict("os.environ", {}, clear=True):
        instance = ExperimentConfig(out="x.json", cache_dir="c", timings=True).instance()
        assert not {"out", "cache_dir", "timings", "loglevel", "seed"} & set(instance)
        assert instance["suite"] == "all"
