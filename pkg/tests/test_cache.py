import numpy as np

from rigiditybench.cache import MAGIC, cache_path, load_arrays, save_arrays


def test_cache_path():
    """cache_dir が無ければ None、あれば種類とハッシュからパスを作ることをテスト"""
    assert cache_path(None, "gp", "abc") is None
    assert cache_path("/tmp/x", "gp", "abc").name == "gp_abc.dat"


def test_round_trip(tmp_path):
    """書いた配列をそのまま読み戻せることをテスト"""
    path = cache_path(str(tmp_path / "sub"), "gp", "h1")
    arrays = {"basis_0": np.arange(6), "basis_1": np.array([[0, 1], [1, 0]])}
    save_arrays(path, "h1", arrays)
    loaded = load_arrays(path, "h1")
    assert sorted(loaded) == ["basis_0", "basis_1"]
    assert np.array_equal(loaded["basis_1"], arrays["basis_1"])
    assert not list(path.parent.glob("*.tmp"))


def test_stale_or_broken_cache_is_ignored(tmp_path):
    """ハッシュ違いや壊れたファイルは None として扱われることをテスト"""
    path = tmp_path / "gp_h1.dat"
    save_arrays(path, "h1", {"a": np.zeros(3)})
    assert load_arrays(path, "other") is None
    path.write_bytes(MAGIC + b"not json\n")
    assert load_arrays(path, "h1") is None
    path.write_bytes(b"garbage")
    assert load_arrays(path, "h1") is None
    assert load_arrays(tmp_path / "missing.dat", "h1") is None
