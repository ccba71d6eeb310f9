import json

import numpy as np
import pytest

from rigiditybench.report import CheckRecord, Report, SuiteResult, jsonable


def _report():
    records = [
        CheckRecord.verdict("b_check", True, sizes=(6, 30), flag=np.bool_(True)),
        CheckRecord.reported("a_value", dims=np.array([0, 1], dtype=np.int64)),
        CheckRecord.skipped("c_big", "guard exceeded"),
    ]
    return Report(
        version="1.2.3",
        instance={"char": 5, "prime": 3},
        seed=0,
        suites=[SuiteResult(suite="units", seed=17, records=records)],
    )


def test_jsonable_conversions():
    """numpy の値やタプルが JSON にそのまま載る値に変換されることをテスト"""
    assert jsonable((np.int64(3), [np.bool_(False)])) == [3, [False]]
    assert jsonable({1: (2, 3)}) == {"1": [2, 3]}


def test_jsonable_rejects_float():
    """浮動小数点数は TypeError になることをテスト"""
    with pytest.raises(TypeError):
        jsonable(0.5)
    with pytest.raises((TypeError, ValueError)):
        CheckRecord.verdict("x", True, ratio=1.5)


def test_canonical_json_is_sorted_and_compact():
    """正準 JSON がキー順に整列し空白を含まないことをテスト"""
    text = _report().to_canonical_json()
    assert text.endswith("\n")
    assert " " not in text.replace("guard exceeded", "")
    payload = json.loads(text)
    assert list(payload) == sorted(payload)
    assert payload["tool"] == "rigiditybench"
    record = payload["suites"][0]["records"][0]
    assert record == {"name": "b_check", "status": "pass", "data": {"flag": True, "sizes": [6, 30]}}
    assert "elapsed_us" not in payload["suites"][0]
    assert "reason" not in record


def test_status_counts_and_failures():
    """状態の集計と fail の有無をテスト"""
    report = _report()
    assert report.status_counts() == {"pass": 1, "fail": 0, "reported": 1, "skipped": 1}
    assert not report.has_failures
    report.suites[0].records.append(CheckRecord.failed("d_broken", "boom"))
    assert report.has_failures


def test_write(tmp_path):
    """ファイルへの書き出しが正準 JSON と一致することをテスト"""
    path = tmp_path / "report.json"
    report = _report()
    report.write(path)
    assert path.read_text(encoding="utf-8") == report.to_canonical_json()
