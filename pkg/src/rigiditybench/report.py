"""検査結果のレポートと正準 JSON への書き出し"""

import dataclasses
import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator

Status = Literal["pass", "fail", "reported", "skipped"]


def jsonable(value: Any) -> Any:
    """レポートに載せられる値（整数・文字列・真偽値・None・リスト・辞書）に変換する

    浮動小数点数は受け付けません。

    Raises:
        TypeError: 変換できない値が含まれている場合
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {
            f.name: jsonable(getattr(value, f.name))
            for f in dataclasses.fields(value)
            if f.repr
        }
    raise TypeError(f"value of type {type(value).__name__} cannot go into a report: {value!r}")


class CheckRecord(BaseModel):
    """ひとつの検査の結果

    Attributes:
        name: 検査名（スイート内で一意）
        status: pass / fail / reported / skipped
        data: 計算した値
        reason: skipped や fail の理由
    """

    name: str
    status: Status
    data: Dict[str, Any] = Field(default_factory=dict)
    reason: Optional[str] = None

    @field_validator("data", mode="before")
    @classmethod
    def _to_jsonable(cls, value: Any) -> Dict[str, Any]:
        return jsonable(value)

    @classmethod
    def verdict(cls, name: str, passed: bool, /, **data) -> "CheckRecord":
        return cls(name=name, status="pass" if passed else "fail", data=data)

    @classmethod
    def reported(cls, name: str, **data) -> "CheckRecord":
        return cls(name=name, status="reported", data=data)

    @classmethod
    def skipped(cls, name: str, reason: str) -> "CheckRecord":
        return cls(name=name, status="skipped", reason=reason)

    @classmethod
    def failed(cls, name: str, reason: str) -> "CheckRecord":
        return cls(name=name, status="fail", reason=reason)


class SuiteResult(BaseModel):
    suite: str
    seed: int
    records: List[CheckRecord] = Field(default_factory=list)
    elapsed_us: Optional[int] = None


class Report(BaseModel):
    """実行全体のレポート

    Attributes:
        tool: ツール名
        version: ツールのバージョン
        instance: 設定のうち結果に影響するもの
        seed: 親シード
        suites: スイート名の昇順に並べた結果
    """

    tool: str = "rigiditybench"
    version: str
    instance: Dict[str, Any]
    seed: int
    suites: List[SuiteResult]

    @property
    def has_failures(self) -> bool:
        return any(r.status == "fail" for s in self.suites for r in s.records)

    def status_counts(self) -> Dict[str, int]:
        counts = {status: 0 for status in ("pass", "fail", "reported", "skipped")}
        for suite in self.suites:
            for record in suite.records:
                counts[record.status] += 1
        return counts

    def to_canonical_json(self) -> str:
        """キーを整列し空白を除いた JSON（同じ設定とシードならバイト列まで一致）"""
        payload = self.model_dump(exclude_none=True)
        return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_canonical_json(), encoding="utf-8")
