"""列挙結果のファイルキャッシュ

形式は「マジック行、JSON ヘッダ行、numpy 配列の列」です。ヘッダには形式版数と
環の記述子ハッシュを書き、どちらかが合わなければ黙って作り直します。
"""

import io
import json
import logging
import os
import threading
from pathlib import Path
from typing import Dict, Optional

import numpy as np

MAGIC = b"RGBCACHE\n"
FORMAT_VERSION = 1


def cache_path(cache_dir: Optional[str], kind: str, descriptor_hash: str) -> Optional[Path]:
    """``<cache_dir>/<kind>_<hash>.dat``（cache_dir が無ければ None）"""
    if not cache_dir:
        return None
    return Path(cache_dir) / f"{kind}_{descriptor_hash}.dat"


def save_arrays(path: Path, descriptor_hash: str, arrays: Dict[str, np.ndarray]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {
        "version": FORMAT_VERSION,
        "hash": descriptor_hash,
        "arrays": sorted(arrays),
    }
    tmp = path.with_suffix(f".{os.getpid()}.{threading.get_ident()}.tmp")
    with open(tmp, "wb") as f:
        f.write(MAGIC)
        f.write(json.dumps(header, sort_keys=True).encode("utf-8") + b"\n")
        for name in sorted(arrays):
            np.save(f, np.asarray(arrays[name]), allow_pickle=False)
    os.replace(tmp, path)
    logging.debug(f"[cache] wrote {path}")


def load_arrays(path: Optional[Path], descriptor_hash: str) -> Optional[Dict[str, np.ndarray]]:
    """キャッシュを読む。無い・古い・壊れている場合は None"""
    if path is None or not path.exists():
        return None
    try:
        with open(path, "rb") as f:
            if f.readline() != MAGIC:
                raise ValueError("bad magic")
            header = json.loads(f.readline().decode("utf-8"))
            if header.get("version") != FORMAT_VERSION or header.get("hash") != descriptor_hash:
                logging.debug(f"[cache] stale {path}")
                return None
            payload = io.BytesIO(f.read())
        return {name: np.load(payload, allow_pickle=False) for name in header["arrays"]}
    except (OSError, ValueError, KeyError) as e:
        logging.debug(f"[cache] unreadable {path}: {e}")
        return None
