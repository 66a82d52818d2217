"""
Byte-stable JSON output
"""
import json
from typing import Any

from config.settings import OUTPUT


def to_json(data: Any) -> str:
    """Sorted keys and fixed indentation so output is identical across runs"""
    return json.dumps(data, indent=OUTPUT["json_indent"], sort_keys=True, ensure_ascii=True)
