# Copyright (c) 2026 The hexec Authors. All rights reserved.
import json
import logging
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

from hexec.common.results import HexecExceptionInputError

logger = logging.getLogger("hexec")

T = TypeVar("T")
R = TypeVar("R")


# Read a JSONL file into a list of dicts.
# Blank lines are skipped; "-" reads stdin.
def read_jsonl(path: str) -> List[dict]:
    try:
        if path == "-":
            return list(_decode_lines(sys.stdin, "<stdin>"))
        with open(path, "r", encoding="utf-8") as f:
            return list(_decode_lines(f, path))
    except OSError as e:
        raise HexecExceptionInputError(f"Failed to read {path}: {e}") from e


def _decode_lines(lines: Iterable[str], source: str) -> Iterator[dict]:
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            item = json.loads(line)
        except json.JSONDecodeError as e:
            raise HexecExceptionInputError(f"{source}:{number}: bad JSON ({e})") from e
        if not isinstance(item, dict):
            raise HexecExceptionInputError(f"{source}:{number}: expected a JSON object")
        yield item


# Write dicts as JSONL; None or "-" writes to stdout.
def write_jsonl(path: Optional[str], items: Iterable[dict]):
    lines = (json.dumps(item, ensure_ascii=False) + "\n" for item in items)
    if path in (None, "-"):
        sys.stdout.writelines(lines)
        sys.stdout.flush()
        return
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        f.writelines(lines)
    logger.info(f"Written {path}")


def write_json(path: Optional[str], obj, indent: int = 2):
    text = json.dumps(obj, indent=indent, ensure_ascii=False) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    logger.info(f"Written {path}")


def _ensure_parent(path: str):
    parent = os.path.dirname(os.path.abspath(path))
    os.makedirs(parent, exist_ok=True)


# Map fn over items with a thread pool, keeping input order.
# workers <= 1 runs serially in the calling thread.
def ordered_parallel_map(
    fn: Callable[[T], R], items: List[T], workers: int = 1
) -> List[R]:
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# Make an item id usable as a file name.
def safe_filename(name: str) -> str:
    cleaned = re.sub(r"[^A-Za-z0-9._-]+", "_", str(name)).strip("._")
    return cleaned or "item"
