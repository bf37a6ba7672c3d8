# Copyright (c) 2026 The hexec Authors. All rights reserved.
import contextlib
import json
import os
import random
import sys
import time
from threading import Thread
from typing import Callable, Iterable, Sequence

import uvicorn

import hexec
from hexec.hexpr.nodes import HExpr, Operation, OpKind, Primitive

DATA_DIR = os.path.join(os.path.dirname(hexec.__file__), "data")
MUSIQUE_SAMPLE = os.path.join(DATA_DIR, "musique_sample.jsonl")
TWOWIKI_SAMPLE = os.path.join(DATA_DIR, "twowiki_sample.jsonl")

# Two-entity FA Cup question, answered in three hops.
FA_CUP_EXPRESSION = (
    "JOIN[ When was the last time Ans#2 beat Ans#1, "
    "UNION[ what is member of sports team of Duane Courtney, "
    "who is winner of 1894-95 FA Cup ] ]"
)
FA_CUP_FACTS = {
    "who is winner of 1894-95 FA Cup": ["Aston Villa"],
    "what is member of sports team of Duane Courtney": ["Birmingham City"],
    "When was the last time Birmingham City beat Aston Villa": ["1 December 2010"],
}

# Default timeout to wait for a threaded server to come up.
DEFAULT_WAIT_TIMEOUT = 10


def print_header_separator(title):
    title = " " + title + " "
    lt = len(title)
    w = max(120, lt + 10)
    x1 = int((w - lt) / 2)
    x2 = w - lt - x1
    print("\n" + "=" * x1 + title + "=" * x2 + "\n")


def raise_exception(msg):
    print("Exception: " + msg)
    raise Exception(msg)


def get_stdout_stderr(capfd):
    """
    Helper used to process captured stdout and stderr from a test.
    :param capfd: Pytest fixture for capture of output (from test)
    :return: Stdout as list of lines, Stderr as list of lines
    """
    stdout, stderr = capfd.readouterr()
    stdout = stdout.split("\n")
    for line in stdout:
        sys.stdout.write(f"CAPTURED STDOUT: {line}\n")
    stderr = stderr.split("\n")
    for line in stderr:
        sys.stderr.write(f"CAPTURED STDERR: {line}\n")
    return stdout, stderr


def write_lines(path: str, items: Iterable[dict]) -> str:
    with open(path, "w", encoding="utf-8") as f:
        for item in items:
            f.write(json.dumps(item, ensure_ascii=False) + "\n")
    return str(path)


def read_lines(path: str) -> list:
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]


def facts_lines(facts: dict) -> list:
    return [{"question": q, "answers": a} for q, a in facts.items()]


def random_tree(
    rng: random.Random,
    budget: int,
    make_leaf: Callable[[random.Random], Primitive],
    kinds: Sequence[OpKind] = tuple(OpKind),
) -> HExpr:
    if budget <= 1 or rng.random() < 0.3:
        return make_leaf(rng)
    kind = rng.choice(list(kinds))
    return Operation(
        kind,
        random_tree(rng, budget - 1, make_leaf, kinds),
        random_tree(rng, budget - 1, make_leaf, kinds),
    )


def numbered_leaves() -> Callable[[random.Random], Primitive]:
    # Leaves "question 1", "question 2", ... in creation order.
    count = 0

    def make_leaf(rng: random.Random) -> Primitive:
        nonlocal count
        count += 1
        return Primitive(f"question {count}")

    return make_leaf


class ThreadedServer(uvicorn.Server):
    # Signals belong to the test runner's main thread.
    def install_signal_handlers(self):
        pass


@contextlib.contextmanager
def serve_in_thread(app, port: int, timeout: float = DEFAULT_WAIT_TIMEOUT):
    """
    Runs a FastAPI app under uvicorn in a background thread.
    :param app: The app to serve
    :param port: Port on 127.0.0.1
    :return: Base URL of the running server
    """
    config = uvicorn.Config(
        app, host="127.0.0.1", port=int(port), log_config=None, log_level="warning"
    )
    server = ThreadedServer(config)
    thread = Thread(target=server.run, daemon=True)
    print(f"Starting test server on port {port}")
    thread.start()
    t0 = time.time()
    while not server.started:
        if not thread.is_alive():
            raise_exception("serve_in_thread: server stopped before ready")
        if time.time() - t0 > timeout:
            server.should_exit = True
            raise_exception("serve_in_thread: timeout before ready")
        time.sleep(0.05)
    try:
        yield f"http://127.0.0.1:{port}"
    finally:
        print(f"Stopping test server on port {port}")
        server.should_exit = True
        thread.join()
