"""Benchmark plans and the experiment runner.

A plan is a flat text file of key=value lines; blank lines separate runs.
Each run names a generator family with its parameters plus the pipeline
knobs (r, k, target, t, verify). Output is one CSV row per run, emitted
in plan order regardless of worker count.
"""

from __future__ import annotations

import concurrent.futures
import time

from .domset import DominationInstance
from .generators import GenSpec, generate
from .graphs import ParseError
from .kernel import kernelize

CSV_HEADER = "family,n,m,r,k,z_final,kernel_n,reject,witness,wall_ms,seed"

_KNOB_KEYS = {"family", "r", "k", "seed", "target", "t", "verify"}


def parse_plan(text: str) -> list[dict]:
    """Parse the key=value block format; '#' starts a comment."""
    runs: list[dict] = []
    block: dict = {}
    block_line = 0

    def flush(at_line: int):
        if not block:
            return
        if "family" not in block:
            raise ParseError("run block missing 'family'", block_line)
        if "r" not in block:
            raise ParseError("run block missing 'r'", block_line)
        if "k" not in block:
            raise ParseError("run block missing 'k'", block_line)
        runs.append(dict(block))
        block.clear()

    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            flush(idx)
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value, got {line!r}", idx)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not key or not value:
            raise ParseError(f"empty key or value in {line!r}", idx)
        if not block:
            block_line = idx
        if key == "family":
            block[key] = value
        else:
            try:
                block[key] = int(value)
            except ValueError:
                raise ParseError(f"value for {key!r} must be an integer, got {value!r}", idx) from None
    flush(len(text.splitlines()) + 1)
    return runs


def run_one(entry: dict) -> dict:
    """Execute one plan entry and return its CSV row as a dict."""
    params = {k: v for k, v in entry.items() if k not in _KNOB_KEYS}
    spec = GenSpec(entry["family"], params, entry.get("seed", 0))
    g = generate(spec)
    inst = DominationInstance(g, frozenset(range(g.n)), entry["r"], entry["k"])
    start = time.perf_counter()
    result = kernelize(
        inst,
        target=entry.get("target"),
        threshold=entry.get("t"),
        verify=bool(entry.get("verify", 0)),
    )
    wall_ms = (time.perf_counter() - start) * 1000.0
    rejected = result.verdict != "kernel"
    return {
        "family": entry["family"],
        "n": g.n,
        "m": g.m,
        "r": entry["r"],
        "k": entry["k"],
        "z_final": result.stats["core"],
        "kernel_n": "" if rejected else result.stats["kernel_n"],
        "reject": int(rejected),
        "witness": len(result.witness) if rejected else "",
        "wall_ms": f"{wall_ms:.1f}",
        "seed": entry.get("seed", 0),
    }


def format_row(row: dict) -> str:
    return ",".join(str(row[key]) for key in CSV_HEADER.split(","))


def run_bench(runs: list[dict], workers: int = 1) -> list[dict]:
    """Run a parsed plan; rows come back in plan order."""
    if workers <= 1:
        return [run_one(entry) for entry in runs]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_one, runs))
