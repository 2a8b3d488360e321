"""Search for a green-to-red sequence on every Le-diagram quiver from shapes in
an r x c box, and tabulate sequence lengths and search effort.

    python scripts/reddening_sweep.py --rows 3 --cols 4 --max-mutable 6
    python scripts/reddening_sweep.py --rows 3 --cols 4 --mode maximal-green --csv out.csv
"""

from __future__ import annotations

import argparse
import csv
import time
from collections import Counter
from dataclasses import dataclass

from lequiver.construct import quiver_from_le
from lequiver.gseed import Mode
from lequiver.le import enumerate_diagrams
from lequiver.search import check_result, find_sequence


@dataclass
class Config:
    rows: int = 3
    cols: int = 4
    min_mutable: int = 1
    max_mutable: int = 6
    mode: str = "green-to-red"
    max_depth: int = 12
    max_nodes: int = 10**6
    csv: str | None = None


def sweep(cfg: Config):
    mode = Mode(cfg.mode)
    for d in enumerate_diagrams(cfg.rows, cfg.cols):
        q = quiver_from_le(d)
        n = len(q.mutable_vertices)
        if not cfg.min_mutable <= n <= cfg.max_mutable:
            continue
        res = find_sequence(q, mode, cfg.max_depth, cfg.max_nodes)
        yield {
            "diagram": str(d),
            "mutable": n,
            "outcome": res.outcome.value,
            "verified": check_result(q, res, mode),
            "length": len(res.sequence) if res.found else "",
            "nodes": res.stats.nodes,
            "sequence": " ".join(res.sequence or []),
        }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Config()).items():
        flag = "--" + name.replace("_", "-")
        if name == "mode":
            ap.add_argument(flag, choices=[m.value for m in Mode], default=default)
        else:
            ap.add_argument(flag, type=type(default) if default is not None else str, default=default)
    cfg = Config(**vars(ap.parse_args()))
    t0 = time.perf_counter()
    rows = list(sweep(cfg))
    if cfg.csv:
        with open(cfg.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]) if rows else ["diagram"])
            w.writeheader()
            w.writerows(rows)
    failures = [r for r in rows if not r["verified"]]
    lengths = Counter((r["mutable"], r["length"]) for r in rows if r["verified"])
    print(f"{len(rows)} quivers, {len(failures)} without a verified sequence "
          f"({time.perf_counter() - t0:.1f}s)")
    print("mutable  length  count")
    for (n, length), count in sorted(lengths.items()):
        print(f"{n:7d}  {length:6d}  {count:5d}")
    worst = max(rows, key=lambda r: r["nodes"], default=None)
    if worst:
        print(f"most nodes: {worst['nodes']} on {worst['diagram']}")
    for r in failures:
        print("not found:", r["diagram"], r["outcome"])
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
