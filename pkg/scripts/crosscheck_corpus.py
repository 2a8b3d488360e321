"""Run the construction, plabic and script pipelines over every Le-diagram in
an r x c box and report disagreements.

    python scripts/crosscheck_corpus.py --rows 4 --cols 4 --workers 4
"""

from __future__ import annotations

import argparse
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from lequiver.cli import crosscheck
from lequiver.le import enumerate_diagrams


@dataclass
class Config:
    rows: int = 4
    cols: int = 4
    workers: int = 1
    chunk: int = 2000


def _run_chunk(args):
    rows, cols, start, size = args
    return crosscheck(enumerate_diagrams(rows, cols, start=start, limit=size))


def run(cfg: Config) -> tuple[int, list[str]]:
    total = sum(1 for _ in enumerate_diagrams(cfg.rows, cfg.cols))
    jobs = [(cfg.rows, cfg.cols, s, cfg.chunk) for s in range(0, total, cfg.chunk)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(_run_chunk, jobs))
    else:
        parts = [_run_chunk(j) for j in jobs]
    n = sum(p[0] for p in parts)
    bad = [d for p in parts for d in p[1]]
    return n, bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rows", type=int, default=Config.rows)
    ap.add_argument("--cols", type=int, default=Config.cols)
    ap.add_argument("--workers", type=int, default=Config.workers)
    cfg = Config(**{k: v for k, v in vars(ap.parse_args()).items()})
    t0 = time.perf_counter()
    n, bad = run(cfg)
    for d in bad:
        print("mismatch:", d)
    print(f"{n} diagrams, {len(bad)} mismatches ({time.perf_counter() - t0:.1f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
