"""Capped iterative-deepening search for green-to-red and maximal green sequences."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from .gseed import Color, Mode, identity, mutation_step, row_color, verify_sequence
from .quiver import Quiver


class Outcome(enum.Enum):
    FOUND = "found"
    EXHAUSTED = "exhausted-within-cap"  # every sequence up to max_depth tried
    CAP_HIT = "cap-hit"  # node budget ran out first


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    dedup_hits: int = 0
    iterations: int = 0


@dataclass
class SearchResult:
    outcome: Outcome
    sequence: list[str] | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.FOUND

    def to_dict(self) -> dict:
        return {"outcome": self.outcome.value, "sequence": self.sequence,
                "stats": vars(self.stats)}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


class _Budget(Exception):
    pass


def find_sequence(q: Quiver, mode: Mode = Mode.GREEN_TO_RED, max_depth: int = 12,
                  max_nodes: int = 10**6) -> SearchResult:
    """Shortest sequence (in the fixed expansion order) turning every mutable
    vertex of ``q`` red.

    Depth-first search with an increasing depth limit over states ``(B, G)``.
    A state is skipped when it was already reached in the current iteration
    with at least as much depth to spare.  Green vertices are tried before red
    ones; maximal green mode never mutates a red vertex.
    """
    if max_depth < 0 or max_nodes <= 0:
        raise ValueError("caps must be positive")
    mp = q.mutable_part()
    names = mp.vertices
    n = len(names)
    stats = SearchStats()
    if n == 0:
        return SearchResult(Outcome.FOUND, [], stats)
    b0 = tuple(mp.b)
    g0 = identity(n)
    green_only = mode is Mode.MAXIMAL_GREEN

    def all_red(G_inv):
        return all(row_color(r) is Color.RED for r in G_inv)

    path: list[int] = []

    def dfs(b, G, G_inv, remaining, last, seen):
        key = (b, G)
        prior = seen.get(key)
        if prior is not None and prior >= remaining:
            stats.dedup_hits += 1
            return False
        seen[key] = remaining
        stats.nodes += 1
        if stats.nodes > max_nodes:
            raise _Budget
        stats.max_depth = max(stats.max_depth, len(path))
        if all_red(G_inv):
            return True
        if remaining == 0:
            nonlocal cut
            cut = True
            return False
        colors = [row_color(r) for r in G_inv]
        order = [k for k in range(n) if colors[k] is Color.GREEN]
        if not green_only:
            order += [k for k in range(n) if colors[k] is Color.RED]
        for k in order:
            if k == last:
                continue  # mutating back just returns to the parent
            nb, nG, ninv = mutation_step(b, G, G_inv, k)
            path.append(k)
            if dfs(tuple(map(tuple, nb)), tuple(map(tuple, nG)), ninv, remaining - 1, k, seen):
                return True
            path.pop()
        return False

    try:
        for limit in range(max_depth + 1):
            stats.iterations += 1
            cut = False
            path.clear()
            if dfs(b0, g0, [list(r) for r in g0], limit, -1, {}):
                return SearchResult(Outcome.FOUND, [names[k] for k in path], stats)
            if not cut:
                break  # the reachable state space is exhausted
    except _Budget:
        return SearchResult(Outcome.CAP_HIT, None, stats)
    return SearchResult(Outcome.EXHAUSTED, None, stats)


def check_result(q: Quiver, result: SearchResult, mode: Mode) -> bool:
    """Re-verify a found sequence by replaying it through the g-seed code."""
    if not result.found:
        return False
    return verify_sequence(q, result.sequence, mode).accepted
