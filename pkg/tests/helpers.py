"""Independent oracles and seeded property loops shared by the test modules."""

from __future__ import annotations

import itertools
import random

from lequiver.construct import cut_to_shape, quiver_from_le
from lequiver.gseed import initial_seed, mutate_seed, row_color
from lequiver.le import LeDiagram, enumerate_diagrams, merge_sets, representative, union_clusters
from lequiver.plabic import faces, plabic_from_le, quiver_via_plabic, simplify
from lequiver.quiver import Quiver


# --------------------------------------------------------------------------
# brute-force Le-diagram oracle: no shared code with lequiver.le


def brute_force_le_fillings(rows: int, cols: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every cell of the rectangle is absent, 0 or 1; keep the assignments whose
    present cells form a top-left justified Young diagram and whose zeros have
    no 1 both somewhere to the left and somewhere above."""
    found = []
    cells = [(i, j) for i in range(rows) for j in range(cols)]
    for values in itertools.product((None, 0, 1), repeat=len(cells)):
        grid = dict(zip(cells, values))
        present = {c for c, v in grid.items() if v is not None}
        ok = True
        for i, j in present:
            if (i > 0 and (i - 1, j) not in present) or (j > 0 and (i, j - 1) not in present):
                ok = False
                break
        if not ok:
            continue
        for i, j in present:
            if grid[i, j] == 0:
                left = any(grid[i, jj] == 1 for jj in range(j))
                up = any(grid[ii, j] == 1 for ii in range(i))
                if left and up:
                    ok = False
                    break
        if ok:
            rows_out = []
            for i in range(rows):
                r = tuple(grid[i, j] for j in range(cols) if grid[i, j] is not None)
                if r:
                    rows_out.append(r)
            found.append(tuple(rows_out))
    return found


# --------------------------------------------------------------------------
# random inputs


def random_quiver(rng: random.Random, max_n: int = 6, max_mult: int = 2,
                  frozen_p: float = 0.3) -> Quiver:
    n = rng.randint(1, max_n)
    vs = [f"x{i}" for i in range(n)]
    b = [[0] * n for _ in range(n)]
    for u in range(n):
        for w in range(u + 1, n):
            m = rng.randint(-max_mult, max_mult)
            b[u][w], b[w][u] = m, -m
    frozen = [rng.random() < frozen_p for _ in range(n)]
    if all(frozen):
        frozen[rng.randrange(n)] = False
    return Quiver(tuple(vs), tuple(frozen), tuple(map(tuple, b)))


def random_diagram(rng: random.Random, rows: int, cols: int) -> LeDiagram:
    """Random shape in the box, filled in reading order with a fair coin except
    where a 0 would break the Le-property.  Not uniform over diagrams."""
    lengths = []
    cap = cols
    for _ in range(rows):
        x = rng.randint(0, cap)
        if x == 0:
            break
        lengths.append(x)
        cap = x
    grid: dict = {}
    for i, n in enumerate(lengths):
        for j in range(n):
            left = any(grid[i, jj] for jj in range(j))
            up = any(grid[ii, j] for ii in range(i))
            grid[i, j] = 1 if (left and up) else rng.randint(0, 1)
    return LeDiagram(tuple(tuple(grid[i, j] for j in range(n)) for i, n in enumerate(lengths)))


# --------------------------------------------------------------------------
# property loops (each raises AssertionError on the first counterexample)


def check_mutation_involution(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        q = random_quiver(rng)
        k = rng.choice(q.mutable_vertices)
        assert q.mutate(k).mutate(k) == q, (q, k)


def _random_seed_walk(rng: random.Random, steps: int):
    if rng.random() < 0.5:
        q = random_quiver(rng, max_n=5)
    else:
        q = quiver_from_le(random_diagram(rng, 3, 4))
    s = initial_seed(q)
    walk = [s]
    for _ in range(steps):
        if not s.vertices:
            break
        s = mutate_seed(s, rng.choice(s.vertices))
        walk.append(s)
    return walk


def check_gseed_involution(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        walk = _random_seed_walk(rng, rng.randint(0, 5))
        s = walk[-1]
        if not s.vertices:
            continue
        k = rng.choice(s.vertices)
        back = s.mutate(k).mutate(k)
        assert (back.quiver, back.G, back.G_inv) == (s.quiver, s.G, s.G_inv), k


def check_sign_coherence(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        for s in _random_seed_walk(rng, rng.randint(1, 8)):
            for row in s.G_inv:
                row_color(row)  # raises on mixed signs


def check_color_flip(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        walk = _random_seed_walk(rng, 1)
        s = walk[0]
        for _ in range(rng.randint(1, 8)):
            if not s.vertices:
                break
            k = rng.choice(s.vertices)
            before = s.color(k)
            s = s.mutate(k)
            assert s.color(k) is not before


def check_merge_order_independence(trials: int, seed: int):
    """Merging a family of possibly overlapping sets in any order, member order
    included, gives the quiver obtained by collapsing each connected class."""
    rng = random.Random(seed)
    for t in range(trials):
        if t % 2:
            d = random_diagram(rng, 4, 4)
            base = cut_to_shape(d)
            groups = [sorted(m.members) for m in merge_sets(d)]
        else:
            base = random_quiver(rng, max_n=8)
            groups = [rng.sample(base.vertices, rng.randint(1, min(3, len(base))))
                      for _ in range(rng.randint(0, 4))]
        expected = base
        for c in union_clusters(base.vertices, groups):
            if len(c) > 1:
                expected = expected.merge_vertices(c, name=representative(c))
        shuffled = [rng.sample(g, len(g)) for g in rng.sample(groups, len(groups))]
        assert base.merge_family(shuffled).same_as(expected), groups


def check_simplification_keeps_dual(trials: int, seed: int):
    rng = random.Random(seed)
    for _ in range(trials):
        d = random_diagram(rng, 4, 4)
        if not d.shape.row_lengths:
            continue
        assert quiver_via_plabic(d).same_as(quiver_via_plabic(d, simplified=True)), str(d)


def check_face_count(diagrams):
    n = 0
    for d in diagrams:
        n += 1
        if not d.shape.row_lengths:
            continue
        fs = faces(plabic_from_le(d))
        assert len(fs.interior_faces()) == len(d.ones()) + 1, str(d)
        fs = faces(simplify(plabic_from_le(d)))
        assert len(fs.interior_faces()) == len(d.ones()) + 1, str(d)
    return n


def all_diagrams(rows: int, cols: int) -> list[LeDiagram]:
    return list(enumerate_diagrams(rows, cols))

