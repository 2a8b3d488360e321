"""Quivers with frozen vertices stored as skew-symmetric integer matrices.

``b[u][w]`` is the number of arrows ``u -> w`` minus the number ``w -> u``.
Entries between two frozen vertices are always kept at zero.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .le import V0, representative, vertex_key, vid


class QuiverError(ValueError):
    pass


class UnknownVertex(QuiverError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


class FrozenVertex(QuiverError):
    pass


Matrix = tuple[tuple[int, ...], ...]


def mutate_matrix(b: Sequence[Sequence[int]], k: int) -> list[list[int]]:
    """Matrix mutation at index ``k``; returns a fresh list of lists."""
    n = len(b)
    bk = b[k]
    out = []
    for u in range(n):
        row = list(b[u])
        buk = row[k]
        if u == k:
            out.append([-x for x in row])
            continue
        if buk:
            for w in range(n):
                if w == k:
                    row[w] = -buk
                else:
                    p = buk * bk[w]
                    if p > 0:
                        row[w] += p if buk > 0 else -p
        out.append(row)
    return out


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    frozen: tuple[bool, ...]
    b: Matrix
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vs = tuple(self.vertices)
        fr = tuple(bool(x) for x in self.frozen)
        n = len(vs)
        if len(set(vs)) != n or len(fr) != n or len(self.b) != n:
            raise QuiverError("vertices, frozen flags and matrix disagree in size")
        rows = [list(r) for r in self.b]
        for u in range(n):
            if len(rows[u]) != n:
                raise QuiverError("matrix is not square")
            if rows[u][u] != 0:
                raise QuiverError(f"loop at {vs[u]}")
            for w in range(u + 1, n):
                if rows[u][w] != -rows[w][u]:
                    raise QuiverError(f"matrix not skew-symmetric at ({vs[u]}, {vs[w]})")
                if fr[u] and fr[w]:
                    rows[u][w] = rows[w][u] = 0
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "frozen", fr)
        object.__setattr__(self, "b", tuple(tuple(r) for r in rows))
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vs)})

    # construction -------------------------------------------------------

    @classmethod
    def from_arrows(cls, vertices: Iterable[str], arrows: Iterable[tuple],
                    frozen: Iterable[str] = ()) -> "Quiver":
        """Build from ``(u, w)`` or ``(u, w, multiplicity)`` arrow tuples."""
        vs = list(vertices)
        idx = {v: i for i, v in enumerate(vs)}
        fz = set(frozen)
        b = [[0] * len(vs) for _ in vs]
        for a in arrows:
            u, w, m = (*a, 1) if len(a) == 2 else a
            if u not in idx:
                raise UnknownVertex(u)
            if w not in idx:
                raise UnknownVertex(w)
            b[idx[u]][idx[w]] += m
            b[idx[w]][idx[u]] -= m
        return cls(tuple(vs), tuple(v in fz for v in vs), tuple(map(tuple, b)))

    @classmethod
    def empty(cls) -> "Quiver":
        return cls((), (), ())

    # queries ------------------------------------------------------------

    def __len__(self):
        return len(self.vertices)

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def is_frozen(self, v: str) -> bool:
        return self.frozen[self.index(v)]

    def entry(self, u: str, w: str) -> int:
        return self.b[self.index(u)][self.index(w)]

    @property
    def mutable_vertices(self) -> list[str]:
        return [v for v, f in zip(self.vertices, self.frozen) if not f]

    @property
    def frozen_vertices(self) -> list[str]:
        return [v for v, f in zip(self.vertices, self.frozen) if f]

    def arrows(self) -> list[tuple[str, str, int]]:
        """Net arrows as ``(tail, head, multiplicity)`` with multiplicity > 0."""
        n = len(self.vertices)
        return [(self.vertices[u], self.vertices[w], self.b[u][w])
                for u in range(n) for w in range(n) if self.b[u][w] > 0]

    def arrow_set(self) -> set[tuple[str, str, int]]:
        return set(self.arrows())

    # operations ---------------------------------------------------------

    def mutate(self, k: str) -> "Quiver":
        i = self.index(k)
        if self.frozen[i]:
            raise FrozenVertex(f"cannot mutate at frozen vertex {k!r}")
        return Quiver(self.vertices, self.frozen, tuple(map(tuple, mutate_matrix(self.b, i))))

    def subquiver(self, keep: Iterable[str]) -> "Quiver":
        keep = set(keep)
        for v in keep:
            self.index(v)
        idx = [i for i, v in enumerate(self.vertices) if v in keep]
        return Quiver(tuple(self.vertices[i] for i in idx),
                      tuple(self.frozen[i] for i in idx),
                      tuple(tuple(self.b[i][j] for j in idx) for i in idx))

    def delete_vertices(self, vs: Iterable[str]) -> "Quiver":
        """Full subquiver on the remaining vertices; frozen flags untouched."""
        vs = set(vs)
        for v in vs:
            self.index(v)
        return self.subquiver(v for v in self.vertices if v not in vs)

    def refreeze(self, frozen: Mapping[str, bool] | Iterable[str]) -> "Quiver":
        """Set frozen flags from a map (missing vertices keep their flag) or a set
        of vertices to be frozen; frozen-frozen arrows are then dropped."""
        if isinstance(frozen, Mapping):
            flags = tuple(bool(frozen.get(v, f)) for v, f in zip(self.vertices, self.frozen))
        else:
            fz = set(frozen)
            flags = tuple(v in fz for v in self.vertices)
        return Quiver(self.vertices, flags, self.b)

    def merge_vertices(self, s: Iterable[str], name: str | None = None) -> "Quiver":
        """Collapse ``s`` to a single vertex.

        The new row and column are sums of the members' rows and columns, which
        cancels 2-cycles and loops.  The merged vertex is frozen iff some member
        is, and takes the position of the member listed first in vertex order.
        """
        s = set(s)
        if not s:
            raise QuiverError("cannot merge an empty set")
        for v in s:
            self.index(v)
        if name is None:
            name = representative(s)
        if name in self.vertices and name not in s:
            raise QuiverError(f"merged name {name!r} clashes with an existing vertex")
        members = [i for i, v in enumerate(self.vertices) if v in s]
        rest = [i for i, v in enumerate(self.vertices) if v not in s]
        slot = members[0]
        order = sorted(rest + [slot])
        n = len(order)
        b = [[0] * n for _ in range(n)]
        for a, u in enumerate(order):
            for c, w in enumerate(order):
                if a == c:
                    continue
                us = members if u == slot else [u]
                ws = members if w == slot else [w]
                b[a][c] = sum(self.b[x][y] for x in us for y in ws)
        vertices = tuple(name if u == slot else self.vertices[u] for u in order)
        frozen = tuple(any(self.frozen[x] for x in members) if u == slot else self.frozen[u]
                       for u in order)
        return Quiver(vertices, frozen, tuple(map(tuple, b)))

    def merge_family(self, sets: Iterable[Iterable[str]]) -> "Quiver":
        """Merge each set in turn, following earlier merges.

        Members are named by their original labels; each merged vertex is named
        after the least original label it absorbed.
        """
        current = {v: v for v in self.vertices}
        absorbed = {v: {v} for v in self.vertices}
        q = self
        for s in sets:
            targets = {current[v] for v in s}
            if len(targets) < 2:
                continue
            union = set().union(*(absorbed.pop(t) for t in targets))
            name = representative(union)
            q = q.merge_vertices(targets, name=name)
            absorbed[name] = union
            for v in union:
                current[v] = name
        return q

    def mutable_part(self) -> "Quiver":
        return self.subquiver(self.mutable_vertices)

    def relabel(self, mapping: Mapping[str, str]) -> "Quiver":
        return Quiver(tuple(mapping.get(v, v) for v in self.vertices), self.frozen, self.b)

    def reorder(self, order: Sequence[str]) -> "Quiver":
        idx = [self.index(v) for v in order]
        if sorted(idx) != list(range(len(self))):
            raise QuiverError("order must be a permutation of the vertices")
        return Quiver(tuple(order), tuple(self.frozen[i] for i in idx),
                      tuple(tuple(self.b[i][j] for j in idx) for i in idx))

    def canonical_order(self) -> "Quiver":
        return self.reorder(sorted(self.vertices, key=vertex_key))

    def same_as(self, other: "Quiver") -> bool:
        """Label-exact equality ignoring vertex order."""
        if set(self.vertices) != set(other.vertices):
            return False
        return self.canonical_order() == other.canonical_order()

    # serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"vertices": [{"id": v, "frozen": f} for v, f in zip(self.vertices, self.frozen)],
                "b": [list(r) for r in self.b]}

    @classmethod
    def from_dict(cls, data: Mapping) -> "Quiver":
        vs = data["vertices"]
        return cls(tuple(str(v["id"]) for v in vs), tuple(bool(v.get("frozen", False)) for v in vs),
                   tuple(tuple(int(x) for x in r) for r in data["b"]))

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_json(cls, text: str) -> "Quiver":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for v, f in zip(self.vertices, self.frozen):
            shape = "box" if f else "ellipse"
            lines.append(f'  "{v}" [shape={shape}];')
        for u, w, m in self.arrows():
            label = f' [label="{m}"]' if m > 1 else ""
            lines.append(f'  "{u}" -> "{w}"{label};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def grid_quiver(r: int, c: int) -> Quiver:
    """Quiver of the all-ones ``r`` x ``c`` Le-diagram.

    Vertex ``v{i},{j}`` sits at the south-east corner of box ``(i, j)``; ``v0``
    at the north-west corner of box ``(1, 1)``.  Row ``r``, column ``c`` and
    ``v0`` are frozen.
    """
    if r <= 0 or c <= 0:
        return Quiver((V0,), (True,), ((0,),))
    vertices = [V0] + [vid(i, j) for i in range(1, r + 1) for j in range(1, c + 1)]
    frozen = [V0] + [vid(i, j) for i in range(1, r + 1) for j in range(1, c + 1)
                     if i == r or j == c]
    arrows = [(vid(1, 1), V0)]
    for i in range(1, r + 1):
        for j in range(1, c + 1):
            if i <= r - 1 and j >= 2:
                arrows.append((vid(i, j), vid(i, j - 1)))
            if i >= 2 and j <= c - 1:
                arrows.append((vid(i, j), vid(i - 1, j)))
            if i <= r - 1 and j <= c - 1:
                arrows.append((vid(i, j), vid(i + 1, j + 1)))
    return Quiver.from_arrows(vertices, arrows, frozen)


def _signature(q: Quiver, i: int):
    row = q.b[i]
    return (q.frozen[i], tuple(sorted(Counter(x for x in row if x).items())))


def find_isomorphism(q1: Quiver, q2: Quiver) -> dict[str, str] | None:
    """A frozen-flag- and matrix-preserving bijection ``q1 -> q2``, or ``None``.

    Plain backtracking; candidates are filtered by (frozen flag, multiset of
    nonzero row entries) and every partial map is checked against the matrix.
    """
    n = len(q1)
    if n != len(q2):
        return None
    sig1 = [_signature(q1, i) for i in range(n)]
    sig2 = [_signature(q2, i) for i in range(n)]
    if Counter(sig1) != Counter(sig2):
        return None
    by_sig: dict = {}
    for j, s in enumerate(sig2):
        by_sig.setdefault(s, []).append(j)
    # place constrained, well-connected vertices first
    order = sorted(range(n), key=lambda i: (len(by_sig[sig1[i]]), -sum(1 for x in q1.b[i] if x)))
    assign: dict[int, int] = {}
    used = [False] * n
    b1, b2 = q1.b, q2.b

    def extend(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in by_sig[sig1[i]]:
            if used[j]:
                continue
            if all(b1[i][a] == b2[j][c] for a, c in assign.items()):
                assign[i] = j
                used[j] = True
                if extend(pos + 1):
                    return True
                del assign[i]
                used[j] = False
        return False

    if not extend(0):
        return None
    return {q1.vertices[i]: q2.vertices[j] for i, j in assign.items()}


def is_isomorphic(q1: Quiver, q2: Quiver) -> bool:
    return find_isomorphism(q1, q2) is not None
