"""Le-diagrams: parsing, validation, enumeration, and zero-box merge sets.

Boxes are addressed ``(i, j)`` with ``i`` the row (top row is 1) and ``j`` the
column (leftmost is 1).  Quiver vertices attached to boxes are named
``"v{i},{j}"``; the extra vertex attached to the north-west corner is ``"v0"``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

Box = tuple[int, int]

V0 = "v0"


class LeError(ValueError):
    """Base class for malformed Le-diagram input."""


class NotAPartition(LeError):
    pass


class LeViolation(LeError):
    def __init__(self, boxes: Iterable[Box]):
        self.boxes = tuple(boxes)
        super().__init__(f"Le-property fails at {', '.join(map(str, self.boxes))}")


class BoxNotZero(LeError):
    pass


def vid(i: int, j: int) -> str:
    return f"v{i},{j}"


def parse_vid(v: str) -> Box | None:
    """Inverse of :func:`vid`; ``None`` for ``v0``."""
    if v == V0:
        return None
    i, j = v[1:].split(",")
    return int(i), int(j)


def vertex_key(v: str) -> tuple:
    """Sort key putting ``v0`` first and box vertices in reading order.

    Anything that is not a box label sorts after, by its string.
    """
    if v == V0:
        return (0,)
    try:
        return (1, *parse_vid(v))
    except (ValueError, TypeError):
        return (2, v)


@dataclass(frozen=True)
class Shape:
    row_lengths: tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(int(x) for x in self.row_lengths)
        object.__setattr__(self, "row_lengths", rows)
        if any(x <= 0 for x in rows):
            raise NotAPartition(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise NotAPartition(f"row lengths increase: {rows}")

    @property
    def rows(self) -> int:
        return len(self.row_lengths)

    @property
    def cols(self) -> int:
        return self.row_lengths[0] if self.row_lengths else 0

    def __contains__(self, box: Box) -> bool:
        i, j = box
        return 1 <= i <= len(self.row_lengths) and 1 <= j <= self.row_lengths[i - 1]

    def boxes(self) -> Iterator[Box]:
        """Boxes in reading order (top to bottom, left to right)."""
        for i, length in enumerate(self.row_lengths, start=1):
            for j in range(1, length + 1):
                yield i, j

    def column_length(self, j: int) -> int:
        return sum(1 for x in self.row_lengths if x >= j)

    def __len__(self) -> int:
        return sum(self.row_lengths)


@dataclass(frozen=True)
class LeDiagram:
    """A 0/1 filling of a Young diagram satisfying the Le-property.

    ``rows`` holds the filling row by row; the shape is read off from the row
    lengths.  Construction validates both the partition and the Le-property.
    """

    rows: tuple[tuple[int, ...], ...]
    shape: Shape = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "shape", Shape(tuple(len(r) for r in rows)))
        if any(x not in (0, 1) for r in rows for x in r):
            raise LeError("fillings must be 0 or 1")
        bad = le_violations(self.shape, self.filling)
        if bad:
            raise LeViolation(bad)

    @classmethod
    def from_filling(cls, shape: Shape, filling: Mapping[Box, int]) -> "LeDiagram":
        return cls(tuple(tuple(filling[i, j] for j in range(1, n + 1))
                         for i, n in enumerate(shape.row_lengths, start=1)))

    @classmethod
    def all_ones(cls, rows: int, cols: int) -> "LeDiagram":
        if rows == 0 or cols == 0:
            return cls(())
        return cls(((1,) * cols,) * rows)

    @property
    def filling(self) -> dict[Box, int]:
        return {(i, j): x for i, r in enumerate(self.rows, start=1)
                for j, x in enumerate(r, start=1)}

    def __getitem__(self, box: Box) -> int:
        i, j = box
        if box not in self.shape:
            raise KeyError(box)
        return self.rows[i - 1][j - 1]

    def ones(self) -> list[Box]:
        return [b for b in self.shape.boxes() if self[b] == 1]

    def zeros(self) -> list[Box]:
        return [b for b in self.shape.boxes() if self[b] == 0]

    def to_text(self, sep: str = "\n") -> str:
        return sep.join("".join(map(str, r)) for r in self.rows)

    def __str__(self) -> str:
        return self.to_text("/")


def le_violations(shape: Shape, filling: Mapping[Box, int]) -> list[Box]:
    """All 0-boxes with a 1 somewhere to their left *and* a 1 somewhere above."""
    bad = []
    for i, j in shape.boxes():
        if filling[i, j] != 0:
            continue
        one_left = any(filling[i, jj] for jj in range(1, j))
        one_above = any(filling[ii, j] for ii in range(1, i))
        if one_left and one_above:
            bad.append((i, j))
    return bad


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Box, ...] = ()


def validate(shape: Shape, filling: Mapping[Box, int]) -> ValidationReport:
    missing = [b for b in shape.boxes() if b not in filling]
    extra = [b for b in filling if b not in shape]
    if missing or extra:
        raise LeError(f"filling not total on shape (missing {missing}, extra {extra})")
    bad = le_violations(shape, filling)
    return ValidationReport(not bad, tuple(bad))


def parse_diagram(text: str) -> LeDiagram:
    """Parse rows of ``0``/``1`` separated by newlines or ``/``.

    The empty string is the diagram of the empty partition.
    """
    text = text.strip()
    if not text:
        return LeDiagram(())
    lines = [ln.strip() for ln in text.replace("/", "\n").split("\n")]
    for ln in lines:
        if set(ln) - {"0", "1"}:
            raise LeError(f"unexpected characters in row {ln!r}")
    lengths = [len(ln) for ln in lines]
    if any(a < b for a, b in zip(lengths, lengths[1:])) or 0 in lengths:
        raise NotAPartition(f"row lengths {lengths} do not form a partition")
    return LeDiagram(tuple(tuple(int(c) for c in ln) for ln in lines))


class ZeroCase(enum.Enum):
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"
    HOOK = "hook"


@dataclass(frozen=True)
class MergeSet:
    zero_box: Box
    case: ZeroCase
    members: frozenset[str]


def zero_box_case(d: LeDiagram, box: Box) -> ZeroCase:
    if d[box] != 0:
        raise BoxNotZero(f"box {box} is filled with 1")
    i, j = box
    one_left = any(d[i, jj] for jj in range(1, j))
    one_above = any(d[ii, j] for ii in range(1, i))
    if one_above and not one_left:
        return ZeroCase.VERTICAL
    if one_left and not one_above:
        return ZeroCase.HORIZONTAL
    assert not one_left and not one_above, "diagram violates the Le-property"
    return ZeroCase.HOOK


def merge_set(d: LeDiagram, box: Box, literal_hook: bool = False) -> MergeSet:
    case = zero_box_case(d, box)
    i, j = box
    if case is ZeroCase.VERTICAL:
        top = max(ii for ii in range(1, i) if d[ii, j])
        members = {vid(ii, j) for ii in range(top, i + 1)}
    elif case is ZeroCase.HORIZONTAL:
        left = max(jj for jj in range(1, j) if d[i, jj])
        members = {vid(i, jj) for jj in range(left, j + 1)}
    elif literal_hook:
        members = {vid(ii, j) for ii in range(1, i + 1)}
        members |= {vid(i, jj) for jj in range(1, j + 1)}
        members.add(V0)
    else:
        # the box and its west, north and north-west neighbours; off the
        # diagram these are all the corner vertex v0
        members = {vid(a, b) if a and b else V0
                   for a in (i - 1, i) for b in (j - 1, j)}
    return MergeSet(box, case, frozenset(members))


def merge_sets(d: LeDiagram, literal_hook: bool = False) -> list[MergeSet]:
    return [merge_set(d, b, literal_hook) for b in d.zeros()]


def union_clusters(universe: Iterable[str], groups: Iterable[Iterable[str]]) -> list[frozenset[str]]:
    """Union-find closure of ``groups`` over ``universe``, sorted by least member."""
    parent = {v: v for v in universe}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in groups:
        g = list(g)
        for other in g[1:]:
            a, b = find(g[0]), find(other)
            if a != b:
                parent[b] = a
    classes: dict[str, set[str]] = {}
    for v in parent:
        classes.setdefault(find(v), set()).add(v)
    out = [frozenset(c) for c in classes.values()]
    return sorted(out, key=lambda c: vertex_key(representative(c)))


def representative(cluster: Iterable[str]) -> str:
    return min(cluster, key=vertex_key)


def box_vertices(shape: Shape) -> list[str]:
    return [V0] + [vid(i, j) for i, j in shape.boxes()]


def merge_clusters(d: LeDiagram, literal_hook: bool = False) -> list[frozenset[str]]:
    return union_clusters(box_vertices(d.shape), (m.members for m in merge_sets(d, literal_hook)))


def partitions_in_box(rows: int, cols: int) -> list[tuple[int, ...]]:
    """All partitions fitting in ``rows`` x ``cols``, lexicographically sorted."""
    out = []

    def rec(prefix, cap):
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for x in range(1, cap + 1):
            rec(prefix + [x], x)

    rec([], cols)
    return sorted(out)


def enumerate_diagrams(rows: int, cols: int, limit: int | None = None,
                       start: int = 0) -> Iterator[LeDiagram]:
    """Every Le-diagram whose shape fits in ``rows`` x ``cols``.

    Shapes come in lexicographic order of their row lengths; within a shape
    fillings are counted in binary over boxes in reading order.  ``start``
    skips that many emitted diagrams, so a run can be resumed.
    """
    stream = _all_diagrams(rows, cols)
    return itertools.islice(stream, start, None if limit is None else start + limit)


def _all_diagrams(rows, cols):
    for lengths in partitions_in_box(rows, cols):
        shape = Shape(lengths)
        boxes = list(shape.boxes())
        for bits in itertools.product((0, 1), repeat=len(boxes)):
            filling = dict(zip(boxes, bits))
            if not le_violations(shape, filling):
                yield LeDiagram.from_filling(shape, filling)
