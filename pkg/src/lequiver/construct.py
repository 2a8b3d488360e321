"""Quivers of Le-diagrams from the rectangle grid quiver.

Two routes: delete the boxes outside the shape and merge along zero boxes
(:func:`quiver_from_le`), or replay a script of deletions and mutations that
only ever touches the mutable part (:func:`grid_to_le_script`).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .le import V0, Box, LeDiagram, ZeroCase, merge_clusters, representative, vid, zero_box_case
from .quiver import FrozenVertex, Quiver, UnknownVertex, grid_quiver


def step_one_freezing(d: LeDiagram) -> dict[str, bool]:
    """Frozen flags after cutting the rectangle down to the shape.

    ``v{i},{j}`` stays mutable iff box ``(i+1, j+1)`` is in the shape, i.e. its
    south-east corner is interior to the diagram.
    """
    flags = {V0: True}
    for i, j in d.shape.boxes():
        flags[vid(i, j)] = (i + 1, j + 1) not in d.shape
    return flags


def outside_boxes(d: LeDiagram) -> list[str]:
    r, c = d.shape.rows, d.shape.cols
    return [vid(i, j) for i in range(1, r + 1) for j in range(1, c + 1) if (i, j) not in d.shape]


def cut_to_shape(d: LeDiagram) -> Quiver:
    q = grid_quiver(d.shape.rows, d.shape.cols)
    return q.delete_vertices(outside_boxes(d)).refreeze(step_one_freezing(d))


def quiver_from_le(d: LeDiagram) -> Quiver:
    """Grid quiver of the bounding rectangle, cut down to the shape, with each
    merge cluster collapsed to its least member."""
    q = cut_to_shape(d)
    for cluster in merge_clusters(d):
        if len(cluster) > 1:
            q = q.merge_vertices(cluster, name=representative(cluster))
    return q


# --------------------------------------------------------------------------
# mutation scripts


@dataclass(frozen=True)
class Instruction:
    op: str  # "delete" | "mutate" | "refreeze"
    vertex: str | None = None
    freeze: tuple[tuple[str, bool], ...] | None = None

    def to_dict(self) -> dict:
        if self.op == "refreeze":
            return {"op": "refreeze", "frozen": dict(self.freeze)}
        return {"op": self.op, "vertex": self.vertex}

    @classmethod
    def from_dict(cls, data: dict) -> "Instruction":
        if data["op"] == "refreeze":
            return cls("refreeze", freeze=tuple(sorted(data["frozen"].items())))
        if data["op"] not in ("delete", "mutate"):
            raise ValueError(f"unknown instruction {data['op']!r}")
        return cls(data["op"], data["vertex"])

    def __str__(self):
        if self.op == "refreeze":
            return "refreeze"
        return f"{self.op} {self.vertex}"


@dataclass
class MutationScript:
    instructions: list[Instruction]
    rows: int
    cols: int
    diagram: str
    trace: list[dict[str, str]] = field(default_factory=list)  # occupancy after each zero box

    def mutations(self) -> list[str]:
        return [ins.vertex for ins in self.instructions if ins.op == "mutate"]

    def to_dict(self, with_trace: bool = False) -> dict:
        out = {"rectangle": [self.rows, self.cols], "diagram": self.diagram,
               "instructions": [ins.to_dict() for ins in self.instructions]}
        if with_trace:
            out["trace"] = self.trace
        return out

    def to_json(self, with_trace: bool = False, **kw) -> str:
        return json.dumps(self.to_dict(with_trace), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "MutationScript":
        r, c = data["rectangle"]
        return cls([Instruction.from_dict(x) for x in data["instructions"]], r, c,
                   data.get("diagram", ""), data.get("trace", []))


def grid_to_le_script(d: LeDiagram) -> MutationScript:
    """Deletions and mutations taking the rectangle's grid quiver to a quiver
    whose mutable part matches that of :func:`quiver_from_le`.

    Zero boxes are handled in reading order.  Each box position starts as its
    own face; ``holder`` maps a face cluster to the mutable vertex currently
    standing for it (``None`` once the cluster is frozen).  A zero box whose
    vertex is mutable is merged by mutating down its south-east diagonal, each
    mutated vertex sliding one step south-east, and deleting the vertex pushed
    off the end.  A zero box whose vertex is frozen freezes its partner's
    cluster, which at the mutable level means deleting that cluster's vertex.
    """
    r, c = d.shape.rows, d.shape.cols
    out: list[Instruction] = [Instruction("delete", v) for v in outside_boxes(d)]
    freeze = step_one_freezing(d)
    out.append(Instruction("refreeze", freeze=tuple(sorted(freeze.items()))))

    parent: dict = {V0: V0}
    holder: dict = {V0: None}
    for b in d.shape.boxes():
        parent[b] = b
        holder[b] = None if freeze[vid(*b)] else vid(*b)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def mutable_at(p):
        return p in d.shape and holder[find(p)] is not None

    trace = []
    for box in d.zeros():
        partner = find(_partner_face(d, box))
        if mutable_at(box):
            run = [box]
            while mutable_at((run[-1][0] + 1, run[-1][1] + 1)):
                run.append((run[-1][0] + 1, run[-1][1] + 1))
            movers = [holder[find(p)] for p in run]
            out += [Instruction("mutate", v) for v in movers]
            out.append(Instruction("delete", movers[-1]))
            for p, v in zip(run[1:], movers):
                holder[find(p)] = v
        elif holder[partner] is not None:
            out.append(Instruction("delete", holder[partner]))
            holder[partner] = None
        parent[find(box)] = partner
        trace.append({f"{p[0]},{p[1]}": holder[find(p)] for p in d.shape.boxes()
                      if holder[find(p)] is not None})
    return MutationScript(out, r, c, d.to_text("/"), trace)


def _partner_face(d: LeDiagram, box: Box):
    """Position whose face a zero box merges into: north for the vertical case,
    west for the horizontal one, north-west for a hook (the corner face off
    the diagram)."""
    i, j = box
    case = zero_box_case(d, box)
    if case is ZeroCase.VERTICAL:
        return i - 1, j
    if case is ZeroCase.HORIZONTAL:
        return i, j - 1
    return (i - 1, j - 1) if i > 1 and j > 1 else V0


class ScriptError(RuntimeError):
    def __init__(self, step: int, exc: Exception):
        self.step = step
        super().__init__(f"instruction {step}: {exc}")


def apply_script(q: Quiver, script: MutationScript | Iterable[Instruction],
                 trace: bool = False):
    """Fold the instructions over ``q``.  Returns the final quiver, or the list
    of all intermediate quivers when ``trace`` is set."""
    instructions = script.instructions if isinstance(script, MutationScript) else list(script)
    states = [q]
    for step, ins in enumerate(instructions):
        try:
            if ins.op == "mutate":
                q = q.mutate(ins.vertex)
            elif ins.op == "delete":
                q.index(ins.vertex)
                q = q.delete_vertices([ins.vertex])
            elif ins.op == "refreeze":
                q = q.refreeze(dict(ins.freeze))
            else:
                raise ValueError(f"unknown instruction {ins.op!r}")
        except (FrozenVertex, UnknownVertex, KeyError) as exc:
            raise ScriptError(step, exc) from exc
        if trace:
            states.append(q)
    return states if trace else q


def quiver_via_script(d: LeDiagram) -> Quiver:
    script = grid_to_le_script(d)
    return apply_script(grid_quiver(script.rows, script.cols), script)
