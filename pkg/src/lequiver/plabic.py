"""Le-diagram -> Gamma-graph -> plabic graph -> faces -> dual quiver.

Geometry is integral: box ``(i, j)`` is the square
``[10(j-1), 10j] x [-10i, -10i+10]``.  The rotation system is combinatorial
(each edge end carries a compass label) and coordinates are only used to
locate the anchor points that name faces.  Faces are traced with their
interior on the left.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .le import V0, Box, LeDiagram, representative, vertex_key, vid
from .quiver import Quiver

S = 10  # box side in integer units

# counter-clockwise angle of each compass label, in degrees
ANGLE = {"E": 0, "NE": 45, "N": 90, "NW": 135, "W": 180, "SW": 225, "S": 270, "SE": 315}

Point = tuple[int, int]


class InconsistentEmbedding(RuntimeError):
    pass


# --------------------------------------------------------------------------
# Gamma-graphs


@dataclass(frozen=True)
class BoundaryVertex:
    name: str
    kind: str  # "source" (vertical step) or "sink" (horizontal step)
    line: int  # row index for sources, column index for sinks
    pos: Point


@dataclass(frozen=True)
class GammaGraph:
    diagram: LeDiagram
    internal: tuple[Box, ...]
    boundary: tuple[BoundaryVertex, ...]  # along the lattice path, upper right to lower left
    # (tail, head, "h" | "v"); endpoints are boxes or boundary vertex names
    edges: tuple[tuple[object, object, str], ...]
    crossings: tuple[Box, ...]

    def has_above(self, box: Box) -> bool:
        i, j = box
        return any(self.diagram[ii, j] for ii in range(1, i))

    def has_left(self, box: Box) -> bool:
        i, j = box
        return any(self.diagram[i, jj] for jj in range(1, j))


def lattice_boundary(d: LeDiagram) -> list[BoundaryVertex]:
    """Boundary vertices along the south-east boundary of the shape."""
    lam = d.shape.row_lengths
    out = []
    for i, li in enumerate(lam, start=1):
        out.append(BoundaryVertex(f"s{i}", "source", i, (S * li, -S * i + S // 2)))
        nxt = lam[i] if i < len(lam) else 0
        for j in range(li, nxt, -1):
            out.append(BoundaryVertex(f"t{j}", "sink", j, (S * j - S // 2, -S * i)))
    return out


def gamma_graph(d: LeDiagram) -> GammaGraph:
    ones = d.ones()
    boundary = lattice_boundary(d)
    src = {b.line: b.name for b in boundary if b.kind == "source"}
    snk = {b.line: b.name for b in boundary if b.kind == "sink"}
    edges = []
    for i in range(1, d.shape.rows + 1):
        row = [b for b in ones if b[0] == i]
        if row:
            # horizontal edges point left
            chain = row + [src[i]]
            edges += [(chain[t + 1], chain[t], "h") for t in range(len(row))]
    for j in range(1, d.shape.cols + 1):
        col = [b for b in ones if b[1] == j]
        if col:
            chain = col + [snk[j]]
            edges += [(chain[t], chain[t + 1], "v") for t in range(len(col))]
    # a vertical line covers (i, j) below its top 1; a horizontal one right of its leftmost 1
    crossings = [b for b in d.shape.boxes()
                 if any(d[ii, b[1]] for ii in range(1, b[0] + 1))
                 and any(d[b[0], jj] for jj in range(1, b[1] + 1))]
    return GammaGraph(d, tuple(ones), tuple(boundary), tuple(edges), tuple(crossings))


# --------------------------------------------------------------------------
# plabic graphs


@dataclass(frozen=True)
class Edge:
    u: str
    w: str
    du: str  # compass label of the edge as it leaves u
    dw: str  # ... and as it leaves w
    path: tuple[Point, ...]  # polyline from u to w
    arc: bool = False  # piece of the disk boundary between boundary vertices


@dataclass
class PlabicGraph:
    """Bicoloured graph in a disk with boundary arcs closing the disk.

    ``color`` maps vertices to ``"black"``, ``"white"`` or ``"boundary"``.
    Half-edge ``2e`` runs ``u -> w`` along edge ``e``; ``2e + 1`` runs back.
    ``anchors`` maps a face label to a point strictly inside that face.
    """

    color: dict[str, str]
    pos: dict[str, Point]
    edges: list[Edge]
    boundary: list[str]
    anchors: dict[str, Point] = field(default_factory=dict)

    def rotation(self) -> dict[str, list[int]]:
        """Half-edges leaving each vertex in counter-clockwise order."""
        rot: dict[str, list[tuple[int, int]]] = {v: [] for v in self.color}
        for e, edge in enumerate(self.edges):
            rot[edge.u].append((ANGLE[edge.du], 2 * e))
            rot[edge.w].append((ANGLE[edge.dw], 2 * e + 1))
        out = {}
        for v, lst in rot.items():
            lst.sort()
            angles = [a for a, _ in lst]
            if len(set(angles)) != len(angles):
                raise InconsistentEmbedding(f"two edges leave {v} in the same direction")
            out[v] = [h for _, h in lst]
        return out

    def degree(self) -> Counter:
        deg = Counter()
        for edge in self.edges:
            if not edge.arc:
                deg[edge.u] += 1
                deg[edge.w] += 1
        return deg

    def interior_vertices(self) -> list[str]:
        return [v for v, c in self.color.items() if c != "boundary"]

    def tail(self, h: int) -> str:
        e = self.edges[h >> 1]
        return e.w if h & 1 else e.u

    def head(self, h: int) -> str:
        e = self.edges[h >> 1]
        return e.u if h & 1 else e.w

    def half_path(self, h: int) -> tuple[Point, ...]:
        p = self.edges[h >> 1].path
        return p[::-1] if h & 1 else p

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{", "  node [label=\"\", width=0.15];"]
        for v, c in self.color.items():
            x, y = self.pos[v]
            style = {"black": "style=filled, fillcolor=black",
                     "white": "style=filled, fillcolor=white",
                     "boundary": "shape=point"}[c]
            lines.append(f'  "{v}" [{style}, pos="{x / S},{y / S}!"];')
        for e in self.edges:
            style = " [style=dashed]" if e.arc else ""
            lines.append(f'  "{e.u}" -- "{e.w}"{style};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def plabic_graph(gamma: GammaGraph) -> PlabicGraph:
    """Replace each internal vertex of ``gamma`` by its bicoloured gadget.

    The gadget depends on whether the vertex has an internal vertex above it
    in its column and to its left in its row:

    * neither: a black vertex (right and down edges);
    * left only: a white vertex (left, right, down);
    * above only: a black vertex (up, right, down);
    * both: a black vertex (up, right) joined to a white vertex south-west of
      it (left, down).
    """
    d = gamma.diagram
    color: dict[str, str] = {}
    pos: dict[str, Point] = {}
    # port name -> (vertex, label); ports: "up", "left", "right", "down"
    ports: dict[Box, dict[str, str]] = {}
    edges: list[Edge] = []
    for box in gamma.internal:
        i, j = box
        cx, cy = S * j - S // 2, -S * i + S // 2
        above, left = gamma.has_above(box), gamma.has_left(box)
        b, w = f"b{i},{j}", f"w{i},{j}"
        if above and left:
            color[b], pos[b] = "black", (cx, cy)
            color[w], pos[w] = "white", (cx - 2, cy - 2)
            ports[box] = {"up": b, "right": b, "left": w, "down": w}
            edges.append(Edge(w, b, "NE", "SW", (pos[w], pos[b])))
        elif left:
            color[w], pos[w] = "white", (cx, cy)
            ports[box] = {"left": w, "right": w, "down": w}
        else:
            color[b], pos[b] = "black", (cx, cy)
            ports[box] = {"right": b, "down": b} | ({"up": b} if above else {})
    for bv in gamma.boundary:
        color[bv.name], pos[bv.name] = "boundary", bv.pos

    def end(node, port):
        return node if isinstance(node, str) else ports[node][port]

    for a, c, kind in gamma.edges:
        if kind == "h":
            # a lies to the right of c
            u, w = end(a, "left"), end(c, "right")
            edges.append(Edge(w, u, "E", "W", (pos[w], pos[u])))
        else:
            u, w = end(a, "down"), end(c, "up")
            edges.append(Edge(u, w, "S", "N", (pos[u], pos[w])))

    # lollipops keep every boundary vertex incident to exactly one edge
    touched = {e.u for e in edges} | {e.w for e in edges}
    for bv in gamma.boundary:
        if bv.name in touched:
            continue
        x, y = bv.pos
        if bv.kind == "source":
            lv, lc, lp, dl, db = f"l{bv.name}", "white", (x - 3, y), "E", "W"
        else:
            lv, lc, lp, dl, db = f"l{bv.name}", "black", (x, y + 3), "S", "N"
        color[lv], pos[lv] = lc, lp
        edges.append(Edge(lv, bv.name, dl, db, (lp, bv.pos)))

    edges += _boundary_arcs(d, gamma.boundary)
    anchors = {V0: (1, -1)}
    anchors.update({vid(i, j): (S * j - 1, -S * i + 1) for i, j in d.shape.boxes()})
    return PlabicGraph(color, pos, edges, [bv.name for bv in gamma.boundary], anchors)


def _boundary_arcs(d: LeDiagram, boundary: tuple[BoundaryVertex, ...]) -> list[Edge]:
    """Arcs between consecutive boundary vertices, plus the north-west arc
    closing the disk from the last boundary vertex back to the first."""
    if not boundary:
        return []
    lam = d.shape.row_lengths
    r, c = d.shape.rows, d.shape.cols
    # lattice-path corner points from (c, 0) to (0, -r), in box units
    corners = [(c, 0)]
    for i, li in enumerate(lam, start=1):
        corners.append((li, -i))
        nxt = lam[i] if i < len(lam) else 0
        corners.append((nxt, -i))
    corners = [(S * x, S * y) for x, y in corners]

    def along(p, q):
        """Corner points of the lattice path strictly between p and q."""
        def t(pt):
            for k in range(len(corners) - 1):
                a, b = corners[k], corners[k + 1]
                if min(a[0], b[0]) <= pt[0] <= max(a[0], b[0]) and \
                        min(a[1], b[1]) <= pt[1] <= max(a[1], b[1]):
                    frac = abs(pt[0] - a[0]) + abs(pt[1] - a[1])
                    return k, frac
            raise AssertionError(pt)
        tp, tq = t(p), t(q)
        return [corners[k] for k in range(tp[0] + 1, tq[0] + 1)]

    def leave(bv, forward):
        if bv.kind == "source":
            return "S" if forward else "N"
        return "W" if forward else "E"

    arcs = []
    for a, b in zip(boundary, boundary[1:]):
        path = (a.pos, *along(a.pos, b.pos), b.pos)
        arcs.append(Edge(a.name, b.name, leave(a, True), leave(b, False), _dedup(path), arc=True))
    first, last = boundary[0], boundary[-1]
    path = (last.pos, *along(last.pos, (0, -S * r)), (0, -S * r), (-S // 2, -S * r),
            (-S // 2, S // 2), (S * c, S // 2), (S * c, 0), first.pos)
    arcs.append(Edge(last.name, first.name, leave(last, True), leave(first, False),
                     _dedup(path), arc=True))
    return arcs


def _dedup(path):
    out = [path[0]]
    for p in path[1:]:
        if p != out[-1]:
            out.append(p)
    return tuple(out)


def plabic_from_le(d: LeDiagram) -> PlabicGraph:
    return plabic_graph(gamma_graph(d))


# --------------------------------------------------------------------------
# degree-2 moves


def simplify(g: PlabicGraph) -> PlabicGraph:
    """Remove interior vertices of degree 2, gluing their two edges, until none
    remain.  Polylines are concatenated, so anchors keep their faces."""
    color = dict(g.color)
    pos = dict(g.pos)
    edges: dict[int, Edge] = dict(enumerate(g.edges))
    next_id = len(g.edges)
    incident: dict[str, set[int]] = {v: set() for v in color}
    for e, edge in edges.items():
        incident[edge.u].add(e)
        incident[edge.w].add(e)
    queue = [v for v in color if color[v] != "boundary"]
    while queue:
        x = queue.pop()
        if x not in color or len(incident[x]) != 2:
            continue
        e1, e2 = sorted(incident[x])
        a1, a2 = edges[e1], edges[e2]
        if a1.u == a1.w or a2.u == a2.w or e1 == e2:
            continue
        # orient both edges away from x
        p1 = a1 if a1.u == x else Edge(a1.w, a1.u, a1.dw, a1.du, a1.path[::-1], a1.arc)
        p2 = a2 if a2.u == x else Edge(a2.w, a2.u, a2.dw, a2.du, a2.path[::-1], a2.arc)
        if p1.w == x or p2.w == x:
            continue
        merged = Edge(p1.w, p2.w, p1.dw, p2.dw, _dedup(p1.path[::-1] + p2.path[1:]))
        del edges[e1], edges[e2]
        for e, v in ((e1, p1.w), (e2, p2.w)):
            incident[v].discard(e)
        edges[next_id] = merged
        incident[merged.u].add(next_id)
        incident[merged.w].add(next_id)
        next_id += 1
        del color[x], pos[x], incident[x]
        queue += [v for v in (merged.u, merged.w) if color.get(v, "boundary") != "boundary"]
    ordered = [edges[e] for e in sorted(edges)]
    return PlabicGraph(color, pos, ordered, list(g.boundary), dict(g.anchors))


# --------------------------------------------------------------------------
# faces


@dataclass
class FaceSet:
    graph: PlabicGraph
    faces: list[list[int]]  # cyclic lists of half-edges
    face_of: list[int]  # half-edge -> face index
    boundary_flag: list[bool]
    exterior: int | None  # orbit outside the disk, when boundary arcs exist
    labels: dict[int, list[str]]  # face index -> anchor labels inside it

    def interior_faces(self) -> list[int]:
        return [f for f in range(len(self.faces)) if f != self.exterior]

    def name(self, f: int) -> str:
        lab = self.labels.get(f)
        return representative(lab) if lab else f"f{f}"

    def to_dict(self) -> dict:
        g = self.graph
        return {"faces": [{"name": self.name(f), "boundary": self.boundary_flag[f],
                           "labels": sorted(self.labels.get(f, []), key=vertex_key),
                           "vertices": [g.tail(h) for h in self.faces[f]]}
                          for f in self.interior_faces()]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _signed_area2(poly: list[Point]) -> int:
    return sum(x0 * y1 - x1 * y0 for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]))


def winding_number(poly: list[Point], p: Point) -> int:
    px, py = p
    wn = 0
    for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]):
        cross = (x1 - x0) * (py - y0) - (px - x0) * (y1 - y0)
        if y0 <= py < y1 and cross > 0:
            wn += 1
        elif y1 <= py < y0 and cross < 0:
            wn -= 1
    return wn


def faces(g: PlabicGraph) -> FaceSet:
    rot = g.rotation()
    pos_in = {}
    for v, hs in rot.items():
        for t, h in enumerate(hs):
            pos_in[h] = (v, t)
    nh = 2 * len(g.edges)
    face_of = [-1] * nh
    orbits: list[list[int]] = []
    for start in range(nh):
        if face_of[start] >= 0:
            continue
        orbit, h = [], start
        while face_of[h] < 0:
            face_of[h] = len(orbits)
            orbit.append(h)
            twin = h ^ 1
            v, t = pos_in[twin]
            # clockwise neighbour of the twin keeps the face on the left
            h = rot[v][(t - 1) % len(rot[v])]
        if h != start:
            raise InconsistentEmbedding("face traversal did not close up")
        orbits.append(orbit)

    connected_vertices = [v for v in g.color if rot[v]]
    v_count, e_count, f_count = len(connected_vertices), len(g.edges), len(orbits)
    if g.edges and v_count - e_count + f_count != 2:
        raise InconsistentEmbedding(f"Euler check failed: V={v_count} E={e_count} F={f_count}")

    polys = []
    for orbit in orbits:
        pts: list[Point] = []
        for h in orbit:
            pts.extend(g.half_path(h)[:-1])
        polys.append(pts)
    areas = [_signed_area2(p) for p in polys]
    has_arcs = any(e.arc for e in g.edges)
    exterior = None
    negative = [f for f, a in enumerate(areas) if a < 0]
    if has_arcs:
        if len(negative) != 1 or not all(g.edges[h >> 1].arc for h in orbits[negative[0]]):
            raise InconsistentEmbedding("could not identify the outside of the disk")
        exterior = negative[0]
    boundary_flag = []
    for f, orbit in enumerate(orbits):
        if has_arcs:
            touches = f != exterior and any(g.edges[h >> 1].arc for h in orbit)
        else:
            touches = areas[f] <= 0
        boundary_flag.append(touches)

    labels: dict[int, list[str]] = {}
    for label, p in g.anchors.items():
        hits = [f for f in range(len(orbits)) if f != exterior and areas[f] > 0
                and winding_number(polys[f], p) == 1]
        if not hits:
            hits = [f for f in range(len(orbits)) if f != exterior and areas[f] <= 0]
        if len(hits) != 1:
            raise InconsistentEmbedding(f"anchor {label} lies in {len(hits)} faces")
        labels.setdefault(hits[0], []).append(label)
    return FaceSet(g, orbits, face_of, boundary_flag, exterior, labels)


def dual_quiver(g: PlabicGraph) -> Quiver:
    """One vertex per face (frozen iff it touches the boundary); for each
    black-white edge an arrow with the black endpoint on its left."""
    fs = faces(g)
    ids = fs.interior_faces()
    if not ids:
        return Quiver((V0,), (True,), ((0,),))
    names = {f: fs.name(f) for f in ids}
    arrows = []
    for e, edge in enumerate(g.edges):
        cu, cw = g.color[edge.u], g.color[edge.w]
        if {cu, cw} != {"black", "white"}:
            continue
        h = 2 * e if cu == "white" else 2 * e + 1  # half-edge white -> black
        left, right = fs.face_of[h], fs.face_of[h ^ 1]
        if left != right:
            arrows.append((names[left], names[right]))
    order = sorted(ids, key=lambda f: vertex_key(names[f]))
    return Quiver.from_arrows([names[f] for f in order], arrows,
                              frozen=[names[f] for f in ids if fs.boundary_flag[f]])


def quiver_via_plabic(d: LeDiagram, simplified: bool = False) -> Quiver:
    if not d.shape.row_lengths:
        return Quiver((V0,), (True,), ((0,),))
    g = plabic_from_le(d)
    return dual_quiver(simplify(g) if simplified else g)
