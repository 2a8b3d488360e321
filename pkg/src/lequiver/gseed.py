"""g-seeds: g-vector bookkeeping, green/red vertices, sequence verification.

Only mutable vertices carry g-vectors; frozen vertices are stripped when a seed
is created.  ``G`` stores g-vectors as columns.  Row ``k`` of ``G^-1`` holds the
coefficients of every standard basis vector on ``g_k``, which decides the
colour of ``k``.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Sequence

from .quiver import FrozenVertex, Quiver, UnknownVertex, mutate_matrix

IntMatrix = tuple[tuple[int, ...], ...]


class Color(enum.Enum):
    GREEN = "green"
    RED = "red"


class Mode(enum.Enum):
    GREEN_TO_RED = "green-to-red"
    MAXIMAL_GREEN = "maximal-green"


class SignCoherenceViolation(ArithmeticError):
    """A c-vector with entries of both signs; should never happen."""


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def bareiss_inverse(a: Sequence[Sequence[int]]) -> tuple[int, IntMatrix]:
    """Determinant and exact inverse of a unimodular integer matrix.

    Fraction-free Gauss-Jordan elimination on ``[a | I]``: every division is
    exact, the left block ends as ``det * I`` and the right block as
    ``det * a^-1``.  Raises ``ValueError`` unless ``det`` is +1 or -1.
    """
    n = len(a)
    if n == 0:
        return 1, ()
    m = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    prev, sign = 1, 1
    for k in range(n):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                raise ValueError("matrix is singular")
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pk, row_k = m[k][k], m[k]
        for i in range(n):
            if i == k:
                continue
            row_i = m[i]
            f = row_i[k]
            for j in range(2 * n):
                row_i[j] = (row_i[j] * pk - f * row_k[j]) // prev
        prev = pk
    if prev not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {sign * prev})")
    inv = tuple(tuple(m[i][n + j] * prev for j in range(n)) for i in range(n))
    return sign * prev, inv


@dataclass(frozen=True)
class GSeed:
    """A mutable-part quiver with one g-vector per vertex.

    ``G[i][k]`` is coordinate ``i`` of ``g_k``; ``G_inv`` is kept in step with
    ``G`` under mutation.
    """

    quiver: Quiver
    G: IntMatrix
    G_inv: IntMatrix = field(default=None)

    def __post_init__(self):
        if any(self.quiver.frozen):
            raise ValueError("g-seeds live on the mutable part only")
        if self.G_inv is None:
            object.__setattr__(self, "G_inv", bareiss_inverse(self.G)[1])

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    def g_vector(self, k: str) -> tuple[int, ...]:
        i = self.quiver.index(k)
        return tuple(row[i] for row in self.G)

    def c_vector(self, k: str) -> tuple[int, ...]:
        return self.G_inv[self.quiver.index(k)]

    def color(self, k: str) -> Color:
        return vertex_color(self, k)

    def colors(self) -> dict[str, Color]:
        return {v: vertex_color(self, v) for v in self.vertices}

    def all_red(self) -> bool:
        return all(c is Color.RED for c in self.colors().values())

    def mutate(self, k: str) -> "GSeed":
        return mutate_seed(self, k)


def initial_seed(q: Quiver) -> GSeed:
    mp = q.mutable_part()
    n = len(mp)
    return GSeed(mp, identity(n), identity(n))


def row_color(row: Sequence[int]) -> Color:
    if all(x >= 0 for x in row):
        return Color.GREEN
    if all(x <= 0 for x in row):
        return Color.RED
    raise SignCoherenceViolation(f"mixed signs in c-vector {tuple(row)}")


def vertex_color(seed: GSeed, k: str) -> Color:
    try:
        return row_color(seed.G_inv[seed.quiver.index(k)])
    except SignCoherenceViolation as exc:
        raise SignCoherenceViolation(f"vertex {k!r}: {exc}") from None


def mutation_step(b, G, G_inv, k):
    """One g-seed mutation on raw matrices (lists or tuples), index ``k``.

    Returns new ``(b, G, G_inv)`` as lists of lists.  The new ``g_k`` is
    ``-g_k`` plus the g-vectors at the tails of arrows into ``k`` (green ``k``)
    or at the heads of arrows out of ``k`` (red ``k``), with multiplicity.
    """
    n = len(b)
    green = row_color(G_inv[k]) is Color.GREEN
    coeff = [0] * n
    for j in range(n):
        bjk = b[j][k]
        if green and bjk > 0:
            coeff[j] = bjk
        elif not green and bjk < 0:
            coeff[j] = -bjk
    coeff[k] = -1
    new_G = [list(row) for row in G]
    for i in range(n):
        new_G[i][k] = sum(G[i][j] * coeff[j] for j in range(n) if coeff[j])
    # G' = G E with E an involution, so G'^-1 = E G^-1
    rk = G_inv[k]
    new_inv = []
    for r in range(n):
        if r == k:
            new_inv.append([-x for x in rk])
        elif coeff[r]:
            c = coeff[r]
            new_inv.append([x + c * y for x, y in zip(G_inv[r], rk)])
        else:
            new_inv.append(list(G_inv[r]))
    return mutate_matrix(b, k), new_G, new_inv


def mutate_seed(seed: GSeed, k: str) -> GSeed:
    q = seed.quiver
    i = q.index(k)
    before = vertex_color(seed, k)
    b, G, G_inv = mutation_step(q.b, seed.G, seed.G_inv, i)
    out = GSeed(Quiver(q.vertices, q.frozen, tuple(map(tuple, b))),
                tuple(map(tuple, G)), tuple(map(tuple, G_inv)))
    after = vertex_color(out, k)
    assert after is not before, f"mutation at {k!r} did not flip its colour"
    return out


@dataclass
class Verdict:
    accepted: bool
    reason: str
    sequence: list[str]
    colors_before: list[str]
    final_G: IntMatrix
    final_colors: dict[str, str]

    def to_dict(self) -> dict:
        return {"accepted": self.accepted, "reason": self.reason,
                "steps": [{"vertex": v, "color": c} for v, c in zip(self.sequence, self.colors_before)],
                "final_G": [list(r) for r in self.final_G],
                "final_colors": self.final_colors}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def verify_sequence(q: Quiver, seq: Sequence[str], mode: Mode = Mode.GREEN_TO_RED,
                    cross_check: bool = False) -> Verdict:
    """Replay ``seq`` from the initial seed of ``q`` and judge the end state.

    With ``cross_check`` every step's colours are also computed from a framed
    quiver and compared.
    """
    seed = initial_seed(q)
    framed = framed_quiver(seed.quiver) if cross_check else None
    colors = []
    for step, k in enumerate(seq):
        if k not in seed.quiver._index:
            if k in q.vertices:
                raise FrozenVertex(f"step {step}: {k!r} is frozen")
            raise UnknownVertex(k)
        c = vertex_color(seed, k)
        colors.append(c.value)
        seed = mutate_seed(seed, k)
        if framed is not None:
            framed = framed.mutate(k)
            _compare_framed(seed, framed, step)
    final = {v: c.value for v, c in seed.colors().items()}
    if mode is Mode.MAXIMAL_GREEN and any(c != Color.GREEN.value for c in colors):
        bad = next(i for i, c in enumerate(colors) if c != Color.GREEN.value)
        reason = f"step {bad} mutates red vertex {seq[bad]!r}"
        accepted = False
    elif all(c == Color.RED.value for c in final.values()):
        reason, accepted = "all mutable vertices red", True
    else:
        green = [v for v, c in final.items() if c == Color.GREEN.value]
        reason, accepted = f"vertices still green: {', '.join(green)}", False
    return Verdict(accepted, reason, list(seq), colors, seed.G, final)


def framed_quiver(q: Quiver) -> Quiver:
    """Mutable part of ``q`` with a frozen copy ``k'`` and an arrow ``k -> k'``
    for every mutable vertex."""
    mp = q.mutable_part()
    primes = [f"{v}'" for v in mp.vertices]
    arrows = [(u, w, m) for u, w, m in mp.arrows()] + list(zip(mp.vertices, primes))
    return Quiver.from_arrows(list(mp.vertices) + primes, arrows, frozen=primes)


def framed_c_vectors(framed: Quiver) -> dict[str, tuple[int, ...]]:
    """c-vectors read off a framed quiver: entries ``b[k][i']``."""
    mutable = framed.mutable_vertices
    return {k: tuple(framed.entry(k, f"{i}'") for i in mutable) for k in mutable}


def _compare_framed(seed: GSeed, framed: Quiver, step: int):
    cv = framed_c_vectors(framed)
    for k in seed.vertices:
        mine = vertex_color(seed, k)
        theirs = row_color(cv[k])
        if mine is not theirs:
            raise AssertionError(f"step {step}: colour of {k!r} disagrees with framed quiver")
