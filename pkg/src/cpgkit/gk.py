"""The planar family G_k, its (k+1)-bend layout and a planarity certificate.

Vertices: hubs ``a`` and ``b``, twenty secondaries ``alpha:i`` and, for each
gadget ``i`` in 1..19, a chain of k+2 sewing vertices ``sew:i:j`` adjacent to
both flanks ``alpha:i`` and ``alpha:i+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .contact import A, B, CpgRepresentation, LabeledGraph, VertexId
from .grid import GridPath, GridPoint, make_path

N_SECONDARY = 20
N_GADGET = N_SECONDARY - 1


@dataclass(frozen=True)
class GkParameters:
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be non-negative")

    @property
    def T(self) -> int:  # noqa: N802 - staircase steps on the long side
        return (self.k + 1) // 2

    @property
    def D(self) -> int:  # noqa: N802
        return 22

    @property
    def W(self) -> int:  # noqa: N802
        return 24 + self.T

    @property
    def H(self) -> int:  # noqa: N802
        return 24 + self.T

    @property
    def chain_length(self) -> int:
        return self.k + 2


def alpha(i: int) -> VertexId:
    return VertexId.alpha(i)


def sew(i: int, j: int) -> VertexId:
    return VertexId.sew(i, j)


def gk_vertices(k: int) -> list[VertexId]:
    vs = [A, B] + [alpha(i) for i in range(1, N_SECONDARY + 1)]
    vs += [sew(i, j) for i in range(1, N_GADGET + 1) for j in range(1, k + 3)]
    return vs


def generate_gk(k: int) -> LabeledGraph:
    if k < 0:
        raise ValueError("k must be non-negative")
    pairs = [(A, B)]
    for i in range(1, N_SECONDARY + 1):
        pairs += [(A, alpha(i)), (B, alpha(i))]
    for i in range(1, N_GADGET + 1):
        for j in range(1, k + 3):
            pairs += [(alpha(i), sew(i, j)), (alpha(i + 1), sew(i, j))]
        for j in range(1, k + 2):
            pairs.append((sew(i, j), sew(i, j + 1)))
    return LabeledGraph.from_edges(gk_vertices(k), pairs)


def expected_counts(k: int) -> tuple[int, int]:
    """Closed-form (|V|, |E|) of G_k."""
    return 22 + 19 * (k + 2), 41 + 19 * (3 * k + 5)


# -- canonical layout ---------------------------------------------------------


def secondary_bends(params: GkParameters, i: int) -> list[GridPoint]:
    """Bendpoints b_1..b_{k+1} of the secondary path ``alpha:i``."""
    x0, y0 = i + 1, params.D - i
    out = []
    for n in range(1, params.k + 2):
        t, odd = divmod(n, 2)
        out.append(GridPoint(x0 + t, y0 + t) if odd else GridPoint(x0 + t, y0 + t - 1))
    return out


def _secondary_path(params: GkParameters, i: int) -> GridPath:
    bends = secondary_bends(params, i)
    start = GridPoint(i + 1, 0)
    last = bends[-1]
    if params.k % 2 == 0:
        end = GridPoint(params.W, last.y)
    else:
        end = GridPoint(last.x, params.H)
    return make_path([start, *bends, end])


def _hub_paths(params: GkParameters) -> dict[VertexId, GridPath]:
    W, H = params.W, params.H
    pa = make_path([(1, 0), (W, 0)])
    if params.k % 2 == 0:
        pb = make_path([(W, 0), (W, H)])
    else:
        pb = make_path([(W, 0), (W, H), (1, H)])
    return {A: pa, B: pb}


def contact_points(params: GkParameters, i: int) -> list[GridPoint]:
    """Points x_1..x_{k+1} where consecutive gadget-i sewing paths meet.

    Odd-indexed contacts sit on bends of ``alpha:i+1`` and even-indexed ones on
    bends of ``alpha:i``, so each flank carries one half of the chain.
    """
    left = secondary_bends(params, i)
    right = secondary_bends(params, i + 1)
    return [right[j - 1] if j % 2 else left[j - 1] for j in range(1, params.k + 2)]


def _gadget_paths(params: GkParameters, i: int) -> dict[VertexId, GridPath]:
    k, D = params.k, params.D
    xs = contact_points(params, i)
    out = {sew(i, 1): make_path([(i + 1, D - i - 1), xs[0]])}
    for j in range(2, k + 2):
        out[sew(i, j)] = make_path([xs[j - 2], xs[j - 1]])
    last = xs[-1]
    if k % 2 == 0:
        tail = GridPoint(last.x, last.y + 1)  # onto alpha:i's final horizontal
    else:
        tail = GridPoint(last.x + 1, last.y)  # onto alpha:i+1's final vertical
    out[sew(i, k + 2)] = make_path([last, tail])
    return out


def build_representation(k: int) -> CpgRepresentation:
    """Canonical (k+1)-bend representation of G_k on a (24+T) x (24+T) grid."""
    params = GkParameters(k)
    paths: dict[VertexId, GridPath] = _hub_paths(params)
    for i in range(1, N_SECONDARY + 1):
        paths[alpha(i)] = _secondary_path(params, i)
    for i in range(1, N_GADGET + 1):
        paths.update(_gadget_paths(params, i))
    return CpgRepresentation(paths, (params.W, params.H))


# -- planarity ----------------------------------------------------------------

RotationSystem = Mapping[VertexId, tuple[VertexId, ...]]


class RotationMismatch(ValueError):
    pass


def rotation_system_gk(k: int) -> dict[VertexId, tuple[VertexId, ...]]:
    """Counter-clockwise neighbour orders of a plane drawing of G_k.

    Hub ``a`` sits above the row of secondaries and ``b`` below it, with the
    a-b edge routed around the left end. Inside gadget ``i`` the sewing chain
    climbs from ``sew:i:1`` (near ``b``) to ``sew:i:k+2`` (near ``a``).
    """
    top = k + 2
    secs = [alpha(i) for i in range(1, N_SECONDARY + 1)]
    rot: dict[VertexId, tuple[VertexId, ...]] = {
        A: (B, *secs),
        B: (A, *reversed(secs)),
    }
    for i in range(1, N_SECONDARY + 1):
        order: list[VertexId] = [A]
        if i > 1:
            order += [sew(i - 1, j) for j in range(top, 0, -1)]
        order.append(B)
        if i < N_SECONDARY:
            order += [sew(i, j) for j in range(1, top + 1)]
        rot[alpha(i)] = tuple(order)
    for i in range(1, N_GADGET + 1):
        left, right = alpha(i), alpha(i + 1)
        for j in range(1, top + 1):
            order = [left]
            if j > 1:
                order.append(sew(i, j - 1))
            order.append(right)
            if j < top:
                order.append(sew(i, j + 1))
            rot[sew(i, j)] = tuple(order)
    return rot


def check_rotation(graph: LabeledGraph, rot: RotationSystem) -> None:
    if set(rot) != set(graph.vertices):
        raise RotationMismatch("rotation system and graph have different vertex sets")
    for v, order in rot.items():
        if len(set(order)) != len(order):
            raise RotationMismatch(f"neighbour repeated in rotation at {v}")
        if set(order) != graph.neighbors(v):
            raise RotationMismatch(f"rotation at {v} disagrees with its neighbourhood")


def trace_faces(graph: LabeledGraph, rot: RotationSystem) -> int:
    """Number of faces of the embedding given by ``rot``.

    A dart u->v is followed by v->w where w succeeds u in the cyclic order at
    v. The embedding is planar iff |V| - |E| + faces == 2 (connected graph).
    """
    check_rotation(graph, rot)
    succ: dict[tuple[VertexId, VertexId], VertexId] = {}
    for v, order in rot.items():
        n = len(order)
        for idx, u in enumerate(order):
            succ[(v, u)] = order[(idx + 1) % n]
    unseen = {(u, v) for v, order in rot.items() for u in order}
    faces = 0
    while unseen:
        start = min(unseen)
        dart = start
        while True:
            unseen.discard(dart)
            u, v = dart
            dart = (v, succ[(v, u)])
            if dart == start:
                break
        faces += 1
    if not graph.edges:
        faces = max(faces, 1) if graph.vertices else 0
    return faces


def euler_characteristic(graph: LabeledGraph, faces: int) -> int:
    return len(graph.vertices) - len(graph.edges) + faces


def is_connected(graph: LabeledGraph) -> bool:
    if not graph.vertices:
        return True
    start = min(graph.vertices)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in graph.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(graph.vertices)
