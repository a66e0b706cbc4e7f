"""Exact integer geometry for rectilinear paths on a grid.

A path is stored as its corner sequence: the two endpoints plus every
bendpoint, in traversal order. Everything else (visited points, unit edges,
membership of a point) is derived from the corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class GridPoint(NamedTuple):
    x: int
    y: int


UnitEdge = tuple[GridPoint, GridPoint]


class Direction(Enum):
    NORTH = (0, 1)
    EAST = (1, 0)
    SOUTH = (0, -1)
    WEST = (-1, 0)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    def opposite(self) -> "Direction":
        return Direction((-self.dx, -self.dy))

    def is_horizontal(self) -> bool:
        return self.dy == 0

    @classmethod
    def between(cls, p: GridPoint, q: GridPoint) -> "Direction":
        """Direction of travel from ``p`` to an axis-aligned ``q != p``."""
        dx, dy = q.x - p.x, q.y - p.y
        if (dx == 0) == (dy == 0):
            raise ValueError(f"{p} -> {q} is not a single axis direction")
        return cls(((dx > 0) - (dx < 0), (dy > 0) - (dy < 0)))


class MembershipClass(Enum):
    ABSENT = "absent"
    ENDPOINT = "endpoint"
    BEND = "bend"
    INTERIOR_STRAIGHT = "interior_straight"


class PathError(ValueError):
    """Raised when a corner list does not describe a simple grid path."""


class NotAxisAligned(PathError):
    pass


class Degenerate(PathError):
    pass


class SelfIntersecting(PathError):
    pass


def canonical_edge(p: GridPoint, q: GridPoint) -> UnitEdge:
    return (p, q) if p <= q else (q, p)


def _walk(corners: Sequence[GridPoint]) -> list[GridPoint]:
    pts = [corners[0]]
    for p, q in zip(corners, corners[1:]):
        d = Direction.between(p, q)
        cur = p
        while cur != q:
            cur = GridPoint(cur.x + d.dx, cur.y + d.dy)
            pts.append(cur)
    return pts


@dataclass(frozen=True)
class GridPath:
    """A simple rectilinear path given by its normalized corner sequence.

    Build instances with :func:`make_path`; the constructor itself does not
    normalize.
    """

    corners: tuple[GridPoint, ...]

    @property
    def endpoints(self) -> tuple[GridPoint, GridPoint]:
        return self.corners[0], self.corners[-1]

    @property
    def bends(self) -> tuple[GridPoint, ...]:
        return self.corners[1:-1]

    @property
    def bend_count(self) -> int:
        return len(self.corners) - 2

    @cached_property
    def points(self) -> tuple[GridPoint, ...]:
        """Every grid point visited, in traversal order."""
        return tuple(_walk(self.corners))

    @cached_property
    def point_set(self) -> frozenset[GridPoint]:
        return frozenset(self.points)

    @cached_property
    def edge_set(self) -> frozenset[UnitEdge]:
        pts = self.points
        return frozenset(canonical_edge(p, q) for p, q in zip(pts, pts[1:]))

    def membership(self, p: GridPoint) -> MembershipClass:
        return classify_membership(self, p)

    def reversed(self) -> "GridPath":
        return GridPath(self.corners[::-1])

    def translated(self, dx: int, dy: int) -> "GridPath":
        return GridPath(tuple(GridPoint(c.x + dx, c.y + dy) for c in self.corners))

    def __repr__(self) -> str:
        inner = ",".join(f"({c.x},{c.y})" for c in self.corners)
        return f"GridPath[{inner}]"


def make_path(corners: Iterable[Sequence[int]]) -> GridPath:
    """Validate and normalize a corner list into a :class:`GridPath`.

    Collinear runs are merged so that every interior corner of the result is
    a genuine 90-degree bend. Zero-length steps are rejected rather than
    dropped.
    """
    pts = [GridPoint(int(c[0]), int(c[1])) for c in corners]
    if len(pts) < 2:
        raise Degenerate("a path needs at least two corners")
    for p, q in zip(pts, pts[1:]):
        if p == q:
            raise Degenerate(f"zero-length segment at {tuple(p)}")
        if p.x != q.x and p.y != q.y:
            raise NotAxisAligned(f"segment {tuple(p)} -> {tuple(q)} is diagonal")

    seen: set[GridPoint] = set()
    for p in _walk(pts):
        if p in seen:
            raise SelfIntersecting(f"path revisits {tuple(p)}")
        seen.add(p)

    # no reversals survive the simplicity check, so collinear means same direction
    merged = [pts[0]]
    for q in pts[1:]:
        if len(merged) >= 2:
            a, b = merged[-2], merged[-1]
            if (a.x == b.x == q.x) or (a.y == b.y == q.y):
                merged[-1] = q
                continue
        merged.append(q)
    return GridPath(tuple(merged))


def bend_points(path: GridPath) -> list[GridPoint]:
    return list(path.bends)


def bend_count(path: GridPath) -> int:
    return path.bend_count


def classify_membership(path: GridPath, p: GridPoint) -> MembershipClass:
    p = GridPoint(*p)
    if p == path.corners[0] or p == path.corners[-1]:
        return MembershipClass.ENDPOINT
    if p in path.corners:
        return MembershipClass.BEND
    if p in path.point_set:
        return MembershipClass.INTERIOR_STRAIGHT
    return MembershipClass.ABSENT


def path_cells(path: GridPath) -> tuple[frozenset[GridPoint], frozenset[UnitEdge]]:
    """Occupied grid points and canonical unit edges of ``path``."""
    return path.point_set, path.edge_set
