"""Representations as labeled path collections, validation and contact graphs."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Union

from .grid import GridPath, GridPoint, MembershipClass, UnitEdge, classify_membership


class VertexKind(IntEnum):
    A = 0
    B = 1
    ALPHA = 2
    SEW = 3
    FREE = 4


@dataclass(frozen=True, order=True)
class VertexId:
    """Structured vertex label.

    Ordering is by kind first (a, b, alpha, sew, free) and then numerically
    by index, which is the canonical order used by every file format.
    """

    kind: VertexKind
    i: int = 0
    j: int = 0
    name: str = ""

    @classmethod
    def alpha(cls, i: int) -> "VertexId":
        return cls(VertexKind.ALPHA, i)

    @classmethod
    def sew(cls, i: int, j: int) -> "VertexId":
        return cls(VertexKind.SEW, i, j)

    @classmethod
    def free(cls, name: str) -> "VertexId":
        if not name or any(c.isspace() for c in name):
            raise ValueError(f"free vertex name must be a non-empty token: {name!r}")
        return cls(VertexKind.FREE, name=name)

    @classmethod
    def parse(cls, text: str) -> "VertexId":
        parts = text.split(":")
        head = parts[0]
        try:
            if text == "a":
                return A
            if text == "b":
                return B
            if head == "alpha" and len(parts) == 2:
                return cls.alpha(int(parts[1]))
            if head == "sew" and len(parts) == 3:
                return cls.sew(int(parts[1]), int(parts[2]))
            if head == "free" and len(parts) >= 2:
                return cls.free(text[len("free:"):])
        except ValueError:
            pass
        raise ValueError(f"unrecognised vertex id {text!r}")

    def __str__(self) -> str:
        if self.kind is VertexKind.A:
            return "a"
        if self.kind is VertexKind.B:
            return "b"
        if self.kind is VertexKind.ALPHA:
            return f"alpha:{self.i}"
        if self.kind is VertexKind.SEW:
            return f"sew:{self.i}:{self.j}"
        return f"free:{self.name}"

    def __repr__(self) -> str:
        return f"VertexId({str(self)!r})"


A = VertexId(VertexKind.A)
B = VertexId(VertexKind.B)


@dataclass(frozen=True)
class LabeledGraph:
    vertices: frozenset[VertexId]
    edges: frozenset[frozenset[VertexId]]

    def __post_init__(self) -> None:
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"loop or malformed edge {sorted(e)}")
            if not e <= self.vertices:
                raise ValueError(f"edge {sorted(e)} uses an undeclared vertex")

    @classmethod
    def from_edges(
        cls, vertices: Iterable[VertexId], pairs: Iterable[tuple[VertexId, VertexId]]
    ) -> "LabeledGraph":
        return cls(frozenset(vertices), frozenset(frozenset(p) for p in pairs))

    @cached_property
    def adjacency(self) -> dict[VertexId, frozenset[VertexId]]:
        adj: dict[VertexId, set[VertexId]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = e
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def neighbors(self, v: VertexId) -> frozenset[VertexId]:
        return self.adjacency[v]

    def degree(self, v: VertexId) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return frozenset((u, v)) in self.edges

    def sorted_vertices(self) -> list[VertexId]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[tuple[VertexId, VertexId]]:
        return sorted(tuple(sorted(e)) for e in self.edges)  # type: ignore[misc]


class InvalidRepresentation(ValueError):
    def __init__(self, violations: list["Violation"]):
        self.violations = violations
        head = ", ".join(str(v) for v in violations[:3])
        more = f" (+{len(violations) - 3} more)" if len(violations) > 3 else ""
        super().__init__(f"representation has {len(violations)} violation(s): {head}{more}")


class UnknownVertex(KeyError):
    pass


@dataclass(frozen=True)
class CpgRepresentation:
    """Paths keyed by vertex, inside the inclusive box [0, w] x [0, h]."""

    paths: Mapping[VertexId, GridPath]
    bounds: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "paths", dict(sorted(self.paths.items())))
        object.__setattr__(self, "bounds", (int(self.bounds[0]), int(self.bounds[1])))

    __hash__ = None  # type: ignore[assignment]

    @property
    def vertices(self) -> frozenset[VertexId]:
        return frozenset(self.paths)

    def path(self, v: VertexId) -> GridPath:
        try:
            return self.paths[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def with_path(self, v: VertexId, path: GridPath) -> "CpgRepresentation":
        return CpgRepresentation({**self.paths, v: path}, self.bounds)

    def without(self, v: VertexId) -> "CpgRepresentation":
        return CpgRepresentation({u: p for u, p in self.paths.items() if u != v}, self.bounds)

    def translated(self, dx: int, dy: int) -> "CpgRepresentation":
        """Shift every path; the bounds grow so the box stays anchored at the origin."""
        if dx < 0 or dy < 0:
            raise ValueError("translation must keep coordinates non-negative")
        w, h = self.bounds
        return CpgRepresentation(
            {v: p.translated(dx, dy) for v, p in self.paths.items()}, (w + dx, h + dy)
        )

    @cached_property
    def point_index(self) -> dict[GridPoint, list[tuple[VertexId, MembershipClass]]]:
        index: dict[GridPoint, list[tuple[VertexId, MembershipClass]]] = defaultdict(list)
        for v, path in self.paths.items():
            last = len(path.points) - 1
            corners = set(path.corners)
            for n, p in enumerate(path.points):
                if n == 0 or n == last:
                    m = MembershipClass.ENDPOINT
                elif p in corners:
                    m = MembershipClass.BEND
                else:
                    m = MembershipClass.INTERIOR_STRAIGHT
                index[p].append((v, m))
        return dict(index)

    @cached_property
    def edge_index(self) -> dict[UnitEdge, list[VertexId]]:
        index: dict[UnitEdge, list[VertexId]] = defaultdict(list)
        for v, path in self.paths.items():
            for e in path.edge_set:
                index[e].append(v)
        return dict(index)

    @cached_property
    def violations(self) -> list["Violation"]:
        return _validate(self)


class ViolationCategory(Enum):
    EDGE_OVERLAP = "EdgeOverlap"
    INTERIOR_INTERSECTION = "InteriorIntersection"
    OUT_OF_BOUNDS = "OutOfBounds"
    DUPLICATE_VERTEX = "DuplicateVertex"


_CATEGORY_RANK = {c: n for n, c in enumerate(ViolationCategory)}

Location = Union[GridPoint, UnitEdge]


def _location_key(loc: Location) -> tuple:
    return (loc,) if isinstance(loc, GridPoint) else tuple(loc)


@dataclass(frozen=True)
class Violation:
    category: ViolationCategory
    location: Location
    witnesses: tuple[VertexId, ...]

    def sort_key(self) -> tuple:
        return (_location_key(self.location), _CATEGORY_RANK[self.category], self.witnesses)

    def __str__(self) -> str:
        if isinstance(self.location, GridPoint):
            loc = f"({self.location.x},{self.location.y})"
        else:
            p, q = self.location
            loc = f"({p.x},{p.y})-({q.x},{q.y})"
        who = " ".join(str(w) for w in self.witnesses)
        return f"{self.category.value} at {loc}: {who}"


def _validate(rep: CpgRepresentation) -> list[Violation]:
    out: list[Violation] = []
    w, h = rep.bounds

    for v, path in rep.paths.items():
        for c in path.corners:
            if not (0 <= c.x <= w and 0 <= c.y <= h):
                out.append(Violation(ViolationCategory.OUT_OF_BOUNDS, c, (v,)))
                break

    # one-to-one correspondence: two vertices may not share one geometric path
    duplicates: set[tuple[VertexId, VertexId]] = set()
    by_shape: dict[frozenset[GridPoint], list[VertexId]] = defaultdict(list)
    for v, path in rep.paths.items():
        by_shape[path.point_set].append(v)
    for owners in by_shape.values():
        for u, v in combinations(sorted(owners), 2):
            duplicates.add((u, v))
            loc = min(rep.paths[u].corners)
            out.append(Violation(ViolationCategory.DUPLICATE_VERTEX, loc, (u, v)))

    for e, owners in rep.edge_index.items():
        for pair in combinations(sorted(owners), 2):
            if pair not in duplicates:
                out.append(Violation(ViolationCategory.EDGE_OVERLAP, e, pair))

    for p, entries in rep.point_index.items():
        if len(entries) < 2:
            continue
        for (u, mu), (v, mv) in combinations(sorted(entries, key=lambda t: t[0]), 2):
            if (u, v) in duplicates:
                continue
            if mu is not MembershipClass.ENDPOINT and mv is not MembershipClass.ENDPOINT:
                out.append(Violation(ViolationCategory.INTERIOR_INTERSECTION, p, (u, v)))

    out.sort(key=Violation.sort_key)
    return out


def validate(rep: CpgRepresentation) -> list[Violation]:
    """All breaches of interior-disjointness and bounds, deterministically ordered."""
    return list(rep.violations)


def _require_valid(rep: CpgRepresentation) -> None:
    if rep.violations:
        raise InvalidRepresentation(list(rep.violations))


def contact_graph(rep: CpgRepresentation) -> LabeledGraph:
    _require_valid(rep)
    edges: set[frozenset[VertexId]] = set()
    for entries in rep.point_index.values():
        for (u, _), (v, _) in combinations(entries, 2):
            edges.add(frozenset((u, v)))
    return LabeledGraph(frozenset(rep.paths), frozenset(edges))


class PointKind(Enum):
    FREE_POINT = "FreePoint"
    PLAIN_CONTACT = "PlainContact"
    TYPE_IIA = "TypeIIa"
    TYPE_IIB = "TypeIIb"
    OTHER = "OtherConfiguration"


@dataclass(frozen=True)
class PointClass:
    kind: PointKind
    constituents: tuple[tuple[VertexId, MembershipClass], ...] = field(default=())

    def members(self, m: MembershipClass) -> list[VertexId]:
        return [v for v, mm in self.constituents if mm is m]


def _kind_of(constituents: tuple[tuple[VertexId, MembershipClass], ...]) -> PointKind:
    n = len(constituents)
    if n <= 1:
        # no contact happens at a point covered by at most one path
        return PointKind.FREE_POINT
    ends = sum(1 for _, m in constituents if m is MembershipClass.ENDPOINT)
    if n == 2:
        return PointKind.PLAIN_CONTACT if ends >= 1 else PointKind.OTHER
    if n == 3 and ends == 2:
        (third,) = [m for _, m in constituents if m is not MembershipClass.ENDPOINT]
        if third is MembershipClass.BEND:
            return PointKind.TYPE_IIB
        return PointKind.TYPE_IIA
    return PointKind.OTHER


def classify_grid_point(rep: CpgRepresentation, p: GridPoint) -> PointClass:
    _require_valid(rep)
    entries = rep.point_index.get(GridPoint(*p), [])
    constituents = tuple(sorted(entries, key=lambda t: t[0]))
    return PointClass(_kind_of(constituents), constituents)


def max_bend(rep: CpgRepresentation) -> int:
    return max((p.bend_count for p in rep.paths.values()), default=0)


def pure_members(
    rep: CpgRepresentation, hubs: Iterable[VertexId], targets: Iterable[VertexId]
) -> set[VertexId]:
    """Targets whose paths contain no endpoint of any hub path."""
    hubs, targets = set(hubs), set(targets)
    for v in hubs | targets:
        if v not in rep.paths:
            raise UnknownVertex(v)
    if hubs & targets:
        raise ValueError("hubs and targets must be disjoint")
    hub_ends = {e for h in hubs for e in rep.paths[h].endpoints}
    return {t for t in targets if not (hub_ends & rep.paths[t].point_set)}


def membership(rep: CpgRepresentation, v: VertexId, p: GridPoint) -> MembershipClass:
    return classify_membership(rep.path(v), p)
