"""Bounded exhaustive search for CPG representations of small graphs.

Grid sizes here count grid points per side: a ``3 x 3`` grid has points
(0..2) x (0..2), so its representations carry bounds ``(2, 2)``.

The search places one path per vertex in sorted vertex order. A partial
placement is extended only when the new path is interior-disjoint from every
placed path and touches exactly the placed neighbours prescribed by the
graph; both conditions are final once two paths are fixed, so no valid
completion is ever pruned. Candidates are tried in lexicographic order of
their corner tuples, so the first hit is the lexicographically least
solution.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .contact import CpgRepresentation, LabeledGraph, VertexId, contact_graph, validate
from .grid import GridPath, GridPoint

DEFAULT_NODE_BUDGET = 10**7

Corners = tuple[GridPoint, ...]


@dataclass(frozen=True)
class SearchBounds:
    width: int
    height: int
    bend_budget: int
    max_edge_len: int | None = None

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("grid must have at least one point per side")
        if self.bend_budget < 0:
            raise ValueError("bend budget must be non-negative")
        if self.max_edge_len is not None and self.max_edge_len < 1:
            raise ValueError("max_edge_len must be positive")

    @property
    def edge_cap(self) -> int:
        return self.max_edge_len if self.max_edge_len is not None else max(self.width, self.height)

    @property
    def rep_bounds(self) -> tuple[int, int]:
        return (self.width - 1, self.height - 1)

    def with_budget(self, t: int) -> "SearchBounds":
        return SearchBounds(self.width, self.height, t, self.max_edge_len)


@dataclass(frozen=True)
class Found:
    rep: CpgRepresentation


@dataclass(frozen=True)
class ExhaustedNoSolution:
    pass


@dataclass(frozen=True)
class AbortedBudget:
    nodes: int


SearchOutcome = Union[Found, ExhaustedNoSolution, AbortedBudget]


# -- candidate paths ------------------------------------------------------------


def canonical_corners(corners: Sequence[GridPoint]) -> Corners:
    fwd = tuple(corners)
    rev = fwd[::-1]
    return min(fwd, rev)


def _segment_paths(b: SearchBounds) -> Iterator[Corners]:
    w, h, cap, budget = b.width, b.height, b.edge_cap, b.bend_budget
    dirs = ((1, 0), (-1, 0), (0, 1), (0, -1))

    def extend(corners: list[GridPoint], visited: set[GridPoint], last_dir) -> Iterator[Corners]:
        yield tuple(corners)
        if len(corners) - 1 > budget:  # another segment would add a bend beyond budget
            return
        cur = corners[-1]
        for d in dirs:
            if last_dir is not None and (d[0] == 0) == (last_dir[0] == 0):
                continue
            step = []
            p = cur
            for _ in range(cap):
                p = GridPoint(p.x + d[0], p.y + d[1])
                if not (0 <= p.x < w and 0 <= p.y < h) or p in visited:
                    break
                step.append(p)
                visited.add(p)
                corners.append(p)
                yield from extend(corners, visited, d)
                corners.pop()
            for q in step:
                visited.discard(q)

    for x in range(w):
        for y in range(h):
            start = GridPoint(x, y)
            for d in dirs:
                # the first segment is chosen here so a lone start point is never emitted
                p, step = start, []
                visited = {start}
                for _ in range(cap):
                    p = GridPoint(p.x + d[0], p.y + d[1])
                    if not (0 <= p.x < w and 0 <= p.y < h):
                        break
                    step.append(p)
                    visited.add(p)
                    yield from extend([start, p], visited, d)
                for q in step:
                    visited.discard(q)


@lru_cache(maxsize=64)
def candidate_paths(b: SearchBounds) -> tuple[GridPath, ...]:
    """Every simple path inside ``b``, once per geometry, in lexicographic order."""
    shapes = {canonical_corners(c) for c in _segment_paths(b)}
    return tuple(GridPath(c) for c in sorted(shapes))


def _grid_symmetries(w: int, h: int):
    mx, my = w - 1, h - 1
    maps = [
        lambda p: p,
        lambda p: GridPoint(mx - p.x, p.y),
        lambda p: GridPoint(p.x, my - p.y),
        lambda p: GridPoint(mx - p.x, my - p.y),
    ]
    if w == h:
        maps += [
            lambda p: GridPoint(p.y, p.x),
            lambda p: GridPoint(my - p.y, p.x),
            lambda p: GridPoint(p.y, mx - p.x),
            lambda p: GridPoint(my - p.y, mx - p.x),
        ]
    return maps


def _is_symmetry_canonical(path: GridPath, b: SearchBounds) -> bool:
    own = path.corners
    for f in _grid_symmetries(b.width, b.height):
        if canonical_corners([f(c) for c in own]) < own:
            return False
    return True


# -- pair relation ---------------------------------------------------------------


def pair_relation(p: GridPath, q: GridPath) -> tuple[bool, bool]:
    """(compatible, touching) for two paths placed together."""
    if p.edge_set & q.edge_set:
        return False, True
    shared = p.point_set & q.point_set
    if not shared:
        return True, False
    pe, qe = set(p.endpoints), set(q.endpoints)
    for x in shared:
        if x not in pe and x not in qe:
            return False, True
    return True, True


@lru_cache(maxsize=64)
def _relations(b: SearchBounds) -> "_Relations":
    return _Relations(candidate_paths(b))


class _Relations:
    def __init__(self, cands: Sequence[GridPath]):
        self.cands = cands
        self.cache: dict[tuple[int, int], tuple[bool, bool]] = {}

    def get(self, a: int, b: int) -> tuple[bool, bool]:
        key = (a, b) if a < b else (b, a)
        r = self.cache.get(key)
        if r is None:
            if a == b:
                r = (False, True)
            else:
                r = pair_relation(self.cands[key[0]], self.cands[key[1]])
            self.cache[key] = r
        return r


# -- search ----------------------------------------------------------------------


class _BudgetExceeded(Exception):
    pass


def _branches(graph: LabeledGraph, b: SearchBounds) -> list[tuple[int, ...]]:
    """Top-level branches: compatible placements of the first one or two vertices."""
    order = graph.sorted_vertices()
    cands = candidate_paths(b)
    rel = _relations(b)
    firsts = [n for n, p in enumerate(cands) if _is_symmetry_canonical(p, b)]
    if len(order) == 1:
        return [(n,) for n in firsts]
    adjacent = graph.has_edge(order[0], order[1])
    out = []
    for n0 in firsts:
        for n1 in range(len(cands)):
            ok, touch = rel.get(n0, n1)
            if ok and touch == adjacent:
                out.append((n0, n1))
    return out


def _search_branch(
    graph: LabeledGraph, b: SearchBounds, prefix: tuple[int, ...], node_budget: int
) -> tuple[tuple[int, ...] | None, int]:
    """DFS below ``prefix``; returns (solution indices or None, nodes used).

    The prefix itself costs one node. Raises _BudgetExceeded past the budget.
    """
    order = graph.sorted_vertices()
    cands = candidate_paths(b)
    rel = _relations(b)
    n = len(order)
    adj = [[graph.has_edge(order[r], order[c]) for c in range(n)] for r in range(n)]
    chosen = list(prefix)
    nodes = 1
    if nodes > node_budget:
        raise _BudgetExceeded

    def dfs(depth: int) -> bool:
        nonlocal nodes
        if depth == n:
            return True
        for cand in range(len(cands)):
            for prev in range(depth):
                ok, touch = rel.get(chosen[prev], cand)
                if not ok or touch != adj[prev][depth]:
                    break
            else:
                nodes += 1
                if nodes > node_budget:
                    raise _BudgetExceeded
                chosen.append(cand)
                if dfs(depth + 1):
                    return True
                chosen.pop()
        return False

    found = dfs(len(prefix))
    return (tuple(chosen) if found else None), nodes


def _branch_worker(args):
    graph, b, prefix, budget = args
    try:
        sol, used = _search_branch(graph, b, prefix, budget)
        return sol, used, False
    except _BudgetExceeded:
        return None, budget, True


def _to_rep(graph: LabeledGraph, b: SearchBounds, sol: tuple[int, ...]) -> CpgRepresentation:
    cands = candidate_paths(b)
    order = graph.sorted_vertices()
    return CpgRepresentation({v: cands[i] for v, i in zip(order, sol)}, b.rep_bounds)


def search_representation(
    graph: LabeledGraph,
    b: SearchBounds,
    node_budget: int = DEFAULT_NODE_BUDGET,
    workers: int = 1,
) -> SearchOutcome:
    """Look for a representation of ``graph`` with at most ``b.bend_budget`` bends per path.

    Node accounting is per top-level branch and summed in branch order, so the
    outcome, including the abort point, does not depend on ``workers``.
    """
    if not graph.vertices:
        return Found(CpgRepresentation({}, b.rep_bounds))
    branches = _branches(graph, b)
    jobs = [(graph, b, pre, node_budget) for pre in branches]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_branch_worker, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        results = _lazy_results(jobs)

    spent = 0
    for sol, used, aborted in results:
        if aborted or spent + used > node_budget:
            return AbortedBudget(node_budget)
        spent += used
        if sol is not None:
            rep = _to_rep(graph, b, sol)
            # never trust the search: re-check with the contact model
            assert not validate(rep) and contact_graph(rep) == graph
            return Found(rep)
    return ExhaustedNoSolution()


def _lazy_results(jobs):
    spent = 0
    for graph, b, pre, budget in jobs:
        res = _branch_worker((graph, b, pre, budget - spent))
        sol, used, aborted = res
        if aborted:
            # report against the full budget so the merge loop sees the overflow
            yield None, budget, True
            return
        spent += used
        yield res


def min_bend_number(
    graph: LabeledGraph,
    b: SearchBounds,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_budget: int | None = None,
) -> tuple[int | None, str]:
    """Smallest bend budget admitting a representation within the grid of ``b``.

    Returns ``(value, "exact")`` when every smaller budget was exhausted,
    ``(value, "lower_bound_only")`` if some smaller level aborted, and
    ``(None, status)`` when no budget up to saturation works. Budgets stop
    growing once they no longer add candidate paths.
    """
    cap = max_budget if max_budget is not None else b.width * b.height
    exact = True
    prev_count = -1
    for t in range(cap + 1):
        bt = b.with_budget(t)
        count = len(candidate_paths(bt))
        if count == prev_count:
            break
        prev_count = count
        outcome = search_representation(graph, bt, node_budget)
        if isinstance(outcome, Found):
            return t, "exact" if exact else "lower_bound_only"
        if isinstance(outcome, AbortedBudget):
            exact = False
    return None, "exact" if exact else "lower_bound_only"


# -- unpruned oracle ---------------------------------------------------------------


def _raster_paths(w: int, h: int, budget: int, cap: int) -> list[Corners]:
    """All simple grid paths grown one unit step at a time, as corner tuples."""
    out: set[Corners] = set()

    def corners_of(walk: list[GridPoint]) -> Corners:
        cs = [walk[0]]
        for a, m, c in zip(walk, walk[1:], walk[2:]):
            if (a.x - m.x, a.y - m.y) != (m.x - c.x, m.y - c.y):
                cs.append(m)
        cs.append(walk[-1])
        return tuple(cs)

    def run_lengths_ok(walk: list[GridPoint]) -> bool:
        cs = corners_of(walk)
        return all(abs(p.x - q.x) + abs(p.y - q.y) <= cap for p, q in zip(cs, cs[1:]))

    def grow(walk: list[GridPoint]) -> None:
        if len(walk) >= 2:
            cs = corners_of(walk)
            if len(cs) - 2 > budget or not run_lengths_ok(walk):
                return
            out.add(canonical_corners(cs))
        x, y = walk[-1]
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            q = GridPoint(x + dx, y + dy)
            if 0 <= q.x < w and 0 <= q.y < h and q not in walk:
                walk.append(q)
                grow(walk)
                walk.pop()

    for x in range(w):
        for y in range(h):
            grow([GridPoint(x, y)])
    return sorted(out)


def _raster_relation(p: Corners, q: Corners) -> tuple[bool, bool]:
    def cells(cs: Corners):
        pts, edges = [cs[0]], set()
        for a, c in zip(cs, cs[1:]):
            dx = (c.x > a.x) - (c.x < a.x)
            dy = (c.y > a.y) - (c.y < a.y)
            cur = a
            while cur != c:
                nxt = GridPoint(cur.x + dx, cur.y + dy)
                edges.add(frozenset((cur, nxt)))
                pts.append(nxt)
                cur = nxt
        return pts, edges

    pp, pe = cells(p)
    qp, qe = cells(q)
    if pe & qe:
        return False, True
    shared = set(pp) & set(qp)
    ends = {p[0], p[-1], q[0], q[-1]}
    if any(x not in ends for x in shared):
        return False, bool(shared)
    return True, bool(shared)


def brute_force_search(graph: LabeledGraph, b: SearchBounds) -> tuple[Corners, ...] | None:
    """Unpruned enumeration over every tuple of paths, in lexicographic order.

    Independent of the search above: its own path generator (unit-step walks)
    and its own rasterisation. Returns the first matching corner tuple.
    """
    from itertools import product

    order = graph.sorted_vertices()
    if not order:
        return ()
    paths = _raster_paths(b.width, b.height, b.bend_budget, b.edge_cap)
    n = len(order)
    rel: dict[tuple[int, int], tuple[bool, bool]] = {}
    for i in range(len(paths)):
        for j in range(len(paths)):
            rel[(i, j)] = (False, True) if i == j else _raster_relation(paths[i], paths[j])
    pairs = [(r, c) for r in range(n) for c in range(r + 1, n)]
    want = {(r, c): graph.has_edge(order[r], order[c]) for r, c in pairs}
    for combo in product(range(len(paths)), repeat=n):
        if all(
            rel[(combo[r], combo[c])][0] and rel[(combo[r], combo[c])][1] == want[(r, c)]
            for r, c in pairs
        ):
            return tuple(paths[i] for i in combo)
    return None
