from collections import defaultdict
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cpgkit.contact import (
    A,
    B,
    InvalidRepresentation,
    LabeledGraph,
    PointKind,
    UnknownVertex,
    VertexId,
    ViolationCategory,
    classify_grid_point,
    contact_graph,
    max_bend,
    pure_members,
    validate,
)
from cpgkit.contact import CpgRepresentation as Rep
from cpgkit.gk import GkParameters, alpha, build_representation
from cpgkit.grid import GridPoint, MembershipClass, make_path

from .strategies import representations

P = GridPoint
v1, v2, v3, v4 = (VertexId.free(n) for n in ("p1", "p2", "p3", "p4"))


def rep(bounds=(4, 4), **paths):
    return Rep({VertexId.free(k): make_path(c) for k, c in paths.items()}, bounds)


def test_vertex_id_round_trip_and_order():
    ids = [A, VertexId.alpha(2), VertexId.alpha(10), VertexId.sew(3, 1), VertexId.free("x")]
    assert sorted(reversed(ids))[:3] == [A, VertexId.alpha(2), VertexId.alpha(10)]
    for v in ids:
        assert VertexId.parse(str(v)) == v
    with pytest.raises(ValueError):
        VertexId.parse("alpha:x")


def test_graph_rejects_loops_and_undeclared_endpoints():
    with pytest.raises(ValueError):
        LabeledGraph.from_edges([v1], [(v1, v1)])
    with pytest.raises(ValueError):
        LabeledGraph.from_edges([v1], [(v1, v2)])


# -- validate -----------------------------------------------------------------


def test_shared_unit_edge_is_reported_once():
    r = rep(p1=[(0, 0), (1, 0)], p2=[(0, 0), (2, 0)])
    out = validate(r)
    assert [(v.category, v.location) for v in out] == [
        (ViolationCategory.EDGE_OVERLAP, (P(0, 0), P(1, 0)))
    ]


def test_crossing_interiors():
    out = validate(rep(p1=[(0, 1), (2, 1)], p2=[(1, 0), (1, 2)]))
    assert len(out) == 1
    assert out[0].category is ViolationCategory.INTERIOR_INTERSECTION
    assert out[0].location == P(1, 1)
    assert out[0].witnesses == (v1, v2)


def test_out_of_bounds_and_duplicates():
    out = validate(rep(p1=[(0, 0), (0, 6)], p2=[(3, 3), (3, 4)], p3=[(3, 4), (3, 3)]))
    cats = sorted(v.category.value for v in out)
    assert cats == ["DuplicateVertex", "OutOfBounds"]


def test_violation_order_is_deterministic():
    r = rep(p1=[(0, 1), (4, 1)], p2=[(1, 0), (1, 2)], p3=[(3, 0), (3, 2)])
    out = validate(r)
    assert [v.location for v in out] == [P(1, 1), P(3, 1)]
    assert validate(r) == out


def test_endpoint_on_endpoint_is_legal():
    assert validate(rep(p1=[(0, 0), (1, 0)], p2=[(1, 0), (1, 1)])) == []


def test_canonical_layout_for_k0_matches_hand_coordinates():
    # written out by hand for k = 0 (W = H = 24, D = 22)
    hand = {A: make_path([(1, 0), (24, 0)]), B: make_path([(24, 0), (24, 24)])}
    for i in range(1, 21):
        hand[VertexId.alpha(i)] = make_path([(i + 1, 0), (i + 1, 22 - i), (24, 22 - i)])
    for i in range(1, 20):
        hand[VertexId.sew(i, 1)] = make_path([(i + 1, 21 - i), (i + 2, 21 - i)])
        hand[VertexId.sew(i, 2)] = make_path([(i + 2, 21 - i), (i + 2, 22 - i)])
    hand_rep = Rep(hand, (24, 24))
    assert validate(hand_rep) == []
    assert hand_rep == build_representation(0)


@pytest.mark.parametrize("k", range(9))
def test_canonical_layouts_validate(k):
    assert validate(build_representation(k)) == []


# -- contact_graph ----------------------------------------------------------------


def test_two_touching_segments():
    g = contact_graph(rep(p1=[(0, 0), (1, 0)], p2=[(1, 0), (1, 1)]))
    assert g.vertices == {v1, v2}
    assert g.edges == {frozenset((v1, v2))}


def test_four_arms_give_k4():
    r = rep(
        p1=[(1, 1), (1, 2)], p2=[(1, 1), (2, 1)], p3=[(1, 1), (1, 0)], p4=[(1, 1), (0, 1)]
    )
    g = contact_graph(r)
    assert len(g.edges) == 6


def test_multiple_contacts_collapse_to_one_edge():
    # p2 touches p1 at both ends
    r = rep(p1=[(0, 0), (4, 0)], p2=[(1, 0), (1, 2), (3, 2), (3, 0)])
    assert contact_graph(r).edges == {frozenset((v1, v2))}


def test_contact_graph_requires_validity():
    with pytest.raises(InvalidRepresentation):
        contact_graph(rep(p1=[(0, 1), (2, 1)], p2=[(1, 0), (1, 2)]))


# -- classify_grid_point ----------------------------------------------------------


def test_type_iia():
    r = rep(p3=[(1, 0), (1, 2)], p1=[(1, 1), (2, 1)], p2=[(0, 1), (1, 1)])
    pc = classify_grid_point(r, P(1, 1))
    assert pc.kind is PointKind.TYPE_IIA
    assert dict(pc.constituents)[v3] is MembershipClass.INTERIOR_STRAIGHT


def test_type_iib():
    r = rep(p3=[(1, 2), (1, 1), (2, 1)], p1=[(1, 0), (1, 1)], p2=[(0, 1), (1, 1)])
    pc = classify_grid_point(r, P(1, 1))
    assert pc.kind is PointKind.TYPE_IIB
    assert pc.members(MembershipClass.BEND) == [v3]


def test_free_and_plain_points():
    r = rep(p1=[(0, 0), (0, 2)], p2=[(0, 1), (2, 1)])
    assert classify_grid_point(r, P(4, 4)).kind is PointKind.FREE_POINT
    assert classify_grid_point(r, P(0, 1)).kind is PointKind.PLAIN_CONTACT
    assert classify_grid_point(r, P(0, 2)).kind is PointKind.FREE_POINT


def test_three_endpoints_is_other():
    r = rep(p1=[(1, 1), (1, 2)], p2=[(1, 1), (2, 1)], p3=[(1, 1), (1, 0)])
    assert classify_grid_point(r, P(1, 1)).kind is PointKind.OTHER


# -- max_bend / purity --------------------------------------------------------------


def test_max_bend_examples():
    assert max_bend(rep(p1=[(0, 0), (0, 3)], p2=[(1, 0), (3, 0)])) == 0
    assert max_bend(rep(p1=[(0, 0), (0, 2), (3, 2)])) == 1
    assert max_bend(Rep({}, (1, 1))) == 0
    for k in range(9):
        assert max_bend(build_representation(k)) == k + 1


SECONDARIES = [alpha(i) for i in range(1, 21)]


def test_all_secondaries_pure_in_canonical_layout():
    for k in (0, 1, 4):
        assert pure_members(build_representation(k), {A, B}, SECONDARIES) == set(
            SECONDARIES
        )


def test_moving_the_hub_endpoint_onto_alpha1():
    r = build_representation(2)
    W = GkParameters(2).W
    moved = r.with_path(A, make_path([(2, 0), (W, 0)]))
    assert validate(moved) == []
    pure = pure_members(moved, {A, B}, SECONDARIES)
    assert len(pure) == 19 and alpha(1) not in pure


def test_empty_hubs_keep_every_target():
    assert pure_members(build_representation(0), set(), SECONDARIES) == set(SECONDARIES)


def test_unknown_vertex():
    with pytest.raises(UnknownVertex):
        pure_members(build_representation(0), {VertexId.free("zz")}, SECONDARIES)


# -- properties ------------------------------------------------------------------------


def naive_violations(r: Rep) -> set[tuple]:
    """Rasterise every path by unit steps and apply the two disjointness rules directly."""
    w, h = r.bounds
    points = defaultdict(list)
    edges = defaultdict(list)
    shapes = {}
    out = set()
    for v, path in r.paths.items():
        cs = path.corners
        walk = [cs[0]]
        for a, b in zip(cs, cs[1:]):
            sx, sy = (b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)
            while walk[-1] != b:
                walk.append(P(walk[-1].x + sx, walk[-1].y + sy))
        shapes[v] = frozenset(walk)
        if any(not (0 <= p.x <= w and 0 <= p.y <= h) for p in walk):
            out.add(("OutOfBounds", v))
        for n, p in enumerate(walk):
            points[p].append((v, n in (0, len(walk) - 1)))
        for a, b in zip(walk, walk[1:]):
            edges[frozenset((a, b))].append(v)
    dup = {
        (u, v)
        for u, v in combinations(sorted(r.paths), 2)
        if shapes[u] == shapes[v]
    }
    out |= {("DuplicateVertex", u, v) for u, v in dup}
    for e, owners in edges.items():
        for u, v in combinations(sorted(owners), 2):
            if (u, v) not in dup:
                out.add(("EdgeOverlap", e, u, v))
    for p, owners in points.items():
        for (u, ue), (v, ve) in combinations(sorted(owners), 2):
            if (u, v) not in dup and not ue and not ve:
                out.add(("InteriorIntersection", p, u, v))
    return out


def as_naive(violations) -> set[tuple]:
    out = set()
    for v in violations:
        c = v.category.value
        if c == "OutOfBounds":
            out.add((c, v.witnesses[0]))
        elif c == "EdgeOverlap":
            out.add((c, frozenset(v.location), *v.witnesses))
        else:
            out.add((c, *(() if c == "DuplicateVertex" else (v.location,)), *v.witnesses))
    return out


@settings(max_examples=300)
@given(representations(max_paths=5, size=8))
def test_validator_agrees_with_naive_oracle(r):
    got = validate(r)
    assert as_naive(got) == naive_violations(r)
    assert len(got) == len(as_naive(got))  # each breach exactly once


@given(representations(max_paths=5, size=8))
def test_point_classes_partition_the_grid(r):
    if validate(r):
        return
    w, h = r.bounds
    endpoint_total = 0
    for x in range(w + 1):
        for y in range(h + 1):
            pc = classify_grid_point(r, P(x, y))
            endpoint_total += len(pc.members(MembershipClass.ENDPOINT))
            n = len(pc.constituents)
            assert (pc.kind is PointKind.FREE_POINT) == (n <= 1)
    assert endpoint_total == 2 * len(r.paths)


@given(representations(max_paths=5, size=8))
def test_contact_edges_are_witnessed_by_an_endpoint(r):
    if validate(r):
        return
    for e in contact_graph(r).edges:
        u, v = sorted(e)
        shared = r.paths[u].point_set & r.paths[v].point_set
        assert any(
            p in r.paths[u].endpoints or p in r.paths[v].endpoints for p in shared
        )


@given(representations(max_paths=5, size=8), st.integers(0, 20), st.integers(0, 20))
def test_max_bend_is_translation_invariant(r, dx, dy):
    assert max_bend(r.translated(dx, dy)) == max_bend(r)
