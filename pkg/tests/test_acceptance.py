import random
import subprocess
import sys
import time
from collections import Counter
from itertools import combinations

import pytest

from cpgkit import formats
from cpgkit.audit import audit_gk
from cpgkit.contact import A, LabeledGraph, VertexId, ViolationCategory, contact_graph, max_bend, validate
from cpgkit.gk import (
    GkParameters,
    alpha,
    build_representation,
    generate_gk,
    rotation_system_gk,
    sew,
    trace_faces,
)
from cpgkit.grid import GridPoint, make_path
from cpgkit.search import ExhaustedNoSolution, Found, SearchBounds, brute_force_search, search_representation

from .acceptance_log import criterion

pytestmark = pytest.mark.acceptance

KS = range(9)


def test_construction_validity():
    with criterion(1, "construction validity, k = 0..8"):
        for k in KS:
            start = time.perf_counter()
            rep = build_representation(k)
            assert validate(rep) == []
            assert contact_graph(rep) == generate_gk(k)
            assert max_bend(rep) == k + 1
            elapsed = time.perf_counter() - start
            assert elapsed < 1.0, f"k={k} took {elapsed:.2f}s"


def test_counting_identities():
    with criterion(2, "vertex and edge counts"):
        assert (len(generate_gk(0).vertices), len(generate_gk(0).edges)) == (60, 136)
        assert (len(generate_gk(1).vertices), len(generate_gk(1).edges)) == (79, 193)
        for k in KS:
            g = generate_gk(k)
            nv, ne = 22 + 19 * (k + 2), 41 + 19 * (3 * k + 5)
            assert (len(g.vertices), len(g.edges)) == (nv, ne)
            # independent recount from the raw edge list
            degree = Counter(v for e in g.sorted_edges() for v in e)
            assert len(degree) == nv
            assert sum(degree.values()) == 2 * ne


def test_planarity_certificate():
    with criterion(3, "face count 38k+78 and Euler characteristic 2"):
        for k in KS:
            g = generate_gk(k)
            f = trace_faces(g, rotation_system_gk(k))
            assert f == 38 * k + 78
            assert len(g.vertices) - len(g.edges) + f == 2


def test_audit_suite():
    with criterion(4, "audit of the canonical layouts"):
        for k in KS:
            report = audit_gk(build_representation(k), k)
            assert report.valid and report.graph_match
            assert report.pure_secondaries == {alpha(i) for i in range(1, 21)}
            assert report.observation1_ok
            assert report.claim1_ok and len(report.claim1_contacts) == 19 * (k + 1)
            lo, hi = (k + 1) // 2, (k + 2) // 2
            assert report.claim2_ok
            assert sorted(report.claim2_table) == list(range(1, 20))
            assert all(sorted(split) == [lo, hi] for split in report.claim2_table.values())
            assert report.counting_ok and report.witness[1] >= k + 1


def test_lower_bound_never_contradicted():
    with criterion(5, "max_bend >= k+1 on canonical and 100 translated layouts"):
        rng = random.Random(20240601)
        checked = 0
        for k in KS:
            report = audit_gk(build_representation(k), k)
            assert report.max_bend >= k + 1 and report.contradictions == []
        for _ in range(100):
            k = rng.randrange(9)
            dx, dy = rng.randrange(0, 40), rng.randrange(0, 40)
            rep = build_representation(k).translated(dx, dy)
            report = audit_gk(rep, k)
            assert report.valid and report.graph_match
            assert report.max_bend >= k + 1
            assert report.contradictions == []
            checked += 1
        assert checked == 100


def _categories(rep):
    return {v.category for v in validate(rep)}


def test_validator_mutations():
    with criterion(6, "five injected defects detected, no false positives"):
        for k in KS:
            assert validate(build_representation(k)) == []
        k, i = 0, 5
        rep = build_representation(k)
        p = GkParameters(k)
        # shared unit edge: sewing path laid along the vertical run of its left flank
        x = i + 1
        overlap = rep.with_path(sew(i, 1), make_path([(x, p.D - i - 1), (x, p.D - i - 2)]))
        assert ViolationCategory.EDGE_OVERLAP in _categories(overlap)
        # interior crossing: a horizontal through the vertical run of alpha(1)
        crossing = rep.with_path(sew(1, 1), make_path([(1, 10), (3, 10)]))
        found = [v for v in validate(crossing) if v.category is ViolationCategory.INTERIOR_INTERSECTION]
        assert [v.location for v in found] == [GridPoint(2, 10)]
        # deleted sewing path keeps the layout valid but loses a vertex
        report = audit_gk(rep.without(sew(i, 1)), k)
        assert report.valid and not report.graph_match
        # secondary moved one column to the right lands on its neighbour
        shifted = rep.with_path(alpha(i), rep.path(alpha(i)).translated(1, 0))
        assert ViolationCategory.EDGE_OVERLAP in _categories(shifted)
        # hub stretched past the right border
        stretched = rep.with_path(A, make_path([(1, 0), (p.W + 1, 0)]))
        assert ViolationCategory.OUT_OF_BOUNDS in _categories(stretched)


def _complete(n):
    vs = [VertexId.free(f"v{i}") for i in range(n)]
    return LabeledGraph.from_edges(vs, combinations(vs, 2))


def test_search_oracle():
    with criterion(7, "bounded search on a 3x3 grid"):
        start = time.perf_counter()
        for n in (2, 3, 4):
            g = _complete(n)
            out = search_representation(g, SearchBounds(3, 3, 0))
            assert isinstance(out, Found)
            assert validate(out.rep) == []
            assert contact_graph(out.rep) == g
            assert max_bend(out.rep) == 0
        assert time.perf_counter() - start < 60
        for n in (1, 2, 3):
            vs = [VertexId.free(f"v{i}") for i in range(n)]
            pairs = list(combinations(vs, 2))
            for mask in range(1 << len(pairs)):
                g = LabeledGraph.from_edges(vs, [e for b, e in enumerate(pairs) if mask >> b & 1])
                for budget in (0, 1):
                    b = SearchBounds(3, 3, budget)
                    out = search_representation(g, b)
                    brute = brute_force_search(g, b)
                    if brute is None:
                        assert isinstance(out, ExhaustedNoSolution)
                    else:
                        assert isinstance(out, Found)
                        assert validate(out.rep) == [] and contact_graph(out.rep) == g
                        assert tuple(out.rep.paths[v].corners for v in g.sorted_vertices()) == brute


def _cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "cpgkit", *args],
        input=stdin,
        capture_output=True,
        env={"CPG_COLOR": "0", "PATH": ""},
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_round_trip_and_determinism(tmp_path):
    with criterion(8, "file round trips and byte-identical reruns"):
        for k in (0, 3, 8):
            g = generate_gk(k)
            assert formats.load_graph(formats.dump_graph(g)) == g
            rep = build_representation(k)
            text = formats.dump_rep(rep)
            assert formats.load_rep(text) == rep
            assert formats.dump_rep(formats.load_rep(text)) == text
        rep_file = tmp_path / "r.json"
        rep_file.write_text(formats.dump_rep(build_representation(2)))
        graph_file = tmp_path / "k3.txt"
        graph_file.write_text(formats.dump_graph(_complete(3)))
        runs = [
            ("gen-graph", "--k", "2"),
            ("build-rep", "--k", "2"),
            ("validate", "--rep", str(rep_file)),
            ("audit", "--rep", str(rep_file), "--k", "2"),
            ("render", "--rep", str(rep_file), "--format", "svg"),
            ("render", "--rep", str(rep_file), "--format", "ascii"),
            ("search", "--graph", str(graph_file), "--width", "3", "--height", "3", "--bends", "0"),
            ("faces", "--k", "2"),
        ]
        for args in runs:
            first, second = _cli(*args), _cli(*args)
            assert first[0] == 0, args
            assert first == second, args
