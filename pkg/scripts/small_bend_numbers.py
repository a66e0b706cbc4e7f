"""Minimum bend budgets of a few small graphs inside a fixed grid.

    python3 scripts/small_bend_numbers.py --size 4
"""

import argparse
import time
from itertools import combinations

from cpgkit.contact import LabeledGraph, VertexId
from cpgkit.search import SearchBounds, min_bend_number


def named(n: int) -> list[VertexId]:
    return [VertexId.free(f"v{i}") for i in range(n)]


def complete(n: int) -> LabeledGraph:
    vs = named(n)
    return LabeledGraph.from_edges(vs, combinations(vs, 2))


def cycle(n: int) -> LabeledGraph:
    vs = named(n)
    return LabeledGraph.from_edges(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def star(n: int) -> LabeledGraph:
    vs = named(n + 1)
    return LabeledGraph.from_edges(vs, [(vs[0], v) for v in vs[1:]])


GRAPHS = {
    "K2": complete(2),
    "K3": complete(3),
    "K4": complete(4),
    "C4": cycle(4),
    "C5": cycle(5),
    "star5": star(5),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=3, help="grid points per side")
    parser.add_argument("--max-budget", type=int, default=2)
    parser.add_argument("--node-budget", type=int, default=10**6)
    args = parser.parse_args()

    for name, g in GRAPHS.items():
        start = time.perf_counter()
        b = SearchBounds(args.size, args.size, 0)
        value, status = min_bend_number(g, b, node_budget=args.node_budget, max_budget=args.max_budget)
        shown = "none" if value is None else str(value)
        print(f"{name:>6}: {shown:>4} ({status}) in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
