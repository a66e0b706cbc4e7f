"""Build, validate, audit and face-count G_k for a range of k, with timings.

    python3 scripts/sweep_gk.py --kmax 8
"""

import argparse
import time

from cpgkit.audit import audit_gk
from cpgkit.contact import max_bend, validate
from cpgkit.gk import build_representation, generate_gk, rotation_system_gk, trace_faces


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kmax", type=int, default=8)
    args = parser.parse_args()

    print(f"{'k':>2} {'|V|':>5} {'|E|':>5} {'F':>5} {'bends':>5} {'split':>7} {'audit':>5} {'sec':>6}")
    for k in range(args.kmax + 1):
        start = time.perf_counter()
        g = generate_gk(k)
        rep = build_representation(k)
        assert validate(rep) == []
        report = audit_gk(rep, k)
        faces = trace_faces(g, rotation_system_gk(k))
        elapsed = time.perf_counter() - start
        splits = sorted(set(report.claim2_table.values()))
        split = ",".join(f"{a}/{b}" for a, b in splits)
        print(
            f"{k:>2} {len(g.vertices):>5} {len(g.edges):>5} {faces:>5} {max_bend(rep):>5}"
            f" {split:>7} {'ok' if report.all_ok else 'FAIL':>5} {elapsed:>6.3f}"
        )


if __name__ == "__main__":
    main()
