"""Mechanical checks of the structural lower-bound argument on a G_k layout.

The audit does not prove anything about G_k in general. It evaluates the
conclusions the lower-bound argument draws (purity, endpoint placement, type
II.b contacts between consecutive sewing paths, the per-gadget split of
bends, and the existence of a path with k+1 bends) on one concrete
representation. On a valid representation of G_k every one of them must
hold; a failure there is recorded as a contradiction rather than ignored.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .contact import (
    A,
    B,
    CpgRepresentation,
    PointClass,
    PointKind,
    VertexId,
    classify_grid_point,
    contact_graph,
    pure_members,
    validate,
)
from .gk import N_GADGET, N_SECONDARY, alpha, generate_gk, sew
from .grid import GridPoint

log = logging.getLogger(__name__)


class VertexSetMismatch(ValueError):
    pass


@dataclass
class AuditReport:
    k: int
    valid: bool = False
    graph_match: bool = False
    per_path_bends: dict[VertexId, int] = field(default_factory=dict)
    pure_secondaries: set[VertexId] = field(default_factory=set)
    observation1_ok: bool = False
    claim1_contacts: list[tuple[int, GridPoint, PointClass]] = field(default_factory=list)
    claim1_ok: bool = False
    claim2_table: dict[int, tuple[int, int]] = field(default_factory=dict)
    claim2_ok: bool = False
    counting_ok: bool = False
    witness: tuple[VertexId, int] | None = None
    contradictions: list[str] = field(default_factory=list)
    details: list[str] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return (
            self.valid
            and self.graph_match
            and self.observation1_ok
            and self.claim1_ok
            and self.claim2_ok
            and self.counting_ok
        )

    @property
    def max_bend(self) -> int:
        return max(self.per_path_bends.values(), default=0)


def _check_vertices(rep: CpgRepresentation, k: int) -> None:
    expected = generate_gk(k).vertices
    foreign = rep.vertices - expected
    if foreign:
        names = ", ".join(str(v) for v in sorted(foreign)[:5])
        raise VertexSetMismatch(f"vertices not in G_{k}: {names}")
    if A not in rep.paths or B not in rep.paths:
        raise VertexSetMismatch("both hub paths are required")


def audit_gk(rep: CpgRepresentation, k: int) -> AuditReport:
    """Evaluate every structural conclusion on ``rep``.

    Missing G_k vertices are tolerated (they only make ``graph_match`` false);
    labels outside G_k raise :class:`VertexSetMismatch`.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    _check_vertices(rep, k)
    report = AuditReport(k=k)
    report.per_path_bends = {v: p.bend_count for v, p in rep.paths.items()}

    violations = validate(rep)
    report.valid = not violations
    if not report.valid:
        report.details.append(f"{len(violations)} violation(s); first: {violations[0]}")
        return report
    report.graph_match = contact_graph(rep) == generate_gk(k)
    if not report.graph_match:
        missing = generate_gk(k).vertices - rep.vertices
        report.details.append(
            f"contact graph differs from G_{k}" + (f" ({len(missing)} missing paths)" if missing else "")
        )

    secondaries = [alpha(i) for i in range(1, N_SECONDARY + 1) if alpha(i) in rep.paths]
    report.pure_secondaries = pure_members(rep, {A, B}, secondaries)
    pa, pb = rep.paths[A].point_set, rep.paths[B].point_set

    obs_failures = []
    for s in sorted(report.pure_secondaries):
        e0, e1 = rep.paths[s].endpoints
        if not ((e0 in pa and e1 in pb) or (e0 in pb and e1 in pa)):
            obs_failures.append(s)
    report.observation1_ok = not obs_failures
    for s in obs_failures:
        report.details.append(f"observation 1 fails for pure {s}")

    gadgets = [
        i
        for i in range(1, N_GADGET + 1)
        if alpha(i) in report.pure_secondaries and alpha(i + 1) in report.pure_secondaries
    ]
    report.claim1_ok = _check_claim1(rep, k, gadgets, report)
    report.claim2_ok = _check_claim2(rep, k, gadgets, report)
    _check_counting(rep, k, report)

    if report.graph_match:
        _record_contradictions(report)
    return report


def _chain(rep: CpgRepresentation, i: int, k: int) -> list[VertexId]:
    return [sew(i, j) for j in range(1, k + 3) if sew(i, j) in rep.paths]


def _check_claim1(rep: CpgRepresentation, k: int, gadgets: list[int], report: AuditReport) -> bool:
    ok = True
    for i in gadgets:
        flanks = (rep.paths[alpha(i)], rep.paths[alpha(i + 1)])
        for j in range(1, k + 2):
            u, v = sew(i, j), sew(i, j + 1)
            if u not in rep.paths or v not in rep.paths:
                continue
            shared = sorted(rep.paths[u].point_set & rep.paths[v].point_set)
            for x in shared:
                pc = classify_grid_point(rep, x)
                report.claim1_contacts.append((i, x, pc))
                on_flank_bend = any(x in f.bends for f in flanks)
                if pc.kind is not PointKind.TYPE_IIB or not on_flank_bend:
                    ok = False
                    report.details.append(
                        f"claim 1: {u}/{v} meet at ({x.x},{x.y}) as {pc.kind.value}"
                    )
    return ok


def attributed_bends(rep: CpgRepresentation, flank: VertexId, i: int, k: int) -> set[GridPoint]:
    """Bends of ``flank`` that are endpoints of gadget-``i`` sewing paths."""
    ends = {e for s in _chain(rep, i, k) for e in rep.paths[s].endpoints}
    return set(rep.paths[flank].bends) & ends


def _check_claim2(rep: CpgRepresentation, k: int, gadgets: list[int], report: AuditReport) -> bool:
    lo, hi = (k + 1) // 2, (k + 2) // 2
    ok = True
    for i in gadgets:
        c_left = len(attributed_bends(rep, alpha(i), i, k))
        c_right = len(attributed_bends(rep, alpha(i + 1), i, k))
        report.claim2_table[i] = (c_left, c_right)
        if min(c_left, c_right) < lo or max(c_left, c_right) < hi:
            ok = False
            report.details.append(f"claim 2: gadget {i} split ({c_left},{c_right}) below ({lo},{hi})")
    return ok


def _four_pure_run(pure: set[VertexId]) -> int | None:
    for j in range(1, N_SECONDARY - 2):
        if all(alpha(j + d) in pure for d in range(4)):
            return j
    return None


def _check_counting(rep: CpgRepresentation, k: int, report: AuditReport) -> None:
    """Locate a path with at least k+1 bends, preferring the argument's witness.

    With four consecutive pure secondaries alpha_j..alpha_{j+3}, the middle
    two collect bends from their two gadgets; whichever collects at least
    k+1 distinct attributed bends is the witness.
    """
    need = k + 1
    impure = N_SECONDARY - len(report.pure_secondaries)
    if impure > 4:
        report.details.append(f"{impure} impure secondaries (at most 4 expected)")
    j = _four_pure_run(report.pure_secondaries)
    if j is not None:
        for mid, (g1, g2) in ((alpha(j + 1), (j, j + 1)), (alpha(j + 2), (j + 1, j + 2))):
            bends = attributed_bends(rep, mid, g1, k) | attributed_bends(rep, mid, g2, k)
            if len(bends) >= need:
                report.witness = (mid, rep.paths[mid].bend_count)
                report.details.append(
                    f"witness {mid}: {len(bends)} bends attributed to gadgets {g1},{g2}"
                )
                break
    if report.witness is None:
        # max() keeps the first of equal counts, i.e. the smallest label
        best = max(sorted(report.per_path_bends.items()), key=lambda t: t[1], default=None)
        if best is not None and best[1] >= need:
            report.witness = best
            report.details.append(f"witness {best[0]} by direct bend count")
    report.counting_ok = report.witness is not None and report.witness[1] >= need


def _record_contradictions(report: AuditReport) -> None:
    k = report.k
    checks = {
        "max_bend >= k+1": report.max_bend >= k + 1,
        "at most 4 impure secondaries": len(report.pure_secondaries) >= N_SECONDARY - 4,
        "observation 1": report.observation1_ok,
        "claim 1": report.claim1_ok,
        "claim 2": report.claim2_ok,
        "counting argument": report.counting_ok,
    }
    for name, holds in checks.items():
        if not holds:
            msg = f"valid representation of G_{k} violates {name}"
            report.contradictions.append(msg)
            log.error("counterexample to the lower bound: %s", msg)


def format_report(report: AuditReport) -> str:
    lines = [
        f"audit k={report.k}",
        f"valid: {str(report.valid).lower()}",
        f"graph_match: {str(report.graph_match).lower()}",
        f"max_bend: {report.max_bend}",
        f"pure_secondaries: {len(report.pure_secondaries)}"
        + (" " + " ".join(str(v) for v in sorted(report.pure_secondaries)) if report.pure_secondaries else ""),
        f"observation1_ok: {str(report.observation1_ok).lower()}",
        f"claim1_contacts: {len(report.claim1_contacts)}",
        f"claim1_ok: {str(report.claim1_ok).lower()}",
        f"claim2_ok: {str(report.claim2_ok).lower()}",
    ]
    for i, (cl, cr) in sorted(report.claim2_table.items()):
        lines.append(f"claim2 gadget {i}: left={cl} right={cr}")
    lines.append(f"counting_ok: {str(report.counting_ok).lower()}")
    if report.witness is not None:
        lines.append(f"witness: {report.witness[0]} bends={report.witness[1]}")
    for c in report.contradictions:
        lines.append(f"CONTRADICTION: {c}")
    for d in report.details:
        lines.append(f"# {d}")
    return "\n".join(lines) + "\n"
