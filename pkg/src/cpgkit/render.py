"""SVG and ASCII drawings of representations.

SVG polylines carry the file coordinates scaled by ``cell_size``; the y-axis
flip to screen coordinates is done by a group transform, so the numbers in
each ``points`` attribute are exactly ``corner * cell_size``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .contact import CpgRepresentation, VertexId, VertexKind
from .grid import MembershipClass

DEFAULT_COLORS = {
    "hub": "#000000",
    "secondary": "#d62728",
    "sewing": "#17becf",
    "free": "#555555",
}


def path_class(v: VertexId) -> str:
    if v.kind in (VertexKind.A, VertexKind.B):
        return "hub"
    if v.kind is VertexKind.ALPHA:
        return "secondary"
    if v.kind is VertexKind.SEW:
        return "sewing"
    return "free"


@dataclass(frozen=True)
class RenderOptions:
    format: str = "svg"
    cell_size: int = 20
    endpoint_markers: bool = True
    colors: dict[str, str] = field(default_factory=lambda: dict(DEFAULT_COLORS))

    def __post_init__(self) -> None:
        if self.format not in ("svg", "ascii"):
            raise ValueError(f"unknown render format {self.format!r}")
        if self.format == "svg" and self.cell_size < 4:
            raise ValueError("cell_size must be at least 4 for svg")


def render(rep: CpgRepresentation, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    return render_svg(rep, opts) if opts.format == "svg" else render_ascii(rep)


def render_svg(rep: CpgRepresentation, opts: RenderOptions) -> str:
    cs = opts.cell_size
    w, h = rep.bounds
    margin = cs
    width, height = w * cs + 2 * margin, h * cs + 2 * margin
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    if opts.endpoint_markers:
        out.append("<defs>")
        for cls, color in sorted(opts.colors.items()):
            out.append(
                f'<marker id="arrow-{cls}" viewBox="0 0 10 10" refX="10" refY="5" '
                f'markerWidth="4" markerHeight="4" orient="auto-start-reverse">'
                f'<path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>'
            )
        out.append("</defs>")
    out.append(f'<g transform="matrix(1 0 0 -1 {margin} {h * cs + margin})" fill="none">')
    for v, path in rep.paths.items():
        cls = path_class(v)
        pts = " ".join(f"{c.x * cs},{c.y * cs}" for c in path.corners)
        marker = (
            f' marker-start="url(#arrow-{cls})" marker-end="url(#arrow-{cls})"'
            if opts.endpoint_markers
            else ""
        )
        out.append(
            f'<polyline data-id="{v}" class="{cls}" points="{pts}" '
            f'stroke="{opts.colors.get(cls, "#000000")}" stroke-width="2"{marker}/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_ascii(rep: CpgRepresentation) -> str:
    """One character per grid point, top row first.

    ``.`` free, ``-``/``|`` straight interior, ``+`` bend, ``o`` endpoint,
    ``*`` any point shared by two or more paths.
    """
    w, h = rep.bounds
    index = rep.point_index
    rows = []
    for y in range(h, -1, -1):
        row = []
        for x in range(w + 1):
            entries = index.get((x, y), [])
            if not entries:
                row.append(".")
            elif len(entries) > 1:
                row.append("*")
            else:
                v, m = entries[0]
                if m is MembershipClass.ENDPOINT:
                    row.append("o")
                elif m is MembershipClass.BEND:
                    row.append("+")
                else:
                    horiz = ((x - 1, y), (x, y)) in rep.paths[v].edge_set
                    row.append("-" if horiz else "|")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"
