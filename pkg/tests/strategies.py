from __future__ import annotations

from hypothesis import strategies as st

from cpgkit.contact import CpgRepresentation, VertexId
from cpgkit.grid import GridPath, PathError, make_path

DIRS = ((1, 0), (-1, 0), (0, 1), (0, -1))


@st.composite
def corner_lists(draw, size: int = 8, max_segments: int = 5, lo: int = 0):
    """Raw corner lists from a random walk of axis-aligned segments (may be invalid)."""
    hi = lo + size - 1
    x = draw(st.integers(lo, hi))
    y = draw(st.integers(lo, hi))
    corners = [(x, y)]
    for _ in range(draw(st.integers(1, max_segments))):
        dx, dy = draw(st.sampled_from(DIRS))
        n = draw(st.integers(1, size - 1))
        x, y = x + dx * n, y + dy * n
        corners.append((x, y))
    return corners


@st.composite
def grid_paths(draw, size: int = 8, max_segments: int = 5, lo: int = 0) -> GridPath:
    corners = draw(corner_lists(size=size, max_segments=max_segments, lo=lo))
    try:
        return make_path(corners)
    except PathError:
        # fall back to the first segment, which is always a valid path
        return make_path(corners[:2])


@st.composite
def representations(draw, max_paths: int = 5, size: int = 8) -> CpgRepresentation:
    n = draw(st.integers(1, max_paths))
    paths = {
        VertexId.free(f"p{i}"): draw(grid_paths(size=size, max_segments=3, lo=-1))
        for i in range(n)
    }
    return CpgRepresentation(paths, (size - 1, size - 1))
