"""Hypercube-family graphs over integer vertex labels.

Vertices of the n-dimensional hypercube are the integers 0..2^n-1, with bit
j of the label holding coordinate j+1 of the binary string, so the
lexicographic segment of the vertex order is literally the interval [0, m).
The enhanced variant Q_{n,k} adds one complementary edge per vertex,
flipping the low n-k+1 bits; k=1 gives the folded hypercube.

All functions are pure and every returned value is immutable, so they are
safe to call concurrently.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, ResourceLimitError

MAX_DIMENSION = 62
MAX_BITMAP_DIMENSION = 13


@dataclass(frozen=True)
class GraphSpec:
    """Family selector: Q_n when k is None, Q_{n,k} otherwise."""

    n: int
    k: int | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or not 2 <= self.n <= MAX_DIMENSION:
            raise DomainError(f"dimension n={self.n!r} outside [2, {MAX_DIMENSION}]")
        if self.k is not None and (not isinstance(self.k, int) or not 1 <= self.k <= self.n - 1):
            raise DomainError(f"complement parameter k={self.k!r} outside [1, {self.n - 1}]")

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    @property
    def degree(self) -> int:
        """Regularity: n for the plain hypercube, n+1 with complementary edges."""
        return self.n if self.k is None else self.n + 1

    @property
    def complement_mask(self) -> int | None:
        """XOR mask of the complementary edge (flips coordinates 1..n-k+1)."""
        if self.k is None:
            return None
        return (1 << (self.n - self.k + 1)) - 1


def _check_vertex(spec: GraphSpec, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < spec.num_vertices:
        raise DomainError(f"vertex id {v!r} outside [0, 2^{spec.n})")


def _check_subset(spec: GraphSpec, members: frozenset[int]) -> None:
    for v in members:
        _check_vertex(spec, v)


def _neighbor_iter(spec: GraphSpec, v: int) -> Iterator[int]:
    for j in range(spec.n):
        yield v ^ (1 << j)
    mask = spec.complement_mask
    if mask is not None:
        yield v ^ mask


def neighbors(spec: GraphSpec, v: int) -> frozenset[int]:
    """All vertices adjacent to v; the size equals the regularity.

    The n dimension neighbors flip a single bit; the complementary neighbor,
    when k is set, flips the low n-k+1 bits at once and never coincides with
    a dimension neighbor (the mask has at least two bits for valid k).
    """
    _check_vertex(spec, v)
    return frozenset(_neighbor_iter(spec, v))


def edge_count(spec: GraphSpec) -> int:
    """Total number of edges: n*2^(n-1) plain, (n+1)*2^(n-1) enhanced."""
    return spec.degree << (spec.n - 1)


def lexicographic_set(n: int, m: int) -> frozenset[int]:
    """The first m vertices in label order, {0, ..., m-1}."""
    if not 2 <= n <= MAX_DIMENSION:
        raise DomainError(f"dimension n={n!r} outside [2, {MAX_DIMENSION}]")
    if not 1 <= m <= 1 << n:
        raise DomainError(f"cardinality m={m} outside [1, 2^{n}]")
    return frozenset(range(m))


def induced_double_edge_count(spec: GraphSpec, members: Iterable[int]) -> int:
    """Twice the number of edges of the subgraph induced by the given set."""
    members = frozenset(members)
    _check_subset(spec, members)
    return sum(1 for v in members for u in _neighbor_iter(spec, v) if u in members)


def boundary_size(spec: GraphSpec, members: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in the set.

    Equal to degree*|X| - 2|E(G[X])|; rejects the empty and full set, whose
    boundary is meaningless for cut analysis.
    """
    members = frozenset(members)
    if not members or len(members) >= spec.num_vertices:
        raise DomainError("boundary_size needs a nonempty proper subset")
    return spec.degree * len(members) - induced_double_edge_count(spec, members)


def is_connected_subset(spec: GraphSpec, members: Iterable[int]) -> bool:
    """Whether the induced subgraph is connected (empty and singleton: yes).

    Breadth-first traversal restricted to the subset by membership tests;
    nothing outside the subset is materialized.
    """
    members = frozenset(members)
    _check_subset(spec, members)
    if len(members) <= 1:
        return True
    start = next(iter(members))
    seen = {start}
    queue = deque((start,))
    while queue:
        v = queue.popleft()
        for u in _neighbor_iter(spec, v):
            if u in members and u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(members)


def adjacency_bitmap(spec: GraphSpec) -> np.ndarray:
    """Dense 2^n x 2^n 0/1 adjacency matrix (symmetric, zero diagonal).

    Vertices index both axes in label order. Refused above n=13, where the
    matrix would outgrow memory.
    """
    if spec.n > MAX_BITMAP_DIMENSION:
        raise ResourceLimitError(
            f"adjacency bitmap needs n <= {MAX_BITMAP_DIMENSION}, got n={spec.n}"
        )
    size = spec.num_vertices
    bitmap = np.zeros((size, size), dtype=np.uint8)
    for v in range(size):
        for u in _neighbor_iter(spec, v):
            bitmap[v, u] = 1
    return bitmap


def pbm_text(bitmap: np.ndarray) -> str:
    """Portable bitmap (P1) encoding of a 0/1 matrix.

    Line 1 is the magic "P1", line 2 is "W H", and line y+2 holds pixel row
    y as space-separated 0/1 digits, pixel (x, y) being the adjacency of
    vertices x and y.
    """
    height, width = bitmap.shape
    lines = ["P1", f"{width} {height}"]
    for y in range(height):
        lines.append(" ".join(str(int(v)) for v in bitmap[:, y]))
    return "\n".join(lines) + "\n"


def write_pbm(bitmap: np.ndarray, out) -> None:
    """Serialize a bitmap to a path or text stream in P1 format."""
    text = pbm_text(bitmap)
    if hasattr(out, "write"):
        out.write(text)
    else:
        Path(out).write_text(text)
