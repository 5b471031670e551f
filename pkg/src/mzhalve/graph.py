"""Division graphs by two.

``build(x, k)`` runs ``k`` halvings of ``x`` and turns every digit touched on
the way into a vertex.  A vertex is identified by ``(row, kind, index)``:

* ``Kind.RESULT`` vertices hold the digits of result row ``row``, where row 0
  is ``x`` itself;
* ``Kind.FLOOR`` / ``Kind.FRACTION`` vertices hold the ``b_j`` / ``t_j`` pair
  of the halving step that produces result row ``row`` from row ``row - 1``.

``index`` counts digit positions from the least significant end.  Each step
wires ``a_j - b_j``, ``a_j - t_j``, ``b_j - c_{j+1}`` and ``t_j - c_j``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

from .core import DigitString, as_digit_string, iter_rows

MAX_BRUTEFORCE_ORDER = 200


class Kind(enum.Enum):
    RESULT = "result"
    FLOOR = "floor"
    FRACTION = "fraction"


class VertexId(NamedTuple):
    row: int
    kind: Kind
    index: int

    def token(self) -> str:
        return f"{self.row}:{self.kind.value}:{self.index}"


class GraphTooLargeError(ValueError):
    """Raised when an exhaustive search is refused because the graph is too big."""


@dataclass(frozen=True)
class DgbtGraph:
    """Labelled division graph ``G_k(x)``.  Treat as read-only."""

    x: DigitString
    k: int
    labels: Mapping[VertexId, int] = field(repr=False)
    adjacency: Mapping[VertexId, frozenset[VertexId]] = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.x)

    def vertices(self) -> Iterator[VertexId]:
        return iter(self.labels)

    def edges(self) -> Iterator[tuple[VertexId, VertexId]]:
        """Each undirected edge once, in vertex insertion order."""
        order = {v: i for i, v in enumerate(self.labels)}
        for u, nbrs in self.adjacency.items():
            for v in sorted(nbrs, key=order.__getitem__):
                if order[u] < order[v]:
                    yield u, v

    def degree(self, v: VertexId) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class BinaryGraph(DgbtGraph):
    """``BG_k(x)``: the same graph with every label reduced mod 2."""


def build(x: DigitString | str, k: int) -> DgbtGraph:
    x = as_digit_string(x)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    labels: dict[VertexId, int] = {}
    adj: dict[VertexId, set[VertexId]] = {}

    def add_vertex(v: VertexId, label: int) -> None:
        labels[v] = label
        adj[v] = set()

    def add_edge(u: VertexId, v: VertexId) -> None:
        adj[u].add(v)
        adj[v].add(u)

    R, F, T = Kind.RESULT, Kind.FLOOR, Kind.FRACTION
    rows = iter_rows(x, k)
    prev = next(rows)
    d = len(x)
    for i, digit in enumerate(reversed(prev)):
        add_vertex(VertexId(0, R, i), digit)

    for r, cur in enumerate(rows, start=1):
        m = d + r - 1
        for j, a in enumerate(reversed(prev)):
            add_vertex(VertexId(r, F, j), a >> 1)
            add_vertex(VertexId(r, T, j), 5 * (a & 1))
        for i, c in enumerate(reversed(cur)):
            add_vertex(VertexId(r, R, i), c)
        for j in range(m):
            a = VertexId(r - 1, R, j)
            b = VertexId(r, F, j)
            t = VertexId(r, T, j)
            add_edge(a, b)
            add_edge(a, t)
            add_edge(b, VertexId(r, R, j + 1))
            add_edge(t, VertexId(r, R, j))
        prev = cur

    return DgbtGraph(x, k, labels, {v: frozenset(n) for v, n in adj.items()})


def row(g: DgbtGraph, r: int) -> DigitString:
    """Result row ``r`` of ``g``, most significant digit first."""
    if not 0 <= r <= g.k:
        raise IndexError(f"row {r} outside 0..{g.k}")
    width = g.d + r
    return DigitString._trusted(
        g.labels[VertexId(r, Kind.RESULT, i)] for i in reversed(range(width))
    )


def pair_row(g: DgbtGraph, r: int) -> list[tuple[int, int]]:
    """``(b_j, t_j)`` labels of step ``r``, most significant position first."""
    if not 1 <= r <= g.k:
        raise IndexError(f"step {r} outside 1..{g.k}")
    width = g.d + r - 1
    return [
        (g.labels[VertexId(r, Kind.FLOOR, j)], g.labels[VertexId(r, Kind.FRACTION, j)])
        for j in reversed(range(width))
    ]


def order(g: DgbtGraph) -> int:
    return len(g.labels)


def edge_count(g: DgbtGraph) -> int:
    return sum(len(n) for n in g.adjacency.values()) // 2


def expected_order(d: int, k: int) -> int:
    return (3 * k + 1) * d + k * (3 * k - 1) // 2


def expected_edge_count(d: int, k: int) -> int:
    return 4 * k * d + 2 * k * (k - 1)


def expected_c8(d: int, k: int) -> int:
    if k < 2:
        return 0
    return (k - 1) * (2 * d + k - 2) // 2


def is_connected(g: DgbtGraph) -> bool:
    start = next(iter(g.adjacency), None)
    if start is None:
        return True
    seen = {start}
    stack = [start]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(g.adjacency)


def count_leaves(g: DgbtGraph) -> int:
    """Number of degree-1 vertices.

    For ``k = 0`` every vertex is isolated (degree 0), so the count is 0.
    """
    return sum(1 for n in g.adjacency.values() if len(n) == 1)


def leaves(g: DgbtGraph) -> list[VertexId]:
    return [v for v, n in g.adjacency.items() if len(n) == 1]


def is_path(g: DgbtGraph) -> bool:
    degrees = [len(n) for n in g.adjacency.values()]
    if degrees.count(1) != 2:
        return False
    if any(deg not in (1, 2) for deg in degrees):
        return False
    return is_connected(g)


def _c8_site(r: int, j: int) -> list[VertexId]:
    # a_j -> b_j -> c_{j+1} -> t'_{j+1} -> c'_{j+1} -> b'_j -> c_j -> t_j
    R, F, T = Kind.RESULT, Kind.FLOOR, Kind.FRACTION
    return [
        VertexId(r - 1, R, j),
        VertexId(r, F, j),
        VertexId(r, R, j + 1),
        VertexId(r + 1, T, j + 1),
        VertexId(r + 1, R, j + 1),
        VertexId(r + 1, F, j),
        VertexId(r, R, j),
        VertexId(r, T, j),
    ]


def c8_sites(g: DgbtGraph) -> Iterator[list[VertexId]]:
    """The 8-cycles formed by two consecutive steps over one digit position.

    Each site is checked against the actual adjacency and skipped if any of
    its edges is missing.
    """
    for r in range(1, g.k):
        for j in range(g.d + r - 1):
            cycle = _c8_site(r, j)
            if all(
                w in g.adjacency.get(v, ()) for v, w in zip(cycle, cycle[1:] + cycle[:1])
            ):
                yield cycle


def count_c8_structural(g: DgbtGraph) -> int:
    return sum(1 for _ in c8_sites(g))


def iter_cycles_of_length(g: DgbtGraph, length: int) -> Iterator[tuple[VertexId, ...]]:
    """All simple cycles with exactly ``length`` vertices, each reported once.

    A cycle is reported from its smallest vertex (in insertion order) and in
    the direction whose second vertex is smaller than its last.
    """
    if length < 3:
        return
    verts = list(g.labels)
    rank = {v: i for i, v in enumerate(verts)}
    nbrs = [sorted(rank[w] for w in g.adjacency[v]) for v in verts]

    for start in range(len(verts)):
        path = [start]
        on_path = {start}
        # stack of neighbour iterators, one per path vertex
        stack = [iter(nbrs[start])]
        while stack:
            for w in stack[-1]:
                if w == start and len(path) == length and path[1] < path[-1]:
                    yield tuple(verts[i] for i in path)
                if w <= start or w in on_path or len(path) >= length:
                    continue
                path.append(w)
                on_path.add(w)
                stack.append(iter(nbrs[w]))
                break
            else:
                stack.pop()
                on_path.discard(path.pop())


def count_8cycles_bruteforce(g: DgbtGraph, max_order: int = MAX_BRUTEFORCE_ORDER) -> int:
    """Exhaustively count simple 8-cycles.  Refuses graphs above ``max_order``."""
    if order(g) > max_order:
        raise GraphTooLargeError(
            f"graph has {order(g)} vertices; exhaustive search limited to {max_order}"
        )
    return sum(1 for _ in iter_cycles_of_length(g, 8))


def binarize(g: DgbtGraph) -> BinaryGraph:
    return BinaryGraph(g.x, g.k, {v: lab & 1 for v, lab in g.labels.items()}, g.adjacency)


def to_adjacency_text(g: DgbtGraph) -> str:
    """One line per vertex: ``row:kind:index label neighbour...``."""
    order_ = {v: i for i, v in enumerate(g.labels)}
    lines = []
    for v, lab in g.labels.items():
        nbrs = sorted(g.adjacency[v], key=order_.__getitem__)
        lines.append(" ".join([v.token(), str(lab), *(w.token() for w in nbrs)]))
    return "\n".join(lines) + "\n"


def to_graph_text(g: DgbtGraph) -> str:
    """Vertex lines ``row kind index label`` followed by edge lines
    ``row kind index row kind index``."""
    lines = [f"{v.row} {v.kind.value} {v.index} {lab}" for v, lab in g.labels.items()]
    for u, v in g.edges():
        lines.append(f"{u.row} {u.kind.value} {u.index} {v.row} {v.kind.value} {v.index}")
    return "\n".join(lines) + "\n"
