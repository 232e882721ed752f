"""Colored undirected graphs: the shared board type for all placement games.

A board is a simple undirected graph together with a total three-way
coloring of its vertices (uncolored / owned by Left / owned by Right).
Boards are immutable; playing a move produces a new board that shares
the structural data (adjacency, edge list) with its parent.
"""

from __future__ import annotations

import hashlib
from enum import Enum, IntEnum
from typing import Iterable, Iterator, Sequence

from .errors import InvalidGraphError, VertexRangeError

# Vertex ids are dense ints 0..n-1.
VertexId = int


class PlayerColor(Enum):
    """The two players.  Left plays blue/black, Right plays red/white."""

    LEFT = "L"
    RIGHT = "R"

    @property
    def opponent(self) -> "PlayerColor":
        return PlayerColor.RIGHT if self is PlayerColor.LEFT else PlayerColor.LEFT

    @property
    def cell(self) -> "CellColor":
        return CellColor.LEFT if self is PlayerColor.LEFT else CellColor.RIGHT


class CellColor(IntEnum):
    """State of a single vertex.  Stored as one byte per vertex."""

    UNCOLORED = 0
    LEFT = 1
    RIGHT = 2

    @property
    def player(self) -> PlayerColor:
        if self is CellColor.LEFT:
            return PlayerColor.LEFT
        if self is CellColor.RIGHT:
            return PlayerColor.RIGHT
        raise ValueError("uncolored cell has no owner")


class ColoredGraph:
    """Immutable simple graph with a per-vertex coloring.

    Vertices are 0..n-1.  Edges are stored both as a sorted tuple of
    (u, v) pairs with u < v and as an adjacency tuple of frozensets.
    The coloring is a bytes object of CellColor values, which doubles
    as a cheap hashable state for solver transposition keys.
    """

    __slots__ = ("n", "edges", "coloring", "adj", "_fingerprint")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        coloring: Sequence[int] | bytes | None = None,
    ):
        if n < 0:
            raise InvalidGraphError("vertex count must be non-negative")
        normalized: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise InvalidGraphError(f"parallel edge ({e[0]}, {e[1]})")
            seen.add(e)
            normalized.append(e)
        normalized.sort()
        if coloring is None:
            color_bytes = bytes(n)
        else:
            color_bytes = bytes(coloring)
            if len(color_bytes) != n:
                raise InvalidGraphError("coloring must assign every vertex")
            if any(c not in (0, 1, 2) for c in color_bytes):
                raise InvalidGraphError("coloring values must be 0, 1 or 2")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in normalized:
            adj[u].add(v)
            adj[v].add(u)

        self.n = n
        self.edges = tuple(normalized)
        self.coloring = color_bytes
        self.adj = tuple(frozenset(s) for s in adj)
        digest = hashlib.blake2b(digest_size=12)
        digest.update(n.to_bytes(4, "big"))
        for u, v in self.edges:
            digest.update(u.to_bytes(4, "big"))
            digest.update(v.to_bytes(4, "big"))
        self._fingerprint = digest.digest()

    # -- construction helpers -------------------------------------------

    @classmethod
    def _from_parts(cls, proto: "ColoredGraph", coloring: bytes) -> "ColoredGraph":
        """New board sharing structure with `proto` (no re-validation)."""
        g = object.__new__(cls)
        g.n = proto.n
        g.edges = proto.edges
        g.adj = proto.adj
        g.coloring = coloring
        g._fingerprint = proto._fingerprint
        return g

    def with_color(self, v: VertexId, cell: CellColor | int) -> "ColoredGraph":
        """Copy of this board with vertex v recolored.  Structure is shared."""
        self.check_vertex(v)
        new = bytearray(self.coloring)
        new[v] = int(cell)
        return ColoredGraph._from_parts(self, bytes(new))

    # -- basic queries ---------------------------------------------------

    def check_vertex(self, v: VertexId) -> None:
        if not (0 <= v < self.n):
            raise VertexRangeError(f"vertex {v} out of range for n={self.n}")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def color_of(self, v: VertexId) -> CellColor:
        self.check_vertex(v)
        return CellColor(self.coloring[v])

    def vertices(self) -> range:
        return range(self.n)

    def uncolored_vertices(self) -> Iterator[VertexId]:
        return (v for v in range(self.n) if self.coloring[v] == 0)

    def structure_fingerprint(self) -> bytes:
        """Digest of (n, edge set); identical for boards sharing structure."""
        return self._fingerprint

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.coloring == other.coloring
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.coloring))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, edges={len(self.edges)}, colored={sum(1 for c in self.coloring if c)})"


# -- module-level operations ----------------------------------------------


def neighbors(g: ColoredGraph, v: VertexId) -> frozenset[VertexId]:
    """Vertices adjacent to v.  Never contains v itself."""
    g.check_vertex(v)
    return g.adj[v]


def same_color_component(g: ColoredGraph, v: VertexId) -> frozenset[VertexId]:
    """Maximal connected set containing v whose vertices share v's color.

    Defined only for player-colored vertices; components of uncolored
    vertices are not a meaningful notion here.
    """
    g.check_vertex(v)
    color = g.coloring[v]
    if color == CellColor.UNCOLORED:
        raise InvalidGraphError(f"vertex {v} is uncolored; components need a player color")
    seen = {v}
    stack = [v]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and g.coloring[w] == color:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def component_has_liberty(g: ColoredGraph, comp: Iterable[VertexId]) -> bool:
    """True iff some uncolored vertex outside `comp` is adjacent to it."""
    comp_set = set(comp)
    if not comp_set:
        raise InvalidGraphError("component must be nonempty")
    for v in comp_set:
        g.check_vertex(v)
        for w in g.adj[v]:
            if w not in comp_set and g.coloring[w] == CellColor.UNCOLORED:
                return True
    return False


def euler_bound_check(g: ColoredGraph) -> bool:
    """Necessary condition for planarity: |E| <= 3|V| - 6 (for |V| >= 3).

    This is only the easy Euler-formula bound; it cannot certify
    planarity, but any graph failing it is certainly non-planar.
    """
    if g.n < 3:
        return True
    return g.edge_count <= 3 * g.n - 6
