"""Text formats for boards, machines, and reduction maps.

Graph format (one record per line, `#` comments allowed):

    p <n>           vertex count header, required first record
    e <u> <v>       undirected edge, 0-based
    c <v> <L|R>     colored vertex

Machine format:

    p <n>           vertex count header
    a <tail> <head> <L|R> <1|2>   arc in its initial orientation
    g <arc-index>   goal arc designation

Reduction map sidecar:

    m <source-v> <image-v>        source vertex to its image anchor
    r <image-v> <role>            role tag of an image vertex

Serialization is canonical: edges sorted lexicographically, color lines
sorted by vertex, arcs in machine order.  Byte-identical output for
equal inputs.
"""

from __future__ import annotations

from .errors import FormatError
from .graphs import CellColor, ColoredGraph, PlayerColor
from .rules import BtclArc, BtclMachine

_COLOR_LETTER = {CellColor.LEFT: "L", CellColor.RIGHT: "R"}
_LETTER_COLOR = {"L": CellColor.LEFT, "R": CellColor.RIGHT}
_LETTER_PLAYER = {"L": PlayerColor.LEFT, "R": PlayerColor.RIGHT}


def _records(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> ColoredGraph:
    n = None
    edges: list[tuple[int, int]] = []
    colors: list[tuple[int, CellColor]] = []
    for lineno, parts in _records(text):
        kind = parts[0]
        try:
            if kind == "p":
                if n is not None:
                    raise FormatError("duplicate header", lineno)
                n = int(parts[1])
            elif kind == "e":
                edges.append((int(parts[1]), int(parts[2])))
            elif kind == "c":
                colors.append((int(parts[1]), _LETTER_COLOR[parts[2]]))
            else:
                raise FormatError(f"unknown record type {kind!r}", lineno)
        except FormatError:
            raise
        except (IndexError, ValueError, KeyError):
            raise FormatError(f"malformed {kind!r} record", lineno) from None
        if kind == "p" and n is not None and n < 0:
            raise FormatError("vertex count must be non-negative", lineno)
    if n is None:
        raise FormatError("missing 'p <n>' header", 1)
    coloring = bytearray(n)
    for v, c in colors:
        if not (0 <= v < n):
            raise FormatError(f"color line names vertex {v} outside 0..{n - 1}", 1)
        coloring[v] = int(c)
    try:
        return ColoredGraph(n, edges, bytes(coloring))
    except Exception as exc:
        raise FormatError(str(exc), 1) from exc


def serialize_graph(g: ColoredGraph) -> str:
    lines = [f"p {g.n}"]
    for u, v in g.edges:
        lines.append(f"e {u} {v}")
    for v in range(g.n):
        c = g.coloring[v]
        if c:
            lines.append(f"c {v} {_COLOR_LETTER[CellColor(c)]}")
    return "\n".join(lines) + "\n"


def parse_machine(text: str) -> BtclMachine:
    n = None
    arcs: list[BtclArc] = []
    goal: int | None = None
    for lineno, parts in _records(text):
        kind = parts[0]
        try:
            if kind == "p":
                if n is not None:
                    raise FormatError("duplicate header", lineno)
                n = int(parts[1])
            elif kind == "a":
                arcs.append(
                    BtclArc(
                        tail=int(parts[1]),
                        head=int(parts[2]),
                        owner=_LETTER_PLAYER[parts[3]],
                        weight=int(parts[4]),
                    )
                )
            elif kind == "g":
                if goal is not None:
                    raise FormatError("duplicate goal designation", lineno)
                goal = int(parts[1])
            else:
                raise FormatError(f"unknown record type {kind!r}", lineno)
        except FormatError:
            raise
        except (IndexError, ValueError, KeyError):
            raise FormatError(f"malformed {kind!r} record", lineno) from None
    if n is None:
        raise FormatError("missing 'p <n>' header", 1)
    if arcs and goal is None:
        raise FormatError("missing 'g <arc-index>' goal designation", 1)
    try:
        return BtclMachine(n=n, arcs=tuple(arcs), goal_arc=goal)
    except Exception as exc:
        raise FormatError(str(exc), 1) from exc


def serialize_machine(m: BtclMachine) -> str:
    lines = [f"p {m.n}"]
    for a in m.arcs:
        lines.append(f"a {a.tail} {a.head} {a.owner.value} {a.weight}")
    if m.goal_arc is not None:
        lines.append(f"g {m.goal_arc}")
    return "\n".join(lines) + "\n"


def serialize_reduction_map(vertex_map: dict[int, int], roles: dict[int, str]) -> str:
    lines = []
    for src in sorted(vertex_map):
        lines.append(f"m {src} {vertex_map[src]}")
    for img in sorted(roles):
        lines.append(f"r {img} {roles[img]}")
    return "\n".join(lines) + "\n"


def parse_reduction_map(text: str) -> tuple[dict[int, int], dict[int, str]]:
    vertex_map: dict[int, int] = {}
    roles: dict[int, str] = {}
    for lineno, parts in _records(text):
        kind = parts[0]
        try:
            if kind == "m":
                vertex_map[int(parts[1])] = int(parts[2])
            elif kind == "r":
                roles[int(parts[1])] = parts[2]
            else:
                raise FormatError(f"unknown record type {kind!r}", lineno)
        except FormatError:
            raise
        except (IndexError, ValueError):
            raise FormatError(f"malformed {kind!r} record", lineno) from None
    return vertex_map, roles
