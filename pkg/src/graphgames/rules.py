"""Move generation, legality, and move application for the four rulesets.

Placement games (all normal play, no passing):

* Col      -- color an uncolored vertex; neighbors may never share a
              player color.
* GraphNoGo -- color an uncolored vertex; every same-color connected
              component must keep a liberty (an adjacent uncolored
              vertex), including the opponent's components.
* GraphFjords -- color an uncolored vertex adjacent to a vertex you
              already own; no other constraint.

Bounded 2-player constraint logic (BTCL) is played on a directed graph
whose arcs each carry an owner, a once-only flipped flag, and a weight
in {1, 2}.  An orientation is legal when every vertex has total incoming
weight at least 2.  A move flips one of your own unflipped arcs so the
orientation stays legal.  Left wins the moment the goal arc flips;
otherwise two consecutive passes end the game in Right's favor.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import FrozenSet, Iterable, Union

from .errors import (
    IllegalMoveError,
    IllegalPositionError,
    InvalidGraphError,
    VertexRangeError,
)
from .graphs import (
    CellColor,
    ColoredGraph,
    PlayerColor,
    VertexId,
    component_has_liberty,
    same_color_component,
)


class RulesetTag(Enum):
    COL = "col"
    NOGO = "nogo"
    FJORDS = "fjords"
    BTCL = "btcl"


class _Pass:
    """Singleton BTCL pass move."""

    _instance: "_Pass | None" = None

    def __new__(cls) -> "_Pass":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Pass"


PASS = _Pass()

BtclMove = Union[int, _Pass]


# -- placement games --------------------------------------------------------


def col_legal(g: ColoredGraph) -> bool:
    """True iff no edge joins two vertices of the same player color."""
    c = g.coloring
    for u, v in g.edges:
        if c[u] != 0 and c[u] == c[v]:
            return False
    return True


def col_moves(
    g: ColoredGraph, p: PlayerColor, validate: bool = True
) -> set[VertexId]:
    """Uncolored vertices p may take: no neighbor already has p's color."""
    if validate and not col_legal(g):
        raise IllegalPositionError("board violates the Col coloring constraint")
    own = int(p.cell)
    c = g.coloring
    moves = set()
    for v in range(g.n):
        if c[v] == 0 and all(c[w] != own for w in g.adj[v]):
            moves.add(v)
    return moves


def nogo_legal(g: ColoredGraph) -> bool:
    """True iff every same-color connected component has a liberty."""
    c = g.coloring
    seen: set[int] = set()
    for v in range(g.n):
        if c[v] == 0 or v in seen:
            continue
        comp = same_color_component(g, v)
        seen |= comp
        if not component_has_liberty(g, comp):
            return False
    return True


def _nogo_placement_ok(g: ColoredGraph, x: VertexId, own: int) -> bool:
    """Would coloring x with `own` keep every component at a liberty?

    Only components touching x can change, so check the component of x
    in the new coloring plus each differently-colored neighbor component.
    """
    c = bytearray(g.coloring)
    c[x] = own
    # Component of x under the new coloring.
    comp = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in comp and c[w] == own:
                comp.add(w)
                stack.append(w)
    if not _component_liberty(g, c, comp):
        return False
    # Opponent components adjacent to x may have lost their last liberty.
    other = 3 - own
    checked: set[int] = set()
    for w in g.adj[x]:
        if c[w] == other and w not in checked:
            comp2 = {w}
            stack = [w]
            while stack:
                u = stack.pop()
                for y in g.adj[u]:
                    if y not in comp2 and c[y] == other:
                        comp2.add(y)
                        stack.append(y)
            checked |= comp2
            if not _component_liberty(g, c, comp2):
                return False
    return True


def _component_liberty(g: ColoredGraph, c: bytearray, comp: set[int]) -> bool:
    for v in comp:
        for w in g.adj[v]:
            if w not in comp and c[w] == 0:
                return True
    return False


def nogo_moves(
    g: ColoredGraph, p: PlayerColor, validate: bool = True
) -> set[VertexId]:
    """Uncolored vertices whose coloring keeps every component at a liberty."""
    if validate and not nogo_legal(g):
        raise IllegalPositionError("board violates the liberty constraint")
    own = int(p.cell)
    return {
        v
        for v in range(g.n)
        if g.coloring[v] == 0 and _nogo_placement_ok(g, v, own)
    }


def fjords_moves(g: ColoredGraph, p: PlayerColor) -> set[VertexId]:
    """Uncolored vertices adjacent to at least one vertex of p's color."""
    own = int(p.cell)
    c = g.coloring
    return {
        v
        for v in range(g.n)
        if c[v] == 0 and any(c[w] == own for w in g.adj[v])
    }


_MOVE_FUNCS = {
    RulesetTag.COL: col_moves,
    RulesetTag.NOGO: nogo_moves,
    RulesetTag.FJORDS: lambda g, p, validate=True: fjords_moves(g, p),
}

_LEGAL_FUNCS = {
    RulesetTag.COL: col_legal,
    RulesetTag.NOGO: nogo_legal,
    RulesetTag.FJORDS: lambda g: True,
}


def ruleset_moves(
    ruleset: RulesetTag, g: ColoredGraph, p: PlayerColor, validate: bool = True
) -> set[VertexId]:
    """Dispatch to the move generator of a placement ruleset."""
    if ruleset not in _MOVE_FUNCS:
        raise IllegalMoveError(f"{ruleset} is not a placement ruleset")
    return _MOVE_FUNCS[ruleset](g, p, validate=validate)


def ruleset_legal(ruleset: RulesetTag, g: ColoredGraph) -> bool:
    if ruleset not in _LEGAL_FUNCS:
        raise IllegalMoveError(f"{ruleset} is not a placement ruleset")
    return _LEGAL_FUNCS[ruleset](g)


def apply_placement(
    g: ColoredGraph, v: VertexId, p: PlayerColor, ruleset: RulesetTag
) -> ColoredGraph:
    """Color v with p's color; v must be a legal move under `ruleset`.

    Marks are permanent, so the only change is v's color.  Illegal
    applications raise instead of silently doing nothing: the
    verification harness depends on exact move sets.
    """
    g.check_vertex(v)
    if g.coloring[v] != 0:
        raise IllegalMoveError(f"vertex {v} is already colored")
    if v not in ruleset_moves(ruleset, g, p):
        raise IllegalMoveError(
            f"vertex {v} is not a legal {ruleset.value} move for {p.value}"
        )
    return g.with_color(v, p.cell)


# -- bounded 2-player constraint logic ---------------------------------------


@dataclass(frozen=True)
class BtclArc:
    """One arc of a constraint-logic machine, in its current orientation.

    `tail -> head`; the head receives the arc's weight.  Each arc may be
    flipped at most once, recorded in `flipped`.
    """

    tail: int
    head: int
    owner: PlayerColor
    weight: int
    flipped: bool = False

    def __post_init__(self):
        if self.weight not in (1, 2):
            raise InvalidGraphError(f"arc weight must be 1 or 2, got {self.weight}")
        if self.tail == self.head:
            raise InvalidGraphError("arc endpoints must differ")

    def reversed(self) -> "BtclArc":
        return replace(self, tail=self.head, head=self.tail, flipped=True)


@dataclass(frozen=True)
class BtclMachine:
    """A directed machine: arcs over n vertices plus a designated goal arc.

    goal_arc indexes into `arcs` and must be Left-owned; it may be None
    only for the degenerate empty machine.  consecutive_passes tracks
    the two-pass termination rule.
    """

    n: int
    arcs: tuple[BtclArc, ...]
    goal_arc: int | None
    consecutive_passes: int = 0

    def __post_init__(self):
        for a in self.arcs:
            if not (0 <= a.tail < self.n and 0 <= a.head < self.n):
                raise InvalidGraphError("arc endpoint out of range")
        if self.goal_arc is None:
            if self.arcs:
                raise InvalidGraphError("goal_arc required for a nonempty machine")
        else:
            if not (0 <= self.goal_arc < len(self.arcs)):
                raise InvalidGraphError("goal_arc index out of range")
            if self.arcs[self.goal_arc].owner is not PlayerColor.LEFT:
                raise InvalidGraphError("goal arc must be Left-owned")
        if self.consecutive_passes not in (0, 1, 2):
            raise InvalidGraphError("consecutive_passes must be 0, 1 or 2")

    def flipped_bits(self) -> int:
        bits = 0
        for i, a in enumerate(self.arcs):
            if a.flipped:
                bits |= 1 << i
        return bits


def btcl_in_weight(m: BtclMachine, v: int) -> int:
    """Total weight of arcs currently oriented into v."""
    if not (0 <= v < m.n):
        raise VertexRangeError(f"vertex {v} out of range for n={m.n}")
    return sum(a.weight for a in m.arcs if a.head == v)


def btcl_legal(m: BtclMachine) -> bool:
    """True iff every vertex has incoming weight at least 2."""
    weights = [0] * m.n
    for a in m.arcs:
        weights[a.head] += a.weight
    return all(w >= 2 for w in weights)


def btcl_flip_ok(m: BtclMachine, i: int) -> bool:
    """Would flipping arc i keep the orientation legal?

    Only the old head loses weight, so that is the single vertex to check.
    """
    arc = m.arcs[i]
    return btcl_in_weight(m, arc.head) - arc.weight >= 2


def btcl_moves(m: BtclMachine, p: PlayerColor) -> set[BtclMove]:
    """Flippable arcs owned by p, plus the always-available pass."""
    moves: set[BtclMove] = {PASS}
    for i, a in enumerate(m.arcs):
        if a.owner is p and not a.flipped and btcl_flip_ok(m, i):
            moves.add(i)
    return moves


def btcl_apply(m: BtclMachine, mv: BtclMove, mover: PlayerColor) -> BtclMachine:
    """Apply a flip or pass.  Flips reset the pass counter; passes bump it."""
    if mv is PASS:
        return replace(m, consecutive_passes=m.consecutive_passes + 1)
    if not isinstance(mv, int) or not (0 <= mv < len(m.arcs)):
        raise IllegalMoveError(f"no such arc: {mv!r}")
    arc = m.arcs[mv]
    if arc.owner is not mover:
        raise IllegalMoveError(f"arc {mv} belongs to {arc.owner.value}")
    if arc.flipped:
        raise IllegalMoveError(f"arc {mv} was already flipped")
    if not btcl_flip_ok(m, mv):
        raise IllegalMoveError(f"flipping arc {mv} starves vertex {arc.head}")
    arcs = list(m.arcs)
    arcs[mv] = arc.reversed()
    return replace(m, arcs=tuple(arcs), consecutive_passes=0)


def btcl_left_has_won(m: BtclMachine) -> bool:
    """True iff the goal arc has been flipped."""
    if m.goal_arc is None:
        return False
    return m.arcs[m.goal_arc].flipped


def btcl_game_over(m: BtclMachine) -> PlayerColor | None:
    """Winner if the machine is terminal, else None."""
    if btcl_left_has_won(m):
        return PlayerColor.LEFT
    if m.consecutive_passes >= 2:
        return PlayerColor.RIGHT
    return None


# -- positions ---------------------------------------------------------------


@dataclass(frozen=True)
class Position:
    """A ruleset together with its board or machine: the solver's input."""

    ruleset: RulesetTag
    board: ColoredGraph | None = None
    machine: BtclMachine | None = None

    @classmethod
    def col(cls, g: ColoredGraph) -> "Position":
        return cls(RulesetTag.COL, board=g)

    @classmethod
    def nogo(cls, g: ColoredGraph) -> "Position":
        return cls(RulesetTag.NOGO, board=g)

    @classmethod
    def fjords(cls, g: ColoredGraph) -> "Position":
        return cls(RulesetTag.FJORDS, board=g)

    @classmethod
    def btcl(cls, m: BtclMachine) -> "Position":
        return cls(RulesetTag.BTCL, machine=m)

    def validate(self) -> None:
        if self.ruleset is RulesetTag.BTCL:
            if self.machine is None:
                raise IllegalPositionError("BTCL position needs a machine")
            if not btcl_legal(self.machine):
                raise IllegalPositionError("machine orientation is illegal")
        else:
            if self.board is None:
                raise IllegalPositionError(f"{self.ruleset.value} position needs a board")
            if not ruleset_legal(self.ruleset, self.board):
                raise IllegalPositionError(
                    f"board violates the {self.ruleset.value} legality predicate"
                )

    def moves(self, p: PlayerColor) -> set:
        if self.ruleset is RulesetTag.BTCL:
            assert self.machine is not None
            return btcl_moves(self.machine, p)
        assert self.board is not None
        return ruleset_moves(self.ruleset, self.board, p)

    def apply(self, mv, p: PlayerColor) -> "Position":
        if self.ruleset is RulesetTag.BTCL:
            assert self.machine is not None
            return Position.btcl(btcl_apply(self.machine, mv, p))
        assert self.board is not None
        return Position(self.ruleset, board=apply_placement(self.board, mv, p, self.ruleset))
