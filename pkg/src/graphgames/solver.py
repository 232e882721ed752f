"""Exhaustive memoized game-tree search: who wins under optimal play.

Every game here is a finite two-player win/loss game, so plain AND/OR
search with a transposition table suffices; there are no scores to
bound, hence no alpha-beta.  The table is keyed by the position's
canonical state plus the player to move.

`reference_winner` is a deliberately dumb memoization-free search kept
as the correctness oracle for the memoized path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import BudgetExceededError, IllegalPositionError
from .graphs import CellColor, ColoredGraph, PlayerColor
from .rules import (
    PASS,
    BtclMachine,
    Position,
    RulesetTag,
    btcl_game_over,
    btcl_legal,
    col_legal,
    col_moves,
    fjords_moves,
    nogo_legal,
    nogo_moves,
    ruleset_moves,
)


class OutcomeClass(Enum):
    """Winner as a function of who moves first.

    L/R: that player wins regardless of the mover.  N: whoever moves
    first wins.  P: whoever moves first loses.
    """

    L = "L"
    R = "R"
    N = "N"
    P = "P"


@dataclass
class SolveStats:
    nodes_expanded: int = 0
    table_hits: int = 0
    max_depth: int = 0


def canonical_key(pos: Position) -> bytes:
    """Canonical byte encoding of a position (mover handled by caller).

    Equal positions produce equal keys; structurally different positions
    differ.  Built from the canonical text serialization plus, for
    constraint logic, the flip flags and pass counter that the file
    format does not carry.
    """
    from .io import serialize_graph, serialize_machine

    if pos.ruleset is RulesetTag.BTCL:
        assert pos.machine is not None
        m = pos.machine
        extra = f"f {m.flipped_bits()}\ns {m.consecutive_passes}\n"
        return (f"{pos.ruleset.value}|" + serialize_machine(m) + extra).encode()
    assert pos.board is not None
    return (f"{pos.ruleset.value}|" + serialize_graph(pos.board)).encode()


def _placement_moves(ruleset: RulesetTag, g: ColoredGraph, p: PlayerColor):
    # Children of legal boards stay legal by construction, so the
    # per-node legality re-validation is skipped inside the search.
    if ruleset is RulesetTag.COL:
        return col_moves(g, p, validate=False)
    if ruleset is RulesetTag.NOGO:
        return nogo_moves(g, p, validate=False)
    return fjords_moves(g, p)


def _equivalent_move_reps(g: ColoredGraph, moves) -> list[int]:
    """One representative per class of interchangeable moves.

    Two uncolored vertices u, v are interchangeable when swapping them
    is an automorphism fixing everything else: their neighborhoods
    (ignoring each other) coincide.  Coloring either one then leads to
    positions that differ by that swap, so they share a winner.  This
    prunes sibling moves only; the table keeps exact states.
    """
    reps: list[int] = []
    for v in sorted(moves):
        adj_v = g.adj[v]
        dup = False
        for r in reps:
            if (adj_v - {r}) == (g.adj[r] - {v}):
                dup = True
                break
        if not dup:
            reps.append(v)
    return reps


class _Solver:
    """Search engine bound to one root position's structure."""

    def __init__(
        self,
        pos: Position,
        budget: int | None = None,
        prune_equivalent: bool = False,
        table: dict | None = None,
    ):
        pos.validate()
        self.pos = pos
        self.budget = budget
        self.prune_equivalent = prune_equivalent
        self.stats = SolveStats()
        self.table = table if table is not None else {}

    # -- placement ----------------------------------------------------------

    def _win_placement(self, coloring: bytes, mover: PlayerColor, depth: int) -> PlayerColor:
        key = (coloring, mover)
        hit = self.table.get(key)
        if hit is not None:
            self.stats.table_hits += 1
            return hit
        self.stats.nodes_expanded += 1
        if self.budget is not None and self.stats.nodes_expanded > self.budget:
            raise BudgetExceededError(nodes=self.stats.nodes_expanded)
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        g = ColoredGraph._from_parts(self.pos.board, coloring)
        moves = _placement_moves(self.pos.ruleset, g, mover)
        if not moves:
            result = mover.opponent
        else:
            if self.prune_equivalent:
                candidates = _equivalent_move_reps(g, moves)
            else:
                candidates = sorted(moves)
            result = mover.opponent
            own_cell = int(mover.cell)
            for v in candidates:
                child = bytearray(coloring)
                child[v] = own_cell
                if self._win_placement(bytes(child), mover.opponent, depth + 1) is mover:
                    result = mover
                    break
        self.table[key] = result
        return result

    # -- constraint logic -----------------------------------------------------

    def _win_btcl(self, machine: BtclMachine, mover: PlayerColor, depth: int) -> PlayerColor:
        key = (machine.flipped_bits(), machine.consecutive_passes, mover)
        hit = self.table.get(key)
        if hit is not None:
            self.stats.table_hits += 1
            return hit
        self.stats.nodes_expanded += 1
        if self.budget is not None and self.stats.nodes_expanded > self.budget:
            raise BudgetExceededError(nodes=self.stats.nodes_expanded)
        if depth > self.stats.max_depth:
            self.stats.max_depth = depth
        over = btcl_game_over(machine)
        if over is not None:
            self.table[key] = over
            return over
        from .rules import btcl_apply, btcl_moves

        result = mover.opponent
        moves = btcl_moves(machine, mover)
        flips = sorted(mv for mv in moves if mv is not PASS)
        for mv in flips + [PASS]:
            child = btcl_apply(machine, mv, mover)
            if self._win_btcl(child, mover.opponent, depth + 1) is mover:
                result = mover
                break
        self.table[key] = result
        return result

    def winner(self, mover: PlayerColor) -> PlayerColor:
        if self.pos.ruleset is RulesetTag.BTCL:
            return self._win_btcl(self.pos.machine, mover, 0)
        return self._win_placement(self.pos.board.coloring, mover, 0)

    def winning_move(self, mover: PlayerColor):
        """A witness winning move for the mover, or None if all lose."""
        if self.winner(mover) is not mover:
            return None
        for mv in sorted(self.pos.moves(mover), key=repr):
            child = self.pos.apply(mv, mover)
            if self.pos.ruleset is RulesetTag.BTCL:
                w = self._win_btcl(child.machine, mover.opponent, 1)
            else:
                w = self._win_placement(child.board.coloring, mover.opponent, 1)
            if w is mover:
                return mv
        return None


def winner_from(
    pos: Position,
    mover: PlayerColor,
    budget: int | None = None,
    prune_equivalent: bool = False,
) -> PlayerColor:
    """The player with a winning strategy when `mover` moves first."""
    return _Solver(pos, budget=budget, prune_equivalent=prune_equivalent).winner(mover)


def solve_with_stats(
    pos: Position,
    mover: PlayerColor,
    budget: int | None = None,
    prune_equivalent: bool = False,
    table: dict | None = None,
) -> tuple[PlayerColor, SolveStats]:
    """Like winner_from, also reporting search statistics.

    Passing the same `table` dict across calls reuses solved positions.
    """
    s = _Solver(pos, budget=budget, prune_equivalent=prune_equivalent, table=table)
    w = s.winner(mover)
    return w, s.stats


def outcome_class(
    pos: Position,
    budget: int | None = None,
    prune_equivalent: bool = False,
) -> OutcomeClass:
    """Combine both first-mover winners into the four-way outcome class."""
    s = _Solver(pos, budget=budget, prune_equivalent=prune_equivalent)
    w_left = s.winner(PlayerColor.LEFT)
    w_right = s.winner(PlayerColor.RIGHT)
    if w_left is PlayerColor.LEFT and w_right is PlayerColor.RIGHT:
        return OutcomeClass.N
    if w_left is PlayerColor.RIGHT and w_right is PlayerColor.LEFT:
        return OutcomeClass.P
    if w_left is PlayerColor.LEFT:
        return OutcomeClass.L
    return OutcomeClass.R


def winning_move(pos: Position, mover: PlayerColor):
    """One witness winning move for `mover`, or None."""
    return _Solver(pos).winning_move(mover)


def reference_winner(pos: Position, mover: PlayerColor) -> PlayerColor:
    """Memoization-free reference search; the oracle for the fast path."""
    pos.validate()

    if pos.ruleset is RulesetTag.BTCL:

        def rec_machine(m: BtclMachine, p: PlayerColor) -> PlayerColor:
            over = btcl_game_over(m)
            if over is not None:
                return over
            from .rules import btcl_apply, btcl_moves

            for mv in sorted(btcl_moves(m, p), key=repr):
                if rec_machine(btcl_apply(m, mv, p), p.opponent) is p:
                    return p
            return p.opponent

        return rec_machine(pos.machine, mover)

    ruleset = pos.ruleset

    def rec(g: ColoredGraph, p: PlayerColor) -> PlayerColor:
        moves = _placement_moves(ruleset, g, p)
        if not moves:
            return p.opponent
        cell = p.cell
        for v in sorted(moves):
            if rec(g.with_color(v, cell), p.opponent) is p:
                return p
        return p.opponent

    return rec(pos.board, mover)
