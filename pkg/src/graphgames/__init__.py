"""Placement games on graphs, constraint logic, and hardness-gadget reductions."""

from .errors import (
    BudgetExceededError,
    FormatError,
    GraphGamesError,
    IllegalMoveError,
    IllegalPositionError,
    InvalidGraphError,
    LayoutError,
    ParamsError,
    VertexRangeError,
)
from .graphs import (
    CellColor,
    ColoredGraph,
    PlayerColor,
    component_has_liberty,
    euler_bound_check,
    neighbors,
    same_color_component,
)
from .rules import (
    PASS,
    BtclArc,
    BtclMachine,
    Position,
    RulesetTag,
    apply_placement,
    btcl_apply,
    btcl_in_weight,
    btcl_left_has_won,
    btcl_legal,
    btcl_moves,
    col_legal,
    col_moves,
    fjords_moves,
    nogo_legal,
    nogo_moves,
)
from .solver import (
    OutcomeClass,
    SolveStats,
    canonical_key,
    outcome_class,
    reference_winner,
    solve_with_stats,
    winner_from,
    winning_move,
)

__all__ = [name for name in dir() if not name.startswith("_")]
