"""Misère partizan games modulo universes: outcomes, comparison, simplest
forms and invertibility, with tombstone-augmented forms throughout."""

from __future__ import annotations

from .games import (
    NEG_ONE, ONE, STAR, ZERO, BudgetExceeded, Game, Outcome, OutcomePair, Player, add,
    as_integer, born_by, conjugate, integer, mk_aug, mk_game, node_budget, outcome, times,
)
from .invert import (
    UhatAssertions, day1_census, day1_invertibles, is_disintegrator, is_invertible,
    is_reduced, is_starkiller, is_super_starkiller, search_end_with,
)
from .notation import ParseError, game, parse_universe, to_text
from .order import equiv, geq, leq, oracle_geq, strictly_greater
from .simplest import simplest_form
from .universes import (
    DEAD_ENDING, DICOT, FULL_MISERE, Kind, UniverseSpec, is_left_strong, is_right_strong,
    is_weak, left_ends_up_to, member,
)
from .verdicts import Status

__all__ = [
    "NEG_ONE", "ONE", "STAR", "ZERO", "BudgetExceeded", "Game", "Outcome", "OutcomePair",
    "Player", "add", "as_integer", "born_by", "conjugate", "integer", "mk_aug", "mk_game",
    "node_budget", "outcome", "times", "UhatAssertions", "day1_census", "day1_invertibles",
    "is_disintegrator", "is_invertible", "is_reduced", "is_starkiller", "is_super_starkiller",
    "search_end_with", "ParseError", "game", "parse_universe", "to_text", "equiv", "geq", "leq",
    "oracle_geq", "strictly_greater", "simplest_form", "DEAD_ENDING", "DICOT", "FULL_MISERE",
    "Kind", "UniverseSpec", "is_left_strong", "is_right_strong", "is_weak", "left_ends_up_to",
    "member", "Status",
]
