"""Augmented-form API.

Augmented forms share one interning table with plain games: a plain game is
simply a form with no tombstone anywhere, so embedding is the identity and
these functions are thin, explicitly named views of :mod:`misere.games`.

Sum tombstones follow one rule: ``a + b`` has a Left tombstone when both
summands are Left end-like and at least one carries a Left tombstone (mirror
for Right).  That makes ``a + b`` Left end-like exactly when both summands
are, and leaves a tombstone inert next to a summand Left can still move in.
"""

from __future__ import annotations

from typing import NamedTuple

from .games import Game, OutcomePair, add, conjugate, mk_aug, outcome


class EndLike(NamedTuple):
    left_end_like: bool
    right_end_like: bool


def end_like(a: Game) -> EndLike:
    return EndLike(a.left_end_like, a.right_end_like)


def embed(g: Game) -> Game:
    """Plain games are already augmented forms."""
    if not g.plain:
        raise ValueError(f"{g} carries tombstones")
    return g


def aug_conjugate(a: Game) -> Game:
    return conjugate(a)


def aug_sum(a: Game, b: Game) -> Game:
    return add(a, b)


def aug_outcome(a: Game) -> OutcomePair:
    """End-like counts as an end: the player to move wins if their side is
    end-like, otherwise they need an option the opponent loses moving first."""
    return outcome(a)


__all__ = ["EndLike", "end_like", "embed", "aug_conjugate", "aug_sum", "aug_outcome", "mk_aug"]
