"""Interned short partizan game forms and misère outcomes.

Every form lives in a single hash-consing table.  A form is a pair of option
sets plus two tombstone flags; plain games are simply forms with no tombstone
anywhere below them, so the plain/augmented embedding is the identity.
Options are deduplicated and stored in a fixed order (birthday, then a
recursive structural digest), which makes isomorphism the same thing as
object identity.
"""

from __future__ import annotations

import contextvars
import enum
import hashlib
import random
import threading
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from itertools import chain, combinations
from typing import NamedTuple

MAX_INTEGER = 4096


class BudgetExceeded(RuntimeError):
    """Raised when an operation creates more nodes than its budget allows."""


class Player(enum.Enum):
    LEFT = "L"
    RIGHT = "R"

    def flip(self) -> Player:
        return Player.RIGHT if self is Player.LEFT else Player.LEFT


class Outcome(enum.Enum):
    """Misère outcome classes, partially ordered R < N, P < L."""

    L = "L"
    N = "N"
    P = "P"
    R = "R"

    def __ge__(self, other: Outcome) -> bool:
        if self is other or self is Outcome.L or other is Outcome.R:
            return True
        return False

    def __le__(self, other: Outcome) -> bool:
        return other >= self

    def __gt__(self, other: Outcome) -> bool:
        return self >= other and self is not other

    def __lt__(self, other: Outcome) -> bool:
        return other > self


class OutcomePair(NamedTuple):
    """Winner when Left moves first, winner when Right moves first."""

    left_start: Player
    right_start: Player

    @property
    def outcome(self) -> Outcome:
        return _OUTCOME_OF_PAIR[(self.left_start, self.right_start)]

    def conjugate(self) -> OutcomePair:
        return OutcomePair(self.right_start.flip(), self.left_start.flip())


_OUTCOME_OF_PAIR = {
    (Player.LEFT, Player.LEFT): Outcome.L,
    (Player.LEFT, Player.RIGHT): Outcome.N,
    (Player.RIGHT, Player.LEFT): Outcome.P,
    (Player.RIGHT, Player.RIGHT): Outcome.R,
}


# --------------------------------------------------------------------------
# budget accounting

class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0


_budget: contextvars.ContextVar[_Budget | None] = contextvars.ContextVar("budget", default=None)


@contextmanager
def node_budget(limit: int | None):
    """Bound the work done inside the block.

    Nested scopes do not reset an enclosing budget.  ``None`` means unlimited.
    """
    if limit is None or _budget.get() is not None:
        yield _budget.get()
        return
    b = _Budget(limit)
    token = _budget.set(b)
    try:
        yield b
    finally:
        _budget.reset(token)


def charge(n: int = 1) -> None:
    b = _budget.get()
    if b is not None:
        b.used += n
        if b.used > b.limit:
            raise BudgetExceeded(f"node budget of {b.limit} exceeded")


# --------------------------------------------------------------------------
# the interned node

class Game:
    """An interned (possibly tombstoned) short game form.

    Never construct directly; use :func:`mk_game` or :func:`mk_aug`.
    Equality is identity.
    """

    __slots__ = (
        "left", "right", "left_tomb", "right_tomb",
        "birthday", "key", "plain", "serial",
        "_outcome", "_conj",
    )

    left: tuple[Game, ...]
    right: tuple[Game, ...]
    left_tomb: bool
    right_tomb: bool
    birthday: int
    key: tuple[int, bytes]
    plain: bool
    serial: int

    @property
    def is_left_end(self) -> bool:
        return not self.left

    @property
    def is_right_end(self) -> bool:
        return not self.right

    @property
    def left_end_like(self) -> bool:
        return self.left_tomb or not self.left

    @property
    def right_end_like(self) -> bool:
        return self.right_tomb or not self.right

    @property
    def is_zero(self) -> bool:
        return self is ZERO

    def __add__(self, other: Game) -> Game:
        return add(self, other)

    def __invert__(self) -> Game:
        return conjugate(self)

    def __rmul__(self, n: int) -> Game:
        return times(n, self)

    def __lt__(self, other: Game) -> bool:
        # canonical order only; this is NOT the game order
        return self.key < other.key

    def __repr__(self) -> str:
        from .notation import to_text
        return f"Game({to_text(self)!r})"

    def __str__(self) -> str:
        from .notation import to_text
        return to_text(self)

    def __reduce__(self):
        # pickling re-interns
        return (mk_aug, (self.left, self.right, self.left_tomb, self.right_tomb))


_table: dict[tuple, Game] = {}
_lock = threading.Lock()


def _digest(left, right, lt, rt) -> bytes:
    h = hashlib.blake2b(digest_size=12)
    h.update(bytes((lt, rt)))
    for g in left:
        h.update(g.key[1])
    h.update(b"|")
    for g in right:
        h.update(g.key[1])
    return h.digest()


def mk_aug(lefts: Iterable[Game] = (), rights: Iterable[Game] = (),
           left_tomb: bool = False, right_tomb: bool = False) -> Game:
    """Intern the augmented form ``{lefts, [#] | rights, [#]}``."""
    left = tuple(sorted(set(lefts)))
    right = tuple(sorted(set(rights)))
    lt, rt = bool(left_tomb), bool(right_tomb)
    k = (left, right, lt, rt)
    g = _table.get(k)
    if g is not None:
        return g
    with _lock:
        g = _table.get(k)
        if g is not None:
            return g
        charge()
        g = object.__new__(Game)
        g.left, g.right, g.left_tomb, g.right_tomb = left, right, lt, rt
        g.birthday = 1 + max((o.birthday for o in chain(left, right)), default=-1)
        g.key = (g.birthday, _digest(left, right, lt, rt))
        g.plain = not lt and not rt and all(o.plain for o in chain(left, right))
        g.serial = len(_table)
        g._outcome = None
        g._conj = None
        _table[k] = g
    return g


def mk_game(lefts: Iterable[Game] = (), rights: Iterable[Game] = ()) -> Game:
    """Intern the plain form ``{lefts | rights}``."""
    return mk_aug(lefts, rights)


def table_size() -> int:
    return len(_table)


ZERO = mk_game()
ONE = mk_game([ZERO])
NEG_ONE = mk_game([], [ZERO])
STAR = mk_game([ZERO], [ZERO])


def integer(n: int) -> Game:
    """Game integer: ``n = {n-1 | .}`` for n > 0, conjugated for n < 0."""
    if abs(n) > MAX_INTEGER:
        raise ValueError(f"|{n}| exceeds the integer depth limit {MAX_INTEGER}")
    g = ZERO
    for _ in range(abs(n)):
        g = mk_game([g])
    return conjugate(g) if n < 0 else g


def as_integer(g: Game) -> int | None:
    """Inverse of :func:`integer`, or None if g is not a game integer."""
    n = 0
    if g.right and not g.left:
        g, sign = conjugate(g), -1
    else:
        sign = 1
    while g is not ZERO:
        if g.right or len(g.left) != 1 or not g.plain:
            return None
        g = g.left[0]
        n += 1
    return sign * n


def conjugate(g: Game) -> Game:
    """Swap Left and Right (options and tombstones) at every subposition."""
    c = g._conj
    if c is None:
        c = mk_aug([conjugate(o) for o in g.right], [conjugate(o) for o in g.left],
                   g.right_tomb, g.left_tomb)
        g._conj = c
        c._conj = g
    return c


_sums: dict[tuple[Game, Game], Game] = {}


def add(g: Game, h: Game) -> Game:
    """Disjunctive sum.

    Ordinary options are the usual ones.  The sum carries a Left tombstone
    exactly when both summands are Left end-like and at least one of them has
    a Left tombstone (mirror on the Right), so the sum is Left end-like iff
    both summands are.
    """
    if g is ZERO:
        return h
    if h is ZERO:
        return g
    if h.key < g.key:
        g, h = h, g
    k = (g, h)
    s = _sums.get(k)
    if s is not None:
        return s
    charge()
    left = [add(gl, h) for gl in g.left] + [add(g, hl) for hl in h.left]
    right = [add(gr, h) for gr in g.right] + [add(g, hr) for hr in h.right]
    lt = g.left_end_like and h.left_end_like and (g.left_tomb or h.left_tomb)
    rt = g.right_end_like and h.right_end_like and (g.right_tomb or h.right_tomb)
    s = mk_aug(left, right, lt, rt)
    _sums[k] = s
    return s


def add_all(games: Iterable[Game]) -> Game:
    s = ZERO
    for g in games:
        s = add(s, g)
    return s


def times(n: int, g: Game) -> Game:
    """``n`` copies of g added together (n >= 0)."""
    if n < 0:
        raise ValueError("negative repetition count")
    s = ZERO
    for _ in range(n):
        s = add(s, g)
    return s


def birthday(g: Game) -> int:
    return g.birthday


def subpositions(g: Game) -> Iterator[Game]:
    """Every distinct subposition of g, g itself first."""
    seen = {g}
    stack = [g]
    while stack:
        x = stack.pop()
        yield x
        for o in chain(x.left, x.right):
            if o not in seen:
                seen.add(o)
                stack.append(o)


class Classification(NamedTuple):
    is_left_end: bool
    is_right_end: bool
    is_dead_left_end: bool
    is_dead_right_end: bool
    is_dicot: bool


def is_dead_left_end(g: Game) -> bool:
    return all(not x.left for x in subpositions(g))


def is_dead_right_end(g: Game) -> bool:
    return all(not x.right for x in subpositions(g))


def is_dicot(g: Game) -> bool:
    return all(bool(x.left) == bool(x.right) for x in subpositions(g))


def classify(g: Game) -> Classification:
    return Classification(
        is_left_end=not g.left,
        is_right_end=not g.right,
        is_dead_left_end=is_dead_left_end(g),
        is_dead_right_end=is_dead_right_end(g),
        is_dicot=is_dicot(g),
    )


def outcome(g: Game) -> OutcomePair:
    """Misère outcome pair; a player who is end-like on their turn wins.

    Tombstones are never moved to; they only make a side end-like.
    """
    o = g._outcome
    if o is None:
        ls = Player.LEFT if g.left_end_like or any(
            outcome(x).right_start is Player.LEFT for x in g.left) else Player.RIGHT
        rs = Player.RIGHT if g.right_end_like or any(
            outcome(x).left_start is Player.RIGHT for x in g.right) else Player.LEFT
        o = g._outcome = OutcomePair(ls, rs)
    return o


def outcome_class(g: Game) -> Outcome:
    return outcome(g).outcome


# --------------------------------------------------------------------------
# enumeration and sampling

def _subsets(items: list[Game], min_size: int = 0) -> Iterator[tuple[Game, ...]]:
    for k in range(min_size, len(items) + 1):
        yield from combinations(items, k)


def born_by(day: int) -> list[Game]:
    """All plain forms of birthday <= day (1, 4, 256 for days 0, 1, 2)."""
    if day > 2:
        raise ValueError("forms born by day 3 are too numerous to list; use random_form")
    forms = [ZERO]
    for _ in range(day):
        prev = forms
        forms = [mk_game(a, b) for a in _subsets(prev) for b in _subsets(prev)]
    return sorted(set(forms))


def dicots_born_by(day: int, max_options: int | None = None) -> list[Game]:
    """Dicots of birthday <= day.

    ``max_options`` caps the number of options per side in the newest layer,
    which keeps day 3 tractable (the full day-3 set has ~10^6 members).
    """
    forms = [ZERO]
    for d in range(day):
        prev = forms
        cap = max_options if d == day - 1 and max_options is not None else len(prev)
        sides = [s for s in _subsets(prev, 1) if len(s) <= cap]
        forms = [ZERO] + [mk_game(a, b) for a in sides for b in sides]
    return sorted(set(forms))


def aug_born_by_day1() -> list[Game]:
    """The 16 augmented forms whose options are drawn from {0}."""
    out = []
    for lt in (False, True):
        for rt in (False, True):
            for a in ((), (ZERO,)):
                for b in ((), (ZERO,)):
                    out.append(mk_aug(a, b, lt, rt))
    return sorted(out)


def random_form(rng: random.Random, day: int, max_options: int = 3, *,
                dicot: bool = False, tomb_rate: float = 0.0) -> Game:
    """A random form of birthday <= day.

    With ``dicot`` every subposition gets options on both sides or on neither.
    ``tomb_rate`` is the per-subposition chance of each tombstone flag.
    """
    if day == 0:
        return ZERO
    if dicot:
        if rng.random() < 0.15:
            return ZERO
        nl = rng.randint(1, max_options)
        nr = rng.randint(1, max_options)
    else:
        nl = rng.randint(0, max_options)
        nr = rng.randint(0, max_options)
    kids = lambda n: [random_form(rng, rng.randint(0, day - 1), max_options,
                                  dicot=dicot, tomb_rate=tomb_rate) for _ in range(n)]
    return mk_aug(kids(nl), kids(nr), rng.random() < tomb_rate, rng.random() < tomb_rate)
