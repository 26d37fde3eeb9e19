"""Invertibility: the recursive test, the day-1 census, end predicates and
the reduced-universe checklist.

A form is invertible modulo a universe exactly when its simplest form s has
``s + ~s`` Left strong and every option of s is itself invertible; the
inverse is then always the conjugate.  Whether a tombstoned form belongs to
the hatted universe is never computed here: callers pass it in as
:class:`UhatAssertions`.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass, field

from .games import (
    NEG_ONE, ONE, STAR, ZERO, Game, Player, add, aug_born_by_day1, conjugate, mk_aug,
    node_budget, outcome,
)
from .notation import game
from .order import equiv
from .simplest import simplest_form
from .universes import (
    Kind, UniverseSpec, has_exact_ends, is_left_strong, is_weak, left_ends_up_to, member,
)
from .verdicts import Status, meet

TOMB_STAR = game("{#,0|0}")
TOMB_ONE = game("{#,0|.}")
TOMB_BOTH = game("{#,0|0,#}")


# --------------------------------------------------------------------------
# end predicates

_dis: dict[Game, bool] = {}
_sk: dict[Game, bool] = {}
_ssk: dict[Game, bool] = {}


def _left_loses_first(g: Game) -> bool:
    return outcome(g).left_start is Player.RIGHT


def is_disintegrator(g: Game) -> bool:
    """Some Right option is not a Left end and each of its Left options is
    lost by Left moving first or is again a disintegrator."""
    v = _dis.get(g)
    if v is None:
        v = any(r.left and all(_left_loses_first(x) or is_disintegrator(x) for x in r.left)
                for r in g.right)
        _dis[g] = v
    return v


def is_starkiller(g: Game) -> bool:
    """Some Right option is won by Right moving first and each of its Left
    options is lost by Left moving first or is again a starkiller."""
    v = _sk.get(g)
    if v is None:
        v = any(outcome(r).right_start is Player.RIGHT
                and all(_left_loses_first(x) or is_starkiller(x) for x in r.left)
                for r in g.right)
        _sk[g] = v
    return v


def is_super_starkiller(g: Game) -> bool:
    """Both conditions at once: the Right option is not a Left end and is won
    by Right moving first."""
    v = _ssk.get(g)
    if v is None:
        v = any(r.left and outcome(r).right_start is Player.RIGHT
                and all(_left_loses_first(x) or is_super_starkiller(x) for x in r.left)
                for r in g.right)
        _ssk[g] = v
    return v


PREDICATES: dict[str, Callable[[Game], bool]] = {
    "disintegrator": is_disintegrator,
    "starkiller": is_starkiller,
    "super_starkiller": is_super_starkiller,
}

# the day-1 form whose invertibility each predicate governs
PROBES = {"disintegrator": NEG_ONE, "starkiller": STAR, "super_starkiller": TOMB_STAR}


def probe_right_wins(kind: str, x: Game) -> bool:
    """Does Right, moving first, win ``probe + x``?"""
    return outcome(add(PROBES[kind], x)).right_start is Player.RIGHT


def predicate_lemma_oracle(kind: str, x: Game) -> bool:
    """Check the game-playing claim that goes with a predicate.

    If x satisfies the predicate, Right moving first must win ``probe + x``;
    if it does not and Left wins x moving first, Left must win instead.
    Raises ValueError when x is not a Left end or neither claim applies.
    """
    if x.left:
        raise ValueError(f"{x} is not a Left end")
    if PREDICATES[kind](x):
        return probe_right_wins(kind, x)
    if outcome(x).left_start is Player.LEFT:
        return not probe_right_wins(kind, x)
    raise ValueError(f"no claim applies to {x}: not a {kind} and Left loses it moving first")


@dataclass(frozen=True)
class EndSearch:
    """Result of scanning a universe's Left ends for a predicate.

    ``exhaustive`` means the scanned ends are all of the universe's Left ends.
    """

    witness: Game | None
    bound: int
    exhaustive: bool
    scanned: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def search_end_with(u: UniverseSpec, kind: str, bound: int | None = None) -> EndSearch:
    pred = PREDICATES[kind]
    b = u.end_bound if bound is None else bound
    if u.kind is Kind.FULL:
        b = min(b, 3)
    n = 0
    with node_budget(u.node_budget):
        for x in left_ends_up_to(u, b):
            n += 1
            if pred(x):
                if not predicate_lemma_oracle(kind, x):
                    raise AssertionError(f"{kind} witness {x} fails its lemma check")
                return EndSearch(x, b, False, n)
    return EndSearch(None, b, has_exact_ends(u), n)


# --------------------------------------------------------------------------
# invertibility

@dataclass(frozen=True)
class InvertVerdict:
    """``inverse`` is the conjugate when not refuted; ``witness`` is the
    subposition and the Left end that refute it otherwise."""

    status: Status
    form: Game
    simplest: Game
    inverse: Game | None = None
    witness: tuple[Game, Game] | None = None
    bound: int | None = None
    checks: tuple[tuple[Game, Status], ...] = ()

    @property
    def holds(self) -> bool:
        return self.status.holds


_inv_memo: dict[tuple, dict[Game, InvertVerdict]] = {}


def is_invertible(u: UniverseSpec, a: Game, assume_bounded: bool = False) -> InvertVerdict:
    memo = _inv_memo.setdefault((u.fingerprint, assume_bounded), {})
    v = memo.get(a)
    if v is not None:
        return v
    with node_budget(u.node_budget):
        s, _ = simplest_form(u, a, assume_bounded)
        v = _invertible_simplest(u, s, assume_bounded, memo)
    if v.form is not a:
        v = InvertVerdict(v.status, a, s, conjugate(a) if v.holds else None,
                          v.witness, v.bound, v.checks)
    memo[a] = v
    return v


def _invertible_simplest(u, s: Game, assume_bounded: bool, memo) -> InvertVerdict:
    hit = memo.get(s)
    if hit is not None:
        return hit
    sv = is_left_strong(u, add(s, conjugate(s)))
    status = sv.status
    witness = (s, sv.witness) if sv.status is Status.FALSE else None
    checks = [(s, sv.status)]
    for o in s.left + s.right:
        if status is Status.FALSE:
            break
        ov = _invertible_simplest(u, o, assume_bounded, memo)
        checks.extend(ov.checks)
        status = meet(status, ov.status)
        if status is Status.FALSE:
            witness = ov.witness
    v = InvertVerdict(status, s, s, conjugate(s) if status.holds else None, witness,
                      u.end_bound if status is Status.BOUNDED else None, tuple(checks))
    memo[s] = v
    return v


def find_inverse(u: UniverseSpec, g: Game, candidates: Iterable[Game]) -> Game | None:
    """Definitional search: the first candidate h with ``g + h == 0`` proven."""
    for h in candidates:
        if equiv(u, add(g, h), ZERO).status is Status.TRUE:
            return h
    return None


def group_closure_check(u: UniverseSpec, g: Game, h: Game) -> bool:
    """Sums of invertibles are invertible, with inverse the sum of conjugates."""
    if not (is_invertible(u, g).holds and is_invertible(u, h).holds):
        raise ValueError("both forms must be invertible")
    v = is_invertible(u, add(g, h))
    return v.holds and v.inverse is add(conjugate(g), conjugate(h))


# --------------------------------------------------------------------------
# day 1

@dataclass(frozen=True)
class CensusClass:
    representative: Game
    members: tuple[Game, ...]


def _rep_key(g: Game):
    tombs = g.left_tomb + g.right_tomb
    lean = (len(g.left) + g.left_tomb) - (len(g.right) + g.right_tomb)
    return (tombs, len(g.left) + len(g.right), -lean, -g.left_tomb, g.key)


def day1_census(u: UniverseSpec | None = None) -> list[CensusClass]:
    """The 16 day-1 augmented forms modulo equivalence and conjugation.

    Needs a universe where comparison is exact on these forms (full misère
    by default); a bounded comparison never merges classes.
    """
    from .universes import FULL_MISERE

    u = FULL_MISERE if u is None else u
    forms = aug_born_by_day1()
    parent = {f: f for f in forms}

    def find(x):
        while parent[x] is not x:
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx is not ry:
            parent[max(rx, ry)] = min(rx, ry)

    for i, f in enumerate(forms):
        union(f, conjugate(f))
        for g in forms[i + 1:]:
            if equiv(u, f, g).status is Status.TRUE:
                union(f, g)
    groups: dict[Game, list[Game]] = {}
    for f in forms:
        groups.setdefault(find(f), []).append(f)
    classes = [CensusClass(min(m, key=_rep_key), tuple(sorted(m))) for m in groups.values()]
    return sorted(classes, key=lambda c: _rep_key(c.representative))


@dataclass(frozen=True)
class UhatAssertions:
    """Caller's claims about which tombstoned forms lie in the hatted universe."""

    present: frozenset[Game] = frozenset()
    absent: frozenset[Game] = frozenset()

    def __post_init__(self):
        if self.present & self.absent:
            raise ValueError("a form cannot be asserted both present and absent")

    @classmethod
    def of(cls, present: Iterable[Game] = (), absent: Iterable[Game] = ()) -> UhatAssertions:
        return cls(frozenset(present), frozenset(absent))

    def lookup(self, u: UniverseSpec, g: Game) -> bool | None:
        if g in self.present:
            return True
        if g in self.absent:
            return False
        if g.plain and member(u, g):
            return True
        return None

    def describe(self) -> dict[str, list[str]]:
        from .notation import to_text
        return {"present": sorted(to_text(g) for g in self.present),
                "absent": sorted(to_text(g) for g in self.absent)}


@dataclass(frozen=True)
class DayOneEntry:
    """``status`` is invertible, not_invertible, bounded, unknown or absent."""

    form: Game
    status: str
    witness: Game | None = None
    reason: str = ""


_GOVERNED = ((ONE, "disintegrator"), (STAR, "starkiller"), (TOMB_STAR, "super_starkiller"))


def day1_invertibles(u: UniverseSpec, uhat: UhatAssertions = UhatAssertions(),
                     bound: int | None = None) -> list[DayOneEntry]:
    out = []
    for g, kind in _GOVERNED:
        present = uhat.lookup(u, g)
        if present is False:
            out.append(DayOneEntry(g, "absent", reason="asserted not in the hatted universe"))
            continue
        found = search_end_with(u, kind, bound)
        if found.found:
            status, reason = "not_invertible", f"Left end {kind}"
        elif found.exhaustive:
            status, reason = "invertible", f"no {kind} Left end exists"
        else:
            status, reason = "bounded", f"no {kind} Left end up to birthday {found.bound}"
        if present is None:
            reason += "; membership in the hatted universe unresolved"
            if status != "not_invertible":
                status = "unknown"
        out.append(DayOneEntry(g, status, found.witness, reason))
    for g in (TOMB_ONE, TOMB_BOTH):
        present = uhat.lookup(u, g)
        if present:
            out.append(DayOneEntry(g, "invertible", reason="g + ~g is Left strong in every universe"))
        elif present is False:
            out.append(DayOneEntry(g, "absent", reason="asserted not in the hatted universe"))
        else:
            out.append(DayOneEntry(g, "unknown", reason="membership in the hatted universe unresolved"))
    return out


# --------------------------------------------------------------------------
# reduced universes

@dataclass(frozen=True)
class Item:
    """``verdict`` is satisfied, violated or unknown."""

    text: str
    verdict: str
    witness: Game | None = None
    reason: str = ""


@dataclass(frozen=True)
class ReducedReport:
    """``overall`` is reduced, not_reduced or inconclusive."""

    overall: str
    items: tuple[Item, ...]
    witness: Game | None = None
    rule: str = ""
    assumptions: UhatAssertions = field(default_factory=UhatAssertions)


_ITEM_TEXT = (
    "if 1 is in the hatted universe, some Left end is a disintegrator",
    "some Left end is a starkiller",
    "if {#,0|0} is in the hatted universe, some Left end is a super starkiller",
    "{#,0|.} is not in the hatted universe",
    "{#,0|0,#} is not in the hatted universe",
)


def _item_for(u, uhat, text, g, kind, bound) -> tuple[Item, Game | None]:
    present = uhat.lookup(u, g) if g is not STAR else True
    found = search_end_with(u, kind, bound)
    if found.found:
        return Item(text, "satisfied", found.witness, f"Left end {kind}"), None
    if present is False:
        return Item(text, "satisfied", None, "vacuous: asserted absent"), None
    if found.exhaustive and present:
        return Item(text, "violated", g, f"no {kind} Left end exists"), g
    why = f"no {kind} Left end up to birthday {found.bound}"
    if present is None:
        why += "; membership in the hatted universe unresolved"
    return Item(text, "unknown", None, why), None


def is_reduced(u: UniverseSpec, uhat: UhatAssertions = UhatAssertions(),
               bound: int | None = None) -> ReducedReport:
    """Check the five conditions that together say 0 is the only invertible.

    A weak universe is reduced outright; the items are still filled in.
    """
    b = u.end_bound if bound is None else bound
    items, witnesses = [], []
    for text, (g, kind) in zip(_ITEM_TEXT[:3], ((ONE, "disintegrator"), (STAR, "starkiller"),
                                               (TOMB_STAR, "super_starkiller"))):
        item, w = _item_for(u, uhat, text, g, kind, b)
        items.append(item)
        if w is not None:
            witnesses.append(w)
    for text, g in zip(_ITEM_TEXT[3:], (TOMB_ONE, TOMB_BOTH)):
        present = uhat.lookup(u, g)
        if present is False:
            items.append(Item(text, "satisfied", reason="asserted absent"))
        elif present:
            items.append(Item(text, "violated", g, "asserted present"))
            witnesses.append(g)
        else:
            items.append(Item(text, "unknown", reason="membership in the hatted universe unresolved"))
    cert = is_weak(u)
    if cert.weak:
        return ReducedReport("reduced", tuple(items), rule=f"weak ({cert.kind})", assumptions=uhat)
    if witnesses:
        return ReducedReport("not_reduced", tuple(items), witnesses[0], assumptions=uhat)
    if all(i.verdict == "satisfied" for i in items):
        return ReducedReport("reduced", tuple(items), assumptions=uhat)
    return ReducedReport("inconclusive", tuple(items), assumptions=uhat)


def left_strong_check(u: UniverseSpec, g: Game):
    """Shortcut for birthday-1 forms: invertible iff ``g + ~g`` is Left strong."""
    return is_left_strong(u, add(g, conjugate(g)))


__all__ = [
    "TOMB_STAR", "TOMB_ONE", "TOMB_BOTH", "PREDICATES", "is_disintegrator", "is_starkiller",
    "is_super_starkiller", "predicate_lemma_oracle", "probe_right_wins", "search_end_with",
    "EndSearch", "InvertVerdict", "is_invertible", "find_inverse", "group_closure_check",
    "CensusClass", "day1_census", "UhatAssertions", "DayOneEntry", "day1_invertibles",
    "Item", "ReducedReport", "is_reduced", "left_strong_check", "mk_aug",
]
