"""Reduction of augmented forms to simplest form modulo a universe.

Subpositions are reduced bottom-up.  At each node three rewrites run to a
fixpoint: dominated options are removed, reversible options are bypassed
(an end-reversible option becomes a tombstone), and tombstones whose removal
keeps the form equivalent are dropped.

By default a rewrite needs a proven comparison.  With ``assume_bounded``
bounded comparisons are accepted too and the trace records the bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .games import Game, mk_aug, node_budget
from .order import equiv, geq
from .universes import UniverseSpec
from .verdicts import Status, accepts


@dataclass(frozen=True)
class Step:
    """One local rewrite ``before -> after``.

    ``kind`` is remove_dominated, bypass, end_reverse or drop_tombstone;
    ``option`` is the option acted on and ``target`` the reversal target.
    """

    kind: str
    side: str
    before: Game
    after: Game
    option: Game | None = None
    target: Game | None = None
    bounded: bool = False


@dataclass
class ReductionTrace:
    steps: list[Step] = field(default_factory=list)
    bound: int | None = None

    @property
    def mode(self) -> str:
        return "bounded" if any(s.bounded for s in self.steps) else "exact"


class _Reducer:
    def __init__(self, u: UniverseSpec, assume_bounded: bool):
        self.u = u
        self.assume_bounded = assume_bounded
        self.steps: list[Step] = []

    def ok(self, status: Status) -> tuple[bool, bool]:
        return accepts(status, self.assume_bounded), status is Status.BOUNDED

    def record(self, kind, side, before, after, option=None, target=None, bounded=False):
        self.steps.append(Step(kind, side, before, after, option, target, bounded))

    # ---- the three rewrites, each returning a new form or the same one

    def remove_dominated(self, g: Game) -> Game:
        u = self.u
        left = list(g.left)
        for x in list(left):
            for y in left:
                if y is not x:
                    ok, b = self.ok(geq(u, y, x).status)
                    if ok:
                        left.remove(x)
                        new = mk_aug(left, g.right, g.left_tomb, g.right_tomb)
                        self.record("remove_dominated", "L", g, new, x, y, b)
                        return new
        right = list(g.right)
        for x in list(right):
            for y in right:
                if y is not x:
                    ok, b = self.ok(geq(u, x, y).status)
                    if ok:
                        right.remove(x)
                        new = mk_aug(g.left, right, g.left_tomb, g.right_tomb)
                        self.record("remove_dominated", "R", g, new, x, y, b)
                        return new
        return g

    def bypass_reversible(self, g: Game) -> Game:
        u = self.u
        for x in g.left:
            for t in x.right:
                ok, b = self.ok(geq(u, g, t).status)
                if not ok:
                    continue
                left = [o for o in g.left if o is not x] + list(t.left)
                if t.left_end_like:
                    new = mk_aug(left, g.right, True, g.right_tomb)
                    self.record("end_reverse", "L", g, new, x, t, b)
                else:
                    new = mk_aug(left, g.right, g.left_tomb, g.right_tomb)
                    self.record("bypass", "L", g, new, x, t, b)
                return new
        for x in g.right:
            for t in x.left:
                ok, b = self.ok(geq(u, t, g).status)
                if not ok:
                    continue
                right = [o for o in g.right if o is not x] + list(t.right)
                if t.right_end_like:
                    new = mk_aug(g.left, right, g.left_tomb, True)
                    self.record("end_reverse", "R", g, new, x, t, b)
                else:
                    new = mk_aug(g.left, right, g.left_tomb, g.right_tomb)
                    self.record("bypass", "R", g, new, x, t, b)
                return new
        return g

    def prune_tombstones(self, g: Game) -> Game:
        if g.left_tomb:
            new = mk_aug(g.left, g.right, False, g.right_tomb)
            ok, b = self.ok(equiv(self.u, g, new).status)
            if ok:
                self.record("drop_tombstone", "L", g, new, bounded=b)
                return new
        if g.right_tomb:
            new = mk_aug(g.left, g.right, g.left_tomb, False)
            ok, b = self.ok(equiv(self.u, g, new).status)
            if ok:
                self.record("drop_tombstone", "R", g, new, bounded=b)
                return new
        return g

    def local(self, g: Game) -> Game:
        while True:
            new = self.remove_dominated(g)
            if new is g:
                new = self.bypass_reversible(g)
            if new is g:
                new = self.prune_tombstones(g)
            if new is g:
                return g
            g = new


_memo: dict[tuple, dict[Game, tuple[Game, tuple[Step, ...]]]] = {}


def simplest_form(u: UniverseSpec, a: Game, assume_bounded: bool = False
                  ) -> tuple[Game, ReductionTrace]:
    """The simplest form of a modulo u, and the rewrites that produced it."""
    memo = _memo.setdefault((u.fingerprint, assume_bounded), {})
    with node_budget(u.node_budget):
        s = _simplify(u, assume_bounded, memo, a)
    steps: list[Step] = []
    seen: set[Game] = set()
    _collect(memo, a, steps, seen)
    bounded = any(st.bounded for st in steps)
    return s, ReductionTrace(steps, u.end_bound if bounded else None)


def _simplify(u, assume_bounded, memo, a: Game) -> Game:
    hit = memo.get(a)
    if hit is not None:
        return hit[0]
    left = [_simplify(u, assume_bounded, memo, o) for o in a.left]
    right = [_simplify(u, assume_bounded, memo, o) for o in a.right]
    r = _Reducer(u, assume_bounded)
    g = mk_aug(left, right, a.left_tomb, a.right_tomb)
    g = r.local(g)
    memo[a] = (g, tuple(r.steps))
    return g


def _collect(memo, a: Game, out: list[Step], seen: set[Game]) -> None:
    # children first, matching the order the rewrites happened in
    if a in seen:
        return
    seen.add(a)
    for o in a.left + a.right:
        _collect(memo, o, out, seen)
    out.extend(memo[a][1])


def replay(a: Game, trace: ReductionTrace) -> Game:
    """Rebuild the output of :func:`simplest_form` from its trace alone."""
    rewrite = {s.before: s.after for s in trace.steps}
    cache: dict[Game, Game] = {}

    def go(x: Game) -> Game:
        if x in cache:
            return cache[x]
        y = mk_aug([go(o) for o in x.left], [go(o) for o in x.right],
                   x.left_tomb, x.right_tomb)
        while y in rewrite:
            y = rewrite[y]
        cache[x] = y
        return y

    return go(a)


def remove_dominated(u: UniverseSpec, a: Game, assume_bounded: bool = False) -> Game:
    """Top-level domination removal only (options are not simplified)."""
    r = _Reducer(u, assume_bounded)
    while True:
        b = r.remove_dominated(a)
        if b is a:
            return a
        a = b


def bypass_reversible(u: UniverseSpec, a: Game, assume_bounded: bool = False) -> Game:
    """Top-level bypassing of reversible options, tombstoning end-reversible ones."""
    r = _Reducer(u, assume_bounded)
    while True:
        b = r.bypass_reversible(a)
        if b is a:
            return a
        a = b


def prune_tombstones(u: UniverseSpec, a: Game, assume_bounded: bool = False) -> Game:
    r = _Reducer(u, assume_bounded)
    while True:
        b = r.prune_tombstones(a)
        if b is a:
            return a
        a = b


def is_reduced_form(u: UniverseSpec, a: Game) -> bool:
    """No dominated or reversible option and no removable tombstone, anywhere.

    Checked with proven comparisons only.
    """
    from .games import subpositions

    for x in subpositions(a):
        r = _Reducer(u, False)
        if r.remove_dominated(x) is not x or r.bypass_reversible(x) is not x \
                or r.prune_tombstones(x) is not x:
            return False
    return True
