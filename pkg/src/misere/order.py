"""Universe-relative comparison of augmented forms.

:func:`geq` runs the recursive comparison test: the maintenance conditions
(a)-(b) on options, then the proviso (c)-(d) on Left/Right strength.  It is
only valid for universes.  :func:`oracle_geq` is the definitional check
``o(G+X) >= o(H+X)`` over an explicit set of X, and works for any set of
games, universe or not; tests use it as an independent reference.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .games import Game, Player, add, node_budget, outcome
from .universes import UniverseSpec, is_left_strong, is_right_strong
from .verdicts import Failure, Status, TriVerdict, join, meet

_memo: dict[tuple, dict[tuple[Game, Game], TriVerdict]] = {}

_TRUE = TriVerdict(Status.TRUE)


def clear_memo() -> None:
    _memo.clear()


def geq(u: UniverseSpec, g: Game, h: Game) -> TriVerdict:
    """``g >= h`` modulo u."""
    memo = _memo.setdefault(u.fingerprint, {})
    with node_budget(u.node_budget):
        return _geq(u, memo, g, h)


def _geq(u: UniverseSpec, memo: dict, g: Game, h: Game) -> TriVerdict:
    if g is h:
        return _TRUE
    key = (g, h)
    v = memo.get(key)
    if v is not None:
        return v
    status = Status.TRUE
    failure = None

    # (a) every g^R is answered by some h^R <= it, or reverses through g^RL >= h
    for gr in g.right:
        best = Status.FALSE
        for hr in h.right:
            best = join(best, _geq(u, memo, gr, hr).status)
            if best is Status.TRUE:
                break
        if best is not Status.TRUE:
            for grl in gr.left:
                best = join(best, _geq(u, memo, grl, h).status)
                if best is Status.TRUE:
                    break
        status = meet(status, best)
        if status is Status.FALSE:
            failure = Failure("a", option=gr)
            break

    # (b) mirror for h^L
    if status is not Status.FALSE:
        for hl in h.left:
            best = Status.FALSE
            for gl in g.left:
                best = join(best, _geq(u, memo, gl, hl).status)
                if best is Status.TRUE:
                    break
            if best is not Status.TRUE:
                for hlr in hl.right:
                    best = join(best, _geq(u, memo, g, hlr).status)
                    if best is Status.TRUE:
                        break
            status = meet(status, best)
            if status is Status.FALSE:
                failure = Failure("b", option=hl)
                break

    # (c), (d): the proviso
    if status is not Status.FALSE and h.left_end_like:
        sv = is_left_strong(u, g)
        status = meet(status, sv.status)
        if status is Status.FALSE:
            failure = Failure("c", witness=sv.witness)
    if status is not Status.FALSE and g.right_end_like:
        sv = is_right_strong(u, h)
        status = meet(status, sv.status)
        if status is Status.FALSE:
            failure = Failure("d", witness=sv.witness)

    v = TriVerdict(status, failure, u.end_bound if status is Status.BOUNDED else None)
    memo[key] = v
    return v


def leq(u: UniverseSpec, g: Game, h: Game) -> TriVerdict:
    return geq(u, h, g)


def equiv(u: UniverseSpec, g: Game, h: Game) -> TriVerdict:
    return geq(u, g, h) & geq(u, h, g)


def strictly_greater(u: UniverseSpec, g: Game, h: Game) -> TriVerdict:
    """``g > h``: g >= h and not h >= g.

    The second half can only be refuted or established, so a bounded
    ``h >= g`` leaves the answer undetermined; that case is reported as
    BOUNDED with no failure.
    """
    fwd = geq(u, g, h)
    if fwd.proven_false:
        return fwd
    back = geq(u, h, g)
    if back.proven_true:
        return TriVerdict(Status.FALSE, Failure("converse"))
    if back.status is Status.BOUNDED:
        return TriVerdict(Status.BOUNDED, bound=u.end_bound)
    return fwd


def comparable(u: UniverseSpec, g: Game, h: Game) -> TriVerdict:
    a, b = geq(u, g, h), geq(u, h, g)
    return a if a.status >= b.status else b


def proviso_holds(u: UniverseSpec, g: Game, h: Game) -> TriVerdict:
    """Conditions (c) and (d) alone."""
    status = Status.TRUE
    if h.left_end_like:
        sv = is_left_strong(u, g)
        if not sv.holds:
            return TriVerdict(Status.FALSE, Failure("c", witness=sv.witness))
        status = meet(status, sv.status)
    if g.right_end_like:
        sv = is_right_strong(u, h)
        if not sv.holds:
            return TriVerdict(Status.FALSE, Failure("d", witness=sv.witness))
        status = meet(status, sv.status)
    return TriVerdict(status, bound=u.end_bound if status is Status.BOUNDED else None)


def verify_failure(u: UniverseSpec, g: Game, h: Game, v: TriVerdict) -> bool:
    """Re-evaluate the condition named in a proven-false verdict."""
    f = v.failure
    if f is None:
        return False
    if f.condition == "a":
        return f.option in g.right and not any(
            geq(u, f.option, hr).holds for hr in h.right) and not any(
            geq(u, x, h).holds for x in f.option.left)
    if f.condition == "b":
        return f.option in h.left and not any(
            geq(u, gl, f.option).holds for gl in g.left) and not any(
            geq(u, g, x).holds for x in f.option.right)
    if f.condition == "c":
        return h.left_end_like and not f.witness.left and \
            outcome(add(g, f.witness)).left_start is Player.RIGHT
    if f.condition == "d":
        return g.right_end_like and not f.witness.right and \
            outcome(add(h, f.witness)).right_start is Player.LEFT
    return False


# --------------------------------------------------------------------------
# definitional oracle

@dataclass(frozen=True)
class OracleResult:
    holds: bool
    witness: Game | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.holds


def oracle_geq(domain: Iterable[Game], g: Game, h: Game,
               bound: int | None = None) -> OracleResult:
    """``o(g + X) >= o(h + X)`` for every X in the domain (birthday <= bound)."""
    n = 0
    for x in domain:
        if bound is not None and x.birthday > bound:
            continue
        n += 1
        if not outcome(add(g, x)).outcome >= outcome(add(h, x)).outcome:
            return OracleResult(False, x, n)
    return OracleResult(True, None, n)


def oracle_equiv(domain: Iterable[Game], g: Game, h: Game,
                 bound: int | None = None) -> OracleResult:
    domain = list(domain)
    r = oracle_geq(domain, g, h, bound)
    return r if not r else oracle_geq(domain, h, g, bound)


def oracle_left_strong(domain: Iterable[Game], g: Game) -> bool:
    """Left wins ``g + X`` moving first for every Left end X in the domain."""
    return all(outcome(add(g, x)).left_start is Player.LEFT for x in domain if not x.left)


def oracle_right_strong(domain: Iterable[Game], g: Game) -> bool:
    return all(outcome(add(g, x)).right_start is Player.RIGHT for x in domain if not x.right)


def maintenance_holds(domain: Iterable[Game], g: Game, h: Game,
                      bound: int | None = None) -> bool:
    """Conditions (a) and (b), with the inner comparisons decided by the oracle."""
    domain = list(domain)
    ge = lambda x, y: oracle_geq(domain, x, y, bound).holds
    for gr in g.right:
        if not (any(ge(gr, hr) for hr in h.right) or any(ge(grl, h) for grl in gr.left)):
            return False
    for hl in h.left:
        if not (any(ge(gl, hl) for gl in g.left) or any(ge(g, hlr) for hlr in hl.right)):
            return False
    return True


def oracle_proviso(domain: Iterable[Game], g: Game, h: Game) -> bool:
    domain = list(domain)
    if h.left_end_like and not oracle_left_strong(domain, g):
        return False
    if g.right_end_like and not oracle_right_strong(domain, h):
        return False
    return True

