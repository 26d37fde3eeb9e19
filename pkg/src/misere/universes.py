"""Universe descriptors, their Left ends, and Left/Right strength.

Four kinds are supported: the dicot universe D, the dead-ending universe E,
full misère M, and the universal closure ``cl(X1; ...)`` of some Left ends.
The Left ends of a closure are exactly the sums of Left-end subpositions of
the generators and of their conjugates (dicotic construction never makes an
end, and subpositions of sums are sums of subpositions).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import combinations

from .games import (
    ZERO, Game, Player, add, as_integer, born_by, conjugate, is_dead_left_end,
    is_dead_right_end, is_dicot, mk_game, node_budget, outcome, subpositions, times,
)
from .verdicts import Status, StrongVerdict

DEFAULT_END_BOUND = 3
DEFAULT_NODE_BUDGET = 10**6


class Kind(enum.Enum):
    DICOT = "D"
    DEAD_ENDING = "E"
    FULL = "M"
    CLOSURE = "cl"


@dataclass(frozen=True)
class UniverseSpec:
    kind: Kind
    generators: tuple[Game, ...] = ()
    end_bound: int = DEFAULT_END_BOUND
    node_budget: int = DEFAULT_NODE_BUDGET
    _basis: tuple[Game, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if self.kind is Kind.CLOSURE:
            for g in self.generators:
                if not g.plain or g.left:
                    raise ValueError(f"closure generator {g} is not a plain Left end")
            object.__setattr__(self, "generators", tuple(sorted(set(self.generators))))
            object.__setattr__(self, "_basis", _end_basis(self.generators))
        elif self.generators:
            raise ValueError(f"{self.kind.value} takes no generators")

    @classmethod
    def named(cls, name: str, **kwargs) -> UniverseSpec:
        return cls(Kind(name), **kwargs)

    @classmethod
    def end_closure(cls, generators: Iterable[Game], **kwargs) -> UniverseSpec:
        return cls(Kind.CLOSURE, tuple(generators), **kwargs)

    def with_bound(self, end_bound: int) -> UniverseSpec:
        return UniverseSpec(self.kind, self.generators, end_bound, self.node_budget)

    @property
    def fingerprint(self) -> tuple:
        return (self.kind.value, tuple(g.key for g in self.generators), self.end_bound)

    @property
    def basis(self) -> tuple[Game, ...]:
        """Nonzero Left ends whose sums give every Left end (closures only)."""
        return self._basis

    def __str__(self) -> str:
        from .notation import universe_text
        return universe_text(self)


DICOT = UniverseSpec(Kind.DICOT)
DEAD_ENDING = UniverseSpec(Kind.DEAD_ENDING)
FULL_MISERE = UniverseSpec(Kind.FULL)


def _end_basis(generators: tuple[Game, ...]) -> tuple[Game, ...]:
    ends = set()
    for g in generators:
        for root in (g, conjugate(g)):
            ends.update(x for x in subpositions(root) if not x.left and x is not ZERO)
    return tuple(sorted(ends))


def has_exact_ends(u: UniverseSpec) -> bool:
    """True when the universe's only Left end is 0, so strength is decidable."""
    return u.kind is Kind.DICOT or (u.kind is Kind.CLOSURE and not u.basis)


# --------------------------------------------------------------------------
# Left ends

def dead_left_ends(bound: int) -> list[Game]:
    ends = [ZERO]
    for _ in range(bound):
        prev = ends
        ends = sorted({mk_game((), s) for k in range(len(prev) + 1)
                       for s in combinations(prev, k)})
    return ends


_closure_cache: dict[tuple, list[Game]] = {}


def additive_closure(basis: Iterable[Game], bound: int) -> list[Game]:
    """Every sum of basis elements (with repetition) of birthday <= bound, plus 0."""
    basis = sorted(set(b for b in basis if b is not ZERO))
    key = (tuple(b.key for b in basis), bound)
    hit = _closure_cache.get(key)
    if hit is not None:
        return hit
    found = {ZERO}
    frontier = [ZERO]
    while frontier:
        nxt = []
        for e in frontier:
            for b in basis:
                if e.birthday + b.birthday <= bound:
                    s = add(e, b)
                    if s not in found:
                        found.add(s)
                        nxt.append(s)
        frontier = nxt
    out = sorted(found)
    _closure_cache[key] = out
    return out


def _full_left_ends(bound: int) -> Iterator[Game]:
    yield ZERO
    for d in range(1, bound + 1):
        pool = born_by(d - 1)
        newest = [g for g in pool if g.birthday == d - 1]
        older = [g for g in pool if g.birthday < d - 1]
        # every set of Right options containing at least one newest form,
        # small sets first so searches hit short witnesses early
        for k in range(1, len(pool) + 1):
            for j in range(1, min(k, len(newest)) + 1):
                for a in combinations(newest, j):
                    for b in combinations(older, k - j):
                        yield mk_game((), a + b)


def left_ends_up_to(u: UniverseSpec, bound: int | None = None) -> Iterator[Game]:
    """Left ends of u with birthday <= bound, duplicate-free, by birthday.

    Lazy: full misère at bound 3 has 2^256 of them.
    """
    b = u.end_bound if bound is None else bound
    if u.kind is Kind.DICOT:
        yield ZERO
    elif u.kind is Kind.DEAD_ENDING:
        yield from sorted(dead_left_ends(b))
    elif u.kind is Kind.FULL:
        if b > 3:
            raise ValueError("full misère Left ends beyond birthday 3 cannot be listed")
        yield from _full_left_ends(b)
    else:
        yield from additive_closure(u.basis, b)


def member(u: UniverseSpec, g: Game) -> bool:
    """Membership of a plain form, decided through its end subpositions."""
    if not g.plain:
        raise ValueError("membership is only decided for plain forms")
    if u.kind is Kind.FULL:
        return True
    if u.kind is Kind.DICOT:
        return is_dicot(g)
    if u.kind is Kind.DEAD_ENDING:
        return all((x.left or is_dead_left_end(x)) and (x.right or is_dead_right_end(x))
                   for x in subpositions(g))
    for x in subpositions(g):
        if not x.left and x not in set(additive_closure(u.basis, x.birthday)):
            return False
        if not x.right and conjugate(x) not in set(additive_closure(u.basis, x.birthday)):
            return False
    return True


# --------------------------------------------------------------------------
# weakness

@dataclass(frozen=True)
class WeakCertificate:
    """``kind`` is one of weakening_end, full_misere, not_weak, unknown."""

    kind: str
    witness: Game | None = None
    bound: int | None = None

    @property
    def weak(self) -> bool | None:
        if self.kind in ("weakening_end", "full_misere"):
            return True
        if self.kind == "not_weak":
            return False
        return None


def _weakening_end(x: Game) -> bool:
    return not x.left and any((as_integer(r) or 0) >= 2 for r in x.right)


_weakening_cache: dict[tuple, WeakCertificate] = {}


def contains_weakening_end(u: UniverseSpec) -> WeakCertificate:
    """Look for a Left end with a Right option to an integer n >= 2."""
    if u.kind is Kind.FULL:
        return WeakCertificate("full_misere")
    hit = _weakening_cache.get(u.fingerprint)
    if hit is not None:
        return hit
    cert = WeakCertificate("unknown", bound=u.end_bound)
    if u.kind is Kind.CLOSURE:
        for x in list(u.generators) + list(u.basis) + list(left_ends_up_to(u)):
            if _weakening_end(x):
                cert = WeakCertificate("weakening_end", witness=x)
                break
    _weakening_cache[u.fingerprint] = cert
    return cert


# --------------------------------------------------------------------------
# strength

_strong_memo: dict[tuple, dict[Game, StrongVerdict]] = {}


def _loses_left_first(g: Game, x: Game) -> bool:
    return outcome(add(g, x)).left_start is Player.RIGHT


def is_left_strong(u: UniverseSpec, a: Game) -> StrongVerdict:
    """Does Left, moving first, win ``a + X`` for every Left end X of u?

    Exact when a is Left end-like, when u is weak (full misère or holding a
    weakening end) and when 0 is u's only Left end; otherwise the Left ends
    up to ``u.end_bound`` are searched and success is reported as bounded.
    """
    memo = _strong_memo.setdefault(u.fingerprint, {})
    v = memo.get(a)
    if v is not None:
        return v
    with node_budget(u.node_budget):
        v = _left_strong(u, a)
    memo[a] = v
    return v


def _left_strong(u: UniverseSpec, a: Game) -> StrongVerdict:
    if a.left_end_like:
        return StrongVerdict.proven("end-like")
    if u.kind is Kind.FULL:
        x = mk_game((), [_integer(a.birthday)])
        _check_witness(a, x)
        return StrongVerdict.refuted(x, "weak: full misère")
    cert = contains_weakening_end(u)
    if cert.kind == "weakening_end":
        x = times(a.birthday, cert.witness)
        _check_witness(a, x)
        return StrongVerdict.refuted(x, "weak: weakening end")
    if has_exact_ends(u):
        if _loses_left_first(a, ZERO):
            return StrongVerdict.refuted(ZERO, "only Left end is 0")
        return StrongVerdict.proven("only Left end is 0")
    for x in left_ends_up_to(u):
        if _loses_left_first(a, x):
            return StrongVerdict.refuted(x, "end search")
    return StrongVerdict.bounded(u.end_bound)


def _integer(n: int) -> Game:
    from .games import integer
    return integer(n)


def _check_witness(a: Game, x: Game) -> None:
    if not _loses_left_first(a, x):
        raise AssertionError(f"weakness witness {x} does not refute {a}")


def is_right_strong(u: UniverseSpec, a: Game) -> StrongVerdict:
    v = is_left_strong(u, conjugate(a))
    if v.witness is not None:
        return StrongVerdict(v.status, conjugate(v.witness), v.bound, v.rule)
    return v


def is_weak(u: UniverseSpec) -> WeakCertificate:
    """Weakness certificate: a weakening end, the full-misère rule, or a
    non-end-like form proven Left strong.  Unknown otherwise."""
    cert = contains_weakening_end(u)
    if cert.weak:
        return cert
    for s in _strong_candidates(u):
        if not s.left_end_like and is_left_strong(u, s).status is Status.TRUE:
            return WeakCertificate("not_weak", witness=s)
    return WeakCertificate("unknown", bound=u.end_bound)


def _strong_candidates(u: UniverseSpec) -> Iterator[Game]:
    small = [g for g in born_by(2) if member(u, g)]
    for g in small:
        if g is not ZERO:
            yield add(g, conjugate(g))
    yield from small
