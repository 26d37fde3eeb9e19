"""Three-valued verdicts shared by comparison, reduction and invertibility.

A verdict is proven true, proven false (with a witness), or true only up to a
search bound.  Every relation in this package is monotone in the strength
checks it consults, so evaluating conjunctions with ``min`` and disjunctions
with ``max`` over the chain FALSE < BOUNDED < TRUE is sound: a FALSE result
stays false whatever the bounded checks really were.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any


class Status(enum.IntEnum):
    FALSE = 0
    BOUNDED = 1
    TRUE = 2

    @property
    def holds(self) -> bool:
        """Not refuted."""
        return self is not Status.FALSE

    @property
    def label(self) -> str:
        return {Status.FALSE: "proven false", Status.BOUNDED: "bounded true",
                Status.TRUE: "proven true"}[self]


def meet(*statuses: Status) -> Status:
    return min(statuses, default=Status.TRUE)


def join(*statuses: Status) -> Status:
    return max(statuses, default=Status.FALSE)


def accepts(status: Status, assume_bounded: bool) -> bool:
    return status is Status.TRUE or (assume_bounded and status is Status.BOUNDED)


@dataclass(frozen=True)
class StrongVerdict:
    """Whether a form is Left (or Right) strong in a universe.

    ``witness`` is the end X with ``o^L(G + X) = R`` when refuted;
    ``bound`` is the end birthday searched when only bounded.
    """

    status: Status
    witness: Any = None
    bound: int | None = None
    rule: str = ""

    @classmethod
    def proven(cls, rule: str = "") -> StrongVerdict:
        return cls(Status.TRUE, rule=rule)

    @classmethod
    def refuted(cls, witness, rule: str = "") -> StrongVerdict:
        return cls(Status.FALSE, witness=witness, rule=rule)

    @classmethod
    def bounded(cls, bound: int) -> StrongVerdict:
        return cls(Status.BOUNDED, bound=bound, rule="bounded end search")

    @property
    def holds(self) -> bool:
        return self.status.holds


@dataclass(frozen=True)
class Failure:
    """Which comparison condition failed, and on what.

    ``condition`` is one of ``a``..``d``; ``option`` is the unanswered
    option for (a)/(b); ``witness`` is the end that refutes strength for
    (c)/(d).
    """

    condition: str
    option: Any = None
    witness: Any = None


@dataclass(frozen=True)
class TriVerdict:
    status: Status
    failure: Failure | None = None
    bound: int | None = None

    @property
    def holds(self) -> bool:
        return self.status.holds

    @property
    def proven_true(self) -> bool:
        return self.status is Status.TRUE

    @property
    def proven_false(self) -> bool:
        return self.status is Status.FALSE

    def __and__(self, other: TriVerdict) -> TriVerdict:
        return self if self.status <= other.status else other
