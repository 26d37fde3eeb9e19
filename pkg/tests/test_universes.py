from __future__ import annotations

import random

import pytest

from misere.games import (
    NEG_ONE, ONE, STAR, ZERO, Player, add, aug_born_by_day1, born_by, dicots_born_by, integer,
    mk_game, outcome, random_form, times,
)
from misere.notation import game, parse_universe
from misere.order import geq, oracle_left_strong
from misere.universes import (
    DEAD_ENDING, DICOT, FULL_MISERE, Kind, UniverseSpec, contains_weakening_end,
    dead_left_ends, is_left_strong, is_right_strong, is_weak, left_ends_up_to, member,
)
from misere.verdicts import Status

END2 = game("{.|2}")
CL2 = parse_universe("cl({.|2})")


class TestSpec:
    def test_closure_validation(self):
        with pytest.raises(ValueError):
            UniverseSpec.end_closure([STAR])
        with pytest.raises(ValueError):
            UniverseSpec(Kind.DICOT, (NEG_ONE,))
        with pytest.raises(ValueError):
            UniverseSpec.end_closure([game("{#|0}")])

    def test_fingerprint_tracks_bound(self):
        assert CL2.fingerprint != CL2.with_bound(4).fingerprint
        assert CL2.with_bound(4).generators == CL2.generators


class TestLeftEnds:
    def test_dicot(self):
        assert list(left_ends_up_to(DICOT, 5)) == [ZERO]

    def test_dead_ending(self):
        want = {ZERO, NEG_ONE, game("{.|~1}"), game("{.|0,~1}")}
        assert set(left_ends_up_to(DEAD_ENDING, 2)) == want
        assert len(list(left_ends_up_to(DEAD_ENDING, 2))) == 4

    def test_dead_ends_match_brute_force(self):
        brute = {g for g in born_by(2) if not g.left and all(not x.left for x in _subs(g))}
        assert set(dead_left_ends(2)) == brute

    def test_closure(self):
        # ~1 is a subposition of the conjugate {-2|.}, so it is a Left end of the closure
        assert list(left_ends_up_to(CL2, 1)) == [ZERO, NEG_ONE]
        ends3 = list(left_ends_up_to(CL2, 3))
        assert END2 in ends3
        assert add(END2, END2) in list(left_ends_up_to(CL2, 6))
        assert add(END2, END2).birthday == 6

    def test_full_misere_matches_brute_force(self):
        brute = sorted(g for g in born_by(2) if not g.left)
        got = list(left_ends_up_to(FULL_MISERE, 2))
        assert sorted(got) == brute and len(got) == len(set(got))
        with pytest.raises(ValueError):
            list(left_ends_up_to(FULL_MISERE, 4))

    def test_sorted_by_birthday(self):
        for u in (DEAD_ENDING, CL2):
            bs = [g.birthday for g in left_ends_up_to(u, 3)]
            assert bs == sorted(bs)


def _subs(g):
    from misere.games import subpositions
    return list(subpositions(g))


class TestMembership:
    def test_examples(self):
        assert member(DICOT, STAR) and not member(DICOT, ONE)
        # {.|2} has the subposition 1, a Left end that is not dead
        assert not member(DEAD_ENDING, END2)
        assert member(DEAD_ENDING, game("{.|~2}")) and member(DEAD_ENDING, game("{1|~1}"))
        assert member(CL2, add(END2, END2))
        assert member(FULL_MISERE, game("{1|{.|5}}"))

    def test_closure_excludes_foreign_ends(self):
        assert not member(CL2, game("{.|3}"))
        assert not member(CL2, game("{.|*}"))
        assert member(CL2, game("{{.|2}|*}"))

    def test_closure_is_closed(self):
        rng = random.Random(9)
        mem = [g for g in born_by(2) if member(CL2, g)]
        for _ in range(60):
            a, b = rng.choice(mem), rng.choice(mem)
            assert member(CL2, add(a, b))
            assert member(CL2, mk_game([a], [b]))

    def test_rejects_tombstones(self):
        with pytest.raises(ValueError):
            member(DICOT, game("{#|0}"))


class TestWeakness:
    def test_weakening_ends(self):
        assert contains_weakening_end(CL2).witness is END2
        assert contains_weakening_end(parse_universe("cl({.|2,5})")).witness is game("{.|2,5}")
        assert contains_weakening_end(DICOT).kind == "unknown"
        assert contains_weakening_end(FULL_MISERE).kind == "full_misere"

    def test_is_weak(self):
        assert is_weak(FULL_MISERE).kind == "full_misere"
        assert is_weak(CL2).kind == "weakening_end"
        cert = is_weak(DICOT)
        assert cert.kind == "not_weak" and cert.witness is add(STAR, STAR)
        assert cert.weak is False

    def test_dead_ending_is_unknown(self):
        assert is_weak(DEAD_ENDING).weak is None

    def test_closure_witness_identity(self):
        rng = random.Random(11)
        n = 0
        while n < 100:
            g = random_form(rng, 3, 2)
            if not g.left:
                continue
            n += 1
            assert outcome(add(g, times(g.birthday, END2))).left_start is Player.RIGHT

    def test_full_misere_witness_identity(self):
        rng = random.Random(12)
        n = 0
        while n < 100:
            g = random_form(rng, 3, 2, tomb_rate=0.2)
            if g.left_end_like:
                continue
            n += 1
            x = mk_game([], [integer(g.birthday)])
            assert outcome(add(g, x)).left_start is Player.RIGHT


class TestStrength:
    def test_examples(self):
        assert is_left_strong(DICOT, add(STAR, STAR)).status is Status.TRUE
        v = is_left_strong(CL2, add(ONE, NEG_ONE))
        assert v.status is Status.FALSE and v.rule.startswith("weak")
        assert is_left_strong(FULL_MISERE, game("{#,0|0}")).status is Status.TRUE
        v = is_left_strong(DICOT, ONE)
        assert v.status is Status.FALSE and v.witness is ZERO

    def test_dead_ending_is_bounded(self):
        v = is_left_strong(DEAD_ENDING, add(ONE, NEG_ONE))
        assert v.status is Status.BOUNDED and v.bound == 3

    def test_witnesses_reverify(self):
        rng = random.Random(3)
        for u in (DICOT, DEAD_ENDING, FULL_MISERE, CL2):
            for _ in range(40):
                g = random_form(rng, 2, 2, tomb_rate=0.15)
                v = is_left_strong(u, g)
                if v.status is Status.FALSE:
                    assert not v.witness.left
                    assert outcome(add(g, v.witness)).left_start is Player.RIGHT
                w = is_right_strong(u, g)
                if w.status is Status.FALSE:
                    assert not w.witness.right
                    assert outcome(add(g, w.witness)).right_start is Player.LEFT

    def test_dicot_matches_oracle(self):
        domain = dicots_born_by(2)
        for g in domain:
            assert is_left_strong(DICOT, g).holds == oracle_left_strong(domain, g)

    def test_dead_ending_matches_oracle(self):
        domain = list(left_ends_up_to(DEAD_ENDING, 3))
        for g in born_by(2):
            if member(DEAD_ENDING, g):
                assert is_left_strong(DEAD_ENDING, g).holds == oracle_left_strong(domain, g)

    def test_weak_universes_agree(self):
        forms = aug_born_by_day1() + [add(a, b) for a in aug_born_by_day1()[:6]
                                      for b in aug_born_by_day1()[6:10]]
        for g in forms:
            for h in forms:
                a, b = geq(FULL_MISERE, g, h), geq(CL2, g, h)
                assert a.status is b.status
                assert a.status is not Status.BOUNDED
