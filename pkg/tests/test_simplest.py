from __future__ import annotations

import random
from functools import lru_cache

from hypothesis import given

from misere.games import STAR, ZERO, add, aug_born_by_day1, conjugate, dicots_born_by, random_form
from misere.notation import game
from misere.order import equiv, geq, oracle_equiv
from misere.simplest import (
    bypass_reversible, is_reduced_form, prune_tombstones, remove_dominated, replay, simplest_form,
)
from misere.universes import DEAD_ENDING, DICOT, FULL_MISERE
from misere.verdicts import Status
from strategies import aug_forms, dicot_forms


@lru_cache(maxsize=None)
def d3():
    return dicots_born_by(3, max_options=2)


class TestRewrites:
    def test_domination_in_full_misere(self):
        g = game("{#,0|0}")
        gc = conjugate(g)
        a = add(g, gc)
        assert a is game("{{#,0|0},{0|0,#}|{#,0|0},{0|0,#}}")
        r = remove_dominated(FULL_MISERE, a)
        assert len(r.left) == 1 and len(r.right) == 1
        assert r is game("{{#,0|0}|{0|0,#}}")

    def test_domination_in_dicot(self):
        a = game("{{0,*|0},{*|0}|0,*}")
        r = remove_dominated(DICOT, a)
        assert r is game("{{0,*|0}|0,*}")
        assert oracle_equiv(d3(), a, r)

    def test_bypass_through_non_end(self):
        a = game("{0,{0|*}|{0,*|0,*}}")
        assert bypass_reversible(DICOT, a) is game("{0|{0,*|0,*}}")

    def test_end_reversal_sets_tombstone(self):
        a = game("{0,*|*}")
        r = bypass_reversible(DICOT, a)
        assert r.left_tomb and r is game("{#,0|*}")
        _, trace = simplest_form(DICOT, a)
        assert trace.steps[0].kind == "end_reverse"

    def test_prune(self):
        assert prune_tombstones(FULL_MISERE, game("{#|.}")) is ZERO
        g = game("{#,0|0}")
        assert prune_tombstones(FULL_MISERE, g) is g
        assert prune_tombstones(FULL_MISERE, STAR) is STAR

    def test_identity_when_nothing_applies(self):
        g = game("{1|~1}")
        for f in (remove_dominated, bypass_reversible, prune_tombstones):
            assert f(FULL_MISERE, g) is g


class TestSimplestForm:
    def test_examples(self):
        s, _ = simplest_form(FULL_MISERE, game("{#|0}"))
        assert s is game("~1")
        s, trace = simplest_form(DICOT, add(STAR, STAR))
        assert s is ZERO and trace.mode == "exact"

    def test_already_simplest(self):
        for g in (ZERO, STAR, game("{#,0|0}"), game("{1|~1}")):
            s, trace = simplest_form(FULL_MISERE, g)
            assert s is g and trace.steps == []

    def test_census_reductions(self):
        want = {"{#|.}": "0", "{.|#}": "0", "{#|#}": "0", "{#|0}": "{.|0}",
                "{0|#}": "{0|.}", "{#,0|#}": "{#,0|.}", "{#|0,#}": "{.|0,#}"}
        for a in aug_born_by_day1():
            s, _ = simplest_form(FULL_MISERE, a)
            assert s is game(want.get(str(a), str(a)))

    def test_replay(self):
        rng = random.Random(21)
        for u in (DICOT, FULL_MISERE):
            for _ in range(60):
                a = random_form(rng, 3, 2, dicot=u is DICOT, tomb_rate=0.0 if u is DICOT else 0.1)
                s, trace = simplest_form(u, a)
                assert replay(a, trace) is s

    def test_bounded_mode_is_opt_in(self):
        a = add(game("1"), game("~1"))
        s, trace = simplest_form(DEAD_ENDING, a)
        assert s is a and trace.mode == "exact"
        s, trace = simplest_form(DEAD_ENDING, a, assume_bounded=True)
        assert s is ZERO and trace.mode == "bounded" and trace.bound == 3
        assert any(st.bounded for st in trace.steps)

    def test_exact_trace_has_no_bounded_steps(self):
        rng = random.Random(5)
        for _ in range(40):
            a = random_form(rng, 2, 2)
            _, trace = simplest_form(DEAD_ENDING, a)
            assert not any(st.bounded for st in trace.steps)

    @given(dicot_forms)
    def test_idempotent_dicot(self, a):
        s, _ = simplest_form(DICOT, a)
        s2, trace = simplest_form(DICOT, s)
        assert s2 is s and trace.steps == []
        assert equiv(DICOT, a, s).status is Status.TRUE
        assert is_reduced_form(DICOT, s)

    @given(aug_forms)
    def test_idempotent_full_misere(self, a):
        s, _ = simplest_form(FULL_MISERE, a)
        assert simplest_form(FULL_MISERE, s)[0] is s
        assert equiv(FULL_MISERE, a, s).status is Status.TRUE

    def test_uniqueness_day2_dicots(self):
        forms = dicots_born_by(2)
        simp = {g: simplest_form(DICOT, g)[0] for g in forms}
        for g in forms:
            for h in forms:
                if equiv(DICOT, g, h).proven_true:
                    assert simp[g] is simp[h], (g, h)

    def test_reduced_output_oracle_equivalent(self):
        for g in dicots_born_by(2):
            s, _ = simplest_form(DICOT, g)
            if s.plain:
                assert oracle_equiv(d3(), g, s)
            assert geq(DICOT, g, s).holds and geq(DICOT, s, g).holds
