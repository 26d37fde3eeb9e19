from __future__ import annotations

from hypothesis import given

from misere.augmented import aug_conjugate, aug_outcome, aug_sum, embed, end_like
from misere.games import NEG_ONE, STAR, ZERO, Outcome, Player, add, mk_aug, outcome
from misere.notation import game
from strategies import aug_forms, plain_forms

G_STAR = game("{#,0|0}")
G_ONE = game("{#,0|.}")
G_BOTH = game("{#,0|0,#}")


def test_mk_aug_examples():
    assert mk_aug([], [], False, False) is ZERO
    assert mk_aug([ZERO], [ZERO], True, False) is G_STAR
    assert str(mk_aug([], [], True, True)) == "{#|#}"


def test_end_like():
    assert end_like(G_STAR) == (True, False)
    assert end_like(NEG_ONE).left_end_like
    assert end_like(STAR) == (False, False)


def test_conjugate_examples():
    assert aug_conjugate(G_STAR) is game("{0|0,#}")
    assert aug_conjugate(G_BOTH) is G_BOTH
    assert aug_conjugate(game("{1|*}")) is game("{*|~1}")


def test_displayed_sum_star_tomb():
    g, gc = G_STAR, aug_conjugate(G_STAR)
    assert aug_sum(g, gc) is mk_aug([g, gc], [g, gc], False, False)


def test_displayed_sum_one_tomb():
    g, gc = G_ONE, aug_conjugate(G_ONE)
    assert aug_sum(g, gc) is mk_aug([gc], [g], True, True)


def test_displayed_sum_self_conjugate():
    g = G_BOTH
    assert aug_sum(g, g) is mk_aug([g], [g], True, True)


def test_tomb_with_left_end():
    x = game("{.|{1|0}}")
    assert aug_sum(G_STAR, x).left_tomb
    # next to a form Left can move in, the tombstone is inert
    assert not aug_sum(G_STAR, STAR).left_tomb


def test_outcome_examples():
    assert aug_outcome(G_STAR).left_start is Player.LEFT
    assert aug_outcome(STAR).outcome is Outcome.P
    # the tombstone confers nothing once the other summand has Left moves
    xr = game("{*|0}")
    s = aug_sum(G_STAR, xr)
    assert not s.left_end_like
    expect = any(aug_outcome(o).right_start is Player.LEFT for o in s.left)
    assert (aug_outcome(s).left_start is Player.LEFT) == expect


@given(plain_forms, plain_forms)
def test_embedding_is_homomorphic(g, h):
    assert embed(aug_sum(g, h)) is add(g, h)
    assert aug_outcome(embed(g)) == outcome(g)


@given(aug_forms, aug_forms)
def test_conjugate_distributes(g, h):
    assert aug_conjugate(aug_sum(g, h)) is aug_sum(aug_conjugate(g), aug_conjugate(h))


@given(aug_forms)
def test_end_like_outcome(g):
    if g.left_end_like:
        assert aug_outcome(g).left_start is Player.LEFT
    if g.right_end_like:
        assert aug_outcome(g).right_start is Player.RIGHT
