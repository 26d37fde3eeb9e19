"""
Outcomes and sums
=================

Forms are interned, so equal structure means the same object. Outcomes
follow the misère rule: a player with no move wins.
"""

from misere import NEG_ONE, STAR, add, game, outcome, times

# small outcomes: 0 is won by whoever starts, * by whoever doesn't
for text in ("0", "*", "1", "~1"):
    print(text, outcome(game(text)).outcome.value)

# Left moving first loses *+*+~1
o = outcome(game("*+*+~1"))
print("*+*+~1: Left first ->", o.left_start.value, "| Right first ->", o.right_start.value)

# tombstones mark a side as end-like without being moves
g = game("{#,0|0}")
print("G =", g, " ~G =", ~g)
print("G + ~G =", g + ~g)
h = game("{#,0|.}")
print("H + ~H =", h + ~h)

# outcomes of n copies of ~1 against m copies of {.|2}
end2 = game("{.|2}")
print("n\\m", *range(5))
for n in range(5):
    row = [outcome(add(times(n, NEG_ONE), times(m, end2))).outcome.value for m in range(5)]
    print(f"{n:>3}", *row)

# sums are expanded eagerly; identity is structural
print((STAR + STAR) is game("{*|*}"))
