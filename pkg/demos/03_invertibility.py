"""
Invertibility
=============

A form is invertible modulo a universe when its conjugate cancels it. The
day-1 cases come down to searching the universe's Left ends for three kinds
of end.
"""

from misere import DEAD_ENDING, DICOT, FULL_MISERE, game, is_invertible, parse_universe
from misere.invert import PREDICATES, UhatAssertions, is_reduced, search_end_with
from misere.universes import is_weak

# the three end predicates on a few ends
for text in ("{.|{*|0}}", "~1", "{.|{*|1}}", "{.|{1|0,~1}+{~1,1|.}}"):
    x = game(text)
    print(text.ljust(24), {k: f(x) for k, f in PREDICATES.items()})

g = game("{.|{1|0,~1}+{~1,1|.}}")
print("G+G:", {k: f(g + g) for k, f in PREDICATES.items()})

# * cancels itself among dicots, but ~1 kills it in the dead-ending universe
print("* in D:", is_invertible(DICOT, game("*")).status.label)
v = is_invertible(DEAD_ENDING, game("*"))
print("* in E:", v.status.label, "witness end", v.witness[1])
print("starkiller end in E:", search_end_with(DEAD_ENDING, "starkiller").witness)

# weak universes have no invertibles but 0
cl2 = parse_universe("cl({.|2})")
print("cl({.|2}) weak:", is_weak(cl2).kind, is_weak(cl2).witness)
print("cl({.|2}) reduced:", is_reduced(cl2).overall)
print("D reduced:", is_reduced(DICOT).overall, "witness", is_reduced(DICOT).witness)

# full misère, taking the two tombstoned forms as absent
uhat = UhatAssertions.of(absent=[game("{#,0|.}"), game("{#,0|0,#}")])
r = is_reduced(FULL_MISERE, uhat)
print("M reduced:", r.overall)
for item in r.items:
    print("  ", item.verdict.ljust(9), item.text)
