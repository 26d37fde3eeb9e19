"""
Comparison and simplest forms
=============================

Comparison depends on the universe. Verdicts are proven, refuted, or true
only up to the birthday of the Left ends searched.
"""

from misere import DEAD_ENDING, DICOT, FULL_MISERE, equiv, game, geq, simplest_form
from misere.invert import day1_census
from misere.order import oracle_geq
from misere.games import dicots_born_by

zero, ss = game("0"), game("*+*")

# in the dicot universe *+* is zero, and brute force over small dicots agrees
print("*+* == 0 in D:", equiv(DICOT, ss, zero).status.label)
print("oracle:", oracle_geq(dicots_born_by(2), ss, zero).holds,
      oracle_geq(dicots_born_by(2), zero, ss).holds)

# in full misère it is not
print("*+* >= 0 in M:", geq(FULL_MISERE, ss, zero).status.label)

# dead-ending ends are infinite, so 1+~1 == 0 is only checked up to a bound
v = equiv(DEAD_ENDING, game("1+~1"), zero)
print("1+~1 == 0 in E:", v.status.label, "bound", v.bound)

# simplest forms, with the rewrites that produced them
s, trace = simplest_form(DICOT, ss)
print("simplest of *+* in D:", s)
for step in trace.steps:
    print("  ", step.kind, step.side, step.before, "->", step.after)

# the 16 tombstoned day-1 forms collapse to six classes in full misère
for c in day1_census(FULL_MISERE):
    print(str(c.representative).ljust(10), " ".join(str(m) for m in c.members))
