"""Brauer diagrams, products and the algebra over Q[d]."""
from brauerkit import parse_diagram, compose, star, all_diagrams, presentation_check
from brauerkit.algebra import e, s, alt_interval
from brauerkit.exactalg import QQ_DELTA

# %% a diagram is a perfect matching on 2r points; 1..r on top, r+1..2r below
d = parse_diagram("r=3; 1-2 3-6 4-5")
print(d, "| reflected:", star(d))

# stacking e_1 on itself closes one loop
e1 = parse_diagram("r=2; 1-2 3-4")
c = compose(e1, e1)
print(c.result, "loops:", c.loops)

# %% (2r-1)!! diagrams
for r in range(1, 6):
    print(r, len(all_diagrams(r)))

# %% in the algebra the loop becomes a factor of d
x = e(1, 3, QQ_DELTA)
print(x * x)
print(s(1, 3) * s(2, 3) * s(1, 3) == s(2, 3) * s(1, 3) * s(2, 3))

# %% alternating sums over intervals of strands
a = alt_interval(1, 3, 3)
print(len(a.terms), "terms; a*a == 6a:", a * a == a.scale(6))

# the full list of defining relations, with d symbolic
print([presentation_check(r) for r in range(2, 7)])
