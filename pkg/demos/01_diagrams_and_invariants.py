"""Planar diagrams and the invariant engine.

Build the standard small knots, validate their PD codes, and compute the
polynomial invariants through both the production and oracle routes.
"""

from annulet.diagram import (
    figure_eight, hopf_link_positive, mirror, trefoil_left, trefoil_right,
    unknot_diagram, validate,
)
from annulet.invariants.alexander import alexander_fox, alexander_seifert, knot_determinant
from annulet.invariants.bracket import bracket, bracket_naive, jones
from annulet.invariants.linking import linking_number, writhe

for name, d in [
    ("unknot", unknot_diagram()),
    ("left trefoil", trefoil_left()),
    ("right trefoil", trefoil_right()),
    ("figure-eight", figure_eight()),
]:
    assert validate(d).ok
    print(f"{name}:")
    print(f"  writhe          {writhe(d)}")
    print(f"  jones           {jones(d).format('t', 2)}")
    if d.crossings:
        print(f"  alexander (fox) {alexander_fox(d).format()}")
        print(f"  alexander (sft) {alexander_seifert(d).format()}")
        print(f"  determinant     {knot_determinant(d)}")
    # the naive 2^c expansion is the independent oracle
    assert bracket(d) == bracket_naive(d)

hopf = hopf_link_positive()
print(f"hopf link: lk = {linking_number(hopf, 0, 1)}, "
      f"jones = {jones(hopf).format('t', 2)}  (half-integer exponents)")

tl = trefoil_left()
print("mirror swaps t and 1/t:",
      jones(mirror(tl)) == jones(tl).substitute_power(-1))
