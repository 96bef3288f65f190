"""Annulus presentations and their twist families."""

from annulet.diagram import orient_all
from annulet.invariants.alexander import alexander_fox
from annulet.invariants.bracket import jones
from annulet.moves import simplify
from annulet.presentations import (
    annulus_twist, annulus_twist_step, gamma_gate, get_presentation,
    operation_star_m, underlying_knot,
)

ap = get_presentation("nine42")
base = simplify(orient_all(underlying_knot(ap)), effort=60)
print(f"preset nine42: {base.crossing_count()} crossings")
print(f"  alexander {alexander_fox(base).format()}")
print(f"  jones     {jones(base, width_budget=26).format('t', 2)}")

print("\nannulus twist family (invariants per member):")
for n in range(-2, 3):
    d = simplify(orient_all(annulus_twist(ap, n)), effort=60)
    print(f"  A^{n:+d}: {d.crossing_count():3d} crossings, "
          f"alexander {alexander_fox(d).format()}")

stepped = annulus_twist_step(ap, 1)
d1 = underlying_knot(stepped)
print(f"\nonce-twisted diagram carries the meridian gate "
      f"{gamma_gate(d1, ap)!r} with count "
      f"{d1.gate('beta_plus').algebraic_count()}")

print("\nthe (*m) family through that gate:")
for m in range(-2, 3):
    d = simplify(orient_all(operation_star_m(ap, m, 1)), effort=60)
    print(f"  m={m:+d}: {d.crossing_count():3d} crossings, "
          f"jones {jones(d, width_budget=28).format('t', 2)[:58]}")
