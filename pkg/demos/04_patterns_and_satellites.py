"""Patterns in a solid torus, satellites, and dualizability evidence."""

from annulet.diagram import orient_all
from annulet.invariants.alexander import alexander_fox
from annulet.moves import simplify
from annulet.patterns import (
    Pattern, dualizable_checks, pattern_from_curve, pattern_probe_equal,
    satellite, standard_companions, tau_twist, winding_number,
)
from annulet.presentations import (
    annulus_twist_step, get_presentation, underlying_knot,
)

ap = get_presentation("nine42")
base = underlying_knot(ap)
p_plus = pattern_from_curve(base, "beta_plus", name="P+")
print(f"P+ winding {winding_number(p_plus)}, checks: {dualizable_checks(p_plus)}")

print("\nsatellites of P+ (alexander):")
for comp in standard_companions():
    sat = simplify(orient_all(satellite(p_plus, comp)), effort=60)
    print(f"  over {comp.name}: {sat.crossing_count()} crossings, "
          f"{alexander_fox(sat).format()}")

print("\nmeridian twisting keeps the winding:")
for m in (-1, 1):
    q = tau_twist(p_plus, m)
    print(f"  tau_{m:+d}: winding {winding_number(q)}")

stepped = annulus_twist_step(annulus_twist_step(ap, 1), -1)
dual = Pattern(underlying_knot(stepped), "beta_plus", name="dual-of-step")
probe = pattern_probe_equal(p_plus, dual, tau_range=(-1, 0, 1))
print(f"\nprobe P+ vs the stepped dual: {probe['verdict']} "
      f"({len(probe['cases'])} cases)")
