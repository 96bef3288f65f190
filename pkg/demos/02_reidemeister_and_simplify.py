"""Reidemeister rewriting: moves never change the invariants."""

from annulet.diagram import trefoil_left, validate
from annulet.invariants.alexander import alexander_fox
from annulet.invariants.bracket import jones
from annulet.moves import (
    apply_move, r1_add_sites, r2_add_sites, r3_sites,
    random_move_sequence, simplify,
)

base = trefoil_left()
j0, a0 = jones(base), alexander_fox(base)

d = apply_move(base, "R1", r1_add_sites(base)[0], "add")
d = apply_move(d, "R2", r2_add_sites(d)[0], "add")
print(f"after R1+R2 additions: {d.crossing_count()} crossings, "
      f"valid={validate(d).ok}, jones unchanged={jones(d) == j0}")

tri = r3_sites(d)
if tri:
    d = apply_move(d, "R3", tri[0], "slide")
    print(f"after an R3 slide: {d.crossing_count()} crossings, "
          f"jones unchanged={jones(d) == j0}")

for seed in range(3):
    messy = random_move_sequence(base, 30, seed=seed, max_crossings=16)
    clean = simplify(messy, effort=40, seed=1)
    print(f"seed {seed}: fuzzed to {messy.crossing_count()} crossings, "
          f"simplified to {clean.crossing_count()}; invariants stable: "
          f"{jones(clean, width_budget=24) == j0 and alexander_fox(clean) == a0}")
