from fractions import Fraction

from dataclasses import replace

from hypothesis import given, settings, strategies as st

from annulet.diagram import (
    Component,
    Diagram,
    figure_eight,
    hopf_link_positive,
    mirror,
    orient_all,
    trefoil_left,
    trefoil_right,
    unknot_diagram,
)
from annulet.invariants.alexander import (
    alexander_fox,
    alexander_seifert,
    knot_determinant,
    laurent_det,
)
from annulet.invariants.bracket import DELTA, bracket, bracket_naive, jones, jones_naive
from annulet.invariants.homology import (
    AbelianGroup,
    h1_surgery,
    negative_continued_fraction,
    smith_normal_form,
)
from annulet.laurent import LaurentPoly
from annulet.moves import random_move_sequence


# Pinned published values, cross-checked against the brute-force expansion.
JONES_LEFT_TREFOIL = LaurentPoly({-8: -1, -6: 1, -2: 1})        # -t^-4+t^-3+t^-1
JONES_RIGHT_TREFOIL = LaurentPoly({8: -1, 6: 1, 2: 1})          # -t^4+t^3+t
JONES_FIGURE_EIGHT = LaurentPoly({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1})
ALEX_TREFOIL = LaurentPoly({-1: 1, 0: -1, 1: 1})
ALEX_FIGURE_EIGHT = LaurentPoly({-1: -1, 0: 3, 1: -1})


def test_bracket_normalizations():
    assert bracket(unknot_diagram()) == LaurentPoly.one()
    two = Diagram(crossings=(), components=(Component((0,),), Component((1,),)))
    assert bracket(two) == DELTA  # -A^2 - A^-2


def test_jones_table_values():
    assert jones(trefoil_left()) == JONES_LEFT_TREFOIL
    assert jones(trefoil_right()) == JONES_RIGHT_TREFOIL
    assert jones(figure_eight()) == JONES_FIGURE_EIGHT


def test_sweep_equals_naive_oracle():
    for d in (trefoil_left(), trefoil_right(), figure_eight(),
              hopf_link_positive()):
        assert bracket(d) == bracket_naive(d)
        assert jones(d) == jones_naive(d)


def test_mirror_property():
    for d in (trefoil_left(), figure_eight()):
        assert jones(mirror(d)) == jones(d).substitute_power(-1)
        assert alexander_fox(mirror(d)) == alexander_fox(d)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_mirror_property_random(seed):
    d = random_move_sequence(trefoil_right(), 15, seed=seed, max_crossings=12)
    assert jones(mirror(d), width_budget=24) == \
        jones(d, width_budget=24).substitute_power(-1)


def test_alexander_values_and_routes():
    for d, want in ((trefoil_left(), ALEX_TREFOIL),
                    (trefoil_right(), ALEX_TREFOIL),
                    (figure_eight(), ALEX_FIGURE_EIGHT),
                    (unknot_diagram(), LaurentPoly.one())):
        assert alexander_fox(d) == want
        assert alexander_seifert(d) == want
    assert knot_determinant(trefoil_left()) == 3
    assert knot_determinant(figure_eight()) == 5


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10 ** 6),
       base=st.sampled_from(["trefoil", "fig8"]))
def test_cross_route_agreement_random(seed, base):
    start = trefoil_left() if base == "trefoil" else figure_eight()
    d = random_move_sequence(start, 18, seed=seed, max_crossings=12)
    assert alexander_fox(d) == alexander_seifert(d)


def test_laurent_determinant():
    t = LaurentPoly({1: 1})
    one = LaurentPoly.one()
    m = [[t, one], [one, t]]
    assert laurent_det(m) == t * t - one
    assert laurent_det([[LaurentPoly.zero()]]).is_zero()


def test_smith_and_groups():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert str(AbelianGroup(1, (2,))) == "Z + Z/2"


def test_h1_surgery_cases():
    u = Diagram(crossings=(), components=(Component((0,), oriented=True),))
    for m, want in ((0, "Z"), (5, "Z/5"), (1, "0"), (-3, "Z/3")):
        framed = replace(u, framings=((0, Fraction(m)),))
        assert str(h1_surgery(framed)) == want
    for q in (2, 3, 7):
        framed = replace(u, framings=((0, Fraction(-1, q)),))
        assert h1_surgery(framed).is_trivial()
    hopf = replace(orient_all(hopf_link_positive()),
                   framings=((0, Fraction(0)), (1, Fraction(0))))
    assert h1_surgery(hopf).is_trivial()


def test_negative_continued_fraction():
    assert negative_continued_fraction(Fraction(7, 3)) == [3, 2, 2]
    assert negative_continued_fraction(Fraction(-1, 4)) == [0, 4]
