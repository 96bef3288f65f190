import pytest

from annulet.diagram import mirror, orient_all, same_diagram, validate
from annulet.invariants.alexander import alexander_fox, knot_determinant
from annulet.invariants.bracket import jones
from annulet.laurent import LaurentPoly
from annulet.moves import simplify
from annulet.presentations import (
    AnnulusPresentation,
    BandSpec,
    annulus_twist,
    annulus_twist_step,
    build_presentation_diagram,
    bundled_presentations,
    flipped_annulus_twist,
    gamma_gate,
    get_presentation,
    mirror_presentation,
    operation_star_m,
    presentation_from_text,
    presentation_to_text,
    template_checksum,
    underlying_knot,
)

NINE42_ALEX = LaurentPoly({-2: -1, -1: 2, 0: -1, 1: 2, 2: -1})
NINE42_JONES = LaurentPoly({-6: 1, -4: -1, -2: 1, 0: -1, 2: 1, 4: -1, 6: 1})


def test_bundled_presets_exist():
    table = bundled_presentations()
    assert {"toy-unknot", "nine42", "nine42-mirror"} <= set(table)
    assert table["nine42"].epsilon == -1  # so r = -4 lk = +4


def test_toy_is_unknot():
    d = underlying_knot(get_presentation("toy-unknot"))
    assert validate(d).ok
    s = simplify(orient_all(d))
    assert jones(s) == LaurentPoly.one()
    assert alexander_fox(s) == LaurentPoly.one()


def test_underlying_knot_single_component_with_gates():
    d = underlying_knot(get_presentation("nine42"))
    assert validate(d).ok
    assert len(d.components) == 1
    for gate in ("step", "beta_plus", "beta_minus", "flip"):
        assert d.has_gate(gate)
    assert d.gate("step").algebraic_count() == 0
    assert abs(d.gate("beta_plus").algebraic_count()) == 1
    assert abs(d.gate("beta_minus").algebraic_count()) == 1


def test_nine42_matches_table_values():
    d = underlying_knot(get_presentation("nine42"))
    s = simplify(orient_all(d), effort=60)
    assert s.crossing_count() == 9
    assert alexander_fox(s) == NINE42_ALEX
    assert knot_determinant(s) == 7
    assert jones(s, width_budget=26) == NINE42_JONES
    # the classic chirality-blind jones: palindromic
    assert jones(s, width_budget=26).substitute_power(-1) == NINE42_JONES


def test_crossing_count_is_structural():
    base = BandSpec("sliver", True, True, (True, False), 0)
    d0 = build_presentation_diagram(-1, base)
    d1 = build_presentation_diagram(-1, BandSpec("sliver", True, True, (True, False), 2))
    assert d1.crossing_count() == d0.crossing_count() + 4  # twists add 2|t|


def test_step_and_twist_plumbing():
    ap = get_presentation("nine42")
    stepped = annulus_twist_step(ap, 1)
    assert stepped.steps == 1
    d1 = underlying_knot(stepped)
    assert validate(d1).ok
    assert gamma_gate(d1, ap) == "beta_plus"
    assert annulus_twist(ap, 0).crossing_count() == underlying_knot(ap).crossing_count()
    back = annulus_twist_step(stepped, -1)
    s = simplify(orient_all(underlying_knot(back)), effort=60)
    assert alexander_fox(s) == NINE42_ALEX  # inverse twists cancel
    assert jones(s, width_budget=26) == NINE42_JONES


def test_star_m_zero_is_stepped_knot():
    ap = get_presentation("nine42")
    d = operation_star_m(ap, 0, 1)
    d1 = underlying_knot(annulus_twist_step(ap, 1))
    assert same_diagram(d, d1)


def test_flipped_zero_and_validity():
    ap = get_presentation("nine42")
    assert flipped_annulus_twist(ap, 0).crossing_count() == \
        underlying_knot(ap).crossing_count()
    assert validate(flipped_annulus_twist(ap, 1)).ok


def test_mirror_presentation_naturality():
    ap = get_presentation("nine42")
    mp = mirror_presentation(ap)
    assert mp.epsilon == 1
    assert mirror_presentation(mp).epsilon == -1
    left = simplify(orient_all(underlying_knot(mp)), effort=50)
    right = simplify(orient_all(mirror(underlying_knot(ap))), effort=50)
    assert jones(left, width_budget=26) == jones(right, width_budget=26)
    assert alexander_fox(left) == alexander_fox(right)


def test_presentation_file_round_trip():
    ap = get_presentation("nine42")
    text = presentation_to_text(ap)
    again = presentation_from_text(text)
    assert again.name == ap.name
    assert again.epsilon == ap.epsilon
    assert again.band == ap.band
    assert template_checksum() in text
