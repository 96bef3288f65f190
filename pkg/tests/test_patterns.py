import pytest

from annulet.diagram import Component, Diagram, Gate, orient_all, validate
from annulet.grid import DOWN, UP, GridBuilder
from annulet.invariants.alexander import alexander_fox
from annulet.invariants.bracket import jones
from annulet.laurent import LaurentPoly
from annulet.moves import simplify
from annulet.patterns import (
    Companion,
    Pattern,
    dualizable_checks,
    pattern_from_curve,
    pattern_probe_equal,
    satellite,
    satellite_closure,
    standard_companions,
    tau_twist,
    winding_number,
)
from annulet.presentations import get_presentation, underlying_knot


def core_pattern():
    return Pattern(
        Diagram(crossings=(), components=(Component((0,), oriented=True),),
                gates=(("meridian", Gate("mu", ((0, 1),))),),
                mark_order=((0, (("meridian", 0),)),)),
        "meridian", "core")


def double_pattern():
    b = GridBuilder()
    b.birth(0, (DOWN, UP))
    b.birth(1, (DOWN, UP))
    b.mark("meridian", 0)
    b.mark("meridian", 1)
    b.cross(0, "L")
    b.death(1)
    b.death(0)
    return Pattern(b.finish(), "meridian", "double")


def test_windings():
    assert winding_number(core_pattern()) == 1
    assert winding_number(double_pattern()) == 2


def test_dualizable_checks():
    assert dualizable_checks(core_pattern())["ok"]
    report = dualizable_checks(double_pattern())
    assert not report["ok"]
    assert not report["winding_ok"]
    assert not report["h1_trivial"]  # determinant -4 chart


def test_satellite_of_core_is_companion():
    for comp in standard_companions():
        sat = orient_all(satellite(core_pattern(), comp))
        assert validate(sat).ok
        want = jones(orient_all(comp.diagram)) if comp.diagram.crossings \
            else LaurentPoly.one()
        assert jones(simplify(sat, effort=50), width_budget=24) == want


def test_satellite_alexander_formula():
    # For a winding-w pattern with trivial alexander, the satellite picks up
    # the companion polynomial at t^w: the classical satellite formula as an
    # independent oracle.
    tref = standard_companions()[1]
    sat = simplify(orient_all(satellite(double_pattern(), tref)), effort=60)
    assert alexander_fox(sat) == LaurentPoly({-2: 1, 0: -1, 2: 1})
    fig8 = standard_companions()[2]
    sat = simplify(orient_all(satellite(double_pattern(), fig8)), effort=60)
    assert alexander_fox(sat) == LaurentPoly({-2: -1, 0: 3, 2: -1})


def test_satellite_with_unknot_is_closure():
    p = double_pattern()
    u = standard_companions()[0]
    assert jones(simplify(orient_all(satellite(p, u)))) == \
        jones(simplify(orient_all(satellite_closure(p))))


def test_tau_twist_contract():
    p = core_pattern()
    assert tau_twist(p, 0) is p
    tref = standard_companions()[1]
    base = jones(simplify(orient_all(satellite(p, tref)), effort=40), width_budget=24)
    for m in (-2, 1, 3):
        q = tau_twist(p, m)
        assert winding_number(q) == winding_number(p)
        got = jones(simplify(orient_all(satellite(q, tref)), effort=40),
                    width_budget=24)
        assert got == base


def test_tau_commutes_with_closure_gate_twist():
    from annulet.twist import gate_twist

    ap = get_presentation("nine42")
    from annulet.presentations import annulus_twist_step

    d = underlying_knot(annulus_twist_step(ap, 1))
    p = Pattern(d, "beta_plus")
    for m in (-1, 2):
        via_pattern = satellite_closure(tau_twist(p, m))
        via_diagram = gate_twist(satellite_closure(p).with_gates(
            {n: g for n, g in d.gates if n == "beta_plus"},
            {a: tuple(x for x in marks if x[0] == "beta_plus")
             for a, marks in d.mark_order
             if any(x[0] == "beta_plus" for x in marks)},
        ), "beta_plus", m)
        j1 = jones(simplify(orient_all(via_pattern), effort=50), width_budget=28)
        j2 = jones(simplify(orient_all(via_diagram), effort=50), width_budget=28)
        assert j1 == j2


def test_pattern_from_curve_and_probe():
    ap = get_presentation("nine42")
    base = underlying_knot(ap)
    p = pattern_from_curve(base, "beta_plus", name="P+")
    assert abs(winding_number(p)) == 1
    probe = pattern_probe_equal(p, p, tau_range=(0,))
    assert probe["verdict"] == "indistinguishable-at-budget"
    probe2 = pattern_probe_equal(p, double_pattern())
    assert probe2["verdict"] == "distinguished"
    assert probe2["reason"] == "winding"


def test_pattern_from_curve_rejects_zero_winding():
    d = Diagram(crossings=(), components=(Component((0,), oriented=True),),
                gates=(("g", Gate("c", ())),), mark_order=())
    with pytest.raises(Exception):
        pattern_from_curve(d, "g")


def test_pattern_file_round_trip():
    from annulet.patterns import pattern_from_text, pattern_to_text

    p = core_pattern()
    text = pattern_to_text(p)
    q = pattern_from_text(text)
    assert q.diagram == p.diagram
    assert q.gate_name == p.gate_name
    assert winding_number(q) == 1
    assert pattern_to_text(q) == text
