from fractions import Fraction

from annulet.diagram import (
    Component,
    Diagram,
    Gate,
    canonical_key,
    figure_eight,
    from_text,
    hopf_link_positive,
    mirror,
    same_diagram,
    to_text,
    trefoil_left,
    trefoil_right,
    unknot_diagram,
    validate,
)
from annulet.invariants.linking import linking_number, writhe


def test_standard_diagrams_validate():
    for d in (unknot_diagram(), trefoil_left(), trefoil_right(),
              figure_eight(), hopf_link_positive()):
        report = validate(d)
        assert report.ok, report.violations


def test_arc_degree_violation():
    d = Diagram(
        crossings=((0, 3, 1, 4), (2, 5, 3, 0), (4, 1, 5, 5)),  # arc 2 once, 5 thrice
        components=(Component((0, 1, 2, 3, 4, 5), oriented=True),),
    )
    report = validate(d)
    assert not report.ok
    assert any("arc degree" in v for v in report.violations)


def test_virtual_code_fails_euler():
    # a two-crossing code whose Gauss structure admits no planar realization;
    # face tracing of its rotation system gives V - E + F = 0
    d = Diagram(
        crossings=((0, 2, 1, 3), (1, 0, 2, 3)),
        components=(Component((0, 1, 2, 3), oriented=True),),
    )
    report = validate(d)
    assert not report.ok
    assert any("Euler face count" in v for v in report.violations)


def test_writhe_and_linking():
    assert writhe(trefoil_right()) == 3
    assert writhe(trefoil_left()) == -3
    assert writhe(figure_eight()) == 0
    assert linking_number(hopf_link_positive(), 0, 1) == 1


def test_mirror_involution():
    for d in (trefoil_left(), figure_eight()):
        assert same_diagram(mirror(mirror(d)), d)
    assert writhe(mirror(trefoil_right())) == -3


def test_canonical_key_stable_under_relabel():
    d = trefoil_left()
    from annulet.diagram import relabel_arcs

    shuffled = relabel_arcs(d, {0: 10, 1: 11, 2: 12, 3: 13, 4: 14, 5: 15})
    assert canonical_key(d) == canonical_key(shuffled)
    assert same_diagram(d, shuffled)
    assert not same_diagram(d, figure_eight())


def test_file_format_round_trip():
    d = hopf_link_positive().with_gates(
        {"g": Gate("mu", ((0, 1), (2, -1)))},
        {0: (("g", 0),), 2: (("g", 1),)},
    )
    from dataclasses import replace

    d = replace(d, framings=((0, Fraction(-1, 2)), (1, Fraction(3))))
    text = to_text(d)
    again = from_text(text)
    assert again == d
    assert to_text(again) == text  # bit-exact round trip
