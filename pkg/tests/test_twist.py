import pytest

from annulet.diagram import Component, Diagram, Gate, trefoil_left, validate
from annulet.invariants.bracket import jones
from annulet.invariants.linking import linking_number, writhe
from annulet.moves import simplify
from annulet.twist import StaleGateStrand, UnknownGate, expand_gate_to_curve, gate_twist


def marked_trefoil():
    d = trefoil_left()
    return d.with_gates({"m": Gate("mu", ((0, 1),))}, {0: (("m", 0),)})


def two_loops():
    d = Diagram(crossings=(),
                components=(Component((0,), oriented=True),
                            Component((1,), oriented=True)))
    return d.with_gates({"w": Gate("c", ((0, 1), (1, 1)))},
                        {0: (("w", 0),), 1: (("w", 1),)})


def test_zero_twists_is_identity():
    d = marked_trefoil()
    assert gate_twist(d, "m", 0) is d


def test_unknown_gate():
    with pytest.raises(UnknownGate):
        gate_twist(marked_trefoil(), "nope", 1)


def test_single_strand_gate_adds_curls():
    d = marked_trefoil()
    out = gate_twist(d, "m", 2)
    assert out.crossing_count() == 5
    assert writhe(out) == -1  # trefoil -3 plus two positive curls
    assert jones(out) == jones(trefoil_left())
    out = gate_twist(d, "m", -2)
    assert writhe(out) == -5


def test_two_strand_gate_links_components():
    d = two_loops()
    out = gate_twist(d, "w", 1)
    assert out.crossing_count() == 2
    assert linking_number(out, 0, 1) == 1
    assert linking_number(gate_twist(d, "w", -1), 0, 1) == -1


def test_crossing_growth_matches_contract():
    d = Diagram(crossings=(),
                components=tuple(Component((i,), oriented=True) for i in range(3)))
    d = d.with_gates({"w": Gate("c", tuple((i, 1) for i in range(3)))},
                     {i: (("w", i),) for i in range(3)})
    out = gate_twist(d, "w", 2)
    assert out.crossing_count() == 2 * 3 * 2  # |n| k (k-1)
    assert all(linking_number(out, a, b) == 2
               for a, b in ((0, 1), (0, 2), (1, 2)))


def test_twist_then_untwist_cancels():
    d = two_loops()
    back = gate_twist(gate_twist(d, "w", 2), "w", -2)
    assert simplify(back).crossing_count() == 0


def test_gate_survives_reindexed():
    d = two_loops()
    out = gate_twist(d, "w", 1)
    assert out.has_gate("w")
    again = gate_twist(out, "w", 1)
    assert linking_number(again, 0, 1) == 2


def test_pure_operation():
    d = two_loops()
    before = d
    gate_twist(d, "w", 3)
    assert d == before


def test_expand_gate_linking_matches_counts():
    d = two_loops()
    expanded, idx = expand_gate_to_curve(d, "w")
    assert validate(expanded).ok
    assert expanded.components[idx].role == "auxiliary"
    assert linking_number(expanded, idx, 0) == 1
    assert linking_number(expanded, idx, 1) == 1


def test_stale_strand_detected():
    d = two_loops()
    broken = d.with_gates({"w": Gate("c", ((7, 1), (1, 1)))},
                          {7: (("w", 0),), 1: (("w", 1),)})
    with pytest.raises(StaleGateStrand):
        gate_twist(broken, "w", 1)
