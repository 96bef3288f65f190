import random

import pytest
from hypothesis import given, settings, strategies as st

from annulet.diagram import (
    figure_eight,
    hopf_link_positive,
    same_diagram,
    trefoil_left,
    unknot_diagram,
    validate,
)
from annulet.invariants.alexander import alexander_fox
from annulet.invariants.bracket import jones
from annulet.invariants.linking import linking_number
from annulet.moves import (
    R1Add,
    SiteMismatch,
    apply_move,
    greedy_reduce,
    r1_add_sites,
    r1_remove_sites,
    r2_add_sites,
    r2_remove_sites,
    r3_sites,
    random_move_sequence,
    simplify,
)


def test_r1_add_remove_round_trip():
    d = trefoil_left()
    d1 = apply_move(d, "R1", r1_add_sites(d)[0], "add")
    assert d1.crossing_count() == 4
    assert validate(d1).ok
    d2 = apply_move(d1, "R1", r1_remove_sites(d1)[0], "remove")
    assert same_diagram(d2, d)


def test_r1_variants_all_valid():
    d = trefoil_left()
    j0 = jones(d)
    for sign in (1, -1):
        for side in (0, 1):
            out = apply_move(d, "R1", R1Add(0, sign, side), "add")
            assert validate(out).ok
            assert jones(out) == j0


def test_r2_round_trip():
    d = trefoil_left()
    site = r2_add_sites(d)[0]
    d1 = apply_move(d, "R2", site, "add")
    assert d1.crossing_count() == 5
    rem = r2_remove_sites(d1)
    assert rem
    d2 = apply_move(d1, "R2", rem[0], "remove")
    assert same_diagram(d2, d)


def test_r3_preserves_count_and_jones():
    d = apply_move(trefoil_left(), "R2", r2_add_sites(trefoil_left())[2], "add")
    sites = r3_sites(d)
    assert sites
    out = apply_move(d, "R3", sites[0], "slide")
    assert out.crossing_count() == d.crossing_count()
    assert jones(out) == jones(d)


def test_site_mismatch():
    d = trefoil_left()
    with pytest.raises(SiteMismatch):
        apply_move(d, "R1", r1_remove_sites(figure_eight())[0]
                   if r1_remove_sites(figure_eight()) else
                   __import__("annulet.moves", fromlist=["R1Remove"]).R1Remove(0),
                   "remove")


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_random_moves_preserve_invariants(seed):
    base = trefoil_left()
    d = random_move_sequence(base, 20, seed=seed, max_crossings=14)
    assert validate(d).ok
    assert jones(d, width_budget=24) == jones(base)
    assert alexander_fox(d) == alexander_fox(base)


@settings(max_examples=10, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_random_moves_preserve_linking(seed):
    base = hopf_link_positive()
    d = random_move_sequence(base, 20, seed=seed, max_crossings=14)
    assert linking_number(d, 0, 1) == 1


def test_simplify_contract():
    d = unknot_diagram()
    for i in range(5):
        sites = r1_add_sites(d)
        d = apply_move(d, "R1", sites[i % len(sites)], "add")
    assert d.crossing_count() == 5
    s = simplify(d)
    assert s.crossing_count() == 0
    assert simplify(trefoil_left()).crossing_count() == 3


def test_simplify_deterministic_and_invariant():
    base = figure_eight()
    messy = random_move_sequence(base, 25, seed=7, max_crossings=16)
    s1 = simplify(messy, effort=30, seed=3)
    s2 = simplify(messy, effort=30, seed=3)
    assert s1 == s2
    assert s1.crossing_count() <= messy.crossing_count()
    assert jones(s1, width_budget=24) == jones(base)
    assert alexander_fox(s1) == alexander_fox(base)
