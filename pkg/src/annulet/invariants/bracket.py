"""Kauffman bracket and Jones polynomial.

Two evaluation routes:

* ``bracket_naive``: the defining 2^c state expansion, kept as the
  independent oracle for small diagrams.
* ``bracket``: a sweep state sum.  Crossings are merged one at a time in a
  greedy low-boundary order; a state is a pairing of the open boundary darts,
  so the live state count stays Catalan-like in the sweep width instead of
  exponential in the crossing number.

Smoothing convention for X(a, b, c, d) (counterclockwise from the incoming
under-strand): the A-smoothing joins a-b and c-d, the B-smoothing a-d and
b-c.  Jones is the writhe-normalized bracket at t = A^-4; exponents are
reported on a doubled scale so links with half-integer exponents stay in
integers.
"""

from __future__ import annotations

from ..diagram import Diagram
from ..diagram import arc_occurrences
from ..laurent import LaurentPoly
from .linking import OrientationMissing, total_writhe

DELTA = LaurentPoly({2: -1, -2: -1})  # -A^2 - A^-2, the loop value

A_SMOOTH = ((0, 1), (2, 3))
B_SMOOTH = ((0, 3), (1, 2))


class WidthBudgetExceeded(Exception):
    def __init__(self, attained: int, budget: int):
        super().__init__(f"sweep width {attained} exceeds budget {budget}")
        self.attained = attained
        self.budget = budget


def _free_loop_count(d: Diagram) -> int:
    occ = arc_occurrences(d)
    return sum(1 for comp in d.components if len(comp.arcs) == 1 and comp.arcs[0] not in occ)


def _alpha(d: Diagram) -> dict[int, int]:
    occ = arc_occurrences(d)
    alpha: dict[int, int] = {}
    for places in occ.values():
        (c1, p1), (c2, p2) = places
        alpha[4 * c1 + p1] = 4 * c2 + p2
        alpha[4 * c2 + p2] = 4 * c1 + p1
    return alpha


def bracket_naive(d: Diagram) -> LaurentPoly:
    """Brute-force Kauffman bracket over all 2^c smoothings, unknot -> 1."""
    n = len(d.crossings)
    free = _free_loop_count(d)
    if n == 0:
        return DELTA ** (free - 1) if free else LaurentPoly()
    if n > 22:
        raise ValueError(f"naive bracket limited to 22 crossings, got {n}")
    alpha = _alpha(d)

    total = LaurentPoly()
    for state in range(1 << n):
        pair: dict[int, int] = {}
        a_count = 0
        for ci in range(n):
            base = 4 * ci
            if (state >> ci) & 1 == 0:
                a_count += 1
                joins = A_SMOOTH
            else:
                joins = B_SMOOTH
            for u, v in joins:
                pair[base + u] = base + v
                pair[base + v] = base + u
        orbits = 0
        seen: set[int] = set()
        for start in pair:
            if start in seen:
                continue
            orbits += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = pair[alpha[x]]
        loops = orbits // 2 + free  # each loop is traced once per direction
        total = total + LaurentPoly({2 * a_count - n: 1}) * (DELTA ** (loops - 1))
    return total


def _sweep_order(d: Diagram) -> tuple[list[int], int]:
    """Greedy crossing order keeping the open boundary small; returns (order, width)."""
    n = len(d.crossings)
    occ = arc_occurrences(d)
    order: list[int] = []
    done: set[int] = set()
    open_arcs: set[int] = set()
    width = 0

    def delta_open(ci: int) -> tuple[int, int]:
        closes = opens = 0
        for a in set(d.crossings[ci]):
            p1, p2 = occ[a]
            if p1[0] == p2[0]:
                continue  # internal curl arc
            if a in open_arcs:
                closes += 1
            else:
                opens += 1
        return opens, closes

    for _ in range(n):
        best, best_key = None, None
        for ci in range(n):
            if ci in done:
                continue
            opens, closes = delta_open(ci)
            key = (opens - closes, opens, ci)
            if best_key is None or key < best_key:
                best, best_key = ci, key
        order.append(best)
        done.add(best)
        for a in set(d.crossings[best]):
            p1, p2 = occ[a]
            if p1[0] == p2[0]:
                continue
            if a in open_arcs:
                open_arcs.discard(a)
            else:
                open_arcs.add(a)
        width = max(width, len(open_arcs))
    return order, width


def _merge_crossing(
    matching: tuple, coeff: LaurentPoly, ci: int, joins, alpha: dict[int, int],
    processed: set[int],
) -> tuple[tuple, LaurentPoly]:
    """Fuse one smoothed crossing into an open-boundary matching."""
    base = 4 * ci
    edge_list: list[tuple[int, int]] = []
    adj: dict[int, list[int]] = {}

    def add_edge(u: int, v: int) -> None:
        ei = len(edge_list)
        edge_list.append((u, v))
        adj.setdefault(u, []).append(ei)
        adj.setdefault(v, []).append(ei)

    for u, v in matching:
        add_edge(u, v)
    for u, v in joins:
        add_edge(base + u, base + v)
    for pos in range(4):
        dd = base + pos
        other = alpha[dd]
        if other // 4 == ci:
            if other > dd:
                add_edge(dd, other)
        elif other // 4 in processed:
            add_edge(dd, other)

    used = [False] * len(edge_list)
    new_pairs: list[tuple[int, int]] = []
    loops = 0

    for start in list(adj):
        if len(adj[start]) != 1:
            continue
        ei0 = adj[start][0]
        if used[ei0]:
            continue
        cur = start
        while True:
            step = None
            for ei in adj[cur]:
                if not used[ei]:
                    step = ei
                    break
            if step is None:
                break
            used[step] = True
            u, v = edge_list[step]
            cur = v if u == cur else u
        new_pairs.append((min(start, cur), max(start, cur)))
    for ei in range(len(edge_list)):
        if used[ei]:
            continue
        loops += 1
        used[ei] = True
        u0, v0 = edge_list[ei]
        cur = v0
        while cur != u0:
            step = None
            for e2 in adj[cur]:
                if not used[e2]:
                    step = e2
                    break
            used[step] = True
            a, b = edge_list[step]
            cur = b if a == cur else a

    if loops:
        coeff = coeff * (DELTA ** loops)
    return tuple(sorted(new_pairs)), coeff


def bracket(d: Diagram, width_budget: int = 18) -> LaurentPoly:
    """Sweep-evaluated Kauffman bracket, unknot -> 1.

    Raises WidthBudgetExceeded (carrying the attained width) when the greedy
    order needs more simultaneous open strand ends than the budget allows.
    """
    n = len(d.crossings)
    free = _free_loop_count(d)
    if n == 0:
        return DELTA ** (free - 1) if free else LaurentPoly()

    alpha = _alpha(d)
    order, width = _sweep_order(d)
    if width > width_budget:
        raise WidthBudgetExceeded(width, width_budget)

    processed: set[int] = set()
    states: dict[tuple, LaurentPoly] = {(): LaurentPoly.one()}
    for ci in order:
        new_states: dict[tuple, LaurentPoly] = {}
        for matching, coeff in states.items():
            for a_or_b, joins in ((0, A_SMOOTH), (1, B_SMOOTH)):
                weight = LaurentPoly({1 - 2 * a_or_b: 1})
                key, val = _merge_crossing(matching, coeff * weight, ci, joins, alpha, processed)
                if key in new_states:
                    new_states[key] = new_states[key] + val
                    if new_states[key].is_zero():
                        del new_states[key]
                else:
                    new_states[key] = val
        processed.add(ci)
        states = new_states

    raw = states.get((), LaurentPoly())
    for _ in range(free):
        raw = raw * DELTA
    return raw.divide_exact(DELTA)


def jones(d: Diagram, width_budget: int = 18) -> LaurentPoly:
    """Jones polynomial in t on the doubled exponent scale (unknot -> 1).

    Knots always land on even doubled exponents; links may use odd ones
    (half-integer powers of t).  Requires every component to be oriented.
    """
    for i, comp in enumerate(d.components):
        if not comp.oriented:
            raise OrientationMissing(f"component {i} is not oriented")
    w = total_writhe(d)
    br = bracket(d, width_budget)
    signed = br.shift(-3 * w)
    if w % 2:
        signed = signed.scale(-1)
    out: dict[int, int] = {}
    for e, v in signed.items():
        if e % 2:
            raise ValueError("bracket exponent parity broken")
        out[-e // 2] = v
    return LaurentPoly(out)


def jones_naive(d: Diagram) -> LaurentPoly:
    """Oracle Jones from the brute-force bracket (doubled exponent scale)."""
    for i, comp in enumerate(d.components):
        if not comp.oriented:
            raise OrientationMissing(f"component {i} is not oriented")
    w = total_writhe(d)
    br = bracket_naive(d)
    signed = br.shift(-3 * w)
    if w % 2:
        signed = signed.scale(-1)
    return LaurentPoly({-e // 2: v for e, v in signed.items()})
