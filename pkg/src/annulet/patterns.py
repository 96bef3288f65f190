"""Patterns in a solid torus, satellites, and computable dualizability checks.

A pattern is a knot diagram drawn in the complement of a meridian gate: the
gate's disk is the meridian disk of the solid torus, so closing the diagram in
the plane (forgetting the gate) is the satellite with unknotted companion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .diagram import (
    Component,
    Diagram,
    Gate,
    InvalidDiagram,
    ROLE_MAIN,
    arc_occurrences,
    normalize_traversal,
    validate,
)
from .invariants.homology import AbelianGroup, h1_surgery
from .invariants.linking import writhe
from .moves import _arc_ends, simplify
from .twist import expand_gate_to_curve, gate_twist

MERIDIAN_GATE = "meridian"


@dataclass(frozen=True)
class Pattern:
    """An oriented knot in a solid torus, encoded as diagram + meridian gate."""

    diagram: Diagram
    gate_name: str = MERIDIAN_GATE
    name: str = ""

    def gate(self) -> Gate:
        return self.diagram.gate(self.gate_name)

    def strand_count(self) -> int:
        return len(self.gate().strands)


@dataclass(frozen=True)
class Companion:
    """An oriented knot with the 0-framing convention for satellites."""

    diagram: Diagram
    name: str = ""


class NotUnknottedCompanionCurve(Exception):
    pass


def winding_number(p: Pattern) -> int:
    """Algebraic count of meridian-disk piercings (the homology degree)."""
    return p.gate().algebraic_count()


def pattern_from_curve(d: Diagram, gate_name: str, effort: int = 60,
                       name: str = "") -> Pattern:
    """Wrap a knot-with-auxiliary-gate as a pattern in the gate's complement.

    The gate curve must be verifiably unknotted: its explicit round-curve
    expansion, with the knot deleted, must simplify to a crossingless circle
    within the effort budget.
    """
    gate = d.gate(gate_name)
    expanded, circle_idx = expand_gate_to_curve(d, gate_name)
    alone = _keep_component(expanded, circle_idx)
    reduced = simplify(alone, effort=effort)
    if reduced.crossing_count() != 0:
        raise NotUnknottedCompanionCurve(
            f"gate {gate_name} expansion did not simplify to a round curve"
        )
    w = gate.algebraic_count()
    if w == 0:
        raise InvalidDiagram("pattern winding would be zero (null-homologous)")
    clean = d.with_gates(
        {MERIDIAN_GATE: Gate(gate.curve_name, gate.strands)},
        {a: tuple((MERIDIAN_GATE, i) for g, i in marks if g == gate_name)
         for a, marks in d.mark_order if any(g == gate_name for g, _ in marks)},
    )
    return Pattern(clean, MERIDIAN_GATE, name=name)


def _keep_component(d: Diagram, idx: int) -> Diagram:
    """Delete every component except one (and all crossings touching them)."""
    keep = set(d.components[idx].arcs)
    occ = arc_occurrences(d)
    dead_crossings = {
        ci for ci, t in enumerate(d.crossings) if any(a not in keep for a in t)
    }
    # removing a crossing joins the surviving strand straight through
    from .moves import _merge_arcs

    unions = []
    from .diagram import directed_passes

    directed = directed_passes(d)
    for ci in dead_crossings:
        for kind in ("u", "o"):
            ain, aout = directed[(ci, kind)]
            if ain in keep and aout in keep:
                unions.append((ain, aout))
    trimmed = Diagram(
        crossings=d.crossings,
        components=(replace(d.components[idx], role=ROLE_MAIN),),
        framings=(),
        gates=(),
        mark_order=(),
    )
    return _merge_arcs(trimmed, unions, dead_crossings)


def tau_twist(p: Pattern, m: int) -> Pattern:
    """Twist the solid torus m times along its meridian disk."""
    if m == 0:
        return p
    return replace(p, diagram=gate_twist(p.diagram, p.gate_name, m))


def satellite_closure(p: Pattern) -> Diagram:
    """The satellite with unknotted companion: drop the meridian gate."""
    gates = {n: g for n, g in p.diagram.gates if n != p.gate_name}
    mark_order = {
        a: tuple(m for m in marks if m[0] != p.gate_name)
        for a, marks in p.diagram.mark_order
    }
    mark_order = {a: ms for a, ms in mark_order.items() if ms}
    return p.diagram.with_gates(gates, mark_order)


def _cable_tuple(u_in: int, u_out: int, o_in: int, o_out: int,
                 u_south: bool, o_east: bool) -> tuple[int, int, int, int]:
    """PD tuple for one cable sub-crossing.

    Each companion crossing is rotated so its under-lanes run north to south;
    the over-lanes then run east or west according to the crossing sign.
    Lane flows may oppose the companion (u_south/o_east are per-lane).
    """
    if u_south == o_east:
        return (u_in, o_in, u_out, o_out)
    return (u_in, o_out, u_out, o_in)


def satellite(p: Pattern, c: Companion, twist_effort: int = 0) -> Diagram:
    """Satellite knot: cable the companion and splice in the pattern tangle.

    The companion is cabled blackboard-style with one lane per meridian-gate
    strand, corrected by -writhe(c) full twists so the identification uses the
    0-framing, and the pattern tangle replaces one cable fiber.
    """
    for i, comp in enumerate(c.diagram.components):
        if not comp.oriented:
            raise InvalidDiagram("orientation missing on companion")
    comp_knot = [i for i, comp in enumerate(c.diagram.components)]
    if len(comp_knot) != 1:
        raise InvalidDiagram("companion must be a knot diagram")
    gate = p.gate()
    k = len(gate.strands)
    signs = [s for _, s in gate.strands]
    cd = c.diagram

    if cd.crossing_count() == 0:
        return satellite_closure(p)

    from .diagram import crossing_signs, directed_passes

    directed = directed_passes(cd)
    csigns = crossing_signs(cd)
    w = writhe(cd)

    counter = [0]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    # lane L sits at west-east position k-1-L and carries pattern strand
    # k-1-L, so the fiber reads like the pattern gate from left to right
    lane_signs = list(reversed(signs))
    lane_arc: dict[tuple[int, int], int] = {}
    for a in cd.arcs():
        for i in range(k):
            lane_arc[(a, i)] = fresh()

    crossings: list[tuple[int, int, int, int]] = []

    for ci, t in enumerate(cd.crossings):
        uin, uout = directed[(ci, "u")]
        oin, oout = directed[(ci, "o")]
        # rotate so under-lanes run south; the over-lanes then run east for
        # negative crossings and west for positive ones
        comp_o_east = csigns[ci] < 0
        under_seg = {i: [lane_arc[(uin, i)]] for i in range(k)}
        # over segments are stored positionally west->east
        over_seg = {}
        for j in range(k):
            first = lane_arc[((oin if comp_o_east else oout), j)]
            over_seg[j] = [first]
        for y in range(k):          # rows, north to south
            oj = y if comp_o_east else k - 1 - y
            for x in range(k):      # cols, west to east
                ui = k - 1 - x
                u_prev = under_seg[ui][-1]
                o_prev = over_seg[oj][-1]
                u_next = lane_arc[(uout, ui)] if y == k - 1 else fresh()
                o_next = (
                    lane_arc[((oout if comp_o_east else oin), oj)]
                    if x == k - 1 else fresh()
                )
                under_seg[ui].append(u_next)
                over_seg[oj].append(o_next)
                u_south = lane_signs[ui] == 1
                o_east = comp_o_east == (lane_signs[oj] == 1)
                u_in_arc = u_prev if u_south else u_next
                u_out_arc = u_next if u_south else u_prev
                # positional west end is o_prev; east end is o_next
                o_in_arc = o_prev if o_east else o_next
                o_out_arc = o_next if o_east else o_prev
                crossings.append(
                    _cable_tuple(u_in_arc, u_out_arc, o_in_arc, o_out_arc,
                                 u_south, o_east)
                )

    comp_arcs = _components_from_directed(tuple(crossings))
    comps = tuple(
        Component(tuple(cyc), role=ROLE_MAIN, oriented=True) for cyc in comp_arcs
    )
    cable = Diagram(tuple(crossings), comps)
    cable = normalize_traversal(cable)

    # gate on one cable fiber: west-to-east lane order matches the pattern
    # gate's left-to-right diameter order
    a0 = cd.components[0].arcs[0]
    strands = tuple(
        (lane_arc[(a0, k - 1 - j)], lane_signs[k - 1 - j]) for j in range(k)
    )
    mark_order = {lane_arc[(a0, k - 1 - j)]: (("cable", j),) for j in range(k)}
    cable = cable.with_gates({"cable": Gate("cable", strands)}, mark_order)
    report = validate(cable)
    if not report.ok:
        raise InvalidDiagram(f"cable construction invalid: {report.violations}")

    if w != 0:
        cable = gate_twist(cable, "cable", -w)

    return _splice_pattern(cable, "cable", p)


def _components_from_directed(crossings: tuple) -> list[list[int]]:
    """Trace components when every tuple is already flow-normalized.

    Under passes give a -> c directly; over passes are resolved by the
    one-head-one-tail constraint, propagated to a fixpoint.
    """
    succ: dict[int, int] = {}
    has_tail: set[int] = set()
    has_head: set[int] = set()
    for t in crossings:
        succ[t[0]] = t[2]
        has_head.add(t[0])
        has_tail.add(t[2])
    remaining = [(t[1], t[3]) for t in crossings]
    while remaining:
        progressed = False
        for idx, (x, y) in enumerate(remaining):
            if x in has_head or y in has_tail:
                choice = (y, x)  # x cannot start another pass / y cannot end one
            elif y in has_head or x in has_tail:
                choice = (x, y)
            else:
                continue
            a, b = choice
            if a in has_head or b in has_tail:
                raise InvalidDiagram("inconsistent over-pass orientation")
            succ[a] = b
            has_head.add(a)
            has_tail.add(b)
            remaining.pop(idx)
            progressed = True
            break
        if not progressed:
            x, y = remaining.pop()
            succ[x] = y
            has_head.add(x)
            has_tail.add(y)
    cycles: list[list[int]] = []
    seen: set[int] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = []
        a = start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = succ[a]
        cycles.append(cyc)
    return cycles


def _splice_pattern(cable: Diagram, cable_gate: str, p: Pattern) -> Diagram:
    """Replace the marked cable fiber by the pattern's meridian-cut tangle."""
    from .moves import _arc_ends

    pg = p.gate()
    k = len(pg.strands)
    cg = cable.gate(cable_gate)
    if len(cg.strands) != k:
        raise InvalidDiagram("cable width disagrees with pattern gate")

    # offset pattern arcs above cable arcs
    offset = max(cable.arcs(), default=-1) + 1
    pd = p.diagram

    def sh(a: int) -> int:
        return a + offset

    pat_crossings = [tuple(sh(a) for a in t) for t in pd.crossings]

    # cut pattern arcs at the meridian marks: entry/exit pieces per strand
    counter = [offset + max(pd.arcs(), default=-1) + 1]

    def fresh() -> int:
        counter[0] += 1
        return counter[0] - 1

    tails, heads = _arc_ends(pd)
    pieces: dict[int, list[int]] = {}
    strand_pieces: dict[int, tuple[int, int]] = {}
    for a in sorted({a for a, _ in pg.strands}):
        order = [m for m in pd.mark_order_of(a) if m[0] == p.gate_name]
        occ = arc_occurrences(pd)
        cuts = len(order)
        if a in occ:
            ids = [fresh() for _ in range(cuts + 1)]
        else:
            ids = [fresh() for _ in range(cuts)]
            ids.append(ids[0])
        pieces[a] = ids
        for j, m in enumerate(order):
            strand_pieces[m[1]] = (ids[j], ids[j + 1])
    # rewire pattern crossing ends at split arcs
    pat_crossings = [list(t) for t in pat_crossings]
    for a, ids in pieces.items():
        if a in tails:
            ci, pos = tails[a]
            pat_crossings[ci][pos] = ids[0]
        if a in heads:
            ci, pos = heads[a]
            pat_crossings[ci][pos] = ids[-1]

    # cut cable arcs at the cable gate marks
    ctails, cheads = _arc_ends(cable)
    cable_crossings = [list(t) for t in cable.crossings]
    cable_pieces: dict[int, tuple[int, int]] = {}
    for i, (a, s) in enumerate(cg.strands):
        e, x = fresh(), fresh()
        cable_pieces[i] = (e, x)
        if a in ctails:
            ci, pos = ctails[a]
            cable_crossings[ci][pos] = e
        if a in cheads:
            ci, pos = cheads[a]
            cable_crossings[ci][pos] = x

    # glue: the pattern strand leaves its cut into the lane piece flowing
    # onward (cx) and receives the lane again through ce
    rename: dict[int, int] = {}
    unify: dict[int, int] = {}
    for i in range(k):
        pe, px = strand_pieces[i]
        ce, cx = cable_pieces[i]
        if pe == px:
            # crossingless pattern loop: the cable fiber just closes up
            rename[pe] = cx
            unify[ce] = cx
        else:
            rename[pe] = cx
            rename[px] = ce
    if unify:
        rename = {a: unify.get(b, b) for a, b in rename.items()}
        rename.update(unify)
        cable_crossings = [
            [unify.get(a, a) for a in t] for t in cable_crossings
        ]

    def rn(a: int) -> int:
        return rename.get(a, a)

    crossings = tuple(
        tuple(rn(a) for a in t) for t in cable_crossings + pat_crossings
    )

    # successor map assembled from both sides' known flows, adjusted at cuts
    from .diagram import directed_passes

    succ: dict[int, int] = {}

    def head_piece(side_pieces: dict[int, list[int]], a: int) -> int:
        return side_pieces[a][-1] if a in side_pieces else a

    def tail_piece(side_pieces: dict[int, list[int]], a: int) -> int:
        return side_pieces[a][0] if a in side_pieces else a

    for (x, y) in directed_passes(p.diagram).values():
        sx, sy = sh(x), sh(y)
        px_ = pieces.get(x, [sh(x)])
        py_ = pieces.get(y, [sh(y)])
        succ[px_[-1] if x in pieces else sx] = py_[0] if y in pieces else sy
    cab_pieces_by_arc: dict[int, list[int]] = {}
    for i, (a, s) in enumerate(cg.strands):
        e, x = cable_pieces[i]
        cab_pieces_by_arc[a] = [e, x]
    for (x, y) in directed_passes(cable).values():
        hx = cab_pieces_by_arc[x][-1] if x in cab_pieces_by_arc else x
        ty = cab_pieces_by_arc[y][0] if y in cab_pieces_by_arc else y
        succ[hx] = ty
    # splice identifications: cable entry piece flows into pattern entry,
    # pattern exit flows into cable exit.  With rename applied, these become
    # the same arcs, so rewrite the map through rn.
    succ = {rn(a): rn(b) for a, b in succ.items()}

    comp_arcs = []
    seen: set[int] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        cyc = []
        a = start
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = succ[a]
        comp_arcs.append(cyc)
    comps = tuple(
        Component(tuple(cyc), role=ROLE_MAIN, oriented=True) for cyc in comp_arcs
    )
    out = Diagram(crossings=crossings, components=comps)
    out = normalize_traversal(out)
    report = validate(out)
    if not report.ok:
        raise InvalidDiagram(f"satellite splice invalid: {report.violations}")
    return out


def dualizable_checks(p: Pattern) -> dict[str, object]:
    """Computable necessary conditions for dualizability.

    (i) |winding| = 1; (ii) the (0,0) surgery on closure-plus-meridian has
    trivial first homology.  Passing is evidence, never proof.
    """
    w = winding_number(p)
    expanded, idx = expand_gate_to_curve(p.diagram, p.gate_name)
    framed = replace(
        expanded,
        framings=tuple(
            (i, Fraction(0)) for i in range(len(expanded.components))
        ),
    )
    h1 = h1_surgery(framed)
    return {
        "winding": w,
        "winding_ok": abs(w) == 1,
        "h1_zero_zero": str(h1),
        "h1_trivial": h1.is_trivial(),
        "ok": abs(w) == 1 and h1.is_trivial(),
    }


def pattern_to_text(p: Pattern) -> str:
    """Versioned textual pattern format: diagram, meridian gate, metadata."""
    import json

    from .diagram import to_text

    doc = {
        "format_version": 1,
        "name": p.name,
        "gate": p.gate_name,
        "winding": winding_number(p),
        "diagram": to_text(p.diagram).strip(),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def pattern_from_text(text: str) -> Pattern:
    import json

    from .diagram import from_text

    doc = json.loads(text)
    if doc.get("format_version") != 1:
        raise ValueError("unsupported pattern format version")
    return Pattern(from_text(doc["diagram"]), doc["gate"], doc.get("name", ""))


def standard_companions() -> list[Companion]:
    from .diagram import figure_eight, trefoil_right, unknot_diagram

    return [
        Companion(unknot_diagram(), "unknot"),
        Companion(trefoil_right(), "right-trefoil"),
        Companion(figure_eight(), "figure-eight"),
    ]


def pattern_probe_equal(p: Pattern, q: Pattern,
                        companions: list[Companion] | None = None,
                        tau_range: tuple[int, ...] = (-1, 0, 1),
                        effort: int = 60,
                        width_budget: int = 24) -> dict[str, object]:
    """Probe two patterns for equality: winding, then satellite invariants.

    "distinguished" verdicts are conclusive; "indistinguishable-at-budget"
    is evidence only.
    """
    from .invariants.alexander import alexander_fox
    from .invariants.bracket import jones
    from .diagram import orient_all

    report: dict[str, object] = {"cases": []}
    if winding_number(p) != winding_number(q):
        report["verdict"] = "distinguished"
        report["reason"] = "winding"
        return report
    companions = companions or standard_companions()
    for m in tau_range:
        pm, qm = tau_twist(p, m), tau_twist(q, m)
        for comp in companions:
            dp = simplify(orient_all(satellite(pm, comp)), effort=effort, seed=1)
            dq = simplify(orient_all(satellite(qm, comp)), effort=effort, seed=1)
            jp, jq = jones(dp, width_budget), jones(dq, width_budget)
            ap, aq = alexander_fox(dp), alexander_fox(dq)
            case = {
                "tau": m,
                "companion": comp.name,
                "jones_equal": jp == jq,
                "alexander_equal": ap == aq,
            }
            report["cases"].append(case)
            if not case["jones_equal"] or not case["alexander_equal"]:
                report["verdict"] = "distinguished"
                report["reason"] = f"tau={m} companion={comp.name}"
                return report
    report["verdict"] = "indistinguishable-at-budget"
    return report
