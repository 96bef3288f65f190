"""Full-twist insertion at a gate, and gate-to-explicit-curve expansion.

``gate_twist(d, name, n)`` replaces the gate's pierced strands by the k-strand
full twist braid (Delta^2)^n inserted at the gate window.  Convention: n > 0
inserts n right-handed (positive) full twists, matching the blow-down of a
-1-framed unknot imparting one positive full twist.  A 1-strand gate receives
|n| kinks (writhe n), the framing leftover of the disk rotation.

The twisted gate survives, re-indexed to the arcs just past the inserted
braid; other gates' marks are redistributed using the per-arc mark order.
All operations are pure; the input diagram is never mutated.
"""

from __future__ import annotations

from dataclasses import replace

from .diagram import Component, Diagram, Gate, InvalidDiagram, ROLE_AUX, normalize_traversal, validate
from .moves import _arc_ends


class UnknownGate(KeyError):
    pass


class StaleGateStrand(Exception):
    pass


def _braid_crossing(u: int, v: int, r_new: int, l_new: int,
                    dir_l: int, dir_r: int, left_over: bool) -> tuple[int, int, int, int]:
    """PD tuple for one grid crossing.

    ``u``/``v`` are the arcs above slots (left, right); ``l_new``/``r_new``
    the arcs below (the left strand lands bottom-right, so below-right is
    l_new).  Directions are +1 for downward flow.
    """
    nw, ne, sw, se = u, v, r_new, l_new
    if left_over:
        if dir_r == 1:  # under is the right strand, flowing NE -> SW
            return (ne, nw, sw, se)
        return (sw, se, ne, nw)
    if dir_l == 1:  # under is the left strand, flowing NW -> SE
        return (nw, sw, se, ne)
    return (se, ne, nw, sw)


def _split_gate_arcs(d: Diagram, gate_name: str, g: Gate, new_arc)\
        -> tuple[dict[int, list[int]], dict[int, tuple[int, int]], dict[int, list[tuple[str, int]]]]:
    """Cut each pierced arc at this gate's marks.

    Returns (pieces per old arc in traversal order,
             (entry, exit) pieces per gate strand index,
             marks carried by each new piece)."""
    from .diagram import arc_occurrences

    occ = arc_occurrences(d)
    pieces: dict[int, list[int]] = {}
    strand_pieces: dict[int, tuple[int, int]] = {}
    piece_marks: dict[int, list[tuple[str, int]]] = {}
    for a in sorted({a for a, _ in g.strands}):
        order = list(d.mark_order_of(a))
        mine = [m for m in order if m[0] == gate_name]
        expected = [(gate_name, i) for i, (arc_i, _) in enumerate(g.strands) if arc_i == a]
        if sorted(mine) != sorted(expected):
            raise StaleGateStrand(
                f"gate {gate_name} marks on arc {a} disagree with the mark order"
            )
        cuts = len(mine)
        if a in occ:
            ids = [new_arc() for _ in range(cuts + 1)]
        else:
            # a free loop cut at m marks yields only m pieces, cyclically
            ids = [new_arc() for _ in range(cuts)]
            ids.append(ids[0])
        pieces[a] = ids
        seg = 0
        piece_marks.setdefault(ids[0], [])
        for m in order:
            if m[0] == gate_name:
                strand_pieces[m[1]] = (ids[seg], ids[seg + 1])
                seg += 1
                piece_marks.setdefault(ids[seg], [])
            else:
                piece_marks[ids[seg]].append(m)
    return pieces, strand_pieces, piece_marks


def _rewire_split_ends(d: Diagram, crossings: list[list[int]],
                       pieces: dict[int, list[int]]) -> None:
    tails, heads = _arc_ends(d)
    for a, ids in pieces.items():
        if a in tails:
            ci, pos = tails[a]
            crossings[ci][pos] = ids[0]
        if a in heads:
            ci, pos = heads[a]
            crossings[ci][pos] = ids[-1]


def _splice_components(d: Diagram, pieces: dict[int, list[int]],
                       flow_of_entry: dict[int, list[int]]) -> tuple[Component, ...]:
    """Replace each cut arc by its pieces with braid paths spliced in."""
    comps = []
    for comp in d.components:
        out: list[int] = []
        for a in comp.arcs:
            if a not in pieces:
                out.append(a)
                continue
            chain = pieces[a]
            closed = len(chain) > 1 and chain[0] == chain[-1]
            for j, p in enumerate(chain[:-1]):
                out.extend(flow_of_entry[p][:-1])  # exit piece opens next round
            if not closed:
                out.append(chain[-1])
        comps.append(replace(comp, arcs=tuple(out)))
    return tuple(comps)


def gate_twist(d: Diagram, gate_name: str, n: int,
               drag: tuple[tuple[str, int], ...] = (),
               drag_prepend: bool = True,
               drag_reverse: bool = False,
               drag_low: bool = True,
               drag_top_pieces: bool = False) -> Diagram:
    """Insert n full twists on the strands piercing a gate's disk.

    ``drag`` lists (gate name, transversal sign) for undrawn auxiliary curves
    that also pierce this disk.  Such a curve is dragged by the twist, so its
    own gate gains one pierce per real strand per full twist; the new marks
    sit on the strands just past the inserted braid, prepended (or appended)
    to the dragged gate in bundle order (or reversed).
    """
    try:
        g = d.gate(gate_name)
    except KeyError:
        raise UnknownGate(gate_name) from None
    if n == 0:
        return d
    arcs = d.arcs()
    for a, _ in g.strands:
        if a not in arcs:
            raise StaleGateStrand(f"gate {gate_name} references dead arc {a}")

    k = len(g.strands)
    counter = [max(arcs, default=-1) + 1]

    def new_arc() -> int:
        counter[0] += 1
        return counter[0] - 1

    pieces, strand_pieces, piece_marks = _split_gate_arcs(d, gate_name, g, new_arc)
    crossings = [list(t) for t in d.crossings]
    _rewire_split_ends(d, crossings, pieces)

    signs = [s for _, s in g.strands]
    braid_crossings: list[tuple[int, int, int, int]] = []
    flows: dict[int, list[int]] = {}
    bottom_piece: dict[int, int] = {}

    if k == 1:
        entry, exit_ = strand_pieces[0]
        sgn = 1 if n > 0 else -1
        chain = [entry] + [new_arc() for _ in range(abs(n) - 1)] + [exit_]
        flow: list[int] = []
        for j in range(abs(n)):
            x1, x2 = chain[j], chain[j + 1]
            ell = new_arc()
            braid_crossings.append((x1, x2, ell, ell) if sgn > 0 else (x1, ell, ell, x2))
            flow.extend([x1, ell])
        flow.append(chain[-1])
        flows[0] = flow
        bottom_piece[0] = exit_ if signs[0] > 0 else entry
    else:
        slot_arc: list[int] = []
        slot_dir: list[int] = []
        slot_strand: list[int] = []
        track: dict[int, list[int]] = {}
        for i, s in enumerate(signs):
            e, x = strand_pieces[i]
            slot_arc.append(e if s > 0 else x)
            slot_dir.append(s)
            slot_strand.append(i)
            track[i] = [slot_arc[i]]

        left_over = n < 0  # positive twists put the right strand on top
        for _ in range(k * abs(n)):
            for j in range(k - 1):
                u, v = slot_arc[j], slot_arc[j + 1]
                du, dv = slot_dir[j], slot_dir[j + 1]
                l_new, r_new = new_arc(), new_arc()
                braid_crossings.append(
                    _braid_crossing(u, v, r_new, l_new, du, dv, left_over)
                )
                si, sj = slot_strand[j], slot_strand[j + 1]
                track[si].append(l_new)
                track[sj].append(r_new)
                slot_arc[j], slot_arc[j + 1] = r_new, l_new
                slot_dir[j], slot_dir[j + 1] = dv, du
                slot_strand[j], slot_strand[j + 1] = sj, si

        rename: dict[int, int] = {}
        for j in range(k):
            i = slot_strand[j]
            e, x = strand_pieces[i]
            target = x if slot_dir[j] > 0 else e
            rename[slot_arc[j]] = target
            track[i][-1] = target
            bottom_piece[i] = target
        braid_crossings = [tuple(rename.get(a, a) for a in t) for t in braid_crossings]
        for i in range(k):
            flows[i] = track[i] if signs[i] > 0 else list(reversed(track[i]))

    flow_of_entry = {seq[0]: seq for seq in flows.values()}
    comps = _splice_components(d, pieces, flow_of_entry)

    # marks: pieces inherit other gates' marks; the twisted gate re-indexes
    # to the arcs just past the braid (start of exit piece for downward
    # strands, end of entry piece for upward ones)
    mark_order: dict[int, list[tuple[str, int]]] = {
        a: list(ms) for a, ms in d.mark_order if a not in pieces
    }
    for p, marks in piece_marks.items():
        if marks:
            mark_order[p] = list(marks)
    for i, (_, s) in enumerate(g.strands):
        p = bottom_piece[i]
        mark_order.setdefault(p, [])
        if s > 0:
            mark_order[p].insert(0, (gate_name, i))
        else:
            mark_order[p].append((gate_name, i))

    placed: dict[tuple[str, int], int] = {}
    for a, ms in mark_order.items():
        for m in ms:
            placed[m] = a
    gates_map: dict[str, Gate] = {
        name: Gate(other.curve_name,
                   tuple((placed.get((name, i), a), s)
                         for i, (a, s) in enumerate(other.strands)))
        for name, other in d.gates
    }

    # dragged undrawn curves: |n| new pierces per real strand, on the pieces
    # just past the braid, with the strand's flow sign
    for dg_name, dg_sign in drag:
        if dg_name not in gates_map:
            raise UnknownGate(dg_name)
        cur = gates_map[dg_name]
        order = list(range(k))
        if drag_reverse:
            order.reverse()
        extra = []
        for _ in range(abs(n)):
            for i in order:
                if drag_top_pieces:
                    e_piece, x_piece = strand_pieces[i]
                    p = e_piece if signs[i] > 0 else x_piece
                else:
                    p = bottom_piece[i]
                extra.append((p, signs[i]))
        if drag_prepend:
            strands = tuple(extra) + cur.strands
            shift = len(extra)
            remap = {(dg_name, i): (dg_name, i + shift)
                     for i in range(len(cur.strands))}
            for a in list(mark_order):
                mark_order[a] = [remap.get(m, m) for m in mark_order[a]]
            new_refs = [(dg_name, j) for j in range(len(extra))]
        else:
            strands = cur.strands + tuple(extra)
            base = len(cur.strands)
            new_refs = [(dg_name, base + j) for j in range(len(extra))]
        for (p, s_i), ref in zip(extra, new_refs):
            mark_order.setdefault(p, [])
            below = s_i > 0 if drag_low else s_i < 0
            if below:
                mark_order[p].append(ref)
            else:
                mark_order[p].insert(0, ref)
        gates_map[dg_name] = Gate(cur.curve_name, strands)

    out = Diagram(
        crossings=tuple(tuple(t) for t in crossings) + tuple(braid_crossings),
        components=comps,
        framings=d.framings,
        gates=tuple(sorted(gates_map.items())),
        mark_order=tuple(sorted((a, tuple(ms)) for a, ms in mark_order.items() if ms)),
        format_version=d.format_version,
    )
    out = normalize_traversal(out)
    report = validate(out)
    if not report.ok:
        raise InvalidDiagram(f"gate twist produced an invalid diagram: {report.violations}")
    return out


def expand_gate_to_curve(d: Diagram, gate_name: str) -> tuple[Diagram, int]:
    """Materialize a gate as an explicit auxiliary round-curve component.

    Each pierced strand crosses the new circle twice with opposite over/under,
    so it passes through the spanning disk; the circle is oriented so that its
    linking number with the pierced strands equals the gate's algebraic count.
    Returns (diagram, index of the new component).  The expanded gate itself
    is dropped from the result (its disk is now explicit); other gates keep
    their marks.
    """
    try:
        g = d.gate(gate_name)
    except KeyError:
        raise UnknownGate(gate_name) from None
    arcs = d.arcs()
    for a, _ in g.strands:
        if a not in arcs:
            raise StaleGateStrand(f"gate {gate_name} references dead arc {a}")
    k = len(g.strands)
    counter = [max(arcs, default=-1) + 1]

    def new_arc() -> int:
        counter[0] += 1
        return counter[0] - 1

    pieces, strand_pieces, piece_marks = _split_gate_arcs(d, gate_name, g, new_arc)
    crossings = [list(t) for t in d.crossings]
    _rewire_split_ends(d, crossings, pieces)

    circle = [new_arc() for _ in range(2 * k)]  # traversal order
    new_crossings: list[tuple[int, int, int, int]] = []
    flows: dict[int, list[int]] = {}
    mid_of: dict[int, int] = {}
    for i, (_, s) in enumerate(g.strands):
        e, x = strand_pieces[i]
        mid = new_arc()
        mid_of[i] = mid
        flows[i] = [e, mid, x]
        top_in, top_out = circle[i], circle[i + 1] if i + 1 < 2 * k else circle[0]
        bj = 2 * k - 1 - i
        bot_in, bot_out = circle[bj], circle[(bj + 1) % (2 * k)]
        if s > 0:
            # strand flows down: under the top edge, over the bottom edge
            new_crossings.append((e, top_in, mid, top_out))
            new_crossings.append((bot_in, mid, bot_out, x))
        else:
            # strand flows up: over the bottom edge first, under the top edge
            new_crossings.append((bot_in, mid, bot_out, e))
            new_crossings.append((mid, top_out, x, top_in))

    flow_of_entry = {seq[0]: seq for seq in flows.values()}
    comps = list(_splice_components(d, pieces, flow_of_entry))
    # circle runs against the labeling order so that lk matches the signs
    circle_comp = Component(
        arcs=tuple([circle[0]] + list(reversed(circle[1:]))),
        role=ROLE_AUX,
        name=g.curve_name,
        oriented=True,
    )
    comps.append(circle_comp)

    mark_order: dict[int, list[tuple[str, int]]] = {
        a: list(ms) for a, ms in d.mark_order if a not in pieces
    }
    for p, marks in piece_marks.items():
        if marks:
            mark_order[p] = [m for m in marks if m[0] != gate_name]
    placed: dict[tuple[str, int], int] = {}
    for a, ms in mark_order.items():
        for m in ms:
            placed[m] = a
    new_gates = tuple(
        (name, Gate(other.curve_name,
                    tuple((placed.get((name, i), a), s)
                          for i, (a, s) in enumerate(other.strands))))
        for name, other in d.gates
        if name != gate_name
    )

    out = Diagram(
        crossings=tuple(tuple(t) for t in crossings) + tuple(new_crossings),
        components=tuple(comps),
        framings=d.framings,
        gates=new_gates,
        mark_order=tuple(sorted((a, tuple(ms)) for a, ms in mark_order.items() if ms)),
        format_version=d.format_version,
    )
    out = normalize_traversal(out)
    report = validate(out)
    if not report.ok:
        raise InvalidDiagram(f"gate expansion produced an invalid diagram: {report.violations}")
    return out, len(out.components) - 1
