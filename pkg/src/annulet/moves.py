"""Reidemeister rewriting: move sites, apply_move, and bounded simplification.

Sites are concrete: enumeration functions list every place a move applies and
``apply_move`` rejects anything else with SiteMismatch.  Moves never split an
arc that carries a gate mark (the pierce point would become ambiguous); merges
are safe and re-index marks instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .diagram import (
    Component,
    Diagram,
    Gate,
    InvalidDiagram,
    arc_occurrences,
    directed_passes,
    face_orbits,
    normalize_traversal,
    validate,
)


class SiteMismatch(Exception):
    pass


# ---------------------------------------------------------------------------
# site types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class R1Add:
    arc: int
    sign: int  # +1 inserts a positive curl
    side: int  # 0 or 1: which adjacent face the loop bulges into


@dataclass(frozen=True)
class R1Remove:
    crossing: int


@dataclass(frozen=True)
class R2Add:
    arc_x: int
    arc_y: int
    face: int  # index into face_orbits(d)
    x_over: bool


@dataclass(frozen=True)
class R2Remove:
    c1: int
    c2: int


@dataclass(frozen=True)
class R3Site:
    crossings: tuple[int, int, int]
    face: int


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _fresh_arcs(d: Diagram, n: int) -> list[int]:
    start = max(d.arcs(), default=-1) + 1
    return list(range(start, start + n))


def _marked_arcs(d: Diagram) -> set[int]:
    out: set[int] = set()
    for _, g in d.gates:
        out.update(g.arcs())
    return out


def _split_ends(d: Diagram, crossings: list[list[int]], arc: int,
                first_piece: int, last_piece: int) -> None:
    """Rewire the two old end slots of a split arc.

    ``first_piece`` is the piece at the arc's tail (where it leaves a
    crossing), ``last_piece`` the piece arriving at its head.
    """
    tails, heads = _arc_ends(d)
    if arc in tails:
        ci, pos = tails[arc]
        crossings[ci][pos] = first_piece
    if arc in heads:
        ci, pos = heads[arc]
        crossings[ci][pos] = last_piece


def _replace_in_component(comps: list[Component], arc: int, pieces: list[int]) -> list[Component]:
    out = []
    for comp in comps:
        if arc in comp.arcs:
            arcs: list[int] = []
            for a in comp.arcs:
                if a == arc:
                    arcs.extend(pieces)
                else:
                    arcs.append(a)
            out.append(replace(comp, arcs=tuple(arcs)))
        else:
            out.append(comp)
    return out


def _merge_arcs(d: Diagram, unions: list[tuple[int, int]], dead_crossings: set[int]) -> Diagram:
    """Remove crossings and fuse arcs across them.

    ``unions`` lists (a, b) arc pairs to identify.  Components are rebuilt by
    collapsing runs of identified arcs; gate marks on fused arcs survive in
    traversal order.
    """
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in unions:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    # representative = smallest member, for stable labels
    members: dict[int, list[int]] = {}
    for a in list(parent):
        members.setdefault(find(a), []).append(a)
    rep = {r: min(ms) for r, ms in members.items()}

    def image(a: int) -> int:
        return rep[find(a)] if a in parent else a

    new_crossings = tuple(
        tuple(image(a) for a in t)
        for ci, t in enumerate(d.crossings)
        if ci not in dead_crossings
    )

    new_comps: list[Component] = []
    mark_order: dict[int, list[tuple[str, int]]] = {}
    gate_arc_map: dict[tuple[str, int], int] = {}
    for comp in d.components:
        arcs: list[int] = []
        for a in comp.arcs:
            m = image(a)
            for mk in d.mark_order_of(a):
                mark_order.setdefault(m, []).append(mk)
                gate_arc_map[mk] = m
            if arcs and arcs[-1] == m:
                continue
            arcs.append(m)
        if len(arcs) > 1 and arcs[0] == arcs[-1]:
            arcs.pop()
        new_comps.append(replace(comp, arcs=tuple(arcs)))

    new_gates = []
    for name, g in d.gates:
        strands = tuple(
            (gate_arc_map.get((name, i), image(a)), s) for i, (a, s) in enumerate(g.strands)
        )
        new_gates.append((name, Gate(g.curve_name, strands)))

    out = Diagram(
        crossings=new_crossings,
        components=tuple(new_comps),
        framings=d.framings,
        gates=tuple(new_gates),
        mark_order=tuple(sorted((a, tuple(ms)) for a, ms in mark_order.items())),
        format_version=d.format_version,
    )
    return normalize_traversal(out)


# ---------------------------------------------------------------------------
# R1
# ---------------------------------------------------------------------------

def r1_add_sites(d: Diagram) -> list[R1Add]:
    gated = _marked_arcs(d)
    out = []
    for a in sorted(d.arcs()):
        if a in gated:
            continue
        for sign in (1, -1):
            for side in (0, 1):
                out.append(R1Add(a, sign, side))
    return out


def _apply_r1_add(d: Diagram, site: R1Add) -> Diagram:
    if site.arc not in d.arcs():
        raise SiteMismatch(f"arc {site.arc} does not exist")
    if site.arc in _marked_arcs(d):
        raise SiteMismatch(f"arc {site.arc} carries a gate mark")
    occ = arc_occurrences(d)
    x1, ell, x2 = _fresh_arcs(d, 3)
    a = site.arc
    free_loop = a not in occ
    if free_loop:
        # the kinked free loop needs only 2 arcs
        x1, ell = x1, ell
        if site.sign > 0:
            t = (x1, x1, ell, ell) if site.side == 0 else (ell, ell, x1, x1)
        else:
            t = (x1, ell, ell, x1) if site.side == 0 else (ell, x1, x1, ell)
        comps = _replace_in_component(list(d.components), a, [x1, ell])
        out = Diagram(
            d.crossings + (t,), tuple(comps), d.framings, d.gates, d.mark_order
        )
        return normalize_traversal(out)
    if site.sign > 0:
        t = (x1, x2, ell, ell) if site.side == 0 else (ell, ell, x2, x1)
    else:
        t = (x1, ell, ell, x2) if site.side == 0 else (ell, x1, x2, ell)
    crossings = [list(c) for c in d.crossings]
    _split_ends(d, crossings, a, x1, x2)
    comps = _replace_in_component(list(d.components), a, [x1, ell, x2])
    out = Diagram(
        tuple(tuple(c) for c in crossings) + (t,),
        tuple(comps), d.framings, d.gates, d.mark_order,
    )
    return normalize_traversal(out)


def r1_remove_sites(d: Diagram) -> list[R1Remove]:
    out = []
    for ci, t in enumerate(d.crossings):
        for k in range(4):
            if t[k] == t[(k + 1) % 4]:
                out.append(R1Remove(ci))
                break
    return out


def _apply_r1_remove(d: Diagram, site: R1Remove) -> Diagram:
    ci = site.crossing
    if not (0 <= ci < len(d.crossings)):
        raise SiteMismatch(f"no crossing {ci}")
    t = d.crossings[ci]
    ell = None
    for k in range(4):
        if t[k] == t[(k + 1) % 4]:
            ell = t[k]
            break
    if ell is None:
        raise SiteMismatch(f"crossing {ci} is not a curl")
    others = [a for a in t if a != ell]
    x1, x2 = others[0], others[1]
    return _merge_arcs(d, [(x1, ell), (ell, x2)], {ci})


# ---------------------------------------------------------------------------
# faces with sides, for R2-add sites
# ---------------------------------------------------------------------------

def _arc_ends(d: Diagram) -> tuple[dict[int, tuple[int, int]], dict[int, tuple[int, int]]]:
    """(tail dart, head dart) per arc: tail is where the arc leaves a crossing."""
    directed = directed_passes(d)
    tail: dict[int, tuple[int, int]] = {}
    head: dict[int, tuple[int, int]] = {}
    for ci, t in enumerate(d.crossings):
        uin, uout = directed[(ci, "u")]
        head[uin] = (ci, 0)
        tail[uout] = (ci, 2)
        oin, oout = directed[(ci, "o")]
        if (oin, oout) == (t[1], t[3]):
            head[oin] = (ci, 1)
            tail[oout] = (ci, 3)
        else:
            head[oin] = (ci, 3)
            tail[oout] = (ci, 1)
    return tail, head


def face_walk(d: Diagram) -> list[list[tuple[int, int, int]]]:
    """Faces as lists of (arc, walk direction, dart) with the face on the
    right of the walk; direction +1 means the walk agrees with traversal."""
    tails, heads = _arc_ends(d)
    tail_of = {dart: a for a, dart in tails.items()}
    head_of = {dart: a for a, dart in heads.items()}
    faces = []
    for orbit in face_orbits(d):
        walk = []
        for dart in orbit:
            if dart in tail_of:
                walk.append((tail_of[dart], 1, dart))
            else:
                walk.append((head_of[dart], -1, dart))
        faces.append(walk)
    return faces


def r2_add_sites(d: Diagram) -> list[R2Add]:
    gated = _marked_arcs(d)
    out = []
    for fi, walk in enumerate(face_walk(d)):
        for i in range(len(walk)):
            for j in range(len(walk)):
                if i == j:
                    continue
                ax, ay = walk[i][0], walk[j][0]
                if ax == ay or ax in gated or ay in gated:
                    continue
                for x_over in (True, False):
                    out.append(R2Add(ax, ay, fi, x_over))
    return out


def _apply_r2_add(d: Diagram, site: R2Add) -> Diagram:
    walks = face_walk(d)
    if not (0 <= site.face < len(walks)):
        raise SiteMismatch("no such face")
    walk = walks[site.face]
    ex = next((w for w in walk if w[0] == site.arc_x), None)
    ey = next((w for w in walk if w[0] == site.arc_y), None)
    if ex is None or ey is None or site.arc_x == site.arc_y:
        raise SiteMismatch("arcs do not border the face")
    if site.arc_x in _marked_arcs(d) or site.arc_y in _marked_arcs(d):
        raise SiteMismatch("gated arc")
    (ax, dirx, _), (ay, diry, _) = ex, ey
    x1, x2, x3, y1, y2, y3 = _fresh_arcs(d, 6)
    # Local picture: the face walk runs x upward (pieces x1,x2,x3 along the
    # walk) and y downward (pieces y1,y2,y3 along the walk); the finger of x
    # pushes rightward across y.  Crossing tuples for that picture; rotation
    # normalization fixes the under-in slot afterwards.
    if site.x_over:
        c1 = (y2, x1, y3, x2)
        c2 = (y1, x3, y2, x2)
    else:
        c1 = (x1, y3, x2, y2)
        c2 = (x2, y1, x3, y2)
    crossings = [list(c) for c in d.crossings]
    _split_ends(d, crossings, ax, x1 if dirx == 1 else x3, x3 if dirx == 1 else x1)
    _split_ends(d, crossings, ay, y1 if diry == 1 else y3, y3 if diry == 1 else y1)
    comps = list(d.components)
    comps = _replace_in_component(comps, ax, [x1, x2, x3] if dirx == 1 else [x3, x2, x1])
    comps = _replace_in_component(comps, ay, [y1, y2, y3] if diry == 1 else [y3, y2, y1])
    out = Diagram(
        tuple(tuple(c) for c in crossings) + (c1, c2),
        tuple(comps), d.framings, d.gates, d.mark_order,
    )
    return normalize_traversal(out)


def r2_remove_sites(d: Diagram) -> list[R2Remove]:
    directed = directed_passes(d)
    out = []
    for walk in face_walk(d):
        if len(walk) != 2:
            continue
        (a1, _, dart1), (a2, _, dart2) = walk
        ci, cj = dart1[0], dart2[0]
        if ci == cj or a1 == a2:
            continue
        # over/under pattern: the same strand must be over at both crossings
        def level(ci_: int, arc: int) -> str:
            t = d.crossings[ci_]
            return "u" if arc in (t[0], t[2]) else "o"

        if level(ci, a1) == level(cj, a1) and level(ci, a2) == level(cj, a2):
            out.append(R2Remove(min(ci, cj), max(ci, cj)))
    # dedupe
    return sorted(set(out), key=lambda s: (s.c1, s.c2))


def _apply_r2_remove(d: Diagram, site: R2Remove) -> Diagram:
    ci, cj = site.c1, site.c2
    if not (0 <= ci < len(d.crossings)) or not (0 <= cj < len(d.crossings)) or ci == cj:
        raise SiteMismatch("bad crossing pair")
    if site not in r2_remove_sites(d):
        raise SiteMismatch("crossings do not bound a removable bigon")
    directed = directed_passes(d)
    unions: list[tuple[int, int]] = []
    for ck in (ci, cj):
        for kind in ("u", "o"):
            ain, aout = directed[(ck, kind)]
            unions.append((ain, aout))
    return _merge_arcs(d, unions, {ci, cj})


# ---------------------------------------------------------------------------
# R3
# ---------------------------------------------------------------------------

def r3_sites(d: Diagram) -> list[R3Site]:
    out = []
    for fi, walk in enumerate(face_walk(d)):
        if len(walk) != 3:
            continue
        arcs = [w[0] for w in walk]
        crossings = [w[2][0] for w in walk]
        if len(set(arcs)) != 3 or len(set(crossings)) != 3:
            continue
        # over/under tournament must be acyclic
        wins: dict[int, int] = {a: 0 for a in arcs}
        ok = True
        for ci in crossings:
            t = d.crossings[ci]
            under = [a for a in arcs if a in (t[0], t[2])]
            over = [a for a in arcs if a in (t[1], t[3])]
            if len(under) != 1 or len(over) != 1:
                ok = False
                break
            wins[over[0]] += 1
        if not ok:
            continue
        if sorted(wins.values()) != [0, 1, 2]:
            continue  # cyclic triangle admits no slide
        out.append(R3Site(tuple(sorted(set(crossings))), fi))
    return out


def _apply_r3(d: Diagram, site: R3Site) -> Diagram:
    matching = [s for s in r3_sites(d) if s.crossings == site.crossings]
    if not matching:
        raise SiteMismatch("no R3 triangle at those crossings")
    site = matching[0]
    walk = face_walk(d)[site.face]
    directed = directed_passes(d)
    side_arcs = {w[0] for w in walk}
    tri = set(site.crossings)

    # per strand: (outer_in, side, outer_out) and its two crossings in order
    strands = []
    for w in walk:
        side_arc = w[0]
        occ = [(ci, kind) for (ci, kind), (ain, aout) in directed.items()
               if ci in tri and side_arc in (ain, aout)]
        first = next(pk for pk in occ if directed[pk][1] == side_arc)
        second = next(pk for pk in occ if directed[pk][0] == side_arc)
        outer_in = directed[first][0]
        outer_out = directed[second][1]
        strands.append((outer_in, side_arc, outer_out, first, second))

    new_crossings = [list(t) for t in d.crossings]

    def set_pass(pk: tuple[int, str], ain: int, aout: int) -> None:
        ci, kind = pk
        t = new_crossings[ci]
        if kind == "u":
            t[0], t[2] = ain, aout
        else:
            cur = directed[pk]
            told = d.crossings[ci]
            if (cur[0], cur[1]) == (told[1], told[3]):
                t[1], t[3] = ain, aout
            else:
                t[3], t[1] = ain, aout

    for outer_in, side_arc, outer_out, first, second in strands:
        # the strand now meets its two triangle crossings in swapped order
        set_pass(first, side_arc, outer_out)
        set_pass(second, outer_in, side_arc)

    out = replace(d, crossings=tuple(tuple(t) for t in new_crossings))
    return normalize_traversal(out)


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

def apply_move(d: Diagram, move: str, site, direction: str) -> Diagram:
    """Apply one Reidemeister move at a site; raises SiteMismatch otherwise."""
    key = (move.upper(), direction)
    if key == ("R1", "add") and isinstance(site, R1Add):
        out = _apply_r1_add(d, site)
    elif key == ("R1", "remove") and isinstance(site, R1Remove):
        out = _apply_r1_remove(d, site)
    elif key == ("R2", "add") and isinstance(site, R2Add):
        out = _apply_r2_add(d, site)
    elif key == ("R2", "remove") and isinstance(site, R2Remove):
        out = _apply_r2_remove(d, site)
    elif key[0] == "R3" and isinstance(site, R3Site):
        out = _apply_r3(d, site)
    else:
        raise SiteMismatch(f"site {site!r} does not fit move {move} {direction}")
    report = validate(out)
    if not report.ok:
        raise InvalidDiagram(f"move produced invalid diagram: {report.violations}")
    return out


def greedy_reduce(d: Diagram) -> Diagram:
    """Apply R1/R2 removals until none remain."""
    while True:
        sites1 = r1_remove_sites(d)
        if sites1:
            d = _apply_r1_remove(d, sites1[0])
            continue
        sites2 = r2_remove_sites(d)
        if sites2:
            d = _apply_r2_remove(d, sites2[0])
            continue
        return d


def simplify(d: Diagram, effort: int = 30, seed: int = 0) -> Diagram:
    """Greedy R1/R2 reduction to a fixpoint, then seeded R3 exploration.

    Deterministic for fixed (diagram, effort, seed); never returns a diagram
    with more crossings than the input and never touches gate marks.
    """
    rng = random.Random(seed)
    best = cur = greedy_reduce(d)
    if len(d.crossings) < len(best.crossings):
        best = d
    for _ in range(effort):
        sites = r3_sites(cur)
        if not sites:
            break
        site = sites[rng.randrange(len(sites))]
        try:
            cur = _apply_r3(cur, site)
        except (SiteMismatch, InvalidDiagram):
            break
        cur = greedy_reduce(cur)
        if len(cur.crossings) < len(best.crossings):
            best = cur
    return best


def random_move_sequence(d: Diagram, count: int, seed: int = 0,
                         max_crossings: int = 60) -> Diagram:
    """Apply ``count`` random Reidemeister moves (fuzzing helper)."""
    rng = random.Random(seed)
    for _ in range(count):
        options: list[tuple[str, str, object]] = []
        if len(d.crossings) < max_crossings:
            adds1 = r1_add_sites(d)
            if adds1:
                options.append(("R1", "add", adds1))
            adds2 = r2_add_sites(d)
            if adds2:
                options.append(("R2", "add", adds2))
        rem1 = r1_remove_sites(d)
        if rem1:
            options.append(("R1", "remove", rem1))
        rem2 = r2_remove_sites(d)
        if rem2:
            options.append(("R2", "remove", rem2))
        tri = r3_sites(d)
        if tri:
            options.append(("R3", "slide", tri))
        if not options:
            break
        move, direction, sites = options[rng.randrange(len(options))]
        site = sites[rng.randrange(len(sites))]
        d = apply_move(d, move, site, direction)
    return d
