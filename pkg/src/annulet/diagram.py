"""Planar link diagrams as PD codes with component roles, framings and gates.

Conventions (fixed once, used everywhere):

* A crossing is a 4-tuple ``(a, b, c, d)`` of arc ids listed counterclockwise
  starting at the incoming under-strand, so the under-strand runs a -> c and
  the over-strand occupies positions 1 and 3.  Tuples are kept normalized so
  that "incoming" agrees with the stored traversal order of the component;
  ``(a, b, c, d)`` and ``(c, d, a, b)`` describe the same unoriented crossing.
* Components are cyclic arc sequences; the stored order fixes a traversal
  direction whether or not the component is semantically oriented.
* A crossing where the over-strand runs b -> d is negative, d -> b positive.
* Gates are ordered pierced-strand lists; ``mark_order`` records, per arc,
  the order of gate marks along the arc so edits can re-index them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Iterator

Crossing = tuple[int, int, int, int]

ROLE_MAIN = "main"
ROLE_AUX = "auxiliary"
ROLE_PATTERN = "pattern-boundary"

FORMAT_VERSION = 1


@dataclass(frozen=True)
class Gate:
    """Strands piercing the spanning disk of an unknotted auxiliary curve.

    ``strands`` lists (arc id, transversal sign) in order along the disk
    diameter; sign +1 means the strand crosses the disk downward in the
    template picture.
    """

    curve_name: str
    strands: tuple[tuple[int, int], ...]

    def arcs(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.strands)

    def algebraic_count(self) -> int:
        return sum(s for _, s in self.strands)


@dataclass(frozen=True)
class Component:
    arcs: tuple[int, ...]
    role: str = ROLE_MAIN
    name: str | None = None
    oriented: bool = False


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    components: tuple[Component, ...]
    framings: tuple[tuple[int, Fraction], ...] = ()
    gates: tuple[tuple[str, Gate], ...] = ()
    mark_order: tuple[tuple[int, tuple[tuple[str, int], ...]], ...] = ()
    format_version: int = FORMAT_VERSION

    # -- convenience views ---------------------------------------------------
    def arcs(self) -> set[int]:
        out: set[int] = set()
        for comp in self.components:
            out.update(comp.arcs)
        return out

    def gate(self, name: str) -> Gate:
        for n, g in self.gates:
            if n == name:
                return g
        raise KeyError(f"unknown gate {name!r}")

    def gate_names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.gates)

    def has_gate(self, name: str) -> bool:
        return any(n == name for n, _ in self.gates)

    def framing_of(self, comp_index: int) -> Fraction | None:
        for i, f in self.framings:
            if i == comp_index:
                return f
        return None

    def component_of_arc(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, comp in enumerate(self.components):
            for a in comp.arcs:
                out[a] = i
        return out

    def crossing_count(self) -> int:
        return len(self.crossings)

    def mark_order_of(self, arc: int) -> tuple[tuple[str, int], ...]:
        for a, marks in self.mark_order:
            if a == arc:
                return marks
        return ()

    def with_gates(self, gates: dict[str, Gate],
                   mark_order: dict[int, tuple[tuple[str, int], ...]] | None = None) -> "Diagram":
        mo = self.mark_order if mark_order is None else tuple(sorted(mark_order.items()))
        return replace(self, gates=tuple(sorted(gates.items())), mark_order=mo)

    def without_gates(self) -> "Diagram":
        return replace(self, gates=(), mark_order=())


# ---------------------------------------------------------------------------
# occurrence / traversal structure
# ---------------------------------------------------------------------------

def arc_occurrences(d: Diagram) -> dict[int, list[tuple[int, int]]]:
    """arc id -> list of (crossing index, position) where it appears."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, t in enumerate(d.crossings):
        for pos, a in enumerate(t):
            occ.setdefault(a, []).append((ci, pos))
    return occ


class InvalidDiagram(Exception):
    pass


def directed_passes(d: Diagram) -> dict[tuple[int, str], tuple[int, int]]:
    """Resolve each crossing pass-through against the component traversals.

    Returns {(crossing index, 'u'|'o'): (arc in, arc out)}.  The under pass
    connects positions 0 -> 2, the over pass 1 <-> 3.  Raises InvalidDiagram
    when the components do not consume the passes exactly.
    """
    # under passes carry a declared direction (position 0 is the in-slot);
    # over passes are direction-free.  Match transitions preferring exact
    # under declarations, then over passes, and only then rotated unders.
    u_forward: dict[tuple[int, int], list[tuple[int, str]]] = {}
    o_free: dict[frozenset[int], list[tuple[int, str]]] = {}
    for ci, t in enumerate(d.crossings):
        u_forward.setdefault((t[0], t[2]), []).append((ci, "u"))
        o_free.setdefault(frozenset((t[1], t[3])), []).append((ci, "o"))

    directed: dict[tuple[int, str], tuple[int, int]] = {}
    deferred: list[tuple[int, int]] = []
    for comp in d.components:
        n = len(comp.arcs)
        if n == 1 and comp.arcs[0] not in {a for t in d.crossings for a in t}:
            continue  # free loop
        for i in range(n):
            x, y = comp.arcs[i], comp.arcs[(i + 1) % n]
            bucket = u_forward.get((x, y))
            if bucket:
                directed[bucket.pop()] = (x, y)
                continue
            deferred.append((x, y))
    for x, y in deferred:
        bucket = o_free.get(frozenset((x, y)))
        if bucket:
            directed[bucket.pop()] = (x, y)
            continue
        bucket = u_forward.get((y, x))  # needs rotation; normalize fixes it
        if bucket:
            directed[bucket.pop()] = (x, y)
            continue
        raise InvalidDiagram(f"no crossing joins arcs {x} -> {y}")
    leftovers = [pk for b in u_forward.values() for pk in b]
    leftovers += [pk for b in o_free.values() for pk in b]
    if leftovers:
        raise InvalidDiagram(f"crossing passes not covered by components: {leftovers}")
    return directed


def normalize_traversal(d: Diagram) -> Diagram:
    """Rotate crossing tuples so position 0 is the incoming under-arc."""
    directed = directed_passes(d)
    new_crossings = []
    for ci, t in enumerate(d.crossings):
        ain, aout = directed[(ci, "u")]
        if (t[0], t[2]) == (ain, aout):
            new_crossings.append(t)
        elif (t[2], t[0]) == (ain, aout):
            new_crossings.append((t[2], t[3], t[0], t[1]))
        else:  # same arc both ways; leave as is
            new_crossings.append(t)
    return replace(d, crossings=tuple(new_crossings))


def crossing_signs(d: Diagram) -> list[int]:
    """Sign of every crossing w.r.t. the stored traversal directions."""
    directed = directed_passes(d)
    signs = []
    for ci, t in enumerate(d.crossings):
        oin, oout = directed[(ci, "o")]
        uin, _ = directed[(ci, "u")]
        if uin != t[0] and t[0] != t[2]:
            raise InvalidDiagram(f"crossing {ci} not traversal-normalized")
        # over pass b -> d is negative, d -> b positive
        signs.append(-1 if (oin, oout) == (t[1], t[3]) else 1)
    return signs


# ---------------------------------------------------------------------------
# faces / planarity
# ---------------------------------------------------------------------------

def face_orbits(d: Diagram) -> list[list[tuple[int, int]]]:
    """Faces as orbits of darts (crossing, position) under sigma . alpha."""
    occ = arc_occurrences(d)
    alpha: dict[tuple[int, int], tuple[int, int]] = {}
    for a, places in occ.items():
        if len(places) == 2:
            p, q = places
            alpha[p] = q
            alpha[q] = p
        elif len(places) == 1:
            raise InvalidDiagram(f"arc {a} has odd degree")
    faces = []
    seen: set[tuple[int, int]] = set()
    for start in alpha:
        if start in seen:
            continue
        orbit = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            orbit.append(dart)
            c, p = alpha[dart]
            dart = (c, (p + 1) % 4)
        faces.append(orbit)
    return faces


def connected_parts(d: Diagram) -> list[set[int]]:
    """Connected components of the 4-valent graph, as sets of crossing indices."""
    occ = arc_occurrences(d)
    parent = list(range(len(d.crossings)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for places in occ.values():
        if len(places) == 2:
            r1, r2 = find(places[0][0]), find(places[1][0])
            if r1 != r2:
                parent[r1] = r2
    groups: dict[int, set[int]] = {}
    for ci in range(len(d.crossings)):
        groups.setdefault(find(ci), set()).add(ci)
    return list(groups.values())


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class ValidationReport:
    ok: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def validate(d: Diagram) -> ValidationReport:
    """Check every Diagram invariant; the report lists each violation found."""
    violations: list[str] = []
    occ = arc_occurrences(d)
    comp_arcs = d.arcs()

    # arc degree: every crossing-incident arc appears exactly twice; a
    # component arc absent from all crossings must be a free loop
    for a, places in occ.items():
        if len(places) != 2:
            violations.append(f"arc degree: arc {a} appears {len(places)} times in crossings")
    for comp in d.components:
        for a in comp.arcs:
            if a not in occ and len(comp.arcs) != 1:
                violations.append(f"arc degree: arc {a} meets no crossing but component has {len(comp.arcs)} arcs")
    for a in occ:
        if a not in comp_arcs:
            violations.append(f"component cover: arc {a} not assigned to any component")
    seen_arcs: set[int] = set()
    for comp in d.components:
        for a in comp.arcs:
            if a in seen_arcs:
                violations.append(f"component cover: arc {a} in more than one component")
            seen_arcs.add(a)

    # component traversal consistency
    try:
        directed_passes(d)
    except InvalidDiagram as e:
        violations.append(f"traversal: {e}")

    # traversal-normalized tuples + consistent signs
    if not violations:
        try:
            crossing_signs(d)
        except InvalidDiagram as e:
            violations.append(f"orientation: {e}")

    # planarity by Euler count per connected part
    if not any(v.startswith("arc degree") or v.startswith("component cover") for v in violations):
        try:
            faces = face_orbits(d)
        except InvalidDiagram as e:
            violations.append(f"faces: {e}")
        else:
            dart_face: dict[tuple[int, int], int] = {}
            for fi, orbit in enumerate(faces):
                for dart in orbit:
                    dart_face[dart] = fi
            for part in connected_parts(d):
                V = len(part)
                part_arcs = {a for ci in part for a in d.crossings[ci]}
                E = len(part_arcs)
                F = len({dart_face[(ci, p)] for ci in part for p in range(4)})
                if V - E + F != 2:
                    violations.append(
                        f"Euler face count: component with {V} crossings has V-E+F = {V - E + F}"
                    )

    # gates reference live arcs
    for name, gate in d.gates:
        for a, s in gate.strands:
            if a not in comp_arcs:
                violations.append(f"gate {name}: arc {a} does not exist")
            if s not in (1, -1):
                violations.append(f"gate {name}: bad sign {s}")

    # framings reference components
    for i, f in d.framings:
        if not (0 <= i < len(d.components)):
            violations.append(f"framing on missing component {i}")

    return ValidationReport(not violations, violations)


# ---------------------------------------------------------------------------
# basic operations
# ---------------------------------------------------------------------------

def mirror(d: Diagram) -> Diagram:
    """Flip every crossing.  Writhe negates; mirror of mirror is the identity."""
    rotated = tuple((t[1], t[2], t[3], t[0]) for t in d.crossings)
    out = replace(d, crossings=rotated)
    return normalize_traversal(out)


def reverse_component(d: Diagram, index: int) -> Diagram:
    comps = list(d.components)
    comp = comps[index]
    comps[index] = replace(comp, arcs=tuple(reversed(comp.arcs)))
    return normalize_traversal(replace(d, components=tuple(comps)))


def orient_all(d: Diagram) -> Diagram:
    """Declare every component oriented along its stored traversal order."""
    comps = tuple(replace(c, oriented=True) for c in d.components)
    return replace(d, components=comps)


def relabel_arcs(d: Diagram, mapping: dict[int, int]) -> Diagram:
    def m(a: int) -> int:
        return mapping.get(a, a)

    crossings = tuple((m(a), m(b), m(c), m(e)) for a, b, c, e in d.crossings)
    comps = tuple(replace(c, arcs=tuple(m(a) for a in c.arcs)) for c in d.components)
    gates = tuple(
        (n, Gate(g.curve_name, tuple((m(a), s) for a, s in g.strands))) for n, g in d.gates
    )
    mark = tuple(sorted((m(a), marks) for a, marks in d.mark_order))
    return replace(d, crossings=crossings, components=comps, gates=gates, mark_order=mark)


def canonicalize(d: Diagram) -> Diagram:
    """Dense arc labels in traversal order (component by component)."""
    mapping: dict[int, int] = {}
    nxt = 0
    for comp in d.components:
        for a in comp.arcs:
            if a not in mapping:
                mapping[a] = nxt
                nxt += 1
    return relabel_arcs(d, mapping)


def _encoding(d: Diagram) -> tuple:
    crossings = tuple(sorted(min(t, (t[2], t[3], t[0], t[1])) for t in d.crossings))
    comps = tuple(
        (c.arcs, c.role, c.name or "", c.oriented) for c in d.components
    )
    return (crossings, comps)


def canonical_key(d: Diagram, up_to_reversal: bool = True) -> tuple:
    """A relabeling-invariant key: lexicographic minimum over traversal starts.

    Components keep their identity (role/name) but arc labels, cyclic starting
    points and (optionally) traversal directions are searched over.
    """
    best: tuple | None = None
    comps = d.components

    def variants(comp: Component) -> Iterator[tuple[int, ...]]:
        n = len(comp.arcs)
        seqs = [comp.arcs]
        if up_to_reversal and not comp.oriented:
            seqs.append(tuple(reversed(comp.arcs)))
        for seq in seqs:
            for r in range(n):
                yield seq[r:] + seq[:r]

    def rec(i: int, chosen: list[tuple[int, ...]]) -> None:
        nonlocal best
        if i == len(comps):
            mapping: dict[int, int] = {}
            nxt = 0
            for seq in chosen:
                for a in seq:
                    if a not in mapping:
                        mapping[a] = nxt
                        nxt += 1
            comps2 = tuple(
                replace(c, arcs=seq) for c, seq in zip(comps, chosen)
            )
            d2 = relabel_arcs(replace(d, components=comps2), mapping)
            d2 = normalize_traversal(d2)
            key = _encoding(d2)
            if best is None or key < best:
                best = key
            return
        for seq in variants(comps[i]):
            rec(i + 1, chosen + [seq])

    rec(0, [])
    assert best is not None
    return best


def same_diagram(d1: Diagram, d2: Diagram, up_to_reversal: bool = True) -> bool:
    """Equality up to arc relabeling (and optionally traversal reversal)."""
    if len(d1.crossings) != len(d2.crossings):
        return False
    if len(d1.components) != len(d2.components):
        return False
    return canonical_key(d1, up_to_reversal) == canonical_key(d2, up_to_reversal)


# ---------------------------------------------------------------------------
# textual file format (versioned, bit-exact round trip on canonical diagrams)
# ---------------------------------------------------------------------------

def to_text(d: Diagram) -> str:
    doc = {
        "format_version": d.format_version,
        "crossings": [list(t) for t in d.crossings],
        "components": [
            {
                "arcs": list(c.arcs),
                "role": c.role,
                "name": c.name,
                "oriented": c.oriented,
            }
            for c in d.components
        ],
        "framings": [[i, f"{f.numerator}/{f.denominator}"] for i, f in d.framings],
        "gates": [
            {
                "name": n,
                "curve": g.curve_name,
                "strands": [list(s) for s in g.strands],
            }
            for n, g in d.gates
        ],
        "mark_order": [[a, [list(m) for m in marks]] for a, marks in d.mark_order],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def from_text(text: str) -> Diagram:
    doc = json.loads(text)
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported diagram format version {doc.get('format_version')}")
    crossings = tuple(tuple(t) for t in doc["crossings"])
    comps = tuple(
        Component(tuple(c["arcs"]), c["role"], c.get("name"), c.get("oriented", False))
        for c in doc["components"]
    )
    framings = tuple(
        (i, Fraction(int(s.split("/")[0]), int(s.split("/")[1]))) for i, s in doc["framings"]
    )
    gates = tuple(
        (g["name"], Gate(g["curve"], tuple(tuple(s) for s in g["strands"])))
        for g in doc["gates"]
    )
    mark = tuple((a, tuple(tuple(m) for m in marks)) for a, marks in doc.get("mark_order", []))
    return Diagram(crossings, comps, framings, gates, mark)


# ---------------------------------------------------------------------------
# tiny standard diagrams (used by tests and presets)
# ---------------------------------------------------------------------------

def unknot_diagram() -> Diagram:
    return Diagram(crossings=(), components=(Component((0,), oriented=True),))


def trefoil_right() -> Diagram:
    """Right-handed trefoil: three positive crossings, writhe +3."""
    d = Diagram(
        crossings=((0, 4, 1, 3), (2, 0, 3, 5), (4, 2, 5, 1)),
        components=(Component((0, 1, 2, 3, 4, 5), oriented=True),),
    )
    return normalize_traversal(d)


def trefoil_left() -> Diagram:
    """Left-handed (Rolfsen-table) trefoil: PD X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)."""
    d = Diagram(
        crossings=((0, 3, 1, 4), (2, 5, 3, 0), (4, 1, 5, 2)),
        components=(Component((0, 1, 2, 3, 4, 5), oriented=True),),
    )
    return normalize_traversal(d)


def figure_eight() -> Diagram:
    """Figure-eight knot, PD X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)."""
    d = Diagram(
        crossings=((3, 1, 4, 0), (7, 5, 0, 4), (5, 2, 6, 3), (1, 6, 2, 7)),
        components=(Component((0, 1, 2, 3, 4, 5, 6, 7), oriented=True),),
    )
    return normalize_traversal(d)


def hopf_link_positive() -> Diagram:
    """Two-component Hopf link with linking number +1."""
    d = Diagram(
        crossings=((0, 3, 1, 2), (3, 0, 2, 1)),
        components=(Component((0, 1), oriented=True), Component((2, 3), oriented=True)),
    )
    return normalize_traversal(d)
