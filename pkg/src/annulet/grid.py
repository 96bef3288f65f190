"""Row-by-row diagram builder.

Templates are authored as a sequence of elementary events on a line of
vertical strand slots: births (caps), deaths (cups), crossings of adjacent
slots, and gate marks.  Every slot carries the flow direction of its strand
('d' toward later rows, 'u' toward earlier ones), so PD tuples come out
traversal-normalized and component orientations are free.
"""

from __future__ import annotations

from .diagram import Component, Diagram, Gate, InvalidDiagram, normalize_traversal, validate

DOWN = 1
UP = -1


class GridBuilder:
    def __init__(self) -> None:
        self._arc = 0
        self.slots: list[list] = []  # [arc, dir]
        self.crossings: list[tuple[int, int, int, int]] = []
        self.next: dict[int, int] = {}  # flow successor at joins
        self.union: dict[int, int] = {}
        self.gates: dict[str, list[tuple[int, int]]] = {}
        self.gate_curves: dict[str, str] = {}
        self.marks: list[tuple[str, int, int, int]] = []  # (gate, idx, arc, row_no)
        self._row = 0
        self.closed_loops: list[int] = []

    # -- arc bookkeeping -----------------------------------------------------
    def _new_arc(self) -> int:
        self._arc += 1
        return self._arc - 1

    def _find(self, a: int) -> int:
        root = a
        while self.union.get(root, root) != root:
            root = self.union[root]
        while self.union.get(a, a) != a:
            self.union[a], a = root, self.union[a]
        return root

    def _unite(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self.union[ra] = rb

    def row(self) -> int:
        self._row += 1
        return self._row - 1

    # -- events ---------------------------------------------------------------
    def birth(self, i: int, dirs: tuple[int, int]) -> None:
        """Insert a cap at slot position i; dirs are the two leg directions."""
        if dirs not in ((DOWN, UP), (UP, DOWN)):
            raise ValueError("cap legs must carry opposite flow")
        a = self._new_arc()
        self.slots.insert(i, [a, dirs[0]])
        self.slots.insert(i + 1, [a, dirs[1]])
        self.row()

    def death(self, i: int) -> None:
        """Join slots i and i+1 with a cup."""
        (a, da), (b, db) = self.slots[i], self.slots[i + 1]
        if {da, db} != {DOWN, UP}:
            raise ValueError("cup legs must carry opposite flow")
        if self._find(a) == self._find(b):
            self.closed_loops.append(self._find(a))
        else:
            self._unite(a, b)
        del self.slots[i : i + 2]
        self.row()

    def cross(self, i: int, over: str) -> None:
        """Cross slots i and i+1; ``over`` is 'L' or 'R' (which strand is on top)."""
        (u, du), (v, dv) = self.slots[i], self.slots[i + 1]
        l_new, r_new = self._new_arc(), self._new_arc()
        nw, ne, sw, se = u, v, r_new, l_new
        if over == "L":
            t = (ne, nw, sw, se) if dv == DOWN else (sw, se, ne, nw)
        elif over == "R":
            t = (nw, sw, se, ne) if du == DOWN else (se, ne, nw, sw)
        else:
            raise ValueError("over must be 'L' or 'R'")
        self.crossings.append(t)
        # flow successors through the crossing
        if du == DOWN:
            self.next[u] = l_new
        else:
            self.next[l_new] = u
        if dv == DOWN:
            self.next[v] = r_new
        else:
            self.next[r_new] = v
        self.slots[i] = [r_new, dv]
        self.slots[i + 1] = [l_new, du]
        self.row()

    def mark(self, gate: str, i: int, curve: str | None = None,
             arc_seq: int | None = None, sign: int | None = None) -> None:
        """Record a gate pierce point on the strand at slot i.

        ``arc_seq`` orders marks along arcs that double back through caps
        (row order cannot tell); ``sign`` overrides the recorded transversal
        sign when the pierce direction differs from the slot flow.
        """
        a, direction = self.slots[i]
        idx = len(self.gates.setdefault(gate, []))
        self.gates[gate].append((a, sign if sign is not None else direction))
        self.gate_curves.setdefault(gate, curve or gate)
        self.marks.append((gate, idx, a, self._row if arc_seq is None else None, arc_seq, direction))
        self.row()

    def slot_dir(self, i: int) -> int:
        return self.slots[i][1]

    # -- assembly ---------------------------------------------------------------
    def finish(self, role: str = "main", name: str | None = None,
               oriented: bool = True) -> Diagram:
        if self.slots:
            raise InvalidDiagram(f"{len(self.slots)} slots left open")

        def img(a: int) -> int:
            return self._find(a)

        crossings = tuple(tuple(img(x) for x in t) for t in self.crossings)
        succ = {img(a): img(b) for a, b in self.next.items()}

        comps: list[Component] = []
        seen: set[int] = set()
        order_hint: dict[int, int] = {}
        for t in crossings:
            for x in t:
                order_hint.setdefault(x, len(order_hint))
        for start in sorted(succ, key=lambda x: order_hint.get(x, 10 ** 9)):
            if start in seen:
                continue
            cyc = []
            a = start
            while a not in seen:
                seen.add(a)
                cyc.append(a)
                a = succ[a]
            comps.append(Component(tuple(cyc), role=role, name=name, oriented=oriented))
        for loop in self.closed_loops:
            r = img(loop)
            if r not in seen:
                seen.add(r)
                comps.append(Component((r,), role=role, name=name, oriented=oriented))

        gates = {}
        for gname, strands in self.gates.items():
            resolved = tuple((img(a), s) for a, s in strands)
            gates[gname] = Gate(self.gate_curves[gname], resolved)

        # mark order along each arc: by row (reversed on up-flow strands)
        # unless arc_seq pins the order explicitly
        per_arc: dict[int, list[tuple[str, int, int | None, int | None, int]]] = {}
        for gname, idx, a, row, seq, direction in self.marks:
            per_arc.setdefault(img(a), []).append((gname, idx, row, seq, direction))
        mark_order: dict[int, tuple[tuple[str, int], ...]] = {}
        for ra, items in per_arc.items():
            if any(seq is not None for _, _, _, seq, _ in items):
                if any(seq is None for _, _, _, seq, _ in items):
                    raise InvalidDiagram(
                        f"arc {ra} mixes arc_seq and row-ordered marks"
                    )
                items.sort(key=lambda it: it[3])
            else:
                dirs = {d for _, _, _, _, d in items}
                if len(dirs) > 1:
                    raise InvalidDiagram(
                        f"marks with mixed flow share arc {ra}; give them arc_seq"
                    )
                items.sort(key=lambda it: it[2], reverse=(dirs.pop() == UP))
            mark_order[ra] = tuple((g, i) for g, i, _, _, _ in items)

        d = Diagram(
            crossings=crossings,
            components=tuple(comps),
            gates=tuple(sorted(gates.items())),
            mark_order=tuple(sorted(mark_order.items())),
        )
        d = normalize_traversal(d)
        report = validate(d)
        if not report.ok:
            raise InvalidDiagram(f"grid produced an invalid diagram: {report.violations}")
        return d
