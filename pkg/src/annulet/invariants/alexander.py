"""Alexander polynomial by two independent routes.

* ``alexander_fox``: Wirtinger presentation, Fox derivatives, one maximal
  minor of the Jacobian over Z[t, 1/t], fraction-free determinant.
* ``alexander_seifert``: Seifert's algorithm.  The diagram is first braided
  with Vogel moves, the Seifert matrix V of the resulting banded surface is
  assembled, and det(V - t V^T) is expanded.

Both return the symmetric normalized form (p(t) = p(1/t), p(1) = 1), so the
cross-route equality is a plain comparison.
"""

from __future__ import annotations

from ..diagram import Diagram, crossing_signs, directed_passes
from ..laurent import LaurentPoly, alexander_normalize
from .linking import OrientationMissing


def _require_knot(d: Diagram) -> None:
    main = [c for c in d.components if len(c.arcs) > 0]
    if len(main) != 1:
        raise ValueError("Alexander routes here take a one-component diagram")
    if not main[0].oriented:
        raise OrientationMissing("knot component is not oriented")


# ---------------------------------------------------------------------------
# determinants over the Laurent ring
# ---------------------------------------------------------------------------

def laurent_det(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t, 1/t]."""
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    m = [row[:] for row in matrix]
    sign = 1
    prev = LaurentPoly.one()
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot_row = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if pivot_row is None:
                return LaurentPoly.zero()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.divide_exact(prev)
            m[i][k] = LaurentPoly.zero()
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return out.scale(sign) if sign < 0 else out


# ---------------------------------------------------------------------------
# Fox calculus route
# ---------------------------------------------------------------------------

def _wirtinger_classes(d: Diagram) -> dict[int, int]:
    """Merge PD arcs across over-passes: arc -> Wirtinger generator id."""
    parent: dict[int, int] = {a: a for a in d.arcs()}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    directed = directed_passes(d)
    for ci in range(len(d.crossings)):
        oin, oout = directed[(ci, "o")]
        ra, rb = find(oin), find(oout)
        if ra != rb:
            parent[ra] = rb
    classes: dict[int, int] = {}
    index: dict[int, int] = {}
    for a in sorted(parent):
        r = find(a)
        if r not in index:
            index[r] = len(index)
        classes[a] = index[r]
    return classes


def alexander_fox(d: Diagram) -> LaurentPoly:
    """Normalized Alexander polynomial from the Wirtinger/Fox Jacobian."""
    _require_knot(d)
    n = len(d.crossings)
    if n == 0:
        return LaurentPoly.one()
    classes = _wirtinger_classes(d)
    gens = 1 + max(classes.values())
    directed = directed_passes(d)
    signs = crossing_signs(d)

    t = LaurentPoly({1: 1})
    tinv = LaurentPoly({-1: 1})
    one = LaurentPoly.one()

    rows: list[dict[int, LaurentPoly]] = []
    for ci in range(n):
        uin, uout = directed[(ci, "u")]
        oin, _ = directed[(ci, "o")]
        a, c, b = classes[uin], classes[uout], classes[oin]
        row: dict[int, LaurentPoly] = {}

        def add(g: int, val: LaurentPoly) -> None:
            row[g] = row.get(g, LaurentPoly.zero()) + val

        if signs[ci] > 0:
            # relation u_out = o u_in o^-1
            add(b, one - t)
            add(a, t)
            add(c, LaurentPoly({0: -1}))
        else:
            # relation u_out = o^-1 u_in o
            add(b, one - tinv)
            add(a, tinv)
            add(c, LaurentPoly({0: -1}))
        rows.append(row)

    # delete the last generator column and the last relation row
    size = gens - 1
    matrix = [
        [rows[i].get(j, LaurentPoly.zero()) for j in range(size)]
        for i in range(size)
    ]
    det = laurent_det(matrix)
    if det.is_zero():
        raise ValueError("vanishing Alexander determinant on a knot diagram")
    return alexander_normalize(det)


def knot_determinant(d: Diagram) -> int:
    """|Alexander at -1|, the classical knot determinant."""
    val = alexander_fox(d)(-1)
    return abs(int(val))


# ---------------------------------------------------------------------------
# Seifert route: Vogel braiding, then the banded-surface Seifert matrix
# ---------------------------------------------------------------------------

def seifert_state(d: Diagram) -> list[list[int]]:
    """Seifert circles as lists of arcs (oriented smoothing of every crossing)."""
    directed = directed_passes(d)
    succ: dict[int, int] = {}
    for ci in range(len(d.crossings)):
        uin, uout = directed[(ci, "u")]
        oin, oout = directed[(ci, "o")]
        succ[uin] = oout
        succ[oin] = uout
    loops: list[list[int]] = []
    seen: set[int] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        loop = []
        a = start
        while a not in seen:
            seen.add(a)
            loop.append(a)
            a = succ[a]
        loops.append(loop)
    for comp in d.components:
        for a in comp.arcs:
            if a not in succ:
                loops.append([a])
    return loops


def _admissible_pair(d: Diagram):
    """A Vogel defect: two same-direction face entries on distinct circles."""
    from ..moves import face_walk

    circles = seifert_state(d)
    circle_of = {a: i for i, loop in enumerate(circles) for a in loop}
    for fi, walk in enumerate(face_walk(d)):
        for i in range(len(walk)):
            for j in range(i + 1, len(walk)):
                (ax, dx, _), (ay, dy, _) = walk[i], walk[j]
                if ax == ay:
                    continue
                if circle_of[ax] == circle_of[ay]:
                    continue
                if dx == dy:
                    return fi, ax, ay
    return None


def braid_form(d: Diagram, max_moves: int = 400) -> Diagram:
    """Apply Vogel moves until the Seifert circles are coherently nested."""
    from ..moves import R2Add, _apply_r2_add

    cur = d.without_gates()
    for _ in range(max_moves):
        pair = _admissible_pair(cur)
        if pair is None:
            return cur
        fi, ax, ay = pair
        cur = _apply_r2_add(cur, R2Add(ax, ay, fi, True))
    raise RuntimeError("Vogel braiding did not terminate")


def braid_word(d: Diagram) -> tuple[list[tuple[int, int]], int]:
    """Read a braid word off a braided diagram.

    Returns ([(strand index, sign), ...], strand count).  The input must be
    the output of ``braid_form``; the crossing order around the braid axis is
    recovered by merging the circles' cyclic crossing sequences.
    """
    from fractions import Fraction

    circles = seifert_state(d)
    circle_of = {a: i for i, loop in enumerate(circles) for a in loop}
    m = len(circles)
    n = len(d.crossings)
    if n == 0:
        return [], max(m, 1)

    # crossing -> pair of circles; must form a path graph
    directed = directed_passes(d)
    pair_of: list[tuple[int, int]] = []
    adj: dict[int, set[int]] = {i: set() for i in range(m)}
    for ci in range(n):
        uin, _ = directed[(ci, "u")]
        oin, _ = directed[(ci, "o")]
        p, q = circle_of[uin], circle_of[oin]
        if p == q:
            raise ValueError("crossing inside a single Seifert circle after braiding")
        pair_of.append((p, q))
        adj[p].add(q)
        adj[q].add(p)
    ends = [i for i in range(m) if len(adj[i]) == 1]
    if m > 1 and len(ends) != 2:
        raise ValueError("Seifert graph is not a path after braiding")
    order = [ends[0]] if m > 1 else [0]
    while len(order) < m:
        nxt = [x for x in adj[order[-1]] if x not in order]
        if len(nxt) != 1:
            raise ValueError("Seifert graph is not a path after braiding")
        order.append(nxt[0])
    strand_of = {circ: i for i, circ in enumerate(order)}

    # cyclic crossing sequence along each circle, in traversal order
    seq: dict[int, list[int]] = {i: [] for i in range(m)}
    for circ_i, loop in enumerate(circles):
        for a in loop:
            for ci in range(n):
                uin, _ = directed[(ci, "u")]
                oin, _ = directed[(ci, "o")]
                if a == uin or a == oin:
                    seq[circ_i].append(ci)
    # assign angular positions strand by strand
    theta: dict[int, Fraction] = {}
    base = seq[order[0]]
    for k, ci in enumerate(base):
        theta[ci] = Fraction(k)
    for circ in order[1:]:
        s = seq[circ]
        known = [ci for ci in s if ci in theta]
        if not known:
            if theta:
                raise ValueError("disconnected braid pieces")
            for k, ci in enumerate(s):
                theta[ci] = Fraction(k)
            continue
        # rotate so the known crossings appear in increasing angle
        rot = None
        for r in range(len(s)):
            cand = s[r:] + s[:r]
            ks = [theta[ci] for ci in cand if ci in theta]
            if ks == sorted(ks):
                rot = cand
                break
        if rot is None:
            raise ValueError("circle sequence inconsistent with braid order")
        # place unknown crossings between their known neighbours
        i = 0
        while i < len(rot):
            if rot[i] in theta:
                i += 1
                continue
            j = i
            while j < len(rot) and rot[j] not in theta:
                j += 1
            block = rot[i:j]
            lo = theta[rot[i - 1]] if i > 0 else None
            hi = theta[rot[j]] if j < len(rot) else None
            if lo is None and hi is None:
                raise ValueError("cannot anchor crossings on circle")
            if lo is None:
                lo = hi - 1
            if hi is None:
                hi = lo + 1
            step = (hi - lo) / (len(block) + 1)
            for k, ci in enumerate(block):
                theta[ci] = lo + step * (k + 1)
            i = j
    signs = crossing_signs(d)
    word = sorted(range(n), key=lambda ci: theta[ci])
    letters = [(min(strand_of[pair_of[ci][0]], strand_of[pair_of[ci][1]]), signs[ci])
               for ci in word]
    return letters, m


def seifert_matrix(word: list[tuple[int, int]], strands: int) -> list[list[int]]:
    """Seifert matrix of the banded surface of a braid closure.

    Basis: one generator for each pair of consecutive occurrences of the same
    strand-pair index in the cyclic word.
    """
    positions: dict[int, list[int]] = {}
    for p, (i, _) in enumerate(word):
        positions.setdefault(i, []).append(p)
    gens: list[tuple[int, int, int]] = []  # (strand pair, pos1, pos2)
    for i, ps in sorted(positions.items()):
        for k in range(len(ps) - 1):
            gens.append((i, ps[k], ps[k + 1]))
    g = len(gens)
    V = [[0] * g for _ in range(g)]
    sign_at = {p: s for p, (_, s) in enumerate(word)}

    for a, (i, p1, p2) in enumerate(gens):
        e1, e2 = sign_at[p1], sign_at[p2]
        V[a][a] = -(e1 + e2) // 2
        for b, (j, q1, q2) in enumerate(gens):
            if b <= a:
                continue
            if i == j and p2 == q1:
                e = sign_at[p2]
                if e > 0:
                    V[a][b] = 1
                else:
                    V[b][a] = -1
            elif abs(i - j) == 1:
                # interleaved cycles on adjacent strand pairs cross once
                if p1 < q1 < p2 < q2:
                    if i < j:
                        V[a][b] = 1
                    else:
                        V[b][a] = -1
                elif q1 < p1 < q2 < p2:
                    if j < i:
                        V[b][a] = 1
                    else:
                        V[a][b] = -1
    return V


def alexander_seifert(d: Diagram) -> LaurentPoly:
    """Normalized Alexander polynomial via Seifert's algorithm."""
    _require_knot(d)
    if len(d.crossings) == 0:
        return LaurentPoly.one()
    braided = braid_form(d)
    word, strands = braid_word(braided)
    V = seifert_matrix(word, strands)
    g = len(V)
    if g == 0:
        return LaurentPoly.one()
    t = LaurentPoly({1: 1})
    mat = [
        [LaurentPoly({0: V[i][j]}) - t * LaurentPoly({0: V[j][i]}) for j in range(g)]
        for i in range(g)
    ]
    det = laurent_det(mat)
    if det.is_zero():
        raise ValueError("vanishing Seifert determinant on a knot diagram")
    return alexander_normalize(det)
