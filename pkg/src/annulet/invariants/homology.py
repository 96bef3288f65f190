"""First homology of surgery descriptions via the linking matrix.

Rational coefficients are expanded into integer-framed chains with negative
continued fractions before the matrix is formed; the expansion never surfaces
outside this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..diagram import Diagram
from .linking import linking_number, writhe


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group as free rank + torsion factors."""

    free_rank: int
    torsion: tuple[int, ...]  # invariant factors, each > 1, divisibility chain

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def negative_continued_fraction(r: Fraction) -> list[int]:
    """Coefficients [a1, a2, ...] with r = a1 - 1/(a2 - 1/(...))."""
    out: list[int] = []
    while True:
        a = -((-r.numerator) // r.denominator)  # ceil
        out.append(int(a))
        rem = Fraction(a) - r
        if rem == 0:
            return out
        r = 1 / rem


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal invariant factors of an integer matrix (non-negative)."""
    m = [row[:] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag: list[int] = []
    top = 0
    while top < min(rows, cols):
        # find the smallest nonzero entry in the remaining block
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        if m[top][top] < 0:
            m[top] = [-x for x in m[top]]
        pivot = m[top][top]
        dirty = False
        for i in range(top + 1, rows):
            q = m[i][top] // pivot
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[top])]
            if m[i][top]:
                dirty = True
        for j in range(top + 1, cols):
            q = m[top][j] // pivot
            if q:
                for i in range(rows):
                    m[i][j] -= q * m[i][top]
            if m[top][j]:
                dirty = True
        if dirty:
            continue
        # pivot must divide the rest of the block
        offender = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[top] = [x + y for x, y in zip(m[top], m[offender])]
            continue
        diag.append(pivot)
        top += 1
    return diag


def group_from_matrix(matrix: list[list[int]]) -> AbelianGroup:
    """Cokernel of a square presentation matrix."""
    n = len(matrix)
    if n == 0:
        return AbelianGroup(0, ())
    diag = smith_normal_form(matrix)
    free = n - len(diag)
    torsion = tuple(x for x in diag if x > 1)
    return AbelianGroup(free, torsion)


def linking_matrix(d: Diagram) -> list[list[Fraction]]:
    """Framing matrix of a surgery description (all components framed, oriented)."""
    idx = [i for i, _ in d.framings]
    if sorted(idx) != list(range(len(d.components))):
        raise ValueError("every component of a surgery description needs a framing")
    n = len(d.components)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, f in d.framings:
        mat[i][i] = Fraction(f)
    for i in range(n):
        for j in range(i + 1, n):
            lk = linking_number(d, i, j)
            mat[i][j] = mat[j][i] = Fraction(lk)
    return mat


def h1_surgery(d: Diagram) -> AbelianGroup:
    """H1 of the closed 3-manifold described by a framed link diagram."""
    rational = linking_matrix(d)
    n = len(rational)
    # expand each rational framing into an integer chain
    size = n
    chains: list[list[int]] = []
    diag_int: list[list[int]] = []
    entries: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                entries[(i, j)] = int(rational[i][j])
    for i in range(n):
        f = rational[i][i]
        if f.denominator == 1:
            entries[(i, i)] = int(f)
            continue
        coeffs = negative_continued_fraction(f)
        entries[(i, i)] = coeffs[0]
        prev = i
        for a in coeffs[1:]:
            k = size
            size += 1
            entries[(k, k)] = a
            entries[(k, prev)] = entries[(prev, k)] = -1
            prev = k
    matrix = [[entries.get((i, j), 0) for j in range(size)] for i in range(size)]
    return group_from_matrix(matrix)
