"""Writhe and linking numbers from crossing signs."""

from __future__ import annotations

from ..diagram import Diagram, crossing_signs


class OrientationMissing(Exception):
    pass


def _require_oriented(d: Diagram, indices: tuple[int, ...]) -> None:
    for i in indices:
        if not d.components[i].oriented:
            raise OrientationMissing(f"component {i} is not oriented")


def writhe(d: Diagram, comp: int | None = None) -> int:
    """Signed count of self-crossings of one component (or of the whole diagram).

    Self-crossing signs do not depend on the traversal direction, so no
    orientation flag is required for a single component's writhe.
    """
    signs = crossing_signs(d)
    arc_comp = d.component_of_arc()
    total = 0
    for t, s in zip(d.crossings, signs):
        ca, cb = arc_comp[t[0]], arc_comp[t[1]]
        if ca != cb:
            continue
        if comp is None or ca == comp:
            total += s
    return total


def linking_number(d: Diagram, comp_a: int, comp_b: int) -> int:
    """Half the signed count of crossings between two oriented components."""
    if comp_a == comp_b:
        raise ValueError("linking number needs two distinct components")
    _require_oriented(d, (comp_a, comp_b))
    signs = crossing_signs(d)
    arc_comp = d.component_of_arc()
    total = 0
    for t, s in zip(d.crossings, signs):
        pair = {arc_comp[t[0]], arc_comp[t[1]]}
        if pair == {comp_a, comp_b}:
            total += s
    if total % 2:
        raise ValueError("odd inter-component crossing sum; diagram is inconsistent")
    return total // 2


def total_writhe(d: Diagram) -> int:
    """Sum of all crossing signs (needs every involved component directed)."""
    return sum(crossing_signs(d))
