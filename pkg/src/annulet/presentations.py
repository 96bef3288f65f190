"""Annulus presentations in a flat normal form, and the knot-producing twists.

The normal form draws the annulus as two nested rectangular rails whose
epsilon full twist is concentrated in one clasp block; the finger of the
outer rail dips across the inner rail there.  The band runs from an apex in
the annulus zone, dives into the hole, hooks once through the sliver between
the inner rail and the finger (the ribbon pass through the annulus interior),
optionally twists, and attaches to both rails.  Everything the twisting
operations need is carried by gates on the assembled diagram:

* ``step``: the twisting locus for one annulus twist (the inner shrunken
  boundary dragged by the clasp-side blow-downs; algebraic count zero).
* ``beta_plus``/``beta_minus``: the shrunken annulus boundaries, meridian
  curves of the two companion solid tori (count +-1).
* ``flip``: the flipped-annulus twisting locus.

The transcription of these curves from the construction's figures is the one
place this artifact cannot self-verify locally; the identity suites are the
arbiter, and a failing suite names both hypotheses (wrong code vs wrong
transcription).  Template parameters live in ``templates/presentations.json``
and their checksum travels into every report.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from importlib import resources

from .diagram import Diagram, InvalidDiagram, mirror as diagram_mirror
from .grid import DOWN, UP, GridBuilder
from .twist import gate_twist

GAMMA_GATE = "beta_plus"  # the dragged inner boundary on a stepped diagram
STEP_GATE = "step"
FLIP_GATE = "flip"


@dataclass(frozen=True)
class BandSpec:
    """Band routing parameters for the flat normal form."""

    style: str = "direct"  # direct | sliver
    dive_over: bool = True  # band over the inner rail heading into the hole
    exit_over: bool = True  # band over the inner rail heading back out
    hook_over: tuple[bool, bool] = (True, False)  # finger crossings of the ribbon pass
    twists: int = 0  # signed full twists of the band pair inside the hole

    def mirrored(self) -> "BandSpec":
        return BandSpec(
            self.style,
            not self.dive_over,
            not self.exit_over,
            (not self.hook_over[0], not self.hook_over[1]),
            -self.twists,
        )


@dataclass(frozen=True)
class AnnulusPresentation:
    """A special annulus presentation, from template data or derived.

    ``diagram`` is set on presentations produced by twisting; source
    presentations build their diagram from (epsilon, band) on demand.
    """

    name: str
    epsilon: int
    band: BandSpec
    diagram: Diagram | None = None
    steps: int = 0

    def is_derived(self) -> bool:
        return self.diagram is not None


class NotAKnot(Exception):
    pass


# ---------------------------------------------------------------------------
# template assembly
# ---------------------------------------------------------------------------

def build_presentation_diagram(epsilon: int, band: BandSpec) -> Diagram:
    """Assemble the flat normal form with its gates attached."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    if band.style not in ("direct", "sliver"):
        raise ValueError(f"unknown band style {band.style!r}")

    clasp = "L" if epsilon == -1 else "R"
    b = GridBuilder()
    b.birth(0, (DOWN, UP))  # outer rail
    b.birth(1, (UP, DOWN))  # inner rail: [c1L, c2L, c2R, c1R]

    if band.style == "sliver":
        # band apex inside the zone: [.., c2R, Bhole(u), Ahole(d), Azone(u), Bzone(d), c1R]
        b.birth(3, (UP, DOWN))
        b.birth(4, (DOWN, UP))
        side = "R" if band.dive_over else "L"
        b.cross(2, side)
        b.cross(3, side)
        b.cross(0, clasp)  # clasp entry: [c2L, finger, Bhole, Ahole, ...]
        s1 = "R" if band.hook_over[0] else "L"
        b.cross(1, s1)  # ribbon pass: the pair crosses the finger into the sliver
        b.cross(2, s1)
        # window: [c2L, B, A, finger]; the outer shrunken boundary's disk is
        # pierced by the wall and the ribbon pair, the inner one by the
        # finger alone (the ribbon excursion stays outside the inner disk)
        b.mark("beta_minus", 0, curve="c1'")
        b.mark("beta_minus", 1, curve="c1'")
        b.mark("beta_minus", 2, curve="c1'")
        b.mark("beta_plus", 3, curve="c2'")
        b.mark(STEP_GATE, 0, curve="step")
        b.mark(STEP_GATE, 1, curve="step")
        b.mark(STEP_GATE, 2, curve="step")
        b.mark(STEP_GATE, 3, curve="step")
        b.mark(FLIP_GATE, 0, curve="gamma_f")
        b.mark(FLIP_GATE, 1, curve="gamma_f")
        b.mark(FLIP_GATE, 2, curve="gamma_f")
        b.mark(FLIP_GATE, 3, curve="gamma_f")
        s2 = "L" if band.hook_over[1] else "R"
        b.cross(2, s2)  # back into the hole
        b.cross(1, s2)
        b.cross(0, clasp)  # clasp exit
        tside = "R" if band.twists > 0 else "L"
        for _ in range(2 * abs(band.twists)):
            b.cross(2, tside)
        b.death(4)  # inner attachment
        eside = "L" if band.exit_over else "R"
        b.cross(3, eside)
        b.cross(2, eside)
        b.death(4)  # outer attachment
    else:
        b.cross(0, clasp)
        b.mark(STEP_GATE, 0, curve="step")
        b.mark(STEP_GATE, 1, curve="step")
        b.mark(FLIP_GATE, 0, curve="gamma_f")
        b.mark(FLIP_GATE, 1, curve="gamma_f")
        b.mark("beta_minus", 0, curve="c1'")
        b.mark("beta_plus", 1, curve="c2'")
        b.cross(0, clasp)
        b.death(2)  # direct band, upper edge
        b.birth(2, (DOWN, UP))  # lower edge
    b.death(1)
    b.death(0)
    d = b.finish()
    if len(d.components) != 1:
        raise NotAKnot(f"assembly produced {len(d.components)} components")
    return d


# ---------------------------------------------------------------------------
# bundled presets (template data file)
# ---------------------------------------------------------------------------

def _template_text() -> str:
    return resources.files("annulet.templates").joinpath("presentations.json").read_text()


def template_checksum() -> str:
    return hashlib.sha256(_template_text().encode()).hexdigest()[:16]


def bundled_presentations() -> dict[str, AnnulusPresentation]:
    doc = json.loads(_template_text())
    out = {}
    for entry in doc["presentations"]:
        band = dict(entry["band"])
        if "hook_over" in band:
            band["hook_over"] = tuple(band["hook_over"])
        out[entry["name"]] = AnnulusPresentation(
            entry["name"], entry["epsilon"], BandSpec(**band)
        )
    return out


def get_presentation(name: str) -> AnnulusPresentation:
    table = bundled_presentations()
    if name not in table:
        raise KeyError(f"unknown preset {name!r}; have {sorted(table)}")
    return table[name]


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def underlying_knot(ap: AnnulusPresentation) -> Diagram:
    """The knot carried by the presentation, with all template gates attached."""
    if ap.diagram is not None:
        return ap.diagram
    return build_presentation_diagram(ap.epsilon, ap.band)


def annulus_twist_step(ap: AnnulusPresentation, sign: int) -> AnnulusPresentation:
    """One annulus twist; returns the induced presentation of the new knot."""
    if sign not in (1, -1):
        raise ValueError("step sign must be +1 or -1")
    d = underlying_knot(ap)
    d2 = gate_twist(d, STEP_GATE, sign)
    return AnnulusPresentation(
        name=ap.name,
        epsilon=ap.epsilon,
        band=ap.band,
        diagram=d2,
        steps=ap.steps + sign,
    )


def annulus_twist(ap: AnnulusPresentation, n: int) -> Diagram:
    """Diagram of the n-fold annulus twist (iterated single steps)."""
    cur = ap
    sign = 1 if n > 0 else -1
    for _ in range(abs(n)):
        cur = annulus_twist_step(cur, sign)
    return underlying_knot(cur)


def gamma_gate(d: Diagram, ap: AnnulusPresentation) -> str:
    """Name of the meridian-curve gate on a once-twisted diagram.

    The curve is the inner shrunken boundary dragged through the twist, i.e.
    the re-indexed ``beta_plus`` gate; this checks the diagram carries it and
    that the piercing count is the +-1 a meridian curve must have.
    """
    if not d.has_gate(GAMMA_GATE):
        raise InvalidDiagram("diagram not in post-twist normal form: no dragged gate")
    count = d.gate(GAMMA_GATE).algebraic_count()
    if abs(count) != 1:
        raise InvalidDiagram(f"gamma gate count {count}, expected a +-1 meridian curve")
    return GAMMA_GATE


def operation_star_m(ap: AnnulusPresentation, m: int, side: int = 1) -> Diagram:
    """The trace-preserving twist family: m twists along gamma on the
    once-twisted knot (side +1) or its negative-step analogue (side -1)."""
    if side not in (1, -1):
        raise ValueError("side must be +1 or -1")
    stepped = annulus_twist_step(ap, side)
    d = underlying_knot(stepped)
    gate = gamma_gate(d, ap)
    return gate_twist(d, gate, m)


def flipped_annulus_twist(ap: AnnulusPresentation, n: int) -> Diagram:
    """Diagram of the n-fold flipped annulus twist (iterated single steps)."""
    cur = underlying_knot(ap)
    sign = 1 if n > 0 else -1
    for _ in range(abs(n)):
        cur = gate_twist(cur, FLIP_GATE, sign)
    return cur


def mirror_presentation(ap: AnnulusPresentation) -> AnnulusPresentation:
    """Mirror image: epsilon negates and the band parameters mirror."""
    if ap.is_derived():
        return replace(ap, epsilon=-ap.epsilon, band=ap.band.mirrored(),
                       diagram=diagram_mirror(ap.diagram))
    return AnnulusPresentation(
        name=ap.name[:-7] if ap.name.endswith("-mirror") else f"{ap.name}-mirror",
        epsilon=-ap.epsilon,
        band=ap.band.mirrored(),
    )


# ---------------------------------------------------------------------------
# presentation file format
# ---------------------------------------------------------------------------

def presentation_to_text(ap: AnnulusPresentation) -> str:
    doc = {
        "format_version": 1,
        "name": ap.name,
        "epsilon": ap.epsilon,
        "band": {
            "style": ap.band.style,
            "dive_over": ap.band.dive_over,
            "exit_over": ap.band.exit_over,
            "hook_over": list(ap.band.hook_over),
            "twists": ap.band.twists,
        },
        "template_checksum": template_checksum(),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def presentation_from_text(text: str) -> AnnulusPresentation:
    doc = json.loads(text)
    if doc.get("format_version") != 1:
        raise ValueError("unsupported presentation format version")
    band = dict(doc["band"])
    band["hook_over"] = tuple(band["hook_over"])
    return AnnulusPresentation(doc["name"], doc["epsilon"], BandSpec(**band))
