"""Separate two domains by a named invariant of their Shilov boundaries.

Steps run in a fixed order and stop at the first invariant that differs:

    1  identical canonical spec        -> Isomorphic
    2  free rank of pi1 (tube or not)
    3  Shilov dimension
    4  pi9 non-vanishing               (VI against IV(27))
    5  pi2 non-vanishing               (III against the rest)
    6  torsion in integral cohomology  (V against I(5,4), I(7,2))
    7  Poincaré polynomial of the cover, with recovered generators
    8  nothing separates               -> Inconclusive

Tri-state invariants only separate when both sides are known.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .domains import DomainSpec, Irreducible, Product
from .graded import NotExteriorForm, progression_step, recover_generators
from .invariants import ANCHORS, CoverKind, InvariantVector, TriState, invariant_vector

STEP_LABELS = {
    1: "identity",
    2: "pi1",
    3: "dimension",
    4: "pi9",
    5: "pi2",
    6: "torsion",
    7: "cover_poincare",
}


@dataclass(frozen=True)
class Isomorphic:
    spec: DomainSpec


@dataclass(frozen=True)
class SeparatedBy:
    step: int
    invariant: str
    lhs: str
    rhs: str
    anchor: str
    detail: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def label(self) -> str:
        return STEP_LABELS[self.step]


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    anchor: str = ""


Certificate = Union[Isomorphic, SeparatedBy, Inconclusive]

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["result", "step", "invariant", "lhs", "rhs", "anchor"],
    "properties": {
        "result": {"enum": ["isomorphic", "separated", "inconclusive"]},
        "step": {"type": ["string", "null"]},
        "invariant": {"type": ["string", "null"]},
        "lhs": {"type": ["string", "null"]},
        "rhs": {"type": ["string", "null"]},
        "anchor": {"type": ["string", "null"]},
        "reason": {"type": "string"},
        "detail": {"type": "object"},
        "explanation": {"type": "string"},
    },
    "additionalProperties": False,
}


def _compatible_covers(a: InvariantVector, b: InvariantVector) -> bool:
    if a.cover_poincare is None or b.cover_poincare is None:
        return False
    if a.cover_kind == b.cover_kind:
        return True
    mixable = {CoverKind.SELF, CoverKind.Z_COVER}
    return {a.cover_kind, b.cover_kind} <= mixable and a.pi1.free_rank == b.pi1.free_rank


def _generators_or_none(v: InvariantVector) -> Optional[tuple[int, ...]]:
    try:
        return recover_generators(v.cover_poincare)
    except NotExteriorForm:
        return None


def _tri_step(step: int, name: str, a: TriState, b: TriState, anchor: str) -> Optional[SeparatedBy]:
    if a.known and b.known and a is not b:
        return SeparatedBy(step, name, a.value, b.value, anchor)
    return None


def _is_reducible_coincidence(d1: DomainSpec, d2: DomainSpec) -> bool:
    """IV(2n) against I(1,1) x I(n,1), in either order."""
    for a, b in ((d1, d2), (d2, d1)):
        if (
            isinstance(a, Irreducible)
            and a.family == "IV"
            and a.params[0] % 2 == 0
            and isinstance(b, Product)
            and b.factors == (Irreducible("I", (1, 1)), Irreducible("I", (a.params[0] // 2, 1)))
        ):
            return True
    return False


def compare_vectors(a: InvariantVector, b: InvariantVector) -> Optional[SeparatedBy]:
    """Steps 2-7 on precomputed vectors; None when nothing separates."""
    if a.pi1.free_rank != b.pi1.free_rank:
        return SeparatedBy(2, "pi1_free_rank", str(a.pi1.free_rank), str(b.pi1.free_rank),
                           ANCHORS["tube_criterion"])
    if a.shilov_dim != b.shilov_dim:
        return SeparatedBy(3, "shilov_dim", str(a.shilov_dim), str(b.shilov_dim), ANCHORS["dimension"])
    sep = (
        _tri_step(4, "pi9_nonzero", a.pi9_nonzero, b.pi9_nonzero, ANCHORS["pi9_vi"])
        or _tri_step(5, "pi2_nonzero", a.pi2_nonzero, b.pi2_nonzero, ANCHORS["pi2_iii"])
        or _tri_step(6, "h_torsion_free", a.h_torsion_free, b.h_torsion_free, ANCHORS["torsion_v"])
    )
    if sep is not None:
        return sep
    if _compatible_covers(a, b) and a.cover_poincare != b.cover_poincare:
        detail: dict = {}
        ga, gb = _generators_or_none(a), _generators_or_none(b)
        if ga is not None and gb is not None:
            detail = {
                "lhs_generators": list(ga),
                "rhs_generators": list(gb),
                "lhs_step": progression_step(ga),
                "rhs_step": progression_step(gb),
            }
        return SeparatedBy(7, "cover_poincare", str(a.cover_poincare), str(b.cover_poincare),
                           ANCHORS["cover_compare"], detail)
    return None


def distinguish(d1: DomainSpec, d2: DomainSpec) -> Certificate:
    if d1 == d2:
        return Isomorphic(d1)
    sep = compare_vectors(invariant_vector(d1), invariant_vector(d2))
    if sep is not None:
        return sep
    if _is_reducible_coincidence(d1, d2):
        return Inconclusive(
            "homeomorphic Shilov boundaries: no homotopy invariant can separate these",
            ANCHORS["reducible_coincidence"],
        )
    if isinstance(d1, Irreducible) and isinstance(d2, Irreducible):
        # cannot happen for canonical irreducibles; surfaced as a verification failure
        return Inconclusive("no invariant separates two distinct irreducible domains (unexpected)")
    return Inconclusive("all known invariants agree; products are not classified by their Shilov boundary")


def certificate_to_json(c: Certificate, cite: bool = True) -> dict:
    if isinstance(c, Isomorphic):
        out = {"result": "isomorphic", "step": STEP_LABELS[1], "invariant": None,
               "lhs": str(c.spec), "rhs": str(c.spec), "anchor": None}
    elif isinstance(c, SeparatedBy):
        out = {"result": "separated", "step": c.label, "invariant": c.invariant,
               "lhs": c.lhs, "rhs": c.rhs, "anchor": c.anchor if cite else None}
        if c.detail:
            out["detail"] = dict(c.detail)
    else:
        out = {"result": "inconclusive", "step": None, "invariant": None, "lhs": None, "rhs": None,
               "anchor": (c.anchor or None) if cite else None, "reason": c.reason}
    return out


def explain(c: Certificate, d1: Optional[DomainSpec] = None, d2: Optional[DomainSpec] = None) -> str:
    if isinstance(c, Isomorphic):
        return f"identical canonical type {c.spec}"
    names = f"{d1} and {d2}: " if d1 is not None and d2 is not None else ""
    if isinstance(c, SeparatedBy):
        text = {
            "pi1_free_rank": "π₁ free rank (tube vs non-tube)",
            "shilov_dim": "Shilov boundary dimension",
            "pi9_nonzero": "π₉ non-vanishing",
            "pi2_nonzero": "π₂ non-vanishing",
            "h_torsion_free": "torsion-free integral cohomology",
            "cover_poincare": "Poincaré polynomial of the cover",
        }[c.invariant]
        lines = [f"{names}separated at step {c.step} ({c.label}) by {text}: {c.lhs} vs {c.rhs}",
                 f"  because: {c.anchor}"]
        if c.detail:
            lines.append(
                f"  generators {c.detail['lhs_generators']} (step {c.detail['lhs_step']}) vs "
                f"{c.detail['rhs_generators']} (step {c.detail['rhs_step']})"
            )
        return "\n".join(lines)
    lines = [f"{names}inconclusive: {c.reason}"]
    if c.anchor:
        lines.append(f"  known coincidence: {c.anchor}")
    return "\n".join(lines)
