"""Homotopy/cohomology invariants attached to Shilov boundaries.

Homotopy facts are table lookups with a citation each; nothing here computes
homotopy groups. The numeric parts (dimensions, Poincaré polynomials) are
computed from the shilov and graded modules.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .domains import DomainSpec, Irreducible, Product, ambient_dim, is_tube
from .graded import GradedPoly, exterior_poincare, kunneth, top_degree
from .shilov import lie_sphere_orientable, model_dim, shilov_model


class TriState(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @property
    def known(self) -> bool:
        return self is not TriState.UNKNOWN

    @classmethod
    def of(cls, flag: bool) -> TriState:
        return cls.YES if flag else cls.NO

    def __str__(self) -> str:
        return self.value


class CoverKind(str, enum.Enum):
    SELF = "self"
    UNIVERSAL = "universal"
    Z_COVER = "canonical-Z-cover"
    UNAVAILABLE = "unavailable"

    def __str__(self) -> str:
        return self.value


# Citation anchors. Keys are stable; values are what reports print.
ANCHORS = {
    "tube_criterion": "tube type iff pi1 of the Shilov boundary has free rank 1 (Koranyi-Wolf, Thm 4.11)",
    "tube_halving": "Shilov boundary of a tube domain has half the real dimension (Koranyi-Wolf, Thm 4.9)",
    "dimension": "dimension of a closed manifold = top nonzero degree of integral cohomology (Bredon VI.7.8, 7.14)",
    "pi1_tube": "pi1 = Z for tube type: norm map onto S^1 with connected, simply connected fibre",
    "pi1_nontube": "pi1 trivial for non-tube type: pi1(L) -> pi1(K) is onto for K/L",
    "pi1_v": "type V boundary is SO(10)/SO(7), simply connected (Alexander duality in dS^31)",
    "pi2_lie": "pi2 vanishes for U(n)-quotients of types I, II and for S^1 x S^(n-1) covers (IV)",
    "pi2_iii": "pi2(U(n)/O(n)) maps onto the torsion Z/2 of pi1(O(n)) (long exact sequence, Hatcher 4.41)",
    "pi9_vi": "EIV = E6/F4 has pi9 of rank >= 1 (Hirzebruch); S^1 x EIV covers the type VI boundary",
    "pi9_iv": "S^1 x S^(n-1) covers L^n and pi_k(S^(n-1)) = 0 for 2 <= k < n-1",
    "torsion_i": "complex Stiefel manifolds U(p)/U(p-q) have torsion-free integral cohomology (Borel, Prop 9.1)",
    "torsion_v": "H*(SO(10)/SO(7); Z) = H*(SO(9)/SO(7); Z) has torsion (Borel, Props 10.1, 10.4)",
    "orientable_iv": "(S^1 x S^(n-1))/(Z/2) is orientable iff the antipodal map of S^(n-1) has degree +1, i.e. n even",
    "cover_u": "H*(U(q)) is exterior on degrees 1, 3, ..., 2q-1 (Borel, section 9)",
    "cover_u_sp": "H*(U(2q)/Sp(q)) is exterior on degrees 1, 5, ..., 4q-3 (Borel, Prop 31.3)",
    "cover_stiefel": "H*(U(p)/U(p-q)) is exterior on degrees 2(p-q)+1, ..., 2p-1 (Borel, Prop 9.1)",
    "cover_ii_odd": "U(2r+1)/Sp(r) x U(1): trivial circle bundle (vanishing Chern class), Kunneth gives degrees 5, 9, ..., 4r+1",
    "cover_iv": "finite covers of L^n with pi1 = Z are S^1 x S^(n-1): Poincare polynomial (1+t)(1+t^(n-1))",
    "cover_compare": "exterior algebras on different odd generator degrees are not isomorphic as graded algebras (Kunneth, Hatcher 3.16)",
    "reducible_coincidence": "L^(2n) = S^1 x S^(2n-1) (trivial bundle, n even) = Shilov boundary of I(1,1) x I(n,1)",
    "dim_x_satake": "rank-1 tripotent manifold of type V: dim U + dim V = 21 (Satake, p.117, b=1)",
}


@dataclass(frozen=True)
class Pi1Desc:
    free_rank: int
    is_trivial: bool
    finite_part_known_trivial: bool = True

    def __post_init__(self) -> None:
        if self.is_trivial and self.free_rank:
            raise ValueError("trivial pi1 has free rank 0")

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        base = "Z" if self.free_rank == 1 else f"Z^{self.free_rank}"
        return base if self.finite_part_known_trivial else f"{base} + (finite)"


@dataclass(frozen=True)
class InvariantVector:
    shilov_dim: int
    pi1: Pi1Desc
    pi2_nonzero: TriState
    pi9_nonzero: TriState
    h_torsion_free: TriState
    orientable: TriState
    cover_poincare: Optional[GradedPoly]
    cover_kind: CoverKind
    citations: tuple[tuple[str, str], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if (self.cover_poincare is None) != (self.cover_kind is CoverKind.UNAVAILABLE):
            raise ValueError("cover polynomial present iff cover kind is not 'unavailable'")

    def citation(self, name: str) -> Optional[str]:
        for k, v in self.citations:
            if k == name:
                return v
        return None

    def to_json(self, cite: bool = True) -> dict:
        return {
            "shilov_dim": self.shilov_dim,
            "pi1_free_rank": self.pi1.free_rank,
            "pi1_trivial": self.pi1.is_trivial,
            "pi2_nonzero": self.pi2_nonzero.value,
            "pi9_nonzero": self.pi9_nonzero.value,
            "h_torsion_free": self.h_torsion_free.value,
            "orientable": self.orientable.value,
            "cover_kind": self.cover_kind.value,
            "cover_poincare": None if self.cover_poincare is None else str(self.cover_poincare),
            "citations": dict(self.citations) if cite else {},
        }


INVARIANT_VECTOR_SCHEMA = {
    "type": "object",
    "required": [
        "shilov_dim", "pi1_free_rank", "pi1_trivial", "pi2_nonzero", "pi9_nonzero",
        "h_torsion_free", "orientable", "cover_kind", "cover_poincare", "citations",
    ],
    "properties": {
        "shilov_dim": {"type": "integer", "minimum": 0},
        "pi1_free_rank": {"type": "integer", "minimum": 0},
        "pi1_trivial": {"type": "boolean"},
        "pi2_nonzero": {"enum": ["yes", "no", "unknown"]},
        "pi9_nonzero": {"enum": ["yes", "no", "unknown"]},
        "h_torsion_free": {"enum": ["yes", "no", "unknown"]},
        "orientable": {"enum": ["yes", "no", "unknown"]},
        "cover_kind": {"enum": [k.value for k in CoverKind]},
        "cover_poincare": {"type": ["string", "null"]},
        "citations": {"type": "object", "additionalProperties": {"type": "string", "minLength": 1}},
    },
    "additionalProperties": False,
}


def _require_irreducible(d: DomainSpec) -> Irreducible:
    if not isinstance(d, Irreducible):
        raise TypeError("expected an irreducible domain")
    return d


def pi1_of(d: Irreducible) -> Pi1Desc:
    _require_irreducible(d)
    if is_tube(d):
        return Pi1Desc(free_rank=1, is_trivial=False)
    return Pi1Desc(free_rank=0, is_trivial=True)


def pi2_nonzero_of(d: Irreducible) -> TriState:
    fam = _require_irreducible(d).family
    if fam == "III":
        return TriState.YES
    if fam in ("I", "II", "IV"):
        return TriState.NO
    return TriState.UNKNOWN


def pi9_nonzero_of(d: Irreducible) -> TriState:
    d = _require_irreducible(d)
    if d.family == "VI":
        return TriState.YES
    # S^1 x S^(n-1) covers L^n; pi_9 vanishes once the sphere is 10-connected enough
    if d.family == "IV" and d.params[0] - 1 > 9:
        return TriState.NO
    return TriState.UNKNOWN


def torsion_free_of(d: Irreducible) -> TriState:
    fam = _require_irreducible(d).family
    if fam == "I":
        return TriState.YES
    if fam == "V":
        return TriState.NO
    return TriState.UNKNOWN


def orientable_of(d: Irreducible) -> TriState:
    d = _require_irreducible(d)
    if d.family == "IV":
        return TriState.of(lie_sphere_orientable(d.params[0]))
    return TriState.UNKNOWN


def unitary_degrees(q: int) -> tuple[int, ...]:
    """Generator degrees of H*(U(q)): 1, 3, ..., 2q-1 (they sum to dim U(q) = q^2)."""
    return tuple(range(1, 2 * q, 2))


def literal_unitary_degrees(q: int) -> tuple[int, ...]:
    """The listing 1, 3, ..., 4q-1; kept only so the degree-sum check can reject it."""
    return tuple(range(1, 4 * q, 2))


def cover_generators_of(d: Irreducible) -> Optional[tuple[tuple[int, ...], CoverKind, str]]:
    """Exterior generator degrees for domains whose cohomology is exterior, else None.

    Type IV is not included: its cover polynomial has an even-degree sphere
    factor when n is odd.
    """
    fam, ps = d.family, d.params
    if fam == "I":
        p, q = ps
        if p == q:
            return unitary_degrees(q), CoverKind.SELF, "cover_u"
        return tuple(range(2 * (p - q) + 1, 2 * p, 2)), CoverKind.SELF, "cover_stiefel"
    if fam == "II":
        n = ps[0]
        r = n // 2
        if n % 2 == 0:
            return tuple(range(1, 4 * r - 2, 4)), CoverKind.SELF, "cover_u_sp"
        return tuple(range(5, 4 * r + 2, 4)), CoverKind.SELF, "cover_ii_odd"
    return None


def cover_poincare_of(d: Irreducible) -> tuple[Optional[GradedPoly], CoverKind]:
    d = _require_irreducible(d)
    if d.family == "IV":
        n = d.params[0]
        return exterior_poincare((1, n - 1)), CoverKind.Z_COVER
    gens = cover_generators_of(d)
    if gens is None:
        return None, CoverKind.UNAVAILABLE
    return exterior_poincare(gens[0]), gens[1]


def _cover_anchor(d: Irreducible) -> Optional[str]:
    if d.family == "IV":
        return "cover_iv"
    g = cover_generators_of(d)
    return None if g is None else g[2]


def _irreducible_vector(d: Irreducible) -> InvariantVector:
    cover, kind = cover_poincare_of(d)
    cites = {
        "shilov_dim": ANCHORS["tube_halving"] if is_tube(d) else ANCHORS["dimension"],
        "pi1": ANCHORS["pi1_v"] if d.family == "V" else (
            ANCHORS["pi1_tube"] if is_tube(d) else ANCHORS["pi1_nontube"]
        ),
    }
    pi2 = pi2_nonzero_of(d)
    if pi2.known:
        cites["pi2_nonzero"] = ANCHORS["pi2_iii" if pi2 is TriState.YES else "pi2_lie"]
    pi9 = pi9_nonzero_of(d)
    if pi9.known:
        cites["pi9_nonzero"] = ANCHORS["pi9_vi" if d.family == "VI" else "pi9_iv"]
    tor = torsion_free_of(d)
    if tor.known:
        cites["h_torsion_free"] = ANCHORS["torsion_i" if d.family == "I" else "torsion_v"]
    ori = orientable_of(d)
    if ori.known:
        cites["orientable"] = ANCHORS["orientable_iv"]
    anchor = _cover_anchor(d)
    if anchor is not None:
        cites["cover_poincare"] = ANCHORS[anchor]
    return InvariantVector(
        shilov_dim=model_dim(shilov_model(d)),
        pi1=pi1_of(d),
        pi2_nonzero=pi2,
        pi9_nonzero=pi9,
        h_torsion_free=tor,
        orientable=ori,
        cover_poincare=cover,
        cover_kind=kind,
        citations=tuple(cites.items()),
    )


def combine_nonvanishing(states: list[TriState]) -> TriState:
    """pi_k of a product is the direct sum: any Yes wins, all No gives No."""
    if any(s is TriState.YES for s in states):
        return TriState.YES
    if all(s is TriState.NO for s in states):
        return TriState.NO
    return TriState.UNKNOWN


def combine_conjunctive(states: list[TriState]) -> TriState:
    """Orientability / torsion-freeness of a product holds iff it holds for every factor."""
    if any(s is TriState.NO for s in states):
        return TriState.NO
    if all(s is TriState.YES for s in states):
        return TriState.YES
    return TriState.UNKNOWN


def _combine_kinds(kinds: list[CoverKind]) -> CoverKind:
    if all(k is CoverKind.SELF for k in kinds):
        return CoverKind.SELF
    if all(k in (CoverKind.SELF, CoverKind.Z_COVER) for k in kinds):
        return CoverKind.Z_COVER
    return CoverKind.UNAVAILABLE


def _product_vector(d: Product) -> InvariantVector:
    vs = [invariant_vector(f) for f in d.factors]
    kind = _combine_kinds([v.cover_kind for v in vs])
    cover = None
    if kind is not CoverKind.UNAVAILABLE:
        cover = GradedPoly.one()
        for v in vs:
            cover = kunneth(cover, v.cover_poincare)
    cites: dict[str, str] = {}
    for f, v in zip(d.factors, vs):
        for k, a in v.citations:
            cites.setdefault(k, a)
    return InvariantVector(
        shilov_dim=sum(v.shilov_dim for v in vs),
        pi1=Pi1Desc(
            free_rank=sum(v.pi1.free_rank for v in vs),
            is_trivial=all(v.pi1.is_trivial for v in vs),
            finite_part_known_trivial=all(v.pi1.finite_part_known_trivial for v in vs),
        ),
        pi2_nonzero=combine_nonvanishing([v.pi2_nonzero for v in vs]),
        pi9_nonzero=combine_nonvanishing([v.pi9_nonzero for v in vs]),
        h_torsion_free=combine_conjunctive([v.h_torsion_free for v in vs]),
        orientable=combine_conjunctive([v.orientable for v in vs]),
        cover_poincare=cover,
        cover_kind=kind,
        citations=tuple(cites.items()),
    )


@lru_cache(maxsize=None)
def invariant_vector(d: DomainSpec) -> InvariantVector:
    if isinstance(d, Product):
        return _product_vector(d)
    return _irreducible_vector(d)


def degree_sum_holds(v: InvariantVector) -> bool:
    """Top degree of the cover polynomial equals the Shilov dimension (vacuous without one)."""
    if v.cover_poincare is None:
        return True
    return top_degree(v.cover_poincare) == v.shilov_dim


@dataclass(frozen=True)
class AlexanderCheck:
    """Dimension bookkeeping for simple connectivity of the type V Shilov boundary."""

    boundary_sphere_dim: int
    shilov_dim: int
    fiber_dim: int
    base_dim: int
    duality_degree: int
    base_dim_cited: int
    passed: bool

    def __bool__(self) -> bool:
        return self.passed

    def trace(self) -> dict:
        return {
            "boundary_sphere": f"S^{self.boundary_sphere_dim}",
            "shilov_dim": self.shilov_dim,
            "fiber_dim": self.fiber_dim,
            "base_dim": self.base_dim,
            "duality_degree": self.duality_degree,
            "vanishes": f"{self.duality_degree} > {self.base_dim}",
            "base_dim_cited": self.base_dim_cited,
        }


DIM_X_CITED = 21


def type_v_alexander_check(fiber_dim: Optional[int] = None) -> AlexanderCheck:
    """Check that H^1(Shilov boundary of V; pi) vanishes by dimension count.

    The boundary of the 32-dimensional ball-like domain is S^31. Its
    complement of the Shilov boundary fibres over a base X with contractible
    fibre the I(5,1) domain, so it has the homotopy type of X. Alexander
    duality puts H^1 of the Shilov boundary in homological degree 31-1-1 = 29,
    above dim X. ``fiber_dim`` overrides the fibre dimension for negative
    controls.
    """
    v = Irreducible("V")
    sphere = ambient_dim(v) - 1
    sdim = model_dim(shilov_model(v))
    fib = ambient_dim(Irreducible("I", (5, 1))) if fiber_dim is None else fiber_dim
    base = sphere - fib
    degree = sphere - 1 - 1
    ok = (
        sphere == 31
        and sdim == 24
        and fib == 10
        and base == 21 == DIM_X_CITED
        and degree == 29
        and degree > base
    )
    return AlexanderCheck(sphere, sdim, fib, base, degree, DIM_X_CITED, ok)
