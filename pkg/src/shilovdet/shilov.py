"""Symbolic Shilov boundary models and their dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .domains import DomainSpec, Product

_FIXED_DIMS = {"E6": 78, "F4": 52, "Circle": 1}


@dataclass(frozen=True)
class CompactGroup:
    name: str
    n: Optional[int] = None

    def __post_init__(self) -> None:
        if self.name in _FIXED_DIMS:
            if self.n is not None:
                raise ValueError(f"{self.name} takes no parameter")
        elif self.name in ("U", "SU", "Sp", "O", "SO"):
            if self.n is None or self.n < 0:
                raise ValueError(f"{self.name}(n) needs n >= 0")
        else:
            raise ValueError(f"unknown compact group {self.name!r}")

    @property
    def dim(self) -> int:
        n = self.n
        if self.name == "U":
            return n * n
        if self.name == "SU":
            return n * n - 1 if n else 0
        if self.name == "Sp":
            return n * (2 * n + 1)
        if self.name in ("O", "SO"):
            return n * (n - 1) // 2
        return _FIXED_DIMS[self.name]

    def __str__(self) -> str:
        if self.name == "Circle":
            return "S^1"
        return self.name if self.n is None else f"{self.name}({self.n})"


def U(n: int) -> CompactGroup:
    return CompactGroup("U", n)


def Sp(n: int) -> CompactGroup:
    return CompactGroup("Sp", n)


def O(n: int) -> CompactGroup:
    return CompactGroup("O", n)


def SO(n: int) -> CompactGroup:
    return CompactGroup("SO", n)


CIRCLE = CompactGroup("Circle")
E6 = CompactGroup("E6")
F4 = CompactGroup("F4")


@dataclass(frozen=True)
class Quotient:
    """Homogeneous space K / (L_1 x ... x L_k); ``exact=False`` means up to finite cover."""

    K: CompactGroup
    L: tuple[CompactGroup, ...] = ()
    exact: bool = True

    def __str__(self) -> str:
        if not self.L:
            return str(self.K)
        return f"{self.K}/{' x '.join(str(g) for g in self.L)}"


@dataclass(frozen=True)
class LieSphere:
    """L^n = (S^1 x S^(n-1)) / (Z/2), diagonal antipodal action."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 5:
            raise ValueError("Lie sphere models are only used for n >= 5")

    exact = True

    def __str__(self) -> str:
        return f"L^{self.n}"


@dataclass(frozen=True)
class ProductModel:
    factors: tuple[ShilovModel, ...]

    @property
    def exact(self) -> bool:
        return all(f.exact for f in self.factors)

    def __str__(self) -> str:
        # '·' marks a product that only holds up to finite covering
        sep = " x " if self.exact else " · "
        return sep.join(f"({f})" if isinstance(f, ProductModel) else str(f) for f in self.factors)


ShilovModel = Union[Quotient, LieSphere, ProductModel]


def shilov_model(d: DomainSpec) -> ShilovModel:
    if isinstance(d, Product):
        return ProductModel(tuple(shilov_model(f) for f in d.factors))
    fam, ps = d.family, d.params
    if fam == "I":
        p, q = ps
        return Quotient(U(p), (U(p - q),))
    if fam == "II":
        n = ps[0]
        q = n // 2
        if n % 2 == 0:
            return Quotient(U(n), (Sp(q),))
        return Quotient(U(n), (Sp(q), CIRCLE))
    if fam == "III":
        n = ps[0]
        return Quotient(U(n), (O(n),))
    if fam == "IV":
        return LieSphere(ps[0])
    if fam == "V":
        return Quotient(SO(10), (SO(7),))
    return ProductModel((Quotient(CIRCLE), Quotient(E6, (F4,), exact=False)))


def model_dim(m: ShilovModel) -> int:
    if isinstance(m, Quotient):
        return m.K.dim - sum(g.dim for g in m.L)
    if isinstance(m, LieSphere):
        return m.n
    return sum(model_dim(f) for f in m.factors)


def antipodal_degree(sphere_dim: int) -> int:
    """Degree of x -> -x on S^k: reflection in all k+1 coordinates."""
    return (-1) ** (sphere_dim + 1)


def lie_sphere_orientable(n: int) -> bool:
    """Whether (S^1 x S^(n-1)) / (Z/2) is orientable.

    The quotient of an orientable manifold by a free involution is orientable
    iff the involution preserves orientation. On S^1 the antipodal map is a
    rotation (degree 1), so only the S^(n-1) factor matters.
    """
    if n < 5:
        raise ValueError("n must be >= 5")
    return antipodal_degree(1) * antipodal_degree(n - 1) == 1


def lie_sphere_bundle_trivial(n: int) -> bool:
    """Whether the fibration L^n -> S^1 with fibre S^(n-1) is trivial.

    Bundles over S^1 are classified by the path component of the clutching
    homeomorphism, here the antipodal map of S^(n-1); components of
    Homeo(S^k) are detected by degree.
    """
    if n < 5:
        raise ValueError("n must be >= 5")
    return antipodal_degree(n - 1) == 1
