"""Irreducible bounded symmetric domains and finite products of them.

Domains are named by Cartan type and integer parameters::

    I(p,q)   p >= q >= 1
    II(n)    n >= 5
    III(n)   n >= 2
    IV(n)    n >= 5
    V, VI    no parameters

Parameters outside these ranges are rejected rather than rewritten, which
keeps the low-rank coincidences (e.g. III(1) = I(1,1)) out of the picture.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

FAMILIES = ("I", "II", "III", "IV", "V", "VI")
_FAMILY_INDEX = {name: i for i, name in enumerate(FAMILIES)}
_ARITY = {"I": 2, "II": 1, "III": 1, "IV": 1, "V": 0, "VI": 0}


class DomainError(ValueError):
    """Malformed or non-canonical domain specification."""


class TubeClass(enum.Enum):
    TUBE = "tube"
    NON_TUBE = "non-tube"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Irreducible:
    family: str
    params: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", tuple(int(x) for x in self.params))
        _validate(self.family, self.params)

    @property
    def factors(self) -> tuple[Irreducible, ...]:
        return (self,)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (_FAMILY_INDEX[self.family], self.params)

    def __str__(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}({','.join(map(str, self.params))})"


@dataclass(frozen=True)
class Product:
    """Product of at least two irreducible factors, stored sorted."""

    factors: tuple[Irreducible, ...]

    def __post_init__(self) -> None:
        fs = tuple(sorted(self.factors, key=Irreducible.sort_key))
        if len(fs) < 2:
            raise DomainError("a product needs at least two factors; use the irreducible spec")
        object.__setattr__(self, "factors", fs)

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors)


DomainSpec = Union[Irreducible, Product]


def make_product(*specs: DomainSpec) -> DomainSpec:
    """Flatten and sort; a single factor comes back as the irreducible itself."""
    factors: list[Irreducible] = []
    for s in specs:
        factors.extend(s.factors)
    if not factors:
        raise DomainError("empty product")
    if len(factors) == 1:
        return factors[0]
    return Product(tuple(factors))


def _validate(family: str, params: tuple[int, ...]) -> None:
    if family not in _ARITY:
        raise DomainError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    arity = _ARITY[family]
    if len(params) != arity:
        raise DomainError(
            f"type {family} takes {arity} parameter{'s' if arity != 1 else ''}, got {len(params)}"
        )
    if family == "I":
        p, q = params
        if not p >= q >= 1:
            raise DomainError(f"type I(p,q) requires p ≥ q ≥ 1, got I({p},{q})")
    elif family in ("II", "IV"):
        if params[0] < 5:
            raise DomainError(f"type {family}(n) requires n ≥ 5, got n = {params[0]}")
    elif family == "III":
        if params[0] < 2:
            raise DomainError(f"type III(n) requires n ≥ 2, got n = {params[0]}")


_FACTOR_RE = re.compile(r"^(VI|IV|V|III|II|I)(?:\((\d+(?:,\d+)*)\))?$")


def parse_domain(text: str) -> DomainSpec:
    """Parse ``"I(3,2)"``, ``"VI"``, ``"I(1,1) x I(4,1)"`` and similar.

    Family letters are case-insensitive and whitespace is ignored.
    """
    compact = re.sub(r"\s+", "", text).upper()
    if not compact:
        raise DomainError("empty domain specification")
    pieces = re.split(r"[X×*]", compact)
    factors = []
    for piece in pieces:
        m = _FACTOR_RE.match(piece)
        if m is None:
            raise DomainError(f"cannot parse domain factor {piece!r} in {text!r}")
        family, args = m.groups()
        params = tuple(int(a) for a in args.split(",")) if args else ()
        factors.append(Irreducible(family, params))
    return make_product(*factors)


def ambient_dim(d: DomainSpec) -> int:
    """Real dimension of the domain."""
    if isinstance(d, Product):
        return sum(ambient_dim(f) for f in d.factors)
    fam, ps = d.family, d.params
    if fam == "I":
        p, q = ps
        return 2 * p * q
    if fam == "II":
        n = ps[0]
        # even n = 2q: 2q(2q-1); odd n = 2q+1: 2q(2q+1); both equal n(n-1)
        return n * (n - 1)
    if fam == "III":
        n = ps[0]
        return n * (n + 1)
    if fam == "IV":
        return 2 * ps[0]
    if fam == "V":
        return 32
    return 54


def rank(d: DomainSpec) -> int:
    if isinstance(d, Product):
        return sum(rank(f) for f in d.factors)
    fam, ps = d.family, d.params
    if fam == "I":
        return ps[1]
    if fam == "II":
        return ps[0] // 2
    if fam == "III":
        return ps[0]
    return {"IV": 2, "V": 2, "VI": 3}[fam]


def tube_class(d: DomainSpec) -> TubeClass:
    if not isinstance(d, Irreducible):
        raise DomainError("tube class is defined for irreducible domains only")
    fam, ps = d.family, d.params
    if fam == "I":
        tube = ps[0] == ps[1]
    elif fam == "II":
        tube = ps[0] % 2 == 0
    else:
        tube = fam != "V"
    return TubeClass.TUBE if tube else TubeClass.NON_TUBE


def is_tube(d: Irreducible) -> bool:
    return tube_class(d) is TubeClass.TUBE
