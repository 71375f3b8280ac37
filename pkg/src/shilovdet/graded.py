"""Poincaré polynomials with exact integer coefficients.

The only algebras in play are exterior algebras on odd-degree generators,
whose Poincaré polynomial is a product of factors ``1 + t^d``.
``recover_generators`` inverts that construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping


class NotExteriorForm(ValueError):
    """The polynomial is not the Poincaré series of an exterior algebra on odd generators."""


class GradedPoly:
    """Immutable polynomial in ``t``; stored as a sorted tuple of (degree, coeff), no zeros."""

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for deg, c in items:
            if deg < 0:
                raise ValueError("negative degree")
            acc[deg] = acc.get(deg, 0) + int(c)
        self._terms = tuple(sorted((d, c) for d, c in acc.items() if c))

    @classmethod
    def one(cls) -> GradedPoly:
        return cls({0: 1})

    @classmethod
    def from_dense(cls, coeffs: Iterable[int]) -> GradedPoly:
        out = cls.__new__(cls)
        out._terms = tuple((d, c) for d, c in enumerate(coeffs) if c)
        return out

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coeff(self, degree: int) -> int:
        for d, c in self._terms:
            if d == degree:
                return c
        return 0

    def dense(self) -> list[int]:
        if not self._terms:
            return []
        out = [0] * (self._terms[-1][0] + 1)
        for d, c in self._terms:
            out[d] = c
        return out

    def is_zero(self) -> bool:
        return not self._terms

    def __call__(self, t: int) -> int:
        return sum(c * t**d for d, c in self._terms)

    def __mul__(self, other: GradedPoly) -> GradedPoly:
        if not isinstance(other, GradedPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return GradedPoly()
        if all(c > 0 for _, c in self._terms) and all(c > 0 for _, c in other._terms):
            return GradedPoly.from_dense(_kronecker_mul(self.dense(), other.dense()))
        acc: dict[int, int] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                acc[d1 + d2] = acc.get(d1 + d2, 0) + c1 * c2
        return GradedPoly(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"GradedPoly({dict(self._terms)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (d, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                body = f"t^{d}" if mag == 1 else f"{mag}t^{d}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)


def _kronecker_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of dense nonnegative polynomials via one big-integer multiply.

    Coefficients are packed into slots wide enough to hold any product
    coefficient, so the result is exact for arbitrary sizes.
    """
    bound = min(len(a), len(b)) * max(a) * max(b)
    width = (bound.bit_length() + 7) // 8
    pack_a = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in a), "little")
    pack_b = int.from_bytes(b"".join(c.to_bytes(width, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (pack_a * pack_b).to_bytes(n * width, "little")
    return [int.from_bytes(raw[k * width:(k + 1) * width], "little") for k in range(n)]


def exterior_poincare(gens: Iterable[int]) -> GradedPoly:
    """Product of ``1 + t^d`` over the generator degrees."""
    dense = [1]
    for d in gens:
        if d <= 0:
            raise ValueError("generator degrees must be positive")
        out = dense + [0] * d
        for k, c in enumerate(dense):
            out[k + d] += c
        dense = out
    return GradedPoly.from_dense(dense)


def kunneth(p: GradedPoly, q: GradedPoly) -> GradedPoly:
    """Poincaré polynomial of a product of spaces (field coefficients / torsion-free)."""
    return p * q


def top_degree(p: GradedPoly) -> int:
    if p.is_zero():
        raise ValueError("zero polynomial has no top degree")
    return p.terms[-1][0]


def divide_one_plus(p: list[int], d: int) -> list[int]:
    """Exact division of a dense polynomial by ``1 + t^d``; raises on remainder."""
    rem = list(p)
    n = len(rem) - d
    if n <= 0:
        raise NotExteriorForm(f"degree too small to divide by 1 + t^{d}")
    quot = [0] * n
    for k in range(n):
        quot[k] = rem[k]
        rem[k] = 0
        rem[k + d] -= quot[k]
    if any(rem):
        raise NotExteriorForm(f"1 + t^{d} does not divide the polynomial")
    return quot


def recover_generators(p: GradedPoly) -> tuple[int, ...]:
    """Generator degrees (ascending) of the exterior algebra with Poincaré polynomial ``p``.

    Greedy: the lowest positive degree present must be a generator; divide it
    out and repeat.
    """
    dense = p.dense()
    if not dense or dense[0] != 1:
        raise NotExteriorForm("constant term must be 1")
    if any(c < 0 for c in dense):
        raise NotExteriorForm("negative coefficient")
    gens: list[int] = []
    while len(dense) > 1:
        d = next(k for k in range(1, len(dense)) if dense[k])
        if d % 2 == 0:
            raise NotExteriorForm(f"lowest remaining degree {d} is even")
        dense = divide_one_plus(dense, d)
        if any(c < 0 for c in dense):
            raise NotExteriorForm("negative coefficient after division")
        while len(dense) > 1 and dense[-1] == 0:
            dense.pop()
        gens.append(d)
    return tuple(gens)


def progression_step(gens: tuple[int, ...]) -> int | None:
    """Common difference of an arithmetic progression, or None (fewer than two terms / not a progression)."""
    if len(gens) < 2:
        return None
    diffs = {b - a for a, b in zip(gens, gens[1:])}
    return diffs.pop() if len(diffs) == 1 else None
