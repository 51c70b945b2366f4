"""Picard-group arithmetic and line-bundle cohomology on surfaces of minimal degree.

The bases are linear P^2, the Veronese surface (P^2 embedded by conics) and the
smooth rational normal scrolls S(m-e, m), modeled on the Hirzebruch surface F_e
embedded by |C0 + m f|.  Divisor classes on P^2 are multiples of the line class;
on F_e they are pairs (a, b) meaning a*C0 + b*f.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidBase, NotEffective

P2 = "P2"
VERONESE = "veronese"
SCROLL = "scroll"


@dataclass(frozen=True)
class DivisorClass:
    """A class in Pic(W).  ``b`` is None for classes on P^2 (and the Veronese)."""

    a: int
    b: Optional[int] = None

    @property
    def is_planar(self) -> bool:
        return self.b is None

    @property
    def d(self) -> int:
        if self.b is not None:
            raise TypeError("d is only defined for classes on P^2")
        return self.a

    def _check(self, other: "DivisorClass") -> None:
        if self.is_planar != other.is_planar:
            raise TypeError(f"cannot combine classes {self} and {other}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        if self.is_planar:
            return DivisorClass(self.a + other.a)
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "DivisorClass":
        if self.is_planar:
            return DivisorClass(-self.a)
        return DivisorClass(-self.a, -self.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __mul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        if self.is_planar:
            return DivisorClass(k * self.a)
        return DivisorClass(k * self.a, k * self.b)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.a == 0 and (self.b is None or self.b == 0)

    def __str__(self) -> str:
        if self.is_planar:
            return str(self.a)
        return f"({self.a},{self.b})"

    def __repr__(self) -> str:
        if self.is_planar:
            return f"DivisorClass({self.a})"
        return f"DivisorClass({self.a}, {self.b})"


_CLASS_RE = re.compile(r"^\s*\(?\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\)?\s*$")


def parse_class(text: str) -> DivisorClass:
    """Parse ``"(a,b)"`` (scroll) or ``"d"`` (P^2)."""
    match = _CLASS_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse divisor class {text!r}")
    a, b = match.groups()
    if b is None:
        if "(" in text or "," in text:
            raise ValueError(f"cannot parse divisor class {text!r}")
        return DivisorClass(int(a))
    return DivisorClass(int(a), int(b))


def cls(a: int, b: int) -> DivisorClass:
    return DivisorClass(a, b)


def line(d: int) -> DivisorClass:
    return DivisorClass(d)


@dataclass(frozen=True)
class MinimalDegreeSurface:
    kind: str
    e: Optional[int] = None
    m: Optional[int] = None

    def __post_init__(self):
        if self.kind == SCROLL:
            if self.e is None or self.m is None:
                raise InvalidBase("a scroll needs both e and m")
            if self.e < 0:
                raise InvalidBase(f"e must be nonnegative, got e={self.e}")
            if self.m < self.e + 1:
                raise InvalidBase(
                    f"S(m-e, m) is smooth only for m >= e+1; got e={self.e}, m={self.m}"
                )
        elif self.kind in (P2, VERONESE):
            if self.e is not None or self.m is not None:
                raise InvalidBase(f"{self.kind} takes no e, m parameters")
        else:
            raise InvalidBase(f"unknown surface kind {self.kind!r}")

    @property
    def is_scroll(self) -> bool:
        return self.kind == SCROLL

    def zero(self) -> DivisorClass:
        return DivisorClass(0, 0) if self.is_scroll else DivisorClass(0)

    def owns(self, D: DivisorClass) -> bool:
        return D.is_planar != self.is_scroll

    def __str__(self) -> str:
        if self.is_scroll:
            return f"S({self.m - self.e},{self.m})"
        return "P2" if self.kind == P2 else "Veronese"


def p2() -> MinimalDegreeSurface:
    return MinimalDegreeSurface(P2)


def veronese() -> MinimalDegreeSurface:
    return MinimalDegreeSurface(VERONESE)


def scroll(e: int, m: int) -> MinimalDegreeSurface:
    return MinimalDegreeSurface(SCROLL, e, m)


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int
    h2: int

    @property
    def euler(self) -> int:
        return self.h0 - self.h1 + self.h2

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.h0, self.h1, self.h2)


def _require(W: MinimalDegreeSurface, *classes: DivisorClass) -> None:
    for D in classes:
        if not W.owns(D):
            raise TypeError(f"class {D} does not live on {W}")


def intersection_number(W: MinimalDegreeSurface, D: DivisorClass, E: DivisorClass) -> int:
    """Intersection pairing; C0^2 = -e, C0.f = 1, f^2 = 0 on F_e."""
    _require(W, D, E)
    if W.is_scroll:
        return -W.e * D.a * E.a + D.a * E.b + E.a * D.b
    return D.a * E.a


def canonical_class(W: MinimalDegreeSurface) -> DivisorClass:
    if W.is_scroll:
        return DivisorClass(-2, -(W.e + 2))
    return DivisorClass(-3)


def hyperplane_class(W: MinimalDegreeSurface) -> DivisorClass:
    if W.is_scroll:
        return DivisorClass(1, W.m)
    return DivisorClass(2 if W.kind == VERONESE else 1)


def degree(W: MinimalDegreeSurface) -> int:
    H = hyperplane_class(W)
    return intersection_number(W, H, H)


def is_effective(W: MinimalDegreeSurface, D: DivisorClass) -> bool:
    _require(W, D)
    if W.is_scroll:
        return D.a >= 0 and D.b >= 0
    return D.a >= 0


def _p2_h0(d: int) -> int:
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def cohomology(W: MinimalDegreeSurface, D: DivisorClass) -> CohomologyDims:
    """Dimensions h^0, h^1, h^2 of O_W(D).

    On F_e with a >= 0 the bundle pushes down to P^1 as the sum of
    O(b - j e) for j = 0..a; a = -1 has no cohomology; a <= -2 goes
    through Serre duality.
    """
    _require(W, D)
    if not W.is_scroll:
        d = D.a
        return CohomologyDims(_p2_h0(d), 0, _p2_h0(-d - 3))
    a, b, e = D.a, D.b, W.e
    if a >= 0:
        h0 = sum(max(0, b - j * e + 1) for j in range(a + 1))
        h1 = sum(max(0, j * e - b - 1) for j in range(a + 1))
        return CohomologyDims(h0, h1, 0)
    if a == -1:
        return CohomologyDims(0, 0, 0)
    dual = cohomology(W, canonical_class(W) - D)
    return CohomologyDims(dual.h2, dual.h1, dual.h0)


def h0(W: MinimalDegreeSurface, D: DivisorClass) -> int:
    return cohomology(W, D).h0


def euler_characteristic_rr(W: MinimalDegreeSurface, D: DivisorClass) -> int:
    """Riemann-Roch on a rational surface: chi(D) = D.(D - K)/2 + 1."""
    twice = intersection_number(W, D, D - canonical_class(W))
    # D.(D-K) is even on any surface (adjunction)
    assert twice % 2 == 0
    return twice // 2 + 1


def fixed_c0_multiplicity(W: MinimalDegreeSurface, D: DivisorClass) -> int:
    """Multiplicity of C0 in the fixed part of |D| on F_e."""
    if not W.is_scroll:
        raise TypeError("fixed_c0_multiplicity needs a scroll")
    if not is_effective(W, D):
        raise NotEffective(D)
    if W.e == 0:
        return 0
    return max(0, D.a - D.b // W.e)


def is_base_point_free(W: MinimalDegreeSurface, D: DivisorClass) -> bool:
    if not is_effective(W, D):
        raise NotEffective(D)
    if not W.is_scroll:
        return D.a >= 0
    return D.a >= 0 and D.b >= D.a * W.e


def is_very_ample(W: MinimalDegreeSurface, D: DivisorClass) -> bool:
    """Very ample classes: a > 0, b > a e on F_e; d > 0 on P^2."""
    _require(W, D)
    if not W.is_scroll:
        return D.a > 0
    return D.a > 0 and D.b > D.a * W.e


def section_count_oracle(W: MinimalDegreeSurface, D: DivisorClass) -> int:
    """Brute-force h^0 by counting monomials of the right multidegree.

    On P^2: monomials x^i y^j z^k with i+j+k = d.  On F_e the Cox ring is
    k[s, t, x, y] with s, t of class f, y of class C0 and x of class C0 + e f,
    so s^k t^l x^i y^j has class (i+j) C0 + (k+l+e i) f.
    """
    _require(W, D)
    count = 0
    if not W.is_scroll:
        d = D.a
        for i in range(d + 1):
            for j in range(d + 1 - i):
                k = d - i - j
                if k >= 0:
                    count += 1
        return count
    a, b, e = D.a, D.b, W.e
    for i in range(a + 1):
        j = a - i
        for k in range(b + 1):
            l = b - e * i - k
            if j >= 0 and l >= 0:
                count += 1
    return count
