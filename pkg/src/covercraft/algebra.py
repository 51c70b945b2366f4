"""Eigensheaf data of Galois quadruple covers, at the level of divisor classes.

A Z4 cover is described by the classes L_i, L_{-1}, L_{-i} (the duals of the
nontrivial eigensheaves) and four effective branch classes D11, D12, D23, D33.
A Z2 x Z2 (bidouble) cover is described by L1, L2, L3 and D1, D2, D3.

For canonical covers of a surface of minimal degree W both structures reduce to
a pair (L1, L2) with L1 + L2 = -K_W + H; see :func:`make_candidate`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    HalvingNotIntegral,
    InvalidAlgebraData,
    NonEffectiveBranch,
    SplittingConstraintViolated,
)
from .surfaces import (
    DivisorClass,
    MinimalDegreeSurface,
    canonical_class,
    hyperplane_class,
    is_effective,
)


class GaloisGroup(str, enum.Enum):
    Z4 = "Z4"
    Z2xZ2 = "Z2xZ2"

    def __str__(self) -> str:
        return self.value


def parse_group(text: str) -> GaloisGroup:
    key = text.strip().lower().replace("_", "").replace(" ", "")
    if key in ("z4", "cyclic"):
        return GaloisGroup.Z4
    if key in ("z2z2", "z2xz2", "z2*z2", "bidouble", "klein"):
        return GaloisGroup.Z2xZ2
    raise ValueError(f"unknown Galois group {text!r}; expected z4 or z2z2")


def _effective(D: DivisorClass) -> bool:
    return D.a >= 0 and (D.b is None or D.b >= 0)


@dataclass(frozen=True)
class Z4AlgebraData:
    Li: DivisorClass
    Lm1: DivisorClass
    Lmi: DivisorClass
    D11: DivisorClass
    D12: DivisorClass
    D23: DivisorClass
    D33: DivisorClass

    def relations(self) -> dict[str, tuple[DivisorClass, DivisorClass]]:
        """Each relation as (lhs, rhs); the data is valid iff all sides agree."""
        Li, Lm1, Lmi = self.Li, self.Lm1, self.Lmi
        D11, D12, D23, D33 = self.D11, self.D12, self.D23, self.D33
        return {
            "Li+Li = Lm1+D11": (2 * Li, Lm1 + D11),
            "Li+Lm1 = Lmi+D12": (Li + Lm1, Lmi + D12),
            "Li+Lmi = D11+D23": (Li + Lmi, D11 + D23),
            "Lm1+Lm1 = D12+D23": (2 * Lm1, D12 + D23),
            "Lm1+Lmi = Li+D23": (Lm1 + Lmi, Li + D23),
            "Lmi+Lmi = Lm1+D33": (2 * Lmi, Lm1 + D33),
            "D11+D23 = D12+D33": (D11 + D23, D12 + D33),
        }


def z4_violations(data: Z4AlgebraData) -> list[str]:
    """Names of every violated relation or effectivity requirement."""
    bad = [name for name, (lhs, rhs) in data.relations().items() if lhs != rhs]
    for name in ("D11", "D12", "D23", "D33"):
        if not _effective(getattr(data, name)):
            bad.append(f"{name} effective")
    return bad


def validate_z4(data: Z4AlgebraData) -> bool:
    try:
        return not z4_violations(data)
    except TypeError:
        return False


def is_simple_cyclic(data: Z4AlgebraData) -> bool:
    if not validate_z4(data):
        raise InvalidAlgebraData(f"invalid Z4 data: {z4_violations(data)}")
    if data.D11.is_zero() and data.D12.is_zero() and data.D23 == data.D33:
        return True
    return data.D23.is_zero() and data.D33.is_zero() and data.D11 == data.D12


@dataclass(frozen=True)
class BidoubleAlgebraData:
    L1: DivisorClass
    L2: DivisorClass
    L3: DivisorClass
    D1: DivisorClass
    D2: DivisorClass
    D3: DivisorClass


def bidouble_violations(data: BidoubleAlgebraData) -> list[str]:
    L = {1: data.L1, 2: data.L2, 3: data.L3}
    D = {1: data.D1, 2: data.D2, 3: data.D3}
    bad = []
    for i, j, k in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        if 2 * L[i] != D[j] + D[k]:
            bad.append(f"2L{i} = D{j}+D{k}")
        if L[j] + L[k] != L[i] + D[i]:
            bad.append(f"L{j}+L{k} = L{i}+D{i}")
    for i in (1, 2, 3):
        if not _effective(D[i]):
            bad.append(f"D{i} effective")
    return bad


def validate_bidouble(data: BidoubleAlgebraData) -> bool:
    try:
        return not bidouble_violations(data)
    except TypeError:
        return False


@dataclass(frozen=True)
class CoverCandidate:
    """Class-level data of a Galois quadruple cover X -> W.

    ``L1, L2`` are the duals of two eigensheaves of phi_* O_X; the third is
    L1 + L2.  For Z4, L2 is the (-1)-eigensheaf.  ``D1, D2`` are the branch
    classes of the two double covers the quadruple cover factors through.
    """

    W: MinimalDegreeSurface
    group: GaloisGroup
    L1: DivisorClass
    L2: DivisorClass
    D1: DivisorClass
    D2: DivisorClass
    label: Optional[str] = None

    @property
    def L3(self) -> DivisorClass:
        return self.L1 + self.L2

    def with_label(self, label: Optional[str]) -> "CoverCandidate":
        return CoverCandidate(self.W, self.group, self.L1, self.L2, self.D1, self.D2, label)

    def is_degenerate(self) -> bool:
        return self.D1.is_zero() or self.D2.is_zero()


def branch_classes(group: GaloisGroup, L1: DivisorClass, L2: DivisorClass):
    if group is GaloisGroup.Z4:
        return 2 * L1 - L2, 2 * L2
    return 2 * L2, 2 * L1


def splitting_target(W: MinimalDegreeSurface) -> DivisorClass:
    """-K_W + H, the class L1 + L2 must equal for a canonical cover."""
    return hyperplane_class(W) - canonical_class(W)


def make_candidate(W, group, L1, L2, label=None) -> CoverCandidate:
    group = GaloisGroup(group)
    target = splitting_target(W)
    if L1 + L2 != target:
        raise SplittingConstraintViolated(L1 + L2, target)
    D1, D2 = branch_classes(group, L1, L2)
    for name, D in (("D1", D1), ("D2", D2)):
        if not is_effective(W, D):
            raise NonEffectiveBranch(name, D)
    return CoverCandidate(W, group, L1, L2, D1, D2, label)


def pushforward_summands(c: CoverCandidate) -> list[DivisorClass]:
    """phi_* O_X = O_W + L1^* + L2^* + (L1+L2)^*, as classes in that order."""
    return [c.W.zero(), -c.L1, -c.L2, -(c.L1 + c.L2)]


def cover_canonical_class(c: CoverCandidate) -> DivisorClass:
    """Class on W whose pullback is omega_X: K_W + L1 + L2."""
    return canonical_class(c.W) + c.L1 + c.L2


def to_z4_data(c: CoverCandidate) -> Z4AlgebraData:
    if c.group is not GaloisGroup.Z4:
        raise InvalidAlgebraData("only Z4 candidates embed into Z4 algebra data")
    return Z4AlgebraData(
        Li=c.L1, Lm1=c.L2, Lmi=c.L1 + c.L2,
        D11=c.D1, D12=c.W.zero(), D23=c.D2, D33=c.D1 + c.D2,
    )


def to_bidouble_data(c: CoverCandidate) -> BidoubleAlgebraData:
    if c.group is not GaloisGroup.Z2xZ2:
        raise InvalidAlgebraData("only Z2xZ2 candidates embed into bidouble data")
    return BidoubleAlgebraData(
        L1=c.L1, L2=c.L2, L3=c.L1 + c.L2, D1=c.D1, D2=c.D2, D3=c.W.zero()
    )


def normalize_z4(data: Z4AlgebraData) -> tuple[DivisorClass, DivisorClass, DivisorClass, DivisorClass]:
    """Return (L1, L2, D1, D2) in the normal form L1 + L2 = L3, L2 = L_{-1}.

    Requires D12 = 0 or D23 = 0.  In the second case the generator of Z4 is
    replaced by its inverse, which exchanges i and -i (and D11 with D33,
    D12 with D23).
    """
    if not validate_z4(data):
        raise InvalidAlgebraData(f"invalid Z4 data: {z4_violations(data)}")
    if data.D12.is_zero():
        return data.Li, data.Lm1, data.D11, data.D23
    if data.D23.is_zero():
        return data.Lmi, data.Lm1, data.D33, data.D12
    raise InvalidAlgebraData("neither D12 nor D23 vanishes; no double-cover factorization")


@dataclass(frozen=True)
class DoubleCoverStep:
    name: str
    base: str
    branch: DivisorClass
    branch_includes_ramification: bool
    trace_zero: DivisorClass
    pulled_back: bool = False

    def describe(self) -> str:
        tz = f"p1^*({self.trace_zero})" if self.pulled_back else str(self.trace_zero)
        if self.branch_includes_ramification:
            where = f"ramification of p1 + p1^*({self.branch})"
        else:
            where = str(self.branch)
        return f"{self.name}: double cover of {self.base} branched along {where}, trace zero {tz}"


@dataclass(frozen=True)
class ConstructionPlan:
    group: GaloisGroup
    steps: tuple[DoubleCoverStep, ...]
    fiber_product: bool
    class_identity: Optional[str] = None
    advisories: tuple[str, ...] = field(default_factory=tuple)

    def describe(self) -> str:
        lines = [step.describe() for step in self.steps]
        if self.fiber_product:
            lines.append("X = X1 x_W X2")
        else:
            lines.append("X -> X1 -> W (composition)")
        if self.class_identity:
            lines.append(self.class_identity)
        lines.extend(f"note: {a}" for a in self.advisories)
        return "\n".join(lines)


def construction_plan(c: CoverCandidate) -> ConstructionPlan:
    advisories = []
    if c.group is GaloisGroup.Z2xZ2:
        if c.D1.is_zero():
            advisories.append("D1 = 0: p2 is unbranched over W")
        if c.D2.is_zero():
            advisories.append("D2 = 0: p1 is unbranched over W")
        steps = (
            DoubleCoverStep("p1", "W", c.D2, False, -c.L1),
            DoubleCoverStep("p2", "W", c.D1, False, -c.L2),
        )
        return ConstructionPlan(c.group, steps, True, None, tuple(advisories))

    # Z4: p1 over W with trace zero L2^*, p2 over X1 with trace zero p1^* L1^*;
    # L1 = D1/2 + D2/4 must hold as an integral class equation.
    if 4 * c.L1 != 2 * c.D1 + c.D2 or 2 * c.L2 != c.D2:
        raise HalvingNotIntegral(
            f"4*L1 = {4 * c.L1} but 2*D1 + D2 = {2 * c.D1 + c.D2}"
        )
    if c.D1.is_zero():
        advisories.append("D1 = 0: simple cyclic presentation")
    if c.D2.is_zero():
        advisories.append("D2 = 0: p1 is unbranched over W")
    steps = (
        DoubleCoverStep("p1", "W", c.D2, False, -c.L2),
        DoubleCoverStep("p2", "X1", c.D1, True, -c.L1, pulled_back=True),
    )
    identity = f"4*L1 = 2*D1 + D2 = {4 * c.L1}"
    return ConstructionPlan(c.group, steps, False, identity, tuple(advisories))
