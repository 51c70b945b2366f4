"""Numerical invariants of a cover X -> W computed from phi_* O_X.

phi is flat, so every cohomology group of O_X (and of phi^* H) is the sum
of the corresponding groups of the four summands on W.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CoverCandidate, GaloisGroup, pushforward_summands
from .errors import CanonicalMorphismViolated
from .surfaces import (
    cohomology,
    degree,
    euler_characteristic_rr,
    hyperplane_class,
    intersection_number,
)

A1_SMOOTHABLE = "smoothable: transverse smooth branch curves give smooth X"
A1_MILDEST = "mildest configuration: smooth branch curves meeting transversally"
A1_EXACT = "exact: branch curves are unions of distinct rulings"


@dataclass(frozen=True)
class InvariantSet:
    p_g: int
    q: int
    chi: int
    K2: int
    degW: int
    branch_product: int
    generic_A1: int
    a1_note: str = ""

    def __post_init__(self):
        if self.chi != 1 - self.q + self.p_g:
            raise ValueError(f"chi = {self.chi} but 1 - q + p_g = {1 - self.q + self.p_g}")
        if self.K2 != 4 * self.degW:
            raise ValueError(f"K^2 = {self.K2} but 4 deg W = {4 * self.degW}")


def irregularity(c: CoverCandidate) -> int:
    return sum(cohomology(c.W, L).h1 for L in pushforward_summands(c))


def geometric_genus(c: CoverCandidate) -> int:
    """h^0(omega_X) = h^0(phi^* H); raises if it exceeds h^0(H)."""
    H = hyperplane_class(c.W)
    from_summands = sum(cohomology(c.W, L + H).h0 for L in pushforward_summands(c))
    on_base = cohomology(c.W, H).h0
    if from_summands != on_base:
        raise CanonicalMorphismViolated(from_summands, on_base)
    return from_summands


def chi_from_summands(c: CoverCandidate) -> int:
    return sum(euler_characteristic_rr(c.W, L) for L in pushforward_summands(c))


def generic_a1_count(c: CoverCandidate) -> int:
    """A1 points over D1 cap D2 for Z4; bidouble covers can be taken smooth."""
    if c.group is GaloisGroup.Z2xZ2:
        return 0
    return intersection_number(c.W, c.D1, c.D2)


def a1_note(c: CoverCandidate, q: int) -> str:
    if c.group is GaloisGroup.Z2xZ2:
        return A1_SMOOTHABLE
    if c.W.is_scroll and q > 0:
        return A1_EXACT
    return A1_MILDEST


def invariant_set(c: CoverCandidate) -> InvariantSet:
    p_g = geometric_genus(c)
    q = irregularity(c)
    chi = chi_from_summands(c)
    if chi != 1 - q + p_g:
        raise AssertionError(f"chi mismatch on {c}: sum {chi} vs 1-q+p_g {1 - q + p_g}")
    degW = degree(c.W)
    return InvariantSet(
        p_g=p_g,
        q=q,
        chi=chi,
        K2=4 * degW,
        degW=degW,
        branch_product=intersection_number(c.W, c.D1, c.D2),
        generic_A1=generic_a1_count(c),
        a1_note=a1_note(c, q),
    )


def restriction_profile(c: CoverCandidate) -> list[int]:
    """Degrees of L1, L2, L1+L2 on a hyperplane section, sorted."""
    H = hyperplane_class(c.W)
    return sorted(intersection_number(c.W, L, H) for L in (c.L1, c.L2, c.L3))
