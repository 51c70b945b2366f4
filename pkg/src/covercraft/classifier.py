"""Exhaustive search for Galois quadruple canonical covers of a fixed base.

A candidate is a pair of classes (L1, L2) with L1 + L2 = -K_W + H.  The
constraints applied to every tuple in the search box are

* C1  effectivity of the branch classes D1, D2;
* C2  canonical morphism: h^0(H - L) = 0 for L in {L1, L2, L1 + L2};
* C3  reducedness: C0 occurs in D1 + D2 with multiplicity at most 1.

C0 is the only rigid curve on F_e, so C3 is the only way a moving class can
force a nonreduced branch divisor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .algebra import (
    CoverCandidate,
    GaloisGroup,
    branch_classes,
    is_simple_cyclic,
    make_candidate,
    pushforward_summands,
    splitting_target,
    to_z4_data,
)
from .invariants import InvariantSet, invariant_set
from .surfaces import (
    DivisorClass,
    MinimalDegreeSurface,
    cohomology,
    degree,
    fixed_c0_multiplicity,
    hyperplane_class,
    intersection_number,
    is_base_point_free,
    is_effective,
    is_very_ample,
    p2,
    scroll,
    veronese,
)
from .tables import Tables, expected_cases, expected_shapes, load_tables

UNLABELED = "unlabeled"


@dataclass(frozen=True)
class ConstraintResult:
    name: str
    passed: bool
    witness: str


@dataclass(frozen=True)
class ConstraintReport:
    L1: DivisorClass
    L2: DivisorClass
    results: tuple[ConstraintResult, ...]

    @property
    def accepted(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[ConstraintResult]:
        return [r for r in self.results if not r.passed]


@dataclass(frozen=True)
class ClassificationCase:
    label: str
    candidate: CoverCandidate
    invariants: InvariantSet
    source: str = ""
    paper_ref: str = ""
    swap_duplicate_of: Optional[str] = None
    existence: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def group(self) -> GaloisGroup:
        return self.candidate.group

    @property
    def W(self) -> MinimalDegreeSurface:
        return self.candidate.W

    @property
    def D1(self) -> DivisorClass:
        return self.candidate.D1

    @property
    def D2(self) -> DivisorClass:
        return self.candidate.D2


def screen(W: MinimalDegreeSurface, group: GaloisGroup, L1: DivisorClass,
           L2: DivisorClass) -> ConstraintReport:
    results = []
    D1, D2 = branch_classes(group, L1, L2)
    effective = True
    for name, D in (("D1", D1), ("D2", D2)):
        ok = is_effective(W, D)
        effective &= ok
        results.append(ConstraintResult(f"C1 {name} effective", ok, f"{name}={D}"))

    H = hyperplane_class(W)
    for name, L in (("L1", L1), ("L2", L2), ("L3", L1 + L2)):
        n = cohomology(W, H - L).h0
        results.append(ConstraintResult(f"C2 h0(H-{name})=0", n == 0, f"h0({H - L})={n}"))

    if W.is_scroll and effective:
        k1 = fixed_c0_multiplicity(W, D1)
        k2 = fixed_c0_multiplicity(W, D2)
        results.append(ConstraintResult(
            "C3 D1+D2 reduced along C0", k1 + k2 <= 1, f"mult_C0 D1={k1}, D2={k2}"
        ))
    return ConstraintReport(L1, L2, tuple(results))


def search_box(W: MinimalDegreeSurface):
    """All (L1, L2) with L1 + L2 = -K + H and nonnegative coefficients."""
    target = splitting_target(W)
    if W.is_scroll:
        for a1 in range(target.a + 1):
            for b1 in range(target.b + 1):
                L1 = DivisorClass(a1, b1)
                yield L1, target - L1
    else:
        for d1 in range(target.a + 1):
            L1 = DivisorClass(d1)
            yield L1, target - L1


def _is_normalized(group: GaloisGroup, L1: DivisorClass, L2: DivisorClass) -> bool:
    # exchanging the two double covers of a bidouble cover swaps (L1, D2) with (L2, D1)
    if group is GaloisGroup.Z2xZ2:
        return (L1.a, L1.b or 0) >= (L2.a, L2.b or 0)
    return True


def constraint_reports(W: MinimalDegreeSurface, group: GaloisGroup) -> list[ConstraintReport]:
    return [screen(W, group, L1, L2) for L1, L2 in search_box(W)
            if _is_normalized(group, L1, L2)]


def _branch_check(W: MinimalDegreeSurface, D: DivisorClass) -> dict:
    info = {"class": str(D), "effective": is_effective(W, D)}
    if not info["effective"]:
        return info
    info["base_point_free"] = is_base_point_free(W, D)
    info["very_ample"] = is_very_ample(W, D)
    if W.is_scroll:
        k = fixed_c0_multiplicity(W, D)
        moving = D - DivisorClass(k, 0)
        C0 = DivisorClass(1, 0)
        info["fixed_c0"] = k
        info["moving_part"] = str(moving)
        info["moving_part_bpf"] = is_base_point_free(W, moving)
        info["moving_dot_c0"] = intersection_number(W, moving, C0)
        info["smooth_member"] = (
            k <= 1 and info["moving_part_bpf"] and (k == 0 or info["moving_dot_c0"] == 0)
        )
    else:
        info["smooth_member"] = True
    return info


def existence_checks(c: CoverCandidate) -> dict:
    """Class-level facts the existence arguments rely on (Bertini is not re-proved)."""
    d1 = _branch_check(c.W, c.D1)
    d2 = _branch_check(c.W, c.D2)
    ok = d1.get("smooth_member", False) and d2.get("smooth_member", False)
    if c.group is GaloisGroup.Z2xZ2:
        argument = "smooth X from smooth transverse D1, D2" if ok else "no class-level smoothness witness"
    else:
        argument = "only A1 points from smooth transverse D1, D2" if ok else "no class-level A1 witness"
    return {"D1": d1, "D2": d2, "smooth_transverse_branch": ok, "argument": argument}


def _label_for(c: CoverCandidate, expected) -> tuple[str, str, str]:
    for exp in expected:
        if exp.D1 == c.D1 and exp.D2 == c.D2:
            return exp.label, exp.source, exp.paper_ref
    return UNLABELED, "", ""


def _sort_key(label: str) -> tuple[int, str]:
    main = label[:1] in ("A", "B") and label[1:2] == "."
    return (0 if main else 1, label)


def _swap(D: DivisorClass) -> DivisorClass:
    return DivisorClass(D.b, D.a)


def _swap_image(c: CoverCandidate) -> tuple[DivisorClass, DivisorClass]:
    D1, D2 = _swap(c.D1), _swap(c.D2)
    if c.group is GaloisGroup.Z2xZ2:
        L1, L2 = _swap(c.L1), _swap(c.L2)
        if not _is_normalized(c.group, L1, L2):
            D1, D2 = D2, D1
    return D1, D2


def _mark_swaps(cases: list[ClassificationCase]) -> list[ClassificationCase]:
    """On F0 = P1 x P1 with m = 1, link each case to an earlier ruling-swap image."""
    out = []
    ordered = sorted(cases, key=lambda k: _sort_key(k.label))
    seen: dict[tuple, str] = {}
    for case in ordered:
        image = _swap_image(case.candidate)
        key = (case.D1, case.D2)
        original = seen.get(image) if image != key else None
        if original is not None:
            case = ClassificationCase(case.label, case.candidate, case.invariants, case.source,
                                      case.paper_ref, original, case.existence)
        seen.setdefault(key, case.label)
        out.append(case)
    return out


def _build_cases(W, group, survivors, expected) -> list[ClassificationCase]:
    cases = []
    for L1, L2 in survivors:
        cand = make_candidate(W, group, L1, L2)
        label, source, ref = _label_for(cand, expected)
        cand = cand.with_label(label)
        cases.append(ClassificationCase(label, cand, invariant_set(cand), source, ref,
                                        None, existence_checks(cand)))
    return cases


def classify_scroll(e: int, m: int, group, tables: Optional[Tables] = None) -> list[ClassificationCase]:
    group = GaloisGroup(group)
    W = scroll(e, m)
    tables = tables or load_tables()
    expected = expected_cases(tables, "scroll", group, e, m)
    survivors = [(r.L1, r.L2) for r in constraint_reports(W, group) if r.accepted]
    cases = _build_cases(W, group, survivors, expected)
    if e == 0 and m == 1:
        cases = _mark_swaps(cases)
    return sorted(cases, key=lambda k: _sort_key(k.label))


def classify_p2(group, tables: Optional[Tables] = None) -> list[ClassificationCase]:
    group = GaloisGroup(group)
    W = p2()
    tables = tables or load_tables()
    expected = expected_cases(tables, "P2", group)
    survivors = [(r.L1, r.L2) for r in constraint_reports(W, group) if r.accepted]
    return sorted(_build_cases(W, group, survivors, expected), key=lambda k: _sort_key(k.label))


@dataclass(frozen=True)
class ParityWitness:
    """Restriction degrees needed on a hyperplane curve versus those available."""

    surface: str
    r: int
    required: int
    line_degree_on_curve: int
    solutions: tuple[int, ...]
    enumeration_survivors: int

    @property
    def parity(self) -> str:
        return "even" if self.line_degree_on_curve % 2 == 0 else "any"


def restriction_solutions(W: MinimalDegreeSurface) -> tuple[int, tuple[int, ...]]:
    """Solve deg(L|_C) = r + 1 for L a multiple of the line class.

    C is a hyperplane section (a line or a conic), so the line class restricts
    with degree equal to the hyperplane multiple h; the equation is h*l = r+1.
    """
    if W.is_scroll:
        raise TypeError("restriction_solutions applies to P2 and the Veronese")
    h = hyperplane_class(W).a
    required = degree(W) + 1
    sols = tuple(l for l in range(required + 1) if h * l == required)
    return h, sols


def classify_veronese() -> tuple[list[ClassificationCase], ParityWitness]:
    W = veronese()
    h, sols = restriction_solutions(W)
    survivors = 0
    for group in GaloisGroup:
        survivors += sum(1 for r in constraint_reports(W, group) if r.accepted)
    witness = ParityWitness(str(W), degree(W), degree(W) + 1, h, sols, survivors)
    return [], witness


@dataclass(frozen=True)
class SimpleCyclicHit:
    n: int
    e: int
    m: int
    L: DivisorClass


def simple_cyclic_class(n: int, e: int, m: int) -> Optional[DivisorClass]:
    """L with (n-1) L = -K + H on F_e, if it is integral."""
    k = n - 1
    target = DivisorClass(3, m + e + 2)
    if target.a % k or target.b % k:
        return None
    return DivisorClass(target.a // k, target.b // k)


def check_simple_cyclic_nonexistence(n_max: int, e_max: int, m_max: int,
                                     n_min: int = 4) -> list[SimpleCyclicHit]:
    """Every (n, e, m) admitting a simple cyclic canonical class L of degree n.

    phi_* O_X = O + L^-1 + ... + L^-(n-1); canonical means h^0(H - jL) = 0 for
    j = 1..n-1, and omega_X = phi^* H forces (n-1) L = -K + H.
    """
    hits = []
    for n in range(n_min, n_max + 1):
        for e in range(e_max + 1):
            for m in range(e + 1, m_max + 1):
                L = simple_cyclic_class(n, e, m)
                if L is None:
                    continue
                W = scroll(e, m)
                H = hyperplane_class(W)
                if all(cohomology(W, H - j * L).h0 == 0 for j in range(1, n)):
                    hits.append(SimpleCyclicHit(n, e, m, L))
    return hits


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


def check_prime_degree_nonexistence(p_max: int, e_max: int, m_max: int) -> list[SimpleCyclicHit]:
    """Galois of prime degree forces simple cyclic (stabilizers are trivial or all of G)."""
    return [h for h in check_simple_cyclic_nonexistence(p_max, e_max, m_max, n_min=5)
            if _is_prime(h.n)]


def find_simple_cyclic(candidates: Iterable[CoverCandidate]) -> list[CoverCandidate]:
    return [c for c in candidates
            if c.group is GaloisGroup.Z4 and is_simple_cyclic(to_z4_data(c))]


def z4_no_simple_cyclic_property(e_max: int, m_max: int) -> bool:
    for e in range(e_max + 1):
        for m in range(e + 1, m_max + 1):
            cands = [k.candidate for k in classify_scroll(e, m, GaloisGroup.Z4)]
            if find_simple_cyclic(cands):
                return False
    return True


@dataclass
class DiffReport:
    surface: str
    group: GaloisGroup
    e: Optional[int]
    m: Optional[int]
    missing: list[str] = field(default_factory=list)
    extra: list[str] = field(default_factory=list)
    mislabeled: list[str] = field(default_factory=list)
    mismatched: list[str] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not (self.missing or self.extra or self.mislabeled or self.mismatched)

    def lines(self) -> list[str]:
        where = f"{self.surface} e={self.e} m={self.m} {self.group}"
        out = [f"{where}: missing {x}" for x in self.missing]
        out += [f"{where}: extra {x}" for x in self.extra]
        out += [f"{where}: mislabeled {x}" for x in self.mislabeled]
        out += [f"{where}: mismatch {x}" for x in self.mismatched]
        return out


def _shape_key(classes) -> list[DivisorClass]:
    return sorted(classes, key=lambda D: (D.a, D.b or 0))


def diff_against_builtin(cases: list[ClassificationCase], e: Optional[int], m: Optional[int],
                         group, tables: Optional[Tables] = None,
                         surface: Optional[str] = None) -> DiffReport:
    group = GaloisGroup(group)
    tables = tables or load_tables()
    if surface is None:
        surface = cases[0].W.kind if cases else ("scroll" if e is not None else "P2")
    expected = expected_cases(tables, surface, group, e, m)
    report = DiffReport(surface, group, e, m)

    by_classes = {(x.D1, x.D2): x for x in expected}
    found = {(k.D1, k.D2) for k in cases}
    for x in expected:
        if (x.D1, x.D2) not in found:
            report.missing.append(f"{x.label} D1={x.D1} D2={x.D2}")

    shapes = expected_shapes(tables, surface, group, e, m)
    for k in cases:
        x = by_classes.get((k.D1, k.D2))
        tag = f"{k.label} D1={k.D1} D2={k.D2}"
        if x is None:
            report.extra.append(tag)
            continue
        if x.label != k.label:
            report.mislabeled.append(f"{tag} expected {x.label}")
        if (x.L1, x.L2) != (k.candidate.L1, k.candidate.L2):
            report.mismatched.append(f"{tag}: L1,L2={k.candidate.L1},{k.candidate.L2} expected {x.L1},{x.L2}")
        if x.q != k.invariants.q:
            report.mismatched.append(f"{tag}: q={k.invariants.q} expected {x.q}")
        if x.swap_duplicate_of != k.swap_duplicate_of:
            report.mismatched.append(
                f"{tag}: swap_duplicate_of={k.swap_duplicate_of} expected {x.swap_duplicate_of}")
        nontrivial = _shape_key(-L for L in pushforward_summands(k.candidate)[1:])
        regular = k.invariants.q == 0
        if not any(reg == regular and summ == nontrivial for _, reg, summ in shapes):
            report.mismatched.append(
                f"{tag}: pushforward {[str(-D) for D in nontrivial]} matches no listed shape")
    return report


def classify(W: MinimalDegreeSurface, group, tables: Optional[Tables] = None) -> list[ClassificationCase]:
    if W.is_scroll:
        return classify_scroll(W.e, W.m, group, tables)
    if W.kind == "P2":
        return classify_p2(group, tables)
    return classify_veronese()[0]


def classify_grid(e_values: Iterable[int], m_values: Iterable[int], groups: Iterable,
                  tables: Optional[Tables] = None) -> list[ClassificationCase]:
    """Scroll cases over a grid, ordered by (e, m, group, label)."""
    tables = tables or load_tables()
    m_values = list(m_values)
    out = []
    for e in sorted(set(e_values)):
        for m in sorted(set(m_values)):
            if m < e + 1:
                continue
            for group in sorted({GaloisGroup(g) for g in groups}, key=lambda g: g.value):
                out.extend(classify_scroll(e, m, group, tables))
    return out


def canonical_base(W: MinimalDegreeSurface) -> bool:
    """Degree sanity: h^0(H) = deg W + 2 (degree equals codimension + 1)."""
    return cohomology(W, hyperplane_class(W)).h0 == degree(W) + 2
