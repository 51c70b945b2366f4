"""Property suites run by ``covercraft selfcheck``.

Each suite returns a list of human-readable failures; an empty list means the
suite passed.
"""

from __future__ import annotations

from typing import Callable

from .algebra import (
    GaloisGroup,
    cover_canonical_class,
    is_simple_cyclic,
    pushforward_summands,
    to_bidouble_data,
    to_z4_data,
    validate_bidouble,
    validate_z4,
)
from .classifier import (
    check_simple_cyclic_nonexistence,
    classify_p2,
    classify_scroll,
    classify_veronese,
    diff_against_builtin,
    z4_no_simple_cyclic_property,
)
from .invariants import chi_from_summands, restriction_profile
from .surfaces import (
    DivisorClass,
    canonical_class,
    cohomology,
    degree,
    euler_characteristic_rr,
    fixed_c0_multiplicity,
    hyperplane_class,
    intersection_number,
    is_base_point_free,
    is_effective,
    p2,
    scroll,
    section_count_oracle,
    veronese,
)

GRID_E = range(0, 4)
M_MAX = 20


def _grid_classes(W, bound):
    if W.is_scroll:
        return [DivisorClass(a, b) for a in range(-bound, bound + 1)
                for b in range(-bound, bound + 1)]
    return [DivisorClass(d) for d in range(-bound, bound + 1)]


def _test_surfaces(e_max: int):
    # m does not affect cohomology; any smooth m will do
    return [p2(), veronese()] + [scroll(e, e + 1) for e in range(e_max + 1)]


def surface_suite(bound: int = 12, e_max: int = 5) -> list[str]:
    fails = []
    for W in _test_surfaces(e_max):
        K = canonical_class(W)
        classes = _grid_classes(W, bound)
        for D in classes:
            dims = cohomology(W, D)
            dual = cohomology(W, K - D)
            if dims.as_tuple() != dual.as_tuple()[::-1]:
                fails.append(f"{W} {D}: Serre duality {dims} vs {dual}")
            chi = euler_characteristic_rr(W, D)
            if dims.euler != chi:
                fails.append(f"{W} {D}: Riemann-Roch {dims} vs chi {chi}")
            count = section_count_oracle(W, D)
            if count != dims.h0:
                fails.append(f"{W} {D}: h0 {dims.h0} vs oracle {count}")
            if is_effective(W, D) != (count > 0):
                fails.append(f"{W} {D}: effectivity vs oracle {count}")
            if W.is_scroll and is_effective(W, D) and is_base_point_free(W, D):
                if fixed_c0_multiplicity(W, D) != 0:
                    fails.append(f"{W} {D}: base-point-free with fixed C0")
        sample = classes[:: max(1, len(classes) // 40)]
        for D in sample:
            for E in sample:
                if intersection_number(W, D, E) != intersection_number(W, E, D):
                    fails.append(f"{W}: asymmetric pairing {D}.{E}")
                for F in sample[:5]:
                    lhs = intersection_number(W, D + F, E)
                    rhs = intersection_number(W, D, E) + intersection_number(W, F, E)
                    if lhs != rhs:
                        fails.append(f"{W}: pairing not additive at {D},{F},{E}")
        H = hyperplane_class(W)
        if cohomology(W, H).h0 != degree(W) + 2:
            fails.append(f"{W}: h0(H) != deg + 2")
    return fails


def all_cases(m_max: int = M_MAX):
    cases = []
    for group in GaloisGroup:
        cases.extend(classify_p2(group))
        for e in GRID_E:
            for m in range(e + 1, m_max + 1):
                cases.extend(classify_scroll(e, m, group))
    return cases


def algebra_suite(m_max: int = M_MAX) -> list[str]:
    fails = []
    for case in all_cases(m_max):
        c = case.candidate
        where = f"{case.label} on {c.W}"
        if cover_canonical_class(c) != hyperplane_class(c.W):
            fails.append(f"{where}: K_W + L1 + L2 != H")
        summands = pushforward_summands(c)
        if not summands[0].is_zero() or summands[-1] != canonical_class(c.W) - hyperplane_class(c.W):
            fails.append(f"{where}: pushforward ends {summands}")
        if c.group is GaloisGroup.Z4:
            data = to_z4_data(c)
            if not validate_z4(data):
                fails.append(f"{where}: embedded Z4 data invalid")
            elif is_simple_cyclic(data) != c.D1.is_zero():
                fails.append(f"{where}: simple cyclic flag disagrees with D1 = 0")
        elif not validate_bidouble(to_bidouble_data(c)):
            fails.append(f"{where}: embedded bidouble data invalid")
    return fails


def invariants_suite(m_max: int = M_MAX) -> list[str]:
    fails = []
    for case in all_cases(m_max):
        c, inv = case.candidate, case.invariants
        where = f"{case.label} on {c.W}"
        if chi_from_summands(c) != 1 - inv.q + inv.p_g:
            fails.append(f"{where}: chi two ways disagree")
        if c.group is GaloisGroup.Z4 and inv.generic_A1 != intersection_number(c.W, c.D1, c.D2):
            fails.append(f"{where}: A1 count != D1.D2")
        if inv.q == 0:
            r = degree(c.W)
            if restriction_profile(c) != [r + 1, r + 1, 2 * r + 2]:
                fails.append(f"{where}: restriction profile {restriction_profile(c)}")
    for label in ("A.2.2",):
        qs = [next(k for k in classify_scroll(0, m, GaloisGroup.Z2xZ2) if k.label == label).invariants.q
              for m in range(1, m_max + 1)]
        if any(b <= a for a, b in zip(qs, qs[1:])):
            fails.append(f"{label}: q not strictly increasing in m")
    for e in range(3):
        pg = [classify_scroll(e, m, GaloisGroup.Z4)[0].invariants.p_g for m in range(e + 1, m_max + 1)]
        if any(b <= a for a, b in zip(pg, pg[1:])):
            fails.append(f"e={e}: p_g not strictly increasing in m")
    return fails


def classifier_suite(m_max: int = M_MAX) -> list[str]:
    fails = []
    for group in GaloisGroup:
        report = diff_against_builtin(classify_p2(group), None, None, group, surface="P2")
        fails.extend(report.lines())
        for e in GRID_E:
            for m in range(e + 1, m_max + 1):
                report = diff_against_builtin(classify_scroll(e, m, group), e, m, group, surface="scroll")
                fails.extend(report.lines())
    cases, witness = classify_veronese()
    if cases or witness.solutions or witness.required != 5:
        fails.append(f"Veronese: unexpected {cases} {witness}")
    hits = check_simple_cyclic_nonexistence(20, 10, 50)
    fails.extend(f"simple cyclic cover found: {h}" for h in hits)
    if not z4_no_simple_cyclic_property(10, 30):
        fails.append("a Z4 case is simple cyclic")
    return fails


SUITES: dict[str, Callable[[], list[str]]] = {
    "surface": surface_suite,
    "algebra": algebra_suite,
    "invariants": invariants_suite,
    "classifier": classifier_suite,
}


def run_suites(names) -> dict[str, list[str]]:
    return {name: SUITES[name]() for name in names}
