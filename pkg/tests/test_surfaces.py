import pytest
from hypothesis import given, strategies as st

from covercraft.errors import InvalidBase, NotEffective
from covercraft.surfaces import (
    DivisorClass,
    canonical_class,
    cls,
    cohomology,
    degree,
    euler_characteristic_rr,
    fixed_c0_multiplicity,
    hyperplane_class,
    intersection_number,
    is_base_point_free,
    is_effective,
    line,
    p2,
    parse_class,
    scroll,
    section_count_oracle,
    veronese,
)

F0 = scroll(0, 1)
F1 = scroll(1, 2)
F2 = scroll(2, 3)
F3 = scroll(3, 4)


def test_scroll_smoothness_bound():
    with pytest.raises(InvalidBase, match="m >= e\\+1"):
        scroll(3, 2)
    with pytest.raises(InvalidBase):
        scroll(-1, 2)


@pytest.mark.parametrize("W, expected", [(p2(), 1), (veronese(), 4), (scroll(1, 2), 3), (scroll(0, 5), 10)])
def test_degree(W, expected):
    assert degree(W) == expected
    # degree equals codimension + 1
    assert cohomology(W, hyperplane_class(W)).h0 == expected + 2


def test_intersection_examples():
    assert intersection_number(F2, cls(1, 0), cls(1, 0)) == -2
    assert intersection_number(F0, cls(1, 0), cls(0, 1)) == 1
    H = hyperplane_class(F1)
    assert intersection_number(F1, H, H) == 3
    H = hyperplane_class(veronese())
    assert intersection_number(veronese(), H, H) == 4


def test_canonical_and_hyperplane():
    assert canonical_class(p2()) == line(-3)
    assert canonical_class(F2) == cls(-2, -4)
    assert canonical_class(F0) == cls(-2, -2)
    assert hyperplane_class(scroll(0, 3)) == cls(1, 3)
    assert hyperplane_class(p2()) == line(1)
    assert hyperplane_class(veronese()) == line(2)


def test_effective():
    assert not is_effective(F0, cls(3, -1))
    assert is_effective(F2, cls(4, 6))
    assert is_effective(p2(), line(0))
    assert not is_effective(p2(), line(-1))


def test_cohomology_examples():
    assert cohomology(F0, cls(-2, 0)).as_tuple() == (0, 1, 0)
    assert cohomology(F0, cls(-3, 0)).as_tuple() == (0, 2, 0)
    assert cohomology(F1, hyperplane_class(F1)).h0 == 5
    assert cohomology(p2(), line(-4)).as_tuple() == (0, 0, 3)


def test_euler_characteristic_examples():
    assert euler_characteristic_rr(p2(), line(-4)) == 3
    assert euler_characteristic_rr(F0, cls(-2, 0)) == -1
    for W in (p2(), veronese(), F0, F1, F3):
        assert euler_characteristic_rr(W, W.zero()) == 1


# Frozen from explicit monomial listings:
#   F0 (1,1): s x, t x, s y, t y
#   F2 (2,1): s y^2, t y^2 (x has class C0 + 2f, too large)
#   P2 d=2: x^2, y^2, z^2, xy, xz, yz
@pytest.mark.parametrize("W, D, expected", [
    (F0, cls(1, 1), 4),
    (F2, cls(2, 1), 2),
    (p2(), line(2), 6),
    (F1, cls(1, 2), 5),
    (F2, cls(-1, 5), 0),
])
def test_section_count_oracle(W, D, expected):
    assert section_count_oracle(W, D) == expected
    assert cohomology(W, D).h0 == expected


def test_fixed_c0_multiplicity():
    assert fixed_c0_multiplicity(F3, cls(4, 8)) == 2
    assert fixed_c0_multiplicity(F2, cls(4, 6)) == 1
    assert fixed_c0_multiplicity(F0, cls(6, 2)) == 0
    with pytest.raises(NotEffective):
        fixed_c0_multiplicity(F1, cls(1, -1))


def test_fixed_c0_matches_vanishing_order():
    # multiplicity k of C0 in the base locus <=> h0(D - kC0) = h0(D) and h0(D-(k+1)C0) < h0(D)
    for e in range(4):
        W = scroll(e, e + 1)
        for a in range(6):
            for b in range(13):
                D = cls(a, b)
                k = fixed_c0_multiplicity(W, D)
                n = section_count_oracle(W, D)
                assert section_count_oracle(W, D - cls(k, 0)) == n
                if k < a:
                    assert section_count_oracle(W, D - cls(k + 1, 0)) < n


def test_base_point_free():
    assert is_base_point_free(scroll(1, 2), cls(4, 4))
    assert not is_base_point_free(F2, cls(4, 6))
    assert is_base_point_free(F0, cls(0, 0))
    with pytest.raises(NotEffective):
        is_base_point_free(F0, cls(-1, 0))


def test_parse_class():
    assert parse_class("(3,-1)") == cls(3, -1)
    assert parse_class(" -4 ") == line(-4)
    with pytest.raises(ValueError):
        parse_class("(1,2,3)")


def test_mixed_classes_rejected():
    with pytest.raises(TypeError):
        line(1) + cls(1, 0)
    with pytest.raises(TypeError):
        intersection_number(p2(), cls(1, 0), cls(1, 0))


surfaces = st.one_of(
    st.just(p2()),
    st.just(veronese()),
    st.integers(0, 5).flatmap(lambda e: st.integers(e + 1, e + 6).map(lambda m: scroll(e, m))),
)


@st.composite
def surface_and_classes(draw, n=1):
    W = draw(surfaces)
    coef = st.integers(-12, 12)
    if W.is_scroll:
        classes = [DivisorClass(draw(coef), draw(coef)) for _ in range(n)]
    else:
        classes = [DivisorClass(draw(coef)) for _ in range(n)]
    return (W, *classes)


@given(surface_and_classes())
def test_serre_duality(args):
    W, D = args
    dims = cohomology(W, D)
    dual = cohomology(W, canonical_class(W) - D)
    assert dims.as_tuple() == dual.as_tuple()[::-1]


@given(surface_and_classes())
def test_riemann_roch(args):
    W, D = args
    assert cohomology(W, D).euler == euler_characteristic_rr(W, D)


@given(surface_and_classes())
def test_oracle_and_effectivity(args):
    W, D = args
    count = section_count_oracle(W, D)
    assert count == cohomology(W, D).h0
    assert is_effective(W, D) == (count > 0)


@given(surface_and_classes(n=3))
def test_pairing_bilinear_symmetric(args):
    W, D, E, F = args
    assert intersection_number(W, D, E) == intersection_number(W, E, D)
    assert intersection_number(W, D + F, E) == intersection_number(W, D, E) + intersection_number(W, F, E)
    assert intersection_number(W, 3 * D, E) == 3 * intersection_number(W, D, E)


@given(surface_and_classes())
def test_bpf_implies_no_fixed_c0(args):
    W, D = args
    if W.is_scroll and is_effective(W, D) and is_base_point_free(W, D):
        assert fixed_c0_multiplicity(W, D) == 0
