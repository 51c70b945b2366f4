import pytest
from hypothesis import given, strategies as st

from covercraft.algebra import (
    BidoubleAlgebraData,
    CoverCandidate,
    GaloisGroup,
    Z4AlgebraData,
    construction_plan,
    cover_canonical_class,
    is_simple_cyclic,
    make_candidate,
    normalize_z4,
    parse_group,
    pushforward_summands,
    to_bidouble_data,
    to_z4_data,
    validate_bidouble,
    validate_z4,
    z4_violations,
)
from covercraft.errors import (
    HalvingNotIntegral,
    InvalidAlgebraData,
    NonEffectiveBranch,
    SplittingConstraintViolated,
)
from covercraft.surfaces import canonical_class, cls, hyperplane_class, line, p2, scroll

Z4, Z2Z2 = GaloisGroup.Z4, GaloisGroup.Z2xZ2


def simple_cyclic_data(L):
    zero = L * 0
    return Z4AlgebraData(Li=L, Lm1=2 * L, Lmi=3 * L, D11=zero, D12=zero, D23=4 * L, D33=4 * L)


REGULAR_F1 = Z4AlgebraData(Li=cls(1, 3), Lm1=cls(2, 2), Lmi=cls(3, 5),
                         D11=cls(0, 4), D12=cls(0, 0), D23=cls(4, 4), D33=cls(4, 8))


def test_parse_group():
    assert parse_group("z4") is Z4
    assert parse_group("Z2xZ2") is Z2Z2
    assert parse_group("z2z2") is Z2Z2
    with pytest.raises(ValueError):
        parse_group("z3")


def test_validate_z4_examples():
    assert validate_z4(simple_cyclic_data(cls(1, 2)))
    assert validate_z4(simple_cyclic_data(line(1)))
    assert validate_z4(REGULAR_F1)
    broken = Z4AlgebraData(Li=cls(1, 3), Lm1=cls(2, 2), Lmi=cls(3, 5),
                           D11=cls(0, 4), D12=cls(0, 0), D23=cls(4, 4), D33=cls(4, 9))
    assert not validate_z4(broken)
    assert "D11+D23 = D12+D33" in z4_violations(broken)


def test_validate_z4_rejects_noneffective():
    L = cls(-1, 0)
    assert not validate_z4(simple_cyclic_data(L))


def test_validate_bidouble_examples():
    good = BidoubleAlgebraData(cls(2, 1), cls(1, 2), cls(3, 3), cls(2, 4), cls(4, 2), cls(0, 0))
    assert validate_bidouble(good)
    zero = cls(0, 0)
    assert validate_bidouble(BidoubleAlgebraData(zero, zero, zero, zero, zero, zero))
    bad = BidoubleAlgebraData(cls(2, 1), cls(1, 2), cls(3, 3), cls(2, 4), cls(4, 2), cls(0, 1))
    assert not validate_bidouble(bad)


def test_is_simple_cyclic_examples():
    zero = cls(0, 0)
    assert is_simple_cyclic(simple_cyclic_data(cls(1, 1)))
    assert not is_simple_cyclic(REGULAR_F1)
    # second simple cyclic presentation: D11 = D12 = 4L, D23 = D33 = 0
    L = cls(1, 1)
    other = Z4AlgebraData(Li=3 * L, Lm1=2 * L, Lmi=L, D11=4 * L, D12=4 * L, D23=zero, D33=zero)
    assert validate_z4(other)
    assert is_simple_cyclic(other)
    with pytest.raises(InvalidAlgebraData):
        is_simple_cyclic(Z4AlgebraData(L, L, L, L, L, L, zero))


def test_normalize_z4_both_presentations():
    assert normalize_z4(REGULAR_F1) == (cls(1, 3), cls(2, 2), cls(0, 4), cls(4, 4))
    # same cover with the generator inverted: i <-> -i, D11 <-> D33, D12 <-> D23
    inverted = Z4AlgebraData(Li=REGULAR_F1.Lmi, Lm1=REGULAR_F1.Lm1, Lmi=REGULAR_F1.Li,
                             D11=REGULAR_F1.D33, D12=REGULAR_F1.D23, D23=REGULAR_F1.D12, D33=REGULAR_F1.D11)
    assert validate_z4(inverted)
    assert normalize_z4(inverted) == normalize_z4(REGULAR_F1)


def test_make_candidate_examples():
    c = make_candidate(scroll(0, 1), Z2Z2, cls(2, 1), cls(1, 2))
    assert (c.D1, c.D2) == (cls(2, 4), cls(4, 2))
    c = make_candidate(p2(), Z4, line(2), line(2))
    assert (c.D1, c.D2) == (line(2), line(4))
    with pytest.raises(NonEffectiveBranch) as err:
        make_candidate(scroll(0, 2), Z4, cls(2, 1), cls(1, 3))
    assert err.value.divisor == cls(3, -1)
    with pytest.raises(SplittingConstraintViolated):
        make_candidate(p2(), Z4, line(1), line(2))


def test_pushforward_summands_examples():
    c = make_candidate(p2(), Z4, line(2), line(2))
    assert pushforward_summands(c) == [line(0), line(-2), line(-2), line(-4)]
    m = 3
    c = make_candidate(scroll(0, m), Z2Z2, cls(3, 1), cls(0, m + 1))
    assert pushforward_summands(c) == [cls(0, 0), cls(-3, -1), cls(0, -m - 1), cls(-3, -m - 2)]
    W = scroll(0, 1)
    zero = CoverCandidate(W, Z4, cls(0, 0), cls(0, 0), cls(0, 0), cls(0, 0))
    assert pushforward_summands(zero) == [cls(0, 0)] * 4


def test_cover_canonical_class_examples():
    c = make_candidate(scroll(2, 3), Z2Z2, cls(2, 3), cls(1, 4))
    assert cover_canonical_class(c) == cls(1, 3) == hyperplane_class(c.W)
    c = make_candidate(p2(), Z4, line(2), line(2))
    assert cover_canonical_class(c) == line(1)
    W = scroll(0, 1)
    zero = CoverCandidate(W, Z2Z2, cls(0, 0), cls(0, 0), cls(0, 0), cls(0, 0))
    assert cover_canonical_class(zero) == canonical_class(W)


def test_construction_plan_z4():
    m, e = 2, 1
    c = make_candidate(scroll(e, m), Z4, cls(1, m + 1), cls(2, e + 1))
    plan = construction_plan(c)
    p1, p2_ = plan.steps
    assert p1.branch == cls(4, 4) and p1.base == "W" and p1.trace_zero == cls(-2, -2)
    assert p2_.branch == cls(0, 4) and p2_.branch_includes_ramification
    assert p2_.trace_zero == cls(-1, -3) and p2_.pulled_back
    assert not plan.fiber_product
    assert 4 * c.L1 == 2 * c.D1 + c.D2


def test_construction_plan_p2_bidouble():
    c = make_candidate(p2(), Z2Z2, line(2), line(2))
    plan = construction_plan(c)
    assert plan.fiber_product
    assert [s.branch for s in plan.steps] == [line(4), line(4)]


def test_construction_plan_degenerate_and_bad():
    W = scroll(0, 1)
    c = CoverCandidate(W, Z2Z2, cls(1, 1), cls(0, 0), cls(0, 0), cls(2, 2))
    plan = construction_plan(c)
    assert any("unbranched" in a for a in plan.advisories)
    bad = CoverCandidate(W, Z4, cls(1, 2), cls(2, 1), cls(0, 4), cls(4, 2))
    with pytest.raises(HalvingNotIntegral):
        construction_plan(bad)


def test_embeddings():
    c = make_candidate(scroll(1, 2), Z4, cls(1, 3), cls(2, 2))
    data = to_z4_data(c)
    assert data == REGULAR_F1
    assert validate_z4(data)
    b = make_candidate(scroll(0, 1), Z2Z2, cls(2, 1), cls(1, 2))
    assert validate_bidouble(to_bidouble_data(b))
    with pytest.raises(InvalidAlgebraData):
        to_z4_data(b)


scroll_candidates = st.tuples(
    st.integers(0, 3), st.integers(1, 8), st.integers(0, 3), st.integers(0, 30),
    st.sampled_from(list(GaloisGroup)),
)


@given(scroll_candidates)
def test_candidate_invariants(args):
    e, dm, a1, b1, group = args
    W = scroll(e, e + dm)
    target = hyperplane_class(W) - canonical_class(W)
    L1 = cls(a1, b1)
    try:
        c = make_candidate(W, group, L1, target - L1)
    except NonEffectiveBranch:
        return
    assert cover_canonical_class(c) == hyperplane_class(W)
    summands = pushforward_summands(c)
    assert summands[0].is_zero()
    assert summands[-1] == canonical_class(W) - hyperplane_class(W)
    if group is Z4:
        data = to_z4_data(c)
        assert validate_z4(data)
        assert data.D11 + data.D23 == data.D12 + data.D33
        assert is_simple_cyclic(data) == c.D1.is_zero()
        assert normalize_z4(data) == (c.L1, c.L2, c.D1, c.D2)
        construction_plan(c)
    else:
        assert validate_bidouble(to_bidouble_data(c))
