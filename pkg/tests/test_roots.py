import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coxgrowth.intpoly import IntPoly, parse_poly
from coxgrowth.roots import (
    NoRealRootError,
    RootInterval,
    certify_strictly_less,
    count_roots_open,
    isolate_largest_real_root,
    isolate_real_roots,
    isolate_smallest_positive_root,
    refine_until_disjoint,
    sqrt_interval,
    sturm_count,
)

from oracles import real_root_count_bisection

LEHMER = parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1")


def test_sturm_count_examples():
    assert sturm_count(IntPoly([-2, 0, 1]), 0, 2) == 1
    assert sturm_count(LEHMER, 1, 2) == 1
    assert sturm_count(IntPoly([1, 1, 1]), -2, 2) == 0


def test_sturm_multiplicity_squarefree():
    # (t-1)^3 (t+2): multiple roots counted once
    p = IntPoly([-1, 1]) ** 3 * IntPoly([2, 1])
    assert sturm_count(p, -3, 3) == 2
    assert sturm_count(p, 0, 1) == 1  # half-open: root at 1 included


def test_isolate_largest():
    iv = isolate_largest_real_root(LEHMER, Fraction(1, 10**6))
    assert iv.width <= Fraction(1, 10**6)
    assert iv.low <= Fraction("1.176281") <= iv.high + Fraction(1, 10**6)
    assert sturm_count(LEHMER, iv.low, iv.high) == 1 or iv.width == 0


def test_isolate_double_root_exact():
    iv = isolate_largest_real_root(IntPoly([1, -2, 1]))  # (t-1)^2
    assert (iv.low, iv.high) == (1, 1)
    assert not iv.multiplicity_free


def test_multiplicity_flags():
    assert isolate_largest_real_root(LEHMER).multiplicity_free
    p = IntPoly([-1, 1]) ** 2 * IntPoly([-3, 1])
    ivs = isolate_real_roots(p, Fraction(1, 10**6))
    assert [iv.multiplicity_free for iv in ivs] == [False, True]
    # refinement preserves the flag
    assert not ivs[0].refined(Fraction(1, 10**12)).multiplicity_free


def test_isolate_tetrahedral_value():
    p = parse_poly("1,-1,0,0,-1,1,-1,0,0,-1,1")
    iv = isolate_largest_real_root(p, Fraction(1, 10**7))
    assert abs(iv.midpoint() - Fraction("1.350980")) < Fraction(1, 10**6)


def test_no_real_root():
    with pytest.raises(NoRealRootError):
        isolate_largest_real_root(IntPoly([1, 1, 1]))


def test_smallest_positive():
    # roots 1/3 and 3
    p = IntPoly([-1, 3]) * IntPoly([-3, 1])
    iv = isolate_smallest_positive_root(p, Fraction(1, 10**9))
    assert iv.low <= Fraction(1, 3) <= iv.high
    with pytest.raises(NoRealRootError):
        isolate_smallest_positive_root(IntPoly([1, 0, 1]))


def test_isolate_all_roots():
    p = IntPoly([-1, 1]) * IntPoly([2, 1]) * IntPoly([-7, 2])
    ivs = isolate_real_roots(p, Fraction(1, 10**9))
    assert len(ivs) == 3
    values = sorted(float(iv.midpoint()) for iv in ivs)
    assert values == pytest.approx([-2.0, 1.0, 3.5], abs=1e-6)


def test_refinement_and_separation():
    a = isolate_largest_real_root(IntPoly([-2, 0, 1]), Fraction(1, 100))
    b = isolate_largest_real_root(IntPoly([-3, 0, 1]), Fraction(1, 100))
    a, b = certify_strictly_less(a, b)
    assert a.high < b.low
    with pytest.raises(ValueError):
        certify_strictly_less(b, a)


def test_separation_failure_on_equal_roots():
    a = isolate_largest_real_root(IntPoly([-2, 0, 1]), Fraction(1, 100))
    b = isolate_largest_real_root(IntPoly([-2, 0, 1]) * IntPoly([1, 1]), Fraction(1, 100))
    with pytest.raises(ValueError):
        refine_until_disjoint(a, b, floor_width=Fraction(1, 10**20))


def test_count_roots_open():
    p = IntPoly([-1, 1]) * IntPoly([-2, 1])
    assert sturm_count(p, 0, 2) == 2
    assert count_roots_open(p, Fraction(0), Fraction(2)) == 1


def test_sqrt_interval():
    lo, hi = sqrt_interval(Fraction(2), Fraction(2), Fraction(1, 10**9))
    assert lo <= Fraction(1414213562, 10**9) + Fraction(2, 10**9)
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo < Fraction(1, 10**8)


def test_decimal_rendering():
    iv = RootInterval(IntPoly([-2, 0, 1]), Fraction(141421356, 10**8), Fraction(141421357, 10**8))
    assert iv.decimal(7).startswith("1.414213")


# the oracle agreement demanded by the acceptance suite: 200 random integer
# polynomials of degree <= 12 over 50 random rational intervals
def test_sturm_vs_bisection_oracle():
    rng = random.Random(20260811)
    intervals = []
    while len(intervals) < 50:
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        b = Fraction(rng.randint(-40, 40), rng.randint(1, 8))
        if a != b:
            intervals.append((min(a, b), max(a, b)))
    checked = 0
    for i in range(200):
        deg = rng.randint(1, 12)
        lead = rng.choice([-1, 1]) * rng.randint(1, 20)
        coeffs = [rng.randint(-20, 20) for _ in range(deg)] + [lead]
        p = IntPoly(coeffs)
        a, b = intervals[i % 50]
        assert sturm_count(p, a, b) == real_root_count_bisection(p, a, b), (p, a, b)
        checked += 1
    assert checked == 200


def test_refine_moves_off_an_exact_root_endpoint():
    # the bracket endpoint is itself a (different) root of the polynomial
    p = IntPoly([-1, 1]) * IntPoly([-2, 1])  # roots 1 and 2
    bracket = RootInterval(p, Fraction(1), Fraction(5, 2))  # holds only the root 2
    refined = bracket.refined(Fraction(1, 10**9))
    assert refined.low <= 2 <= refined.high
    assert refined.width <= Fraction(1, 10**9)


@given(st.lists(st.integers(-8, 8), min_size=2, max_size=8).map(lambda c: IntPoly(c + [1])))
@settings(max_examples=40, deadline=None)
def test_isolated_intervals_really_isolate(p):
    ivs = isolate_real_roots(p, Fraction(1, 10**6))
    # intervals are pairwise disjoint, each containing exactly one root
    for i, iv in enumerate(ivs):
        if iv.width > 0:
            assert sturm_count(p, iv.low, iv.high) == 1
        for other in ivs[i + 1:]:
            assert iv.high <= other.low
