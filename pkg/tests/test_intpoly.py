import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from coxgrowth.intpoly import (
    ExactDivisionError,
    IntPoly,
    bracket,
    cyclotomic,
    divides,
    exact_div,
    expand_trace_form,
    palindromic_reduce,
    parse_poly,
    poly_gcd,
    pseudo_rem,
    reciprocity_type,
    resultant_eliminate,
    squarefree_decomposition,
    squarefree_part,
    trace_resultant,
)
from coxgrowth.roots import isolate_largest_real_root, sqrt_interval

LEHMER = parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1")

small_polys = st.lists(st.integers(-9, 9), min_size=0, max_size=8).map(IntPoly)


def test_canonical_form():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).coeffs == ()
    assert IntPoly().degree == -1
    assert IntPoly([5]).degree == 0


def test_bracket_basics():
    assert bracket(1) == IntPoly([1])
    assert bracket(2) == IntPoly([1, 1])
    assert bracket(4) == IntPoly([1, 1, 1, 1])
    with pytest.raises(ValueError):
        bracket(0)


@pytest.mark.parametrize("k", range(1, 12))
def test_bracket_identity(k):
    # [k](t-1) = t^k - 1
    assert bracket(k) * IntPoly([-1, 1]) == IntPoly([-1] + [0] * (k - 1) + [1])


def test_ring_examples():
    assert bracket(2) * bracket(3) == IntPoly([1, 2, 2, 1])
    assert poly_gcd(IntPoly([-1, 0, 1]), IntPoly([-1, 0, 0, 1])) == IntPoly([-1, 1])
    assert exact_div(IntPoly([1, 1]) ** 2, IntPoly([1, 1])) == IntPoly([1, 1])


def test_exact_div_rejects_remainder():
    with pytest.raises(ExactDivisionError):
        exact_div(IntPoly([1, 0, 1]), IntPoly([1, 1]))


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(small_polys, small_polys)
@settings(max_examples=40, deadline=None)
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    if g.degree >= 0 and not g.is_zero():
        if not a.is_zero():
            assert divides(g, a)
        if not b.is_zero():
            assert divides(g, b)


@given(small_polys, small_polys)
@settings(max_examples=40, deadline=None)
def test_product_division_roundtrip(a, b):
    if a.is_zero() or b.is_zero():
        return
    assert exact_div(a * b, b) == a
    r = pseudo_rem(a * b, b)
    assert r.is_zero()


def test_parse_poly():
    assert parse_poly("1, -2, 3").coeffs == (1, -2, 3)
    assert parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1") == LEHMER
    with pytest.raises(ValueError):
        parse_poly("1,+2")
    with pytest.raises(ValueError):
        parse_poly("1,,2")
    with pytest.raises(ValueError):
        parse_poly("1,x")
    assert LEHMER.to_text() == "1,1,0,-1,-1,-1,-1,-1,0,1,1"


def test_reciprocity():
    assert reciprocity_type(LEHMER) == "reciprocal"
    assert reciprocity_type(IntPoly([-1, 1])) == "anti_reciprocal"
    assert reciprocity_type(IntPoly([0, 2, 1])) == "neither"
    with pytest.raises(ValueError):
        reciprocity_type(IntPoly())


def test_palindromic_reduce_small():
    assert palindromic_reduce(IntPoly([1, 0, 1])) == IntPoly([0, 1])
    assert palindromic_reduce(IntPoly([1, 0, 0, 0, 1])) == IntPoly([-2, 0, 1])
    with pytest.raises(ValueError):
        palindromic_reduce(IntPoly([1, 2]))
    with pytest.raises(ValueError):
        palindromic_reduce(IntPoly([1, 1, 1, 1]))  # reciprocal but odd degree


def test_palindromic_reduce_roundtrips_lehmer():
    q = palindromic_reduce(LEHMER)
    assert q.degree == 5
    assert expand_trace_form(q, 5) == LEHMER


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
@settings(max_examples=40, deadline=None)
def test_palindromic_roundtrip_random(half):
    # build a reciprocal polynomial as t^d q(t + 1/t), reduce it back
    q = IntPoly(half + [1])
    p = expand_trace_form(q)
    assert reciprocity_type(p) == "reciprocal"
    assert palindromic_reduce(p) == q


@pytest.mark.parametrize("n,expected", [
    (1, IntPoly([-1, 1])),
    (2, IntPoly([1, 1])),
    (3, IntPoly([1, 1, 1])),
    (6, IntPoly([1, -1, 1])),
    (12, IntPoly([1, 0, -1, 0, 1])),
])
def test_cyclotomic(n, expected):
    assert cyclotomic(n) == expected


def test_cyclotomic_product_identity():
    # prod over divisors of Phi_d = t^n - 1
    for n in (4, 6, 12, 15):
        prod = IntPoly([1])
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly([-1] + [0] * (n - 1) + [1])


def test_squarefree():
    p = IntPoly([1, 1]) ** 2 * IntPoly([-1, 1])
    assert squarefree_part(p) == IntPoly([-1, 0, 1])
    decomp = squarefree_decomposition(p)
    assert (IntPoly([-1, 1]), 1) in decomp
    assert (IntPoly([1, 1]), 2) in decomp


def test_resultant_eliminate_linear():
    # the single value r = 1 maps to a^2 = 4
    out = resultant_eliminate(IntPoly([-1, 1]))
    assert out == IntPoly([-4, 0, 1])


def test_resultant_eliminate_quadratic():
    # r + 1/r = 3 for both roots of r^2 - 3r + 1, so a^2 - 5 divides the output
    out = resultant_eliminate(IntPoly([1, -3, 1]))
    assert divides(IntPoly([-5, 0, 1]), out)


def test_resultant_eliminate_rejects_zero_root():
    with pytest.raises(ValueError):
        resultant_eliminate(IntPoly([0, 1]))


def test_trace_resultant_matches_product_form():
    # for p with known roots 2 and 3: R(x) = lc^2 (4 - 2x + 1)(9 - 3x + 1)
    p = IntPoly([-2, 1]) * IntPoly([-3, 1])
    r = trace_resultant(p)
    expected = IntPoly([5, -2]) * IntPoly([10, -3])
    assert r == expected


def test_resultant_commutes_with_forward_map():
    # the eliminant's largest root agrees with sqrt(2 + r + 1/r) at the
    # largest root r of the input, within 1e-9
    cases = [
        parse_poly("1,-1,0,0,-1,1,-1,0,0,-1,1"),
        LEHMER,
        IntPoly([1, -3, 1]),
    ]
    for p in cases:
        lam = isolate_largest_real_root(p, Fraction(1, 10**12))
        lo = 2 + lam.low + 1 / lam.high
        hi = 2 + lam.high + 1 / lam.low
        slo, shi = sqrt_interval(min(lo, hi), max(lo, hi), Fraction(1, 10**10))
        alpha = isolate_largest_real_root(resultant_eliminate(p), Fraction(1, 10**10))
        assert slo - Fraction(1, 10**9) <= alpha.high
        assert shi + Fraction(1, 10**9) >= alpha.low
