"""Growth series of Coxeter systems and their growth rates.

The subgroup-alternating-sum formula is evaluated with denominators kept in
factored cyclotomic form: every finite-type growth polynomial is a product
of brackets [k] = 1 + t + ... + t^(k-1), and [k] splits into the cyclotomic
polynomials Phi_d for the divisors d > 1 of k.  Summation over subsets then
needs one least-common-denominator, not a quadratic blow-up of products.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import (
    INF,
    CoxeterDiagram,
    SphericalType,
    dominates,
    finite_type_recognize,
    polygon_is_hyperbolic,
)
from .intpoly import IntPoly, bracket, cyclotomic, exact_div, poly_gcd
from . import roots
from .roots import (
    DEFAULT_WIDTH,
    RootInterval,
    certify_strictly_less,
    count_roots_open,
    isolate_largest_real_root,
    isolate_smallest_positive_root,
    sturm_count,
)

STEINBERG_RANK_BOUND = 20


class NotExponentialError(ValueError):
    """The growth series has no pole in (0, 1): growth rate 1 or below."""


class NotFiniteError(ValueError):
    pass


@dataclass(frozen=True, init=False)
class GrowthFunction:
    """A reduced rational function num/den over Z[t].

    Normalized so that gcd(num, den) = 1, the two have coprime contents, and
    the denominator has positive leading coefficient.
    """

    numerator: IntPoly
    denominator: IntPoly

    def __init__(self, numerator: IntPoly, denominator: IntPoly):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not numerator.is_zero():
            g = poly_gcd(numerator, denominator)
            if g.degree > 0:
                numerator = exact_div(numerator, g)
                denominator = exact_div(denominator, g)
            c = math.gcd(numerator.content(), denominator.content())
            if c > 1:
                numerator = IntPoly(x // c for x in numerator.coeffs)
                denominator = IntPoly(x // c for x in denominator.coeffs)
        if denominator.leading < 0:
            numerator, denominator = -numerator, -denominator
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    def __call__(self, x: Fraction) -> Fraction:
        d = self.denominator(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(self.numerator(x)) / d

    def __eq__(self, other) -> bool:
        if not isinstance(other, GrowthFunction):
            return NotImplemented
        return (self.numerator == other.numerator
                and self.denominator == other.denominator)

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __add__(self, other) -> "GrowthFunction":
        other = _as_growth(other)
        return GrowthFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __sub__(self, other) -> "GrowthFunction":
        other = _as_growth(other)
        return GrowthFunction(
            self.numerator * other.denominator - other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "GrowthFunction":
        return GrowthFunction(-self.numerator, self.denominator)

    def __mul__(self, other) -> "GrowthFunction":
        other = _as_growth(other)
        return GrowthFunction(self.numerator * other.numerator,
                              self.denominator * other.denominator)

    def substitute_reciprocal(self) -> "GrowthFunction":
        """The rational function f(1/t)."""
        dn, dd = self.numerator.degree, self.denominator.degree
        num, den = self.numerator.reversed(), self.denominator.reversed()
        if dn > dd:
            den = den.shift(dn - dd)
        elif dd > dn:
            num = num.shift(dd - dn)
        return GrowthFunction(num, den)

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


def _as_growth(x) -> GrowthFunction:
    if isinstance(x, GrowthFunction):
        return x
    if isinstance(x, IntPoly):
        return GrowthFunction(x, IntPoly([1]))
    if isinstance(x, int):
        return GrowthFunction(IntPoly([x]), IntPoly([1]))
    raise TypeError(f"cannot treat {x!r} as a rational function")


# -- finite-type growth polynomials ---------------------------------------------------


def _bracket_factorization(k: int) -> dict[int, int]:
    """[k] as a multiset of cyclotomic indices: divisors d > 1 of k."""
    return {d: 1 for d in range(2, k + 1) if k % d == 0}


def _merge_factors(dst: dict[int, int], src: dict[int, int]):
    for d, e in src.items():
        dst[d] = dst.get(d, 0) + e


def _factored_poly(fac: dict[int, int]) -> IntPoly:
    out = IntPoly([1])
    for d, e in sorted(fac.items()):
        out = out * cyclotomic(d) ** e
    return out


def solomon_poly(types: list[SphericalType]) -> IntPoly:
    """Growth polynomial of a finite Coxeter group: product of brackets [n_i + 1]."""
    out = IntPoly([1])
    for t in types:
        for e in t.exponents:
            out = out * bracket(e + 1)
    return out


def _solomon_factorization(types: list[SphericalType]) -> dict[int, int]:
    fac: dict[int, int] = {}
    for t in types:
        for e in t.exponents:
            _merge_factors(fac, _bracket_factorization(e + 1))
    return fac


def steinberg_growth(d: CoxeterDiagram) -> GrowthFunction:
    """The full growth series from the alternating sum over finite standard subgroups.

    Evaluates 1/f(t^-1) = sum over finite-type subsets T of (-1)^|T| / f_T(t)
    exactly, then substitutes t -> 1/t and normalizes.
    """
    if d.n > STEINBERG_RANK_BOUND:
        raise ValueError(f"rank {d.n} exceeds the subset-sweep bound {STEINBERG_RANK_BOUND}")
    terms: list[tuple[int, dict[int, int]]] = [(1, {})]  # the empty subset
    verts = list(range(d.n))
    for r in range(1, d.n + 1):
        for subset in itertools.combinations(verts, r):
            if any(d.weights[a][b] is INF for a, b in itertools.combinations(subset, 2)):
                continue
            types = finite_type_recognize(d.subdiagram(subset))
            if types is None:
                continue
            terms.append(((-1) ** r, _solomon_factorization(types)))
    common: dict[int, int] = {}
    for _, fac in terms:
        for idx, e in fac.items():
            common[idx] = max(common.get(idx, 0), e)
    num = IntPoly()
    for sign, fac in terms:
        cofactor = {idx: common[idx] - fac.get(idx, 0) for idx in common}
        num = num + _factored_poly(cofactor) * sign
    den = _factored_poly(common)
    # 1/f(1/t) = num/den, so f(t) = den(1/t) / num(1/t).
    dn, dd = num.degree, den.degree
    f_num, f_den = den.reversed(), num.reversed()
    if dn > dd:
        f_num = f_num.shift(dn - dd)
    elif dd > dn:
        f_den = f_den.shift(dd - dn)
    f = GrowthFunction(f_num, f_den)
    if f.denominator(0) == 0 or f(Fraction(0)) != 1:
        raise ArithmeticError("growth series must start at 1")
    return f


# -- polygons --------------------------------------------------------------------------


def polygon_delta(*ps: int) -> IntPoly:
    """The polygon growth denominator [2]prod[p_i] - k prod[p_i] + sum_i prod_{j!=i}[p_j]."""
    if len(ps) < 1:
        raise ValueError("need at least one parameter")
    if any(p < 2 for p in ps):
        raise ValueError("parameters must be at least 2")
    k = len(ps)
    brs = [bracket(p) for p in ps]
    prod = IntPoly([1])
    for b in brs:
        prod = prod * b
    out = bracket(2) * prod - prod * k
    for i in range(k):
        partial = IntPoly([1])
        for j, b in enumerate(brs):
            if j != i:
                partial = partial * b
        out = out + partial
    return out


def polygon_growth(*ps: int) -> GrowthFunction:
    """Growth series of the compact polygon reflection group with angles pi/p_i."""
    if len(ps) < 3:
        raise ValueError("a polygon needs at least 3 sides")
    if not polygon_is_hyperbolic(ps):
        raise ValueError(f"{ps} does not satisfy the angle-sum condition")
    num = bracket(2)
    for p in ps:
        num = num * bracket(p)
    f = GrowthFunction(num, polygon_delta(*ps))
    assert f(Fraction(0)) == 1
    return f


# -- growth rate -----------------------------------------------------------------------


def growth_rate(f: GrowthFunction, width: Fraction = DEFAULT_WIDTH) -> RootInterval:
    """Certified interval around the growth rate 1/R, R the radius of convergence.

    Growth series have nonnegative coefficients, so R itself is a singularity
    (Pringsheim) and equals the smallest positive root of the reduced
    denominator.  For a denominator that is reciprocal up to sign the roots
    pair as r, 1/r and the rate is its largest real root; otherwise the
    smallest positive root is isolated and inverted outward.
    """
    den = f.denominator
    if den.degree < 1 or count_roots_open(den, Fraction(0), Fraction(1)) == 0:
        raise NotExponentialError("denominator has no root in (0, 1)")
    small = isolate_smallest_positive_root(den, width / 4, upper=Fraction(1))
    while small.low <= 0:
        small = small.refined(small.width / 4)
    rev = den.reversed()
    if rev == den or rev == -den:
        rate = isolate_largest_real_root(den, width)
        lo, hi = roots.invert_interval(small.low, small.high)
        if hi < rate.low or lo > rate.high:  # the pairing tau = 1/R must be consistent
            raise ArithmeticError("reciprocal pairing check failed")
        return rate
    # non-reciprocal: invert the interval around R, refining R as needed
    while True:
        lo, hi = roots.invert_interval(small.low, small.high)
        if hi - lo <= width or small.width == 0:
            return RootInterval(rev.primitive(), lo, hi, small.multiplicity_free)
        small = small.refined(small.width / 4)


def series_coefficients(f: GrowthFunction, count: int) -> list[int]:
    """The first `count` Taylor coefficients at 0, by the denominator recurrence."""
    den = f.denominator
    d0 = den.constant
    if d0 == 0:
        raise ValueError("rational function has a pole at 0")
    out: list[Fraction] = []
    for n in range(count):
        acc = Fraction(f.numerator[n])
        for i in range(1, min(n, den.degree) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc / d0)
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("series coefficients are not integers")
    return [int(c) for c in out]


def reciprocity_check(f: GrowthFunction, n: int) -> bool:
    """Whether f(1/t) equals f(t) for even n and -f(t) for odd n, exactly."""
    g = f.substitute_reciprocal()
    return g == f if n % 2 == 0 else g == -f


@dataclass(frozen=True)
class MonotonicityResult:
    passed: bool
    relation: str
    low_rate: RootInterval | None = None
    high_rate: RootInterval | None = None


def monotonicity_check(d: CoxeterDiagram, e: CoxeterDiagram) -> MonotonicityResult:
    """Certify that strict domination of d by e forces a strictly larger rate."""
    rel = dominates(d, e)
    if rel != "less":
        raise ValueError(f"diagrams are not strictly ordered: {rel}")
    td = growth_rate(steinberg_growth(d))
    te = growth_rate(steinberg_growth(e))
    try:
        td, te = certify_strictly_less(td, te)
    except ValueError:
        return MonotonicityResult(False, rel, td, te)
    return MonotonicityResult(True, rel, td, te)


# -- help functions and the second-minimal-polygon verification -------------------------


def help_function(k: int) -> GrowthFunction:
    """h_k = [k-1]/[k]; the vertex contribution of an angle pi/k."""
    if k < 2:
        raise ValueError("need k >= 2")
    return GrowthFunction(bracket(k - 1), bracket(k))


def help_sum(ks) -> GrowthFunction:
    total = GrowthFunction(IntPoly(), IntPoly([1]))
    for k in ks:
        total = total + help_function(k)
    return total


@dataclass(frozen=True)
class HelpFunctionReport:
    """The per-vertex help functions of a polygon and their sum, with the
    reference sum of the (2, 3, 8) triangle for comparison."""

    ks: tuple[int, ...]
    functions: tuple[GrowthFunction, ...]
    total: GrowthFunction
    reference: GrowthFunction


def help_report(ks) -> HelpFunctionReport:
    ks = tuple(ks)
    fns = tuple(help_function(k) for k in ks)
    return HelpFunctionReport(ks, fns, help_sum(ks), help_sum((2, 3, 8)))


def _strip_zero_root(p: IntPoly) -> IntPoly:
    i = 0
    while i <= p.degree and p[i] == 0:
        i += 1
    return IntPoly(p.coeffs[i:])


def positive_on_interval(p: IntPoly, upper: Fraction = Fraction(1)) -> bool:
    """Certify p(t) > 0 for all t in (0, upper], by root counting and one sign."""
    if p.is_zero():
        return False
    core = _strip_zero_root(p)
    return sturm_count(core, 0, upper) == 0 and core.sign_at(upper) > 0


def rational_function_positive(g: GrowthFunction, upper: Fraction = Fraction(1)) -> bool:
    """Certify g(t) > 0 on (0, upper] via numerator and denominator signs."""
    num, den = g.numerator, g.denominator
    pos_n, pos_d = positive_on_interval(num, upper), positive_on_interval(den, upper)
    neg_n = positive_on_interval(-num, upper)
    neg_d = positive_on_interval(-den, upper)
    return (pos_n and pos_d) or (neg_n and neg_d)


@dataclass(frozen=True)
class CaseReport:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SecondMinimalReport:
    """Certification that the (2, 3, 8) triangle has the second-smallest rate."""

    passed: bool
    reference_rate: RootInterval
    cases: tuple[CaseReport, ...]

    def case(self, name: str) -> CaseReport:
        for c in self.cases:
            if c.name == name:
                return c
        raise KeyError(name)


# prod over the angle denominators of the right-angled (2, 4, 5) comparison
_GAP_NUMERATOR = IntPoly([1, 1, 0, -1, -1, -1, 0, 1, 1])  # t^8+t^7-t^5-t^4-t^3+t+1


def gap_certificate_polynomial() -> IntPoly:
    """The certified-positive numerator governing the right-angled comparison."""
    return _GAP_NUMERATOR


def _hyperbolic_tuples(k: int, p_max: int):
    """Sorted hyperbolic parameter tuples of length k with entries <= p_max."""
    for ps in itertools.combinations_with_replacement(range(2, p_max + 1), k):
        if polygon_is_hyperbolic(ps):
            yield ps


def _rate_exceeds(ps, threshold: RootInterval, width=Fraction(1, 10**4)) -> bool:
    """Certify that the polygon's rate is strictly above the threshold root."""
    delta = polygon_delta(*ps)
    iv = isolate_largest_real_root(delta, width)
    for _ in range(40):
        if threshold.high < iv.low:
            return True
        if iv.high < threshold.low:
            return False
        iv = iv.refined(iv.width / 16)
        threshold = threshold.refined(threshold.width / 16)
    raise ArithmeticError(f"could not separate rate of {ps} from the reference")


def verify_second_minimal_polygon(k_max: int = 5, p_max: int = 9) -> SecondMinimalReport:
    """Certify that every hyperbolic polygon other than (2,3,7) and (2,3,8)
    has growth rate strictly above the rate of the (2,3,8) triangle.

    The three case branches (triangles, quadrilaterals, five or more
    vertices) follow the classical help-function comparison; parameters
    within the given bounds are additionally certified tuple by tuple, and
    the unbounded directions are closed by same-rank domination through the
    three pointwise-minimal triangles and the quadrilateral (2,2,2,3).
    """
    if k_max < 5 or p_max < 9:
        raise ValueError("bounds must cover at least k_max=5, p_max=9")
    tau2 = growth_rate(steinberg_growth(CoxeterDiagram(3, {(0, 1): 3, (1, 2): 8})))
    target = help_sum((2, 3, 8))
    cases = []

    # Positivity of the gap polynomial on (0, 1], and the identity expressing
    # the right-angled comparison through it.
    F = _GAP_NUMERATOR
    f_pos = positive_on_interval(F)
    diff = help_sum((2, 4, 5)) - target
    denom = bracket(2) * bracket(3) * bracket(5) * IntPoly([1, 0, 1]) * IntPoly([1, 0, 0, 0, 1])
    identity_ok = diff == GrowthFunction(F.shift(2), denom)
    cases.append(CaseReport("gap_polynomial", f_pos and identity_ok, {
        "polynomial": F.to_text(),
        "roots_in_unit_interval": sturm_count(F, 0, 1),
        "identity": identity_ok,
    }))

    # (12a)-style: among (2,3,r) the help sum is minimal at r = 8 and strictly
    # increasing in r; certified through h_9 > h_8 plus the index-monotonicity
    # identity [r-1]^2 - [r][r-2] = t^(r-2).
    strict_step = rational_function_positive(help_function(9) - help_function(8))
    ident_sweep = all(
        bracket(r - 1) * bracket(r - 1) - bracket(r) * bracket(r - 2) == IntPoly([1]).shift(r - 2)
        for r in range(3, max(2 * p_max, 20) + 1)
    )
    cases.append(CaseReport("help_monotonicity", strict_step and ident_sweep, {
        "h9_minus_h8_positive": strict_step,
        "index_identity_range": max(2 * p_max, 20),
    }))

    # Triangles: the pointwise-minimal cases (2,3,9), (2,4,5), (3,3,4) all
    # exceed the reference; same-rank domination covers the rest.
    minimal_triangles = [(2, 3, 9), (2, 4, 5), (3, 3, 4)]
    tri_min = all(_rate_exceeds(ps, tau2) for ps in minimal_triangles)
    tri_sweep = all(
        _rate_exceeds(ps, tau2)
        for ps in _hyperbolic_tuples(3, p_max)
        if ps not in ((2, 3, 7), (2, 3, 8))
    )
    # the right-angled bound 2h_3 >= h_2 + h_5 reduces all-acute triangles to (12b)
    acute = help_function(3) + help_function(3) - help_function(2) - help_function(5)
    acute_ok = rational_function_positive(acute)
    cases.append(CaseReport("triangles", tri_min and tri_sweep and acute_ok, {
        "minimal_cases": minimal_triangles,
        "swept_up_to": p_max,
        "acute_reduction": acute_ok,
    }))

    # Quadrilaterals: at most three right angles, so H >= 3 h_2 + h_3; the
    # excess over the reference reduces to 2 h_2 > h_8.
    quad_bound = help_function(2) + help_function(2) - help_function(8)
    quad_cert = rational_function_positive(quad_bound)
    quad_min = _rate_exceeds((2, 2, 2, 3), tau2)
    quad_sweep = all(_rate_exceeds(ps, tau2) for ps in _hyperbolic_tuples(4, p_max))
    cases.append(CaseReport("quadrilaterals", quad_cert and quad_min and quad_sweep, {
        "bound_certificate": quad_cert,
        "swept_up_to": p_max,
    }))

    # Five or more vertices: H >= 5 h_2 uniformly in the number of vertices.
    upper = 1 / tau2.low  # rational point at or above the reference radius
    penta = help_function(2) * 5 - target
    penta_cert = rational_function_positive(penta, upper=min(Fraction(1), upper))
    penta_sweep = all(
        _rate_exceeds(ps, tau2)
        for k in range(5, k_max + 1)
        for ps in _hyperbolic_tuples(k, p_max)
    )
    cases.append(CaseReport("five_or_more", penta_cert and penta_sweep, {
        "bound_certificate": penta_cert,
        "swept_k_up_to": k_max,
    }))

    passed = all(c.passed for c in cases)
    return SecondMinimalReport(passed, tau2, tuple(cases))
