"""Loading and querying a list of Salem numbers, the growth-rate gap
analysis between the two smallest polygonal rates, and the search for
polygons realizing a given Salem polynomial.

The bundled mini list carries only three entries; ordinal claims that need
the complete external list (degree <= 44) are reported as unavailable
rather than fabricated.
"""

from __future__ import annotations

import functools
import importlib.resources
import os
from dataclasses import dataclass
from fractions import Fraction

from .intpoly import IntPoly, parse_poly, reciprocity_type
from .numclass import strip_cyclotomic, unit_circle_root_count
from .roots import (
    RootInterval,
    SeparationError,
    cauchy_bound,
    isolate_largest_real_root,
    refine_until_disjoint,
    sturm_count,
)
from .growth import growth_rate, polygon_growth, polygon_delta, steinberg_growth
from .diagram import CoxeterDiagram, polygon_is_hyperbolic

ENV_LIST_PATH = "COXGROWTH_SALEM_LIST"


class SalemListError(ValueError):
    pass


@dataclass(frozen=True)
class SalemEntry:
    poly: IntPoly
    hint: str
    interval: RootInterval  # certified on load; the hint is advisory only

    def decimal(self, places: int = 7) -> str:
        return self.interval.decimal(places)


def _validate_entry(poly: IntPoly) -> RootInterval:
    """Salem-compatibility: reciprocal, one real root above 1, the rest of the
    distinct roots on the circle except the reciprocal partner.

    A conjugate on the circle is required, so the degree is at least 4 (and
    even, by reciprocity with no root at -1)."""
    if poly.degree < 4 or poly.degree % 2 != 0 or not poly.is_monic():
        raise SalemListError("entry must be monic of even degree >= 4")
    if reciprocity_type(poly) != "reciprocal":
        raise SalemListError("entry is not reciprocal")
    above = sturm_count(poly, 1, cauchy_bound(poly))
    if above != 1:
        raise SalemListError(f"entry has {above} real roots above 1, expected exactly 1")
    on_circle = unit_circle_root_count(poly)
    if on_circle != poly.degree - 2:
        raise SalemListError(
            f"entry has {on_circle} unit-circle roots, expected degree-2 = {poly.degree - 2}")
    return isolate_largest_real_root(poly, Fraction(1, 10**9))


def parse_salem_line(line: str) -> SalemEntry:
    parts = line.split(";")
    if len(parts) != 3:
        raise SalemListError("expected 'degree;coefficients;approx'")
    try:
        degree = int(parts[0].strip())
    except ValueError:
        raise SalemListError(f"bad degree field {parts[0]!r}")
    poly = parse_poly(parts[1])
    if poly.degree != degree:
        raise SalemListError(f"declared degree {degree} but coefficients give {poly.degree}")
    return SalemEntry(poly, parts[2].strip(), _validate_entry(poly))


def _certified_cmp(a: SalemEntry, b: SalemEntry) -> int:
    if a.poly == b.poly:
        return 0
    try:
        ia, ib = refine_until_disjoint(a.interval, b.interval)
    except SeparationError:
        raise SalemListError(
            f"entries {a.poly.to_text()} and {b.poly.to_text()} have indistinguishable roots")
    return -1 if ia.high < ib.low else 1


def _load_text(text: str) -> list[SalemEntry]:
    entries = []
    for no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            entries.append(parse_salem_line(line))
        except (SalemListError, ValueError) as e:
            raise SalemListError(f"line {no}: {e}") from None
    entries.sort(key=functools.cmp_to_key(_certified_cmp))
    return entries


def bundled_mini_list() -> list[SalemEntry]:
    """The three bundled entries, certified and sorted."""
    text = (importlib.resources.files("coxgrowth") / "data" / "mini_salem_list.csv").read_text()
    return _load_text(text)


def load_salem_list(path=None) -> list[SalemEntry]:
    """Load and certify a Salem list file, re-sorted by certified root intervals.

    With no path, the environment variable COXGROWTH_SALEM_LIST is consulted,
    then the bundled three-entry mini list.
    """
    if path is None:
        path = os.environ.get(ENV_LIST_PATH)
    if path is None:
        return bundled_mini_list()
    with open(path, encoding="utf-8") as fh:
        return _load_text(fh.read())


@dataclass(frozen=True)
class GapReport:
    """Partition of a Salem list against the two smallest polygonal rates."""

    below_first: tuple[SalemEntry, ...]
    equal_first: tuple[SalemEntry, ...]
    band: tuple[SalemEntry, ...]  # strictly between the two rates
    at_or_above_second: tuple[SalemEntry, ...]
    first_rate: RootInterval
    second_rate: RootInterval
    full_list: bool

    @property
    def total(self) -> int:
        return (len(self.below_first) + len(self.equal_first)
                + len(self.band) + len(self.at_or_above_second))

    def ordinal_notes(self) -> list[str]:
        notes = []
        if not self.full_list:
            notes.append("ordinal claims (seventh smallest, first 47) require the "
                         "complete external list; not reproducible from bundled data")
        return notes


def count_entries_below(entries: list[SalemEntry], threshold: RootInterval) -> int:
    """Number of entries with root certified strictly below the threshold root."""
    count = 0
    for e in entries:
        try:
            ia, ib = refine_until_disjoint(e.interval, threshold)
        except SeparationError:
            continue  # equal to the threshold: not strictly below
        if ia.high < ib.low:
            count += 1
    return count


def _first_two_polygon_rates() -> tuple[RootInterval, IntPoly, RootInterval, IntPoly]:
    f1 = polygon_growth(2, 3, 7)
    f2 = steinberg_growth(CoxeterDiagram(3, {(0, 1): 3, (1, 2): 8}))
    r1 = growth_rate(f1, Fraction(1, 10**12))
    r2 = growth_rate(f2, Fraction(1, 10**12))
    core1, _ = strip_cyclotomic(f1.denominator)
    core2, _ = strip_cyclotomic(f2.denominator)
    return r1, core1, r2, core2


def gap_report(entries: list[SalemEntry], assume_full: bool = False) -> GapReport:
    """Sort the entries against the smallest and second-smallest polygon rates.

    Equality with either boundary is decided by exact polynomial identity
    with the corresponding minimal polynomial; everything else by certified
    disjoint intervals.
    """
    if not entries and not assume_full:
        return GapReport((), (), (), (), *_first_two_polygon_rates()[::2], False)
    r1, core1, r2, core2 = _first_two_polygon_rates()
    below, equal1, band, above = [], [], [], []
    for e in entries:
        if e.poly == core1:
            equal1.append(e)
            continue
        if e.poly == core2:
            above.append(e)
            continue
        ia, ib = refine_until_disjoint(e.interval, r1)
        if ia.high < ib.low:
            below.append(e)
            continue
        ia, ic = refine_until_disjoint(e.interval, r2)
        if ia.high < ic.low:
            band.append(e)
        else:
            above.append(e)
    return GapReport(tuple(below), tuple(equal1), tuple(band), tuple(above),
                     r1, r2, assume_full)


@dataclass(frozen=True)
class RealizationMatch:
    params: tuple[int, ...]
    delta_core: IntPoly


@dataclass(frozen=True)
class RealizationSearchResult:
    target: IntPoly
    matches: tuple[RealizationMatch, ...]
    tuples_examined: int
    tuples_pruned: int


def polygon_realization_search(target: SalemEntry | IntPoly, k_max: int = 6,
                               p_max: int = 12) -> RealizationSearchResult:
    """Search hyperbolic polygons whose growth denominator core equals the target.

    Parameter tuples are enumerated in nondecreasing order; the growth rate
    is monotone in every parameter, so once a tuple's rate certifiedly
    exceeds the target root the last coordinate stops being extended.
    Polygons are identified up to permutation of the parameters (the growth
    series depends only on the multiset).
    """
    poly = target.poly if isinstance(target, SalemEntry) else target
    root = isolate_largest_real_root(poly, Fraction(1, 10**9))
    matches = []
    examined = pruned = 0

    def rate_vs_target(ps) -> int:
        """-1 below, 0 overlapping, 1 above the target root."""
        iv = isolate_largest_real_root(polygon_delta(*ps), Fraction(1, 10**4))
        tgt = root
        for _ in range(30):
            if iv.high < tgt.low:
                return -1
            if tgt.high < iv.low:
                return 1
            if iv.width == 0 and tgt.width == 0:
                return 0
            iv = iv.refined(iv.width / 16) if iv.width > 0 else iv
            tgt = tgt.refined(tgt.width / 16) if tgt.width > 0 else tgt
        return 0

    def extend(prefix: tuple[int, ...], k: int):
        nonlocal examined, pruned
        start = prefix[-1] if prefix else 2
        for p in range(start, p_max + 1):
            ps = prefix + (p,)
            if len(ps) == k:
                if not polygon_is_hyperbolic(ps):
                    continue
                examined += 1
                side = rate_vs_target(ps)
                if side == 1:
                    # larger last coordinates only increase the rate
                    pruned += p_max - p
                    return
                if side == 0:
                    core, _ = strip_cyclotomic(polygon_delta(*ps))
                    if core == poly:
                        matches.append(RealizationMatch(ps, core))
            else:
                # the minimal sorted completion pads with the current entry;
                # if it is hyperbolic and already too big, so is every
                # completion of this or any larger entry
                pad = ps + (p,) * (k - len(ps))
                if polygon_is_hyperbolic(pad) and rate_vs_target(pad) == 1:
                    pruned += 1
                    return
                extend(ps, k)

    for k in range(3, k_max + 1):
        extend((), k)
    return RealizationSearchResult(poly, tuple(matches), examined, pruned)
