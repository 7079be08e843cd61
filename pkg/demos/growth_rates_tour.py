#!/usr/bin/env python3
"""A tour of the exact growth-rate machinery.

Computes the growth series of the benchmark reflection groups, extracts the
certified growth rates, and shows the monotone chain of systems ordered by
domination.
"""

from fractions import Fraction

from coxgrowth import (
    classify,
    growth_rate,
    monotonicity_check,
    parse_coxeter_symbol,
    polygon_growth,
    series_coefficients,
    steinberg_growth,
    strip_cyclotomic,
)

WIDTH = Fraction(1, 10**12)


def show(label, f):
    rate = growth_rate(f, WIDTH)
    core, factors = strip_cyclotomic(f.denominator)
    labels = sorted(classify(core).labels) if core.is_monic() and core.degree > 0 else []
    print(f"{label:>14}: rate {rate.decimal(7)}  (interval width {float(rate.width):.0e})")
    print(f"{'':>14}  denominator core {core}")
    if labels:
        print(f"{'':>14}  classification: {', '.join(labels)}")
    print()


def main():
    print("== growth rates of the benchmark groups ==\n")
    show("(2,3,7)", polygon_growth(2, 3, 7))
    for symbol in ("[3,8]", "[3,5,3]", "[4,3,5]", "[8,3,4,3,8]"):
        show(symbol, steinberg_growth(parse_coxeter_symbol(symbol)))

    print("== first growth coefficients ==\n")
    f = steinberg_growth(parse_coxeter_symbol("[3,7]"))
    print("  [3,7]:", series_coefficients(f, 12))
    pent = polygon_growth(2, 2, 2, 2, 2)
    print("  right-angled pentagon:", series_coefficients(pent, 12))
    print()

    print("== the ordered chain [3,8] < [3,inf] < [(3^2,inf)] ==\n")
    a = parse_coxeter_symbol("[3,8]")
    b = parse_coxeter_symbol("[3,inf]")
    c = parse_coxeter_symbol("[(3^2,inf)]")
    r1 = monotonicity_check(a, b)
    r2 = monotonicity_check(b, c)
    print(f"  tau[3,8]       = {r1.low_rate.decimal(7)}")
    print(f"  tau[3,inf]     = {r1.high_rate.decimal(7)}   strictly larger: {r1.passed}")
    print(f"  tau[(3^2,inf)] = {r2.high_rate.decimal(7)}   strictly larger: {r2.passed}")


if __name__ == "__main__":
    main()
