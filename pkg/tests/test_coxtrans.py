import itertools
import random
from fractions import Fraction

import pytest

from coxgrowth.coxtrans import (
    alpha_from_lambda,
    bipartite_coxeter_matrix,
    bipartite_order,
    char_poly_recursive,
    char_poly_star,
    coxeter_tree_radius_equals_polygon_rate,
    spectral_radius_coxeter,
    star_spectral_radius,
    verify_delta_eq_phi,
)
from coxgrowth.diagram import INF, DiagramError, WeightedTree, h_graph, path_tree, star_diagram
from coxgrowth.growth import growth_rate, polygon_delta, polygon_growth
from coxgrowth.intpoly import IntPoly, bracket, parse_poly
from coxgrowth.roots import RootInterval, sturm_count
from coxgrowth.diagram import polygon_is_hyperbolic

from oracles import charpoly_interpolated, random_tree_edges

LEHMER = parse_poly("1,1,0,-1,-1,-1,-1,-1,0,1,1")
H283_CHARPOLY = parse_poly("1,1,-1,-2,-1,0,0,0,0,0,-1,-2,-1,1,1")

PAPER_X_BLOCK = (
    (1, 1, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 1),
)


def test_base_cases():
    assert char_poly_recursive(WeightedTree(1, [])) == IntPoly([1, 1])
    assert char_poly_recursive(path_tree(2)) == IntPoly([1, 1, 1])
    assert bipartite_coxeter_matrix(path_tree(2)).char_poly == IntPoly([1, 1, 1])
    single = bipartite_coxeter_matrix(WeightedTree(1, []))
    assert single.char_poly == IntPoly([1, 1])
    assert single.matrix == ((-1,),)


def test_h283_x_block_and_charpoly():
    res = bipartite_coxeter_matrix(h_graph(2, 8, 3))
    assert res.order.x_block == PAPER_X_BLOCK
    assert res.char_poly == H283_CHARPOLY
    assert char_poly_recursive(h_graph(2, 8, 3)) == H283_CHARPOLY


def test_bipartite_matrix_is_the_transformation():
    # the assembled matrix must have the stated characteristic polynomial
    res = bipartite_coxeter_matrix(h_graph(2, 8, 3))
    assert charpoly_interpolated([list(r) for r in res.matrix]) == res.char_poly


def test_bipartition_is_proper():
    order = bipartite_order(h_graph(2, 8, 3))
    part1 = set(order.part1)
    for i, j, _ in order.tree.edge_list:
        assert (i in part1) != (j in part1)


def test_star_closed_form():
    for k in range(1, 8):
        expected = IntPoly([1, 1]) ** (k - 1) * IntPoly([1, -(k - 2), 1])
        assert char_poly_star(*([2] * k)) == expected


def test_star_single_arm_bracket():
    assert char_poly_star(3) == bracket(4)


def test_star_237_is_lehmer():
    assert char_poly_star(2, 3, 7) == LEHMER
    assert char_poly_star(2, 3, 7) == char_poly_recursive(star_diagram(2, 3, 7))


def test_star_recursion_identities():
    rng = random.Random(8)
    for _ in range(100):
        k = rng.randint(1, 4)
        ps = tuple(rng.randint(2, 8) for _ in range(k))
        p = rng.randint(4, 9)
        assert char_poly_star(*ps, p) == (IntPoly([1, 1]) * char_poly_star(*ps, p - 1)
                                          - char_poly_star(*ps, p - 2).shift(1))
        assert char_poly_star(*ps, 3) == (IntPoly([1, 1]) * char_poly_star(*ps, 2)
                                          - char_poly_star(*ps).shift(1))


@pytest.mark.parametrize("n", range(1, 7))
def test_paths_recursion_vs_determinant(n):
    tree = path_tree(n)
    assert char_poly_recursive(tree) == bipartite_coxeter_matrix(tree).char_poly


def test_recursion_vs_determinant_on_random_trees():
    rng = random.Random(20260811)
    for _ in range(200):
        n = rng.randint(1, 12)
        tree = WeightedTree(n, random_tree_edges(n, rng))
        assert char_poly_recursive(tree) == bipartite_coxeter_matrix(tree).char_poly


def test_recursion_order_independence():
    rng = random.Random(12)
    for _ in range(30):
        n = rng.randint(2, 12)
        tree = WeightedTree(n, random_tree_edges(n, rng))
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = tree.relabel({i: perm[i] for i in range(n)})
        assert char_poly_recursive(relabeled) == char_poly_recursive(tree)


def test_weight3_charpoly_reciprocal_with_unit_constant():
    rng = random.Random(13)
    for _ in range(50):
        n = rng.randint(1, 12)
        tree = WeightedTree(n, random_tree_edges(n, rng))
        phi = char_poly_recursive(tree)
        assert abs(phi.constant) == 1
        assert phi.reversed() in (phi, -phi)


def test_delta_eq_phi_examples():
    assert verify_delta_eq_phi(3)
    assert verify_delta_eq_phi(2, 3, 7)
    for k in range(1, 11):
        assert verify_delta_eq_phi(*([2] * k))


def test_delta_eq_phi_sweep():
    for k in range(1, 6):
        for ps in itertools.combinations_with_replacement(range(2, 9), k):
            assert polygon_delta(*ps) == char_poly_star(*ps), ps


def test_spectral_radius_values():
    iv = spectral_radius_coxeter(star_diagram(2, 3, 7), Fraction(1, 10**9))
    assert abs(iv.midpoint() - Fraction("1.176281")) < Fraction(1, 10**6)
    iv2 = spectral_radius_coxeter(h_graph(2, 8, 3), Fraction(1, 10**9))
    assert abs(iv2.midpoint() - Fraction("1.359999")) < Fraction(1, 10**6)


def test_spectral_radius_affine_and_finite():
    # four arms of length one: characteristic polynomial (t+1)^3 (t-1)^2
    iv = spectral_radius_coxeter(star_diagram(2, 2, 2, 2))
    assert (iv.low, iv.high) == (1, 1)
    assert char_poly_star(2, 2, 2, 2) == IntPoly([1, 1]) ** 3 * IntPoly([1, -2, 1])
    # a finite type: no eigenvalue off the unit circle
    ivf = spectral_radius_coxeter(path_tree(3))
    assert (ivf.low, ivf.high) == (1, 1)


def test_weighted_edges_supported():
    assert char_poly_recursive(WeightedTree(2, [(0, 1, 4)])) == IntPoly([1, 0, 1])
    assert char_poly_recursive(WeightedTree(2, [(0, 1, 6)])) == IntPoly([1, -1, 1])
    assert char_poly_recursive(WeightedTree(2, [(0, 1, INF)])) == IntPoly([1, -2, 1])
    with pytest.raises(DiagramError):
        char_poly_recursive(WeightedTree(2, [(0, 1, 5)]))
    with pytest.raises(DiagramError):
        bipartite_coxeter_matrix(WeightedTree(2, [(0, 1, 4)]))


def test_alpha_from_lambda_unit():
    iv = RootInterval(IntPoly([-1, 1]), Fraction(1), Fraction(1))
    lo, hi = alpha_from_lambda(iv)
    assert lo <= 2 <= hi and hi - lo < Fraction(1, 10**8)


def test_alpha_from_lambda_golden_square():
    # r + 1/r = 3 exactly at the larger root of r^2 - 3r + 1: alpha^2 = 5
    from coxgrowth.roots import isolate_largest_real_root
    lam = isolate_largest_real_root(IntPoly([1, -3, 1]), Fraction(1, 10**12))
    lo, hi = alpha_from_lambda(lam, Fraction(1, 10**9))
    assert lo * lo <= 5 <= hi * hi


def test_alpha_from_lambda_tetrahedral_value():
    from coxgrowth.roots import isolate_largest_real_root
    lam = isolate_largest_real_root(parse_poly("1,-1,0,0,-1,1,-1,0,0,-1,1"), Fraction(1, 10**12))
    lo, hi = alpha_from_lambda(lam, Fraction(1, 10**8))
    mid = (lo + hi) / 2
    assert abs(mid - Fraction("2.0226674")) < Fraction(1, 10**6)


def test_alpha_from_lambda_rejects_nonpositive():
    iv = RootInterval(IntPoly([0, 1]), Fraction(-1), Fraction(1))
    with pytest.raises(ValueError):
        alpha_from_lambda(iv)


def test_end_to_end_rate_equals_radius():
    for ps in [(2, 3, 7), (2, 3, 8), (2, 4, 5), (2, 2, 2, 3), (2, 2, 2, 2, 2)]:
        assert coxeter_tree_radius_equals_polygon_rate(ps)


def test_end_to_end_shares_core():
    from coxgrowth.numclass import strip_cyclotomic
    for ps in [(2, 3, 7), (2, 4, 5), (2, 2, 2, 3)]:
        den_core, _ = strip_cyclotomic(polygon_growth(*ps).denominator)
        phi_core, _ = strip_cyclotomic(char_poly_star(*ps))
        assert den_core == phi_core
