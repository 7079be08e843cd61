"""Coxeter transformations of weighted trees: bipartite matrix construction,
characteristic polynomials by block determinant and by leaf-deletion
recursion, the star-graph specialization, and spectral-radius extraction.

For a tree all products of the generators in any order are conjugate, so the
characteristic polynomial is well defined; the bipartite ordering makes it
computable from the biadjacency block X alone.  Edge weights m contribute
the integer 4cos^2(pi/m) in {1, 2, 3, 4} for m in {3, 4, 6, inf}, so these
characteristic polynomials have exact integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import INF, DiagramError, WeightedTree
from .intpoly import IntPoly, resultant_eliminate
from .numclass import charpoly_int_matrix
from .roots import (
    DEFAULT_WIDTH,
    RootInterval,
    isolate_largest_real_root,
    sqrt_interval,
    sturm_count,
)

# 4cos^2(pi/m) for the weights with rational value
_EDGE_COEFF = {3: 1, 4: 2, 6: 3, INF: 4}


def _edge_coefficient(w) -> int:
    try:
        return _EDGE_COEFF[w]
    except (KeyError, TypeError):
        raise DiagramError(
            f"weight {w!r} has irrational 4cos^2(pi/m); exact mode supports 3, 4, 6, inf"
        ) from None


@dataclass(frozen=True)
class BipartiteOrder:
    """A two-coloring of a tree with the vertex order V1 then V2.

    The biadjacency block X has rows indexed by V1 and columns by V2; for
    weight-3 trees its entries are 0/1.
    """

    tree: WeightedTree
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    x_block: tuple[tuple[int, ...], ...]


def bipartite_order(tree: WeightedTree) -> BipartiteOrder:
    """Two-color from vertex 0; within each class vertices keep index order."""
    if tree.weights_used() - {3}:
        raise DiagramError("the 0/1 biadjacency block requires all weights 3")
    adj = tree.adjacency()
    color = {0: 0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u, _ in adj[v]:
            if u not in color:
                color[u] = 1 - color[v]
                stack.append(u)
    part1 = tuple(v for v in range(tree.n) if color[v] == 0)
    part2 = tuple(v for v in range(tree.n) if color[v] == 1)
    pos2 = {v: c for c, v in enumerate(part2)}
    x = [[0] * len(part2) for _ in part1]
    for r, v in enumerate(part1):
        for u, _ in adj[v]:
            x[r][pos2[u]] = 1
    return BipartiteOrder(tree, part1, part2, tuple(tuple(row) for row in x))


@dataclass(frozen=True)
class BipartiteCoxeterResult:
    order: BipartiteOrder
    matrix: tuple[tuple[int, ...], ...]  # the Coxeter transformation itself
    char_poly: IntPoly


def bipartite_coxeter_matrix(tree: WeightedTree) -> BipartiteCoxeterResult:
    """The bipartite Coxeter transformation of a weight-3 tree and its
    characteristic polynomial, via the two-block determinant reduction.

    With X the biadjacency block and G = X X^T (or X^T X, whichever is
    smaller), det(tI - C) = (t+1)^|n1 - n2| * t^m * g((t+1)^2 / t) for
    g = det(xI - G) of degree m.
    """
    order = bipartite_order(tree)
    n1, n2 = len(order.part1), len(order.part2)
    x = order.x_block
    # C = -(I X; 0 I)(I 0; -X^T I) assembled explicitly
    n = n1 + n2
    c = [[0] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            c[i][j] = -(1 if i == j else 0) + sum(x[i][k] * x[j][k] for k in range(n2))
        for k in range(n2):
            c[i][n1 + k] = -x[i][k]
    for k in range(n2):
        for j in range(n1):
            c[n1 + k][j] = x[j][k]
        c[n1 + k][n1 + k] = -1
    # Gram block on the smaller side
    if n1 <= n2:
        g = [[sum(x[i][k] * x[j][k] for k in range(n2)) for j in range(n1)] for i in range(n1)]
        m, extra = n1, n2 - n1
    else:
        g = [[sum(x[i][a] * x[i][b] for i in range(n1)) for b in range(n2)] for a in range(n2)]
        m, extra = n2, n1 - n2
    gpoly = charpoly_int_matrix(g)
    acc = IntPoly()
    tp1 = IntPoly([1, 1])
    for i, coeff in enumerate(gpoly.coeffs):
        if coeff:
            acc = acc + (tp1 ** (2 * i)).shift(m - i) * coeff
    phi = (tp1 ** extra) * acc
    return BipartiteCoxeterResult(order, tuple(tuple(row) for row in c), phi)


def char_poly_recursive(tree: WeightedTree) -> IntPoly:
    """Characteristic polynomial by the leaf-deletion recursion.

    phi(T) = (1+t) phi(T - v) - 4cos^2(pi/m) t phi(T - v - v') for the
    lowest-indexed leaf v with neighbor v'; the empty tree gives 1 and a
    single vertex gives t + 1.  Deleting v' may disconnect the remainder,
    in which case the polynomial is the product over components.
    """
    for _, _, w in tree.edge_list:
        _edge_coefficient(w)
    adj = {v: {u: w for u, w in nb} for v, nb in tree.adjacency().items()}
    memo: dict[frozenset, IntPoly] = {}

    def component_split(vertices: frozenset) -> list[frozenset]:
        remaining = set(vertices)
        comps = []
        while remaining:
            start = next(iter(remaining))
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u in remaining and u not in comp:
                        comp.add(u)
                        stack.append(u)
            comps.append(frozenset(comp))
            remaining -= comp
        return comps

    def phi_connected(vertices: frozenset) -> IntPoly:
        if vertices in memo:
            return memo[vertices]
        if len(vertices) == 1:
            return IntPoly([1, 1])
        leaf = min(v for v in vertices if sum(1 for u in adj[v] if u in vertices) == 1)
        neighbor, weight = next((u, w) for u, w in adj[leaf].items() if u in vertices)
        rest = vertices - {leaf}
        first = IntPoly([1, 1]) * phi_forest(rest)
        second = phi_forest(rest - {neighbor})
        out = first - second.shift(1) * _edge_coefficient(weight)
        memo[vertices] = out
        return out

    def phi_forest(vertices: frozenset) -> IntPoly:
        if not vertices:
            return IntPoly([1])
        out = IntPoly([1])
        for comp in component_split(vertices):
            out = out * phi_connected(comp)
        return out

    return phi_connected(frozenset(range(tree.n)))


def char_poly_star(*ps: int) -> IntPoly:
    """Characteristic polynomial of the star-graph Coxeter transformation,
    by the arm-shortening recursion with the all-arms-length-one base case
    (t+1)^(k-1) (t^2 - (k-2)t + 1).
    """
    if len(ps) < 1:
        raise ValueError("need at least one arm")
    if any(p < 2 for p in ps):
        raise ValueError("arm parameters must be at least 2")
    memo: dict[tuple[int, ...], IntPoly] = {}

    def phi(params: tuple[int, ...]) -> IntPoly:
        params = tuple(sorted(params))
        if params in memo:
            return memo[params]
        if not params or params[-1] == 2:
            k = len(params)
            if k == 0:
                out = IntPoly([1, 1])
            else:
                out = IntPoly([1, 1]) ** (k - 1) * IntPoly([1, -(k - 2), 1])
        else:
            head, p = params[:-1], params[-1]
            if p >= 4:
                out = IntPoly([1, 1]) * phi(head + (p - 1,)) - phi(head + (p - 2,)).shift(1)
            else:  # p == 3
                out = IntPoly([1, 1]) * phi(head + (2,)) - phi(head).shift(1)
        memo[params] = out
        return out

    return phi(tuple(ps))


def verify_delta_eq_phi(*ps: int) -> bool:
    """Exact equality of the polygon denominator and the star characteristic polynomial."""
    from .growth import polygon_delta
    return polygon_delta(*ps) == char_poly_star(*ps)


def spectral_radius_coxeter(tree: WeightedTree, width: Fraction = DEFAULT_WIDTH) -> RootInterval:
    """Certified interval around the spectral radius of the tree's Coxeter
    transformation.

    Eigenvalues off the unit circle come in real positive pairs r, 1/r, so
    the radius is the largest real root of the characteristic polynomial
    when that root exceeds 1, and exactly 1 otherwise.
    """
    phi = char_poly_recursive(tree)
    return spectral_radius_from_charpoly(phi, width)


def spectral_radius_from_charpoly(phi: IntPoly, width: Fraction = DEFAULT_WIDTH) -> RootInterval:
    """Largest real root when it exceeds 1; otherwise the exact value 1
    (finite or affine type), reported as the root of t - 1."""
    from .roots import cauchy_bound
    if sturm_count(phi, 1, cauchy_bound(phi)) == 0:
        return RootInterval(IntPoly([-1, 1]), Fraction(1), Fraction(1))
    return isolate_largest_real_root(phi, width)


def alpha_from_lambda(lam: RootInterval | IntPoly,
                      width: Fraction = DEFAULT_WIDTH):
    """Transfer from a Coxeter-transformation radius r to the adjacency
    eigenvalue a with a^2 = 2 + r + 1/r.

    An interval argument is mapped by outward-rounded interval arithmetic;
    a polynomial argument is mapped by resultant elimination.
    """
    if isinstance(lam, IntPoly):
        return resultant_eliminate(lam)
    if lam.low <= 0:
        raise ValueError("interval must be strictly positive")
    # r + 1/r is monotone on each side of 1; evaluate on endpoints and
    # include the minimum value 2 when the interval straddles 1.
    cands = [lam.low + 1 / lam.low, lam.high + 1 / lam.high]
    lo, hi = min(cands), max(cands)
    if lam.low <= 1 <= lam.high:
        lo = Fraction(2)
    slo, shi = sqrt_interval(lo + 2, hi + 2, width)
    return slo, shi


def star_spectral_radius(*ps: int, width: Fraction = DEFAULT_WIDTH) -> RootInterval:
    """Spectral radius of the star graph's Coxeter transformation via the
    specialized recursion (faster than generic leaf deletion for sweeps).
    """
    return spectral_radius_from_charpoly(char_poly_star(*ps), width)


def coxeter_tree_radius_equals_polygon_rate(ps, width: Fraction = Fraction(1, 10**9)) -> bool:
    """End-to-end agreement check: polygon growth rate vs star-graph radius."""
    from .growth import growth_rate, polygon_growth
    rate = growth_rate(polygon_growth(*ps), width)
    radius = star_spectral_radius(*ps, width=width)
    return rate.overlaps(radius)
