"""Coxeter diagrams, Coxeter-symbol parsing, weighted trees, bilinear and
adjacency matrices, spherical-type recognition, and the domination order.

Vertices are 0-based internally; the text file format uses 1-based indices.
An edge weight of infinity is represented by the module-level tag INF, never
by a sentinel integer.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction


class _Infinity:
    """Order-infinity edge weight tag."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):  # keep the singleton under pickling
        return (_Infinity, ())


INF = _Infinity()

Weight = int | _Infinity


def weight_leq(a: Weight, b: Weight) -> bool:
    """The order on weights with INF as the top element."""
    if b is INF:
        return True
    if a is INF:
        return False
    return a <= b


def parse_weight(text: str) -> Weight:
    text = text.strip()
    if text in ("inf", "∞", "infinity"):
        return INF
    if not re.fullmatch(r"\d+", text):
        raise ValueError(f"bad weight {text!r}")
    return int(text)


def format_weight(w: Weight) -> str:
    return "inf" if w is INF else str(w)


class DiagramError(ValueError):
    pass


@dataclass(frozen=True, init=False)
class CoxeterDiagram:
    """A finite-rank Coxeter system: symmetric weight table with m_ii = 1."""

    n: int
    weights: tuple[tuple[Weight, ...], ...]

    def __init__(self, n: int, edges: dict[tuple[int, int], Weight] | None = None):
        if n < 1:
            raise DiagramError("rank must be at least 1")
        table = [[2] * n for _ in range(n)]
        for i in range(n):
            table[i][i] = 1
        for (i, j), m in (edges or {}).items():
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise DiagramError(f"bad vertex pair ({i}, {j})")
            if m is not INF and (not isinstance(m, int) or m < 2):
                raise DiagramError(f"bad weight {m!r} for pair ({i}, {j})")
            table[i][j] = table[j][i] = m
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", tuple(tuple(row) for row in table))

    def weight(self, i: int, j: int) -> Weight:
        return self.weights[i][j]

    def edges(self) -> list[tuple[int, int, Weight]]:
        """Pairs with weight >= 3 (the drawn edges of the diagram)."""
        return [(i, j, self.weights[i][j])
                for i in range(self.n) for j in range(i + 1, self.n)
                if self.weights[i][j] is INF or self.weights[i][j] >= 3]

    def subdiagram(self, vertices: tuple[int, ...]) -> "CoxeterDiagram":
        idx = {v: k for k, v in enumerate(vertices)}
        edges = {}
        for a in vertices:
            for b in vertices:
                if a < b:
                    m = self.weights[a][b]
                    if m != 2:
                        edges[(idx[a], idx[b])] = m
        return CoxeterDiagram(len(vertices), edges)

    def degree_sequence(self) -> list[int]:
        return sorted(sum(1 for j in range(self.n)
                          if j != i and (self.weights[i][j] is INF or self.weights[i][j] >= 3))
                      for i in range(self.n))


# -- Coxeter symbols --------------------------------------------------------------


def parse_coxeter_symbol(text: str) -> CoxeterDiagram:
    """Parse a linear symbol [w1,...,wr] or a cyclic symbol [(items)].

    Weights are integers >= 3 or inf; cyclic items allow p^k repetition.
    A linear symbol with r weights is a path on r+1 nodes; the cyclic symbol
    closes the path into a cycle with as many nodes as weights.
    """
    s = "".join(text.split())

    def fail(msg: str, pos: int):
        raise DiagramError(f"symbol parse error at position {pos}: {msg} in {text!r}")

    if not s.startswith("["):
        fail("expected '['", 0)
    cyclic = s.startswith("[(")
    if cyclic:
        if not s.endswith(")]"):
            fail("expected ')]'", len(s))
        body = s[2:-2]
    else:
        if not s.endswith("]"):
            fail("expected ']'", len(s))
        body = s[1:-1]
    if not body:
        fail("empty symbol", 1)
    weights: list[Weight] = []
    offset = 2 if cyclic else 1
    for item in body.split(","):
        pos = offset
        offset += len(item) + 1
        if not item:
            fail("empty item", pos)
        rep = 1
        if "^" in item:
            if not cyclic:
                fail("repetition only allowed in cyclic symbols", pos)
            item, _, exp = item.partition("^")
            if not exp.isdigit() or int(exp) < 1:
                fail(f"bad repetition count {exp!r}", pos)
            rep = int(exp)
        try:
            w = parse_weight(item)
        except ValueError:
            fail(f"bad weight {item!r}", pos)
        if w is not INF and w < 3:
            fail(f"weight {w} below 3 in symbol position", pos)
        weights.extend([w] * rep)
    if cyclic and len(weights) < 3:
        fail("cyclic symbol needs at least 3 weights", 1)
    if cyclic:
        n = len(weights)
        edges = {(i, (i + 1) % n): w for i, w in enumerate(weights)}
    else:
        n = len(weights) + 1
        edges = {(i, i + 1): w for i, w in enumerate(weights)}
    return CoxeterDiagram(n, edges)


def format_coxeter_symbol(d: CoxeterDiagram) -> str:
    """Print a diagram as a linear or cyclic Coxeter symbol.

    Only diagrams whose edges (weight >= 3) form a path covering all vertices
    with weight-2 non-adjacent pairs, or a full cycle, have a symbol.
    """
    deg = {i: [] for i in range(d.n)}
    for i, j, _ in d.edges():
        deg[i].append(j)
        deg[j].append(i)
    counts = sorted(len(v) for v in deg.values())
    edges = d.edges()
    if d.n >= 2 and len(edges) == d.n - 1 and counts[0] == 1 and counts[-1] <= 2:
        # a path; walk it from the lower-numbered endpoint
        ends = sorted(i for i in range(d.n) if len(deg[i]) == 1)
        order = [ends[0]]
        while len(order) < d.n:
            nxt = [v for v in deg[order[-1]] if len(order) < 2 or v != order[-2]]
            if not nxt:
                raise DiagramError("diagram is not a path")
            order.append(nxt[0])
        for a, b in itertools.combinations(order, 2):
            if abs(order.index(a) - order.index(b)) > 1 and d.weight(a, b) != 2:
                raise DiagramError("non-consecutive weights prevent a linear symbol")
        ws = [d.weight(order[k], order[k + 1]) for k in range(d.n - 1)]
        return "[" + ",".join(format_weight(w) for w in ws) + "]"
    if len(edges) == d.n and all(len(v) == 2 for v in deg.values()) and d.n >= 3:
        # a cycle; rotate/reflect to the lexicographically smallest weight word
        order = [0]
        while len(order) < d.n:
            nxt = [v for v in deg[order[-1]] if len(order) < 2 or v != order[-2]]
            order.append(nxt[0])
        for a, b in itertools.combinations(range(d.n), 2):
            if d.weight(a, b) != 2 and b not in deg[a]:
                raise DiagramError("chords prevent a cyclic symbol")
        ws = [d.weight(order[k], order[(k + 1) % d.n]) for k in range(d.n)]
        key = lambda w: (1, 0) if w is INF else (0, w)
        best = min(
            (seq[i:] + seq[:i] for seq in (ws, ws[::-1]) for i in range(d.n)),
            key=lambda seq: [key(w) for w in seq],
        )
        parts = []
        for w, group in itertools.groupby(best):
            k = len(list(group))
            parts.append(format_weight(w) + (f"^{k}" if k > 1 else ""))
        return "[(" + ",".join(parts) + ")]"
    raise DiagramError("diagram has no linear or cyclic Coxeter symbol")


# -- file format --------------------------------------------------------------------


def diagram_from_text(text: str) -> CoxeterDiagram:
    """Read the diagram file format: 'rank N' then lines 'i j m' (1-based)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(k + 1, ln) for k, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines:
        raise DiagramError("empty diagram file")
    no, header = lines[0]
    m = re.fullmatch(r"rank\s+(\d+)", header)
    if not m:
        raise DiagramError(f"line {no}: expected 'rank N'")
    n = int(m.group(1))
    edges: dict[tuple[int, int], Weight] = {}
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise DiagramError(f"line {no}: expected 'i j m'")
        try:
            i, j = int(parts[0]) - 1, int(parts[1]) - 1
            w = parse_weight(parts[2])
        except ValueError as e:
            raise DiagramError(f"line {no}: {e}")
        if not (0 <= i < n and 0 <= j < n) or i == j:
            raise DiagramError(f"line {no}: bad vertex pair")
        key = (min(i, j), max(i, j))
        if key in edges:
            raise DiagramError(f"line {no}: duplicate pair {i + 1} {j + 1}")
        if w is not INF and w < 2:
            raise DiagramError(f"line {no}: weight below 2")
        edges[key] = w
    return CoxeterDiagram(n, edges)


def diagram_from_file(path) -> CoxeterDiagram:
    with open(path, encoding="utf-8") as fh:
        return diagram_from_text(fh.read())


# -- geometric polygon / tree constructors -------------------------------------------


def polygon_diagram(*ps: int) -> CoxeterDiagram:
    """The reflection-group diagram of a compact polygon with angles pi/p_i.

    Cyclically consecutive generators i, i+1 get weight p_i; all other pairs
    get infinity (the corresponding sides are disjoint).
    """
    if len(ps) < 3:
        raise DiagramError("a polygon needs at least 3 sides")
    if any(p < 2 for p in ps):
        raise DiagramError("polygon parameters must be at least 2")
    k = len(ps)
    edges: dict[tuple[int, int], Weight] = {}
    for i in range(k):
        for j in range(i + 1, k):
            if j == i + 1 or (i == 0 and j == k - 1):
                continue
            edges[(i, j)] = INF
    for i, p in enumerate(ps):
        a, b = i, (i + 1) % k
        edges[(min(a, b), max(a, b))] = p
    return CoxeterDiagram(k, edges)


def polygon_is_hyperbolic(ps) -> bool:
    """Angle-sum test: a compact polygon with angles pi/p_i exists iff sum 1/p_i < k - 2."""
    ps = tuple(ps)
    return sum(Fraction(1, p) for p in ps) < len(ps) - 2


@dataclass(frozen=True, init=False)
class WeightedTree:
    """A tree on vertices 0..n-1 with edge weights >= 3 or INF."""

    n: int
    edge_list: tuple[tuple[int, int, Weight], ...]

    def __init__(self, n: int, edge_list):
        edge_list = tuple((min(i, j), max(i, j), w) for i, j, w in edge_list)
        if n < 1:
            raise DiagramError("tree needs at least one vertex")
        if len(edge_list) != n - 1:
            raise DiagramError("a tree on n vertices has n-1 edges")
        seen = set()
        for i, j, w in edge_list:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise DiagramError(f"bad edge ({i}, {j})")
            if (i, j) in seen:
                raise DiagramError(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            if w is not INF and (not isinstance(w, int) or w < 3):
                raise DiagramError(f"tree edge weight must be >= 3 or inf, got {w!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edge_list", edge_list)
        if len(self._component_of(0)) != n:
            raise DiagramError("tree is not connected")

    def adjacency(self) -> dict[int, list[tuple[int, Weight]]]:
        adj: dict[int, list[tuple[int, Weight]]] = {i: [] for i in range(self.n)}
        for i, j, w in self.edge_list:
            adj[i].append((j, w))
            adj[j].append((i, w))
        return adj

    def _component_of(self, start: int) -> set[int]:
        adj = self.adjacency()
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u, _ in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    def weights_used(self) -> set:
        return {w for _, _, w in self.edge_list}

    def to_diagram(self) -> CoxeterDiagram:
        return CoxeterDiagram(self.n, {(i, j): w for i, j, w in self.edge_list})

    def relabel(self, perm: dict[int, int]) -> "WeightedTree":
        return WeightedTree(self.n, [(perm[i], perm[j], w) for i, j, w in self.edge_list])

    def with_edge_weight(self, i: int, j: int, w: Weight) -> "WeightedTree":
        i, j = min(i, j), max(i, j)
        edges = [(a, b, w if (a, b) == (i, j) else m) for a, b, m in self.edge_list]
        if (i, j) not in {(a, b) for a, b, _ in self.edge_list}:
            raise DiagramError(f"({i}, {j}) is not an edge")
        return WeightedTree(self.n, edges)


def path_tree(n: int, weight: Weight = 3) -> WeightedTree:
    if n < 1:
        raise DiagramError("path needs at least one vertex")
    return WeightedTree(n, [(i, i + 1, weight) for i in range(n - 1)])


def star_diagram(*ps: int) -> WeightedTree:
    """The tree with one central vertex and arms of lengths p_i - 1, all weights 3.

    Vertex 0 is the center; arms are numbered consecutively outward.
    """
    if len(ps) < 1:
        raise DiagramError("star needs at least one arm")
    if any(p < 2 for p in ps):
        raise DiagramError("star parameters must be at least 2")
    edges = []
    nxt = 1
    for p in ps:
        prev = 0
        for _ in range(p - 1):
            edges.append((prev, nxt, 3))
            prev = nxt
            nxt += 1
    return WeightedTree(nxt, edges)


def h_graph(i: int, j: int, k: int) -> WeightedTree:
    """Two valency-3 vertices joined by a length-j path; each carries a pendant
    edge, plus arms of lengths i-1 and k-1.  All weights 3; i + j + k + 1 vertices.

    Labels: 0 the first branch vertex, 1 its pendant leaf, 2..i its long arm,
    then the interior path, the second branch vertex, its pendant, its arm.
    """
    if i < 2 or k < 2 or j < 1:
        raise DiagramError("need i, k >= 2 and j >= 1")
    edges = [(0, 1, 3)]
    nxt = 2
    prev = 0
    for _ in range(i - 1):  # long arm at the first branch vertex
        edges.append((prev, nxt, 3))
        prev = nxt
        nxt += 1
    prev = 0
    for _ in range(j - 1):  # interior of the connecting path
        edges.append((prev, nxt, 3))
        prev = nxt
        nxt += 1
    v2 = nxt
    edges.append((prev, v2, 3))
    nxt += 1
    edges.append((v2, nxt, 3))  # pendant at the second branch vertex
    nxt += 1
    prev = v2
    for _ in range(k - 1):  # long arm at the second branch vertex
        edges.append((prev, nxt, 3))
        prev = nxt
        nxt += 1
    return WeightedTree(nxt, edges)


# -- bilinear form and Coxeter adjacency matrix ----------------------------------------


@dataclass(frozen=True)
class QuadExact:
    """An exact value a + b*sqrt(d) with rational a, b and squarefree d > 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        if self.d == 1 and self.b != 0:
            raise ValueError("radicand 1 must have zero irrational part")

    def scaled(self, f: Fraction) -> "QuadExact":
        return QuadExact(self.a * f, self.b * f, self.d)

    def plus_rational(self, r: Fraction) -> "QuadExact":
        return QuadExact(self.a + r, self.b, self.d)

    def __float__(self) -> float:
        import math
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.d})"
        return f"{self.a} + {self.b}*sqrt({self.d})"


@dataclass(frozen=True)
class CertifiedValue:
    """A rational enclosure of an irrational matrix entry."""

    low: Fraction
    high: Fraction

    def scaled(self, f: Fraction) -> "CertifiedValue":
        lo, hi = self.low * f, self.high * f
        return CertifiedValue(min(lo, hi), max(lo, hi))

    def plus_rational(self, r: Fraction) -> "CertifiedValue":
        return CertifiedValue(self.low + r, self.high + r)

    def __float__(self) -> float:
        return float((self.low + self.high) / 2)


Entry = QuadExact | CertifiedValue

_COS_EXACT = {
    2: QuadExact(Fraction(0)),
    3: QuadExact(Fraction(1, 2)),
    4: QuadExact(Fraction(0), Fraction(1, 2), 2),
    6: QuadExact(Fraction(0), Fraction(1, 2), 3),
}


def _cos_pi_over(m: int, width: Fraction = Fraction(1, 10**12)) -> Entry:
    """cos(pi/m): exact for m in {2, 3, 4, 6}, a certified enclosure otherwise."""
    if m in _COS_EXACT:
        return _COS_EXACT[m]
    # 2cos(pi/m) is the largest root of the trace image of t^(2m) - 1's primitive part:
    # use the minimal-polynomial-free route: largest root x of the reduced
    # polynomial of Phi_2m satisfies x = 2cos(pi/m).
    from .intpoly import cyclotomic, palindromic_reduce
    from .roots import isolate_largest_real_root
    phi = cyclotomic(2 * m)
    q = palindromic_reduce(phi)
    iv = isolate_largest_real_root(q, width * 2)
    return CertifiedValue(iv.low / 2, iv.high / 2)


def bilinear_form(d: CoxeterDiagram) -> list[list[Entry]]:
    """The symmetric form with 1 on the diagonal, -cos(pi/m_ij) off it, -1 at infinity."""
    out: list[list[Entry]] = []
    for i in range(d.n):
        row: list[Entry] = []
        for j in range(d.n):
            if i == j:
                row.append(QuadExact(Fraction(1)))
                continue
            m = d.weight(i, j)
            if m is INF:
                row.append(QuadExact(Fraction(-1)))
            else:
                row.append(_cos_pi_over(m).scaled(Fraction(-1)))
        out.append(row)
    return out


def coxeter_adjacency(d: CoxeterDiagram) -> list[list[Entry]]:
    """The matrix 2I - 2B; equals the 0/1 graph adjacency matrix when all weights are 2 or 3."""
    b = bilinear_form(d)
    out: list[list[Entry]] = []
    for i in range(d.n):
        row = []
        for j in range(d.n):
            e = b[i][j].scaled(Fraction(-2))
            if i == j:
                e = e.plus_rational(Fraction(2))
            row.append(e)
        out.append(row)
    return out


# -- spherical classification -----------------------------------------------------------


@dataclass(frozen=True)
class SphericalType:
    """A connected spherical component with its exponents."""

    family: str
    rank: int
    exponents: tuple[int, ...]
    m: int | None = None  # edge label for I2(m)

    def order(self) -> int:
        out = 1
        for e in self.exponents:
            out *= e + 1
        return out

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.m})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family


_EXCEPTIONAL_EXPONENTS = {
    "E6": (1, 4, 5, 7, 8, 11),
    "E7": (1, 5, 7, 9, 11, 13, 17),
    "E8": (1, 7, 11, 13, 17, 19, 23, 29),
    "F4": (1, 5, 7, 11),
    "H3": (1, 5, 9),
    "H4": (1, 11, 19, 29),
}


def _recognize_component(d: CoxeterDiagram, vertices: list[int]) -> SphericalType | None:
    r = len(vertices)
    sub = [[d.weight(a, b) for b in vertices] for a in vertices]
    for row in sub:
        if any(w is INF for w in row):
            return None
    if r == 1:
        return SphericalType("A", 1, (1,))
    deg = [sum(1 for b in range(r) if b != a and sub[a][b] >= 3) for a in range(r)]
    edge_count = sum(deg) // 2
    if edge_count != r - 1:
        return None  # disconnected impossible here, so there is a cycle
    if r == 2:
        m = sub[0][1]
        if m == 3:
            return SphericalType("A", 2, (1, 2))
        return SphericalType("I2", 2, (1, m - 1), m=m)
    if max(deg) > 3 or deg.count(3) > 1:
        return None
    if max(deg) == 2:
        # a path: read the weight word from one end
        end = deg.index(1)
        order = [end]
        while len(order) < r:
            nxt = [b for b in range(r) if sub[order[-1]][b] >= 3 and (len(order) < 2 or b != order[-2])]
            order.append(nxt[0])
        word = tuple(sub[order[t]][order[t + 1]] for t in range(r - 1))
        words = {word, word[::-1]}
        if all(w == 3 for w in word):
            return SphericalType("A", r, tuple(range(1, r + 1)))
        if any(w == (4,) + (3,) * (r - 2) for w in words):
            return SphericalType("B", r, tuple(range(1, 2 * r, 2)))
        if r == 4 and word == (3, 4, 3):
            return SphericalType("F4", 4, _EXCEPTIONAL_EXPONENTS["F4"])
        if r == 3 and (5, 3) in words:
            return SphericalType("H3", 3, _EXCEPTIONAL_EXPONENTS["H3"])
        if r == 4 and any(w == (5, 3, 3) for w in words):
            return SphericalType("H4", 4, _EXCEPTIONAL_EXPONENTS["H4"])
        return None
    # exactly one branch vertex: D or E, all weights 3
    if any(sub[a][b] not in (2, 3) for a in range(r) for b in range(a + 1, r)):
        return None
    center = deg.index(3)
    arms = []
    for start in (b for b in range(r) if sub[center][b] >= 3):
        length = 1
        prev, cur = center, start
        while deg[cur] == 2:
            nxt = [b for b in range(r) if sub[cur][b] >= 3 and b != prev]
            prev, cur = cur, nxt[0]
            length += 1
        if deg[cur] != 1:
            return None
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        n = r
        return SphericalType("D", n, tuple(range(1, 2 * n - 2, 2)) + (n - 1,))
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        fam = {2: "E6", 3: "E7", 4: "E8"}[arms[2]]
        return SphericalType(fam, r, _EXCEPTIONAL_EXPONENTS[fam])
    return None


def finite_type_recognize(d: CoxeterDiagram) -> list[SphericalType] | None:
    """Split into connected components and match each against the spherical catalog.

    Returns the list of component types, or None when any component is not
    spherical ("not finite" is a value, not an error).
    """
    seen: set[int] = set()
    out = []
    for start in range(d.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for u in range(d.n):
                if u not in seen and (d.weights[v][u] is INF or d.weights[v][u] >= 3):
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        t = _recognize_component(d, sorted(comp))
        if t is None:
            return None
        out.append(t)
    return out


# -- domination partial order ---------------------------------------------------------


DOMINATION_RANK_BOUND = 12


def _injection_exists(d: CoxeterDiagram, e: CoxeterDiagram) -> bool:
    """Is there an injection of d's vertices into e's with m <= m' on every pair?"""
    if d.n > e.n:
        return False
    # order d's vertices by decreasing constrainedness for better pruning
    order = sorted(range(d.n),
                   key=lambda v: -sum(1 for u in range(d.n) if u != v and d.weights[v][u] != 2))
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(pos: int) -> bool:
        if pos == d.n:
            return True
        v = order[pos]
        for target in range(e.n):
            if target in used:
                continue
            ok = True
            for u, tu in assigned.items():
                if not weight_leq(d.weights[v][u], e.weights[target][tu]):
                    ok = False
                    break
            if ok:
                assigned[v] = target
                used.add(target)
                if backtrack(pos + 1):
                    return True
                del assigned[v]
                used.remove(target)
        return False

    return backtrack(0)


def _isomorphic(d: CoxeterDiagram, e: CoxeterDiagram) -> bool:
    if d.n != e.n:
        return False
    if d.degree_sequence() != e.degree_sequence():
        return False
    order = list(range(d.n))
    used: set[int] = set()
    assigned: dict[int, int] = {}

    def backtrack(pos: int) -> bool:
        if pos == d.n:
            return True
        v = order[pos]
        for target in range(e.n):
            if target in used:
                continue
            if all(d.weights[v][u] == e.weights[target][tu] for u, tu in assigned.items()):
                assigned[v] = target
                used.add(target)
                if backtrack(pos + 1):
                    return True
                del assigned[v]
                used.remove(target)
        return False

    return backtrack(0)


def dominates(d: CoxeterDiagram, e: CoxeterDiagram) -> str:
    """The domination relation of d relative to e.

    Returns 'less' when e strictly dominates d, 'greater' when d strictly
    dominates e, 'isomorphic', or 'incomparable'.
    """
    if max(d.n, e.n) > DOMINATION_RANK_BOUND:
        raise DiagramError(f"domination search limited to rank {DOMINATION_RANK_BOUND}")
    if _isomorphic(d, e):
        return "isomorphic"
    if _injection_exists(d, e):
        return "less"
    if _injection_exists(e, d):
        return "greater"
    return "incomparable"
