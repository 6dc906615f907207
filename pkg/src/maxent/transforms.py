"""Graph transformations: local complementation, switching, line graphs, the
inverse-adjacency graph, orbit closures and the switching-class invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import DiagonalNonzero, NoEdges, NotSignedUnit, Singular, TooLarge, VertexOutOfRange
from .graph import Graph, graph6_encode
from .linalg import IntMatrix, gf2_rows, inverse_rational, rank_gf2

MAX_ORBIT_N = 9
MAX_PARTITION_N = 5
MAX_CHROMATIC_N = 10


def _check(g: Graph, i: int) -> None:
    if not 1 <= i <= g.n:
        raise VertexOutOfRange(f"vertex {i} outside 1..{g.n}")


def _lc_rows(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    nb = rows[v]
    if nb & (nb - 1) == 0:
        return rows
    out = list(rows)
    rest = nb
    while rest:
        low = rest & -rest
        k = low.bit_length() - 1
        out[k] ^= nb & ~low
        rest ^= low
    return tuple(out)


def _switch_rows(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    n = len(rows)
    bit = 1 << v
    out = [row ^ bit for row in rows]
    out[v] = rows[v] ^ (((1 << n) - 1) & ~bit)
    return tuple(out)


def local_complement(g: Graph, i: int) -> Graph:
    """Complement the subgraph induced on N(i); everything else is kept."""
    _check(g, i)
    return Graph.trusted(g.n, _lc_rows(g.rows, i - 1))


def switch(g: Graph, i: int) -> Graph:
    """Seidel switching at one vertex: toggle every pair {i, j}, j != i."""
    _check(g, i)
    return Graph.trusted(g.n, _switch_rows(g.rows, i - 1))


def switch_set(g: Graph, vertices: Iterable[int]) -> Graph:
    rows = g.rows
    for v in vertices:
        _check(g, v)
        rows = _switch_rows(rows, v - 1)
    return Graph.trusted(g.n, rows)


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order."""
    edges = g.edges()
    if not edges:
        raise NoEdges("line graph of an edgeless graph is empty")
    m = len(edges)
    rows = [0] * m
    for a in range(m):
        ea = set(edges[a])
        for b in range(a + 1, m):
            if ea & set(edges[b]):
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return Graph(m, tuple(rows))


def inverse_matrix(g: Graph) -> list[list[Fraction]]:
    if g.n == 0:
        return []
    return inverse_rational(g.adjacency())


def jaeger_inverse(g: Graph, field: str = "rational") -> Graph:
    """Graph whose adjacency is the entrywise |A(G)^-1|.

    Requires the inverse to have entries in {0, 1, -1} and a zero diagonal.
    ``field="gf2"`` inverts over GF(2) instead; that variant is exploratory.
    """
    if field == "gf2":
        return _gf2_inverse_graph(g)
    if field != "rational":
        raise ValueError(f"unknown field {field!r}")
    inv = inverse_matrix(g)
    for row in inv:
        for x in row:
            if x not in (0, 1, -1):
                raise NotSignedUnit(f"inverse has entry {x}")
    if any(inv[k][k] for k in range(g.n)):
        raise DiagonalNonzero("inverse has a nonzero diagonal entry")
    rows = tuple(sum(1 << j for j, x in enumerate(row) if x) for row in inv)
    return Graph(g.n, rows)


def _gf2_inverse_graph(g: Graph) -> Graph:
    n = g.n
    a = [row | (1 << (n + i)) for i, row in enumerate(g.rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r] >> c & 1), None)
        if p is None:
            raise Singular("adjacency matrix is singular over GF(2)")
        a[c], a[p] = a[p], a[c]
        for r in range(n):
            if r != c and a[r] >> c & 1:
                a[r] ^= a[c]
    rows = tuple(row >> n for row in a)
    if any(rows[k] >> k & 1 for k in range(n)):
        raise DiagonalNonzero("GF(2) inverse has a nonzero diagonal entry")
    return Graph(n, rows)


# orbits ---------------------------------------------------------------

_MOVES = {
    "lc": (_lc_rows,),
    "switch": (_switch_rows,),
    "both": (_lc_rows, _switch_rows),
}


def _closure(start: tuple[int, ...], kind: str) -> set[tuple[int, ...]]:
    moves = _MOVES[kind]
    n = len(start)
    seen = {start}
    queue = deque([start])
    while queue:
        rows = queue.popleft()
        for move in moves:
            for v in range(n):
                nxt = move(rows, v)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return seen


def _orbit(g: Graph, kind: str) -> list[Graph]:
    if g.n > MAX_ORBIT_N:
        raise TooLarge(f"orbit BFS limited to {MAX_ORBIT_N} vertices")
    members = [Graph.trusted(g.n, rows) for rows in _closure(g.rows, kind)]
    return sorted(members, key=graph6_encode)


def lc_orbit(g: Graph) -> list[Graph]:
    """Closure under local complementations, sorted by graph6."""
    return _orbit(g, "lc")


def switching_class(g: Graph) -> list[Graph]:
    return _orbit(g, "switch")


def lc_path(g: Graph, h: Graph) -> list[int] | None:
    """Shortest vertex sequence whose local complementations take ``g`` to ``h``."""
    if g.n != h.n:
        return None
    if g.n > MAX_ORBIT_N:
        raise TooLarge(f"orbit BFS limited to {MAX_ORBIT_N} vertices")
    target = h.rows
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int] | None] = {g.rows: None}
    queue = deque([g.rows])
    while queue:
        rows = queue.popleft()
        if rows == target:
            path = []
            while parent[rows] is not None:
                rows, v = parent[rows]
                path.append(v + 1)
            return path[::-1]
        for v in range(g.n):
            nxt = _lc_rows(rows, v)
            if nxt not in parent:
                parent[nxt] = (rows, v)
                queue.append(nxt)
    return None


@dataclass
class OrbitReport:
    generator_set: str
    n: int
    orbit_sizes: list[int]
    total_graphs: int
    transitive: bool
    orbits: list[list[str]] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "generator_set": self.generator_set,
            "n": self.n,
            "orbit_sizes": self.orbit_sizes,
            "total_graphs": self.total_graphs,
            "transitive": self.transitive,
        }


_GENERATOR_NAMES = {"lc": "lc_only", "switch": "switch_only", "both": "both"}


def orbit_partition(n: int, kind: str = "both") -> OrbitReport:
    """Partition every labeled graph on ``n`` vertices into orbits."""
    if n > MAX_PARTITION_N:
        raise TooLarge(f"full orbit partitions limited to {MAX_PARTITION_N} vertices")
    if kind not in _MOVES:
        raise ValueError(f"unknown generator set {kind!r}")
    total = 1 << (n * (n - 1) // 2)
    remaining = {Graph.from_edge_mask(n, m).rows for m in range(total)}
    orbits = []
    for mask in range(total):
        rows = Graph.from_edge_mask(n, mask).rows
        if rows not in remaining:
            continue
        orbit = _closure(rows, kind)
        remaining -= orbit
        orbits.append(sorted(graph6_encode(Graph.trusted(n, r)) for r in orbit))
    sizes = sorted((len(o) for o in orbits), reverse=True)
    return OrbitReport(_GENERATOR_NAMES[kind], n, sizes, total, len(orbits) == 1, orbits)


def combined_orbit(n: int) -> OrbitReport:
    """Closure of the empty graph under all local complementations and switchings."""
    if n > MAX_PARTITION_N:
        raise TooLarge(f"combined orbit limited to {MAX_PARTITION_N} vertices")
    total = 1 << (n * (n - 1) // 2)
    orbit = _closure(Graph.empty(n).rows, "both")
    members = sorted(graph6_encode(Graph.trusted(n, r)) for r in orbit)
    sizes = [len(orbit)]
    if len(orbit) < total:
        rest = orbit_partition(n, "both").orbit_sizes
        sizes = sorted(rest, reverse=True)
    return OrbitReport("both", n, sizes, total, len(orbit) == total, [members])


# switching invariants ------------------------------------------------


def seidel(g: Graph) -> IntMatrix:
    """Zero diagonal, +1 on edges, -1 on non-edges."""
    return [[0 if i == j else (1 if g.rows[i] >> j & 1 else -1) for j in range(g.n)] for i in range(g.n)]


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking over vertices in decreasing degree order."""
    if g.n > MAX_CHROMATIC_N:
        raise TooLarge(f"chromatic search limited to {MAX_CHROMATIC_N} vertices")
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: -g.rows[v].bit_count())
    for k in range(2, g.n + 1):
        if _colorable(g, order, k):
            return k
    return g.n


def _colorable(g: Graph, order: list[int], k: int) -> bool:
    color = [-1] * g.n

    def place(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        banned = 0
        row = g.rows[v]
        for u in range(g.n):
            if row >> u & 1 and color[u] >= 0:
                banned |= 1 << color[u]
        # only one fresh colour is worth trying (colour symmetry)
        for c in range(min(used + 1, k)):
            if not banned >> c & 1:
                color[v] = c
                if place(pos + 1, max(used, c + 1)):
                    return True
        color[v] = -1
        return False

    return place(0, 0)


def gf2_rank_of(g: Graph) -> int:
    return rank_gf2(gf2_rows(g.adjacency()))
