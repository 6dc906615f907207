"""Labeled simple graphs on at most 64 vertices.

Vertices are 1-based in every public function and 0-based inside ``Graph.rows``,
where row ``i`` is a bitmask of the neighbours of vertex ``i + 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import EmptySelection, LoopRejected, MalformedGraph6, VertexOutOfRange

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise VertexOutOfRange(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise VertexOutOfRange(f"row {i + 1} references a vertex beyond {self.n}")
            if row >> i & 1:
                raise LoopRejected(f"loop at vertex {i + 1}")
            rest = row
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i + 1}, {j + 1})")
                rest ^= low

    @classmethod
    def trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        """Skip validation; for internal callers whose rows are symmetric by construction."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def from_edge_mask(cls, n: int, mask: int) -> Graph:
        """Decode an upper-triangle bitmask in graph6 order ((0,1), (0,2), (1,2), (0,3), ...)."""
        rows = [0] * n
        bit = 0
        for j in range(1, n):
            for i in range(j):
                if mask >> bit & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                bit += 1
        return cls(n, tuple(rows))

    def edge_mask(self) -> int:
        mask = 0
        bit = 0
        for j in range(1, self.n):
            row = self.rows[j]
            for i in range(j):
                if row >> i & 1:
                    mask |= 1 << bit
                bit += 1
        return mask

    def has_edge(self, i: int, j: int) -> bool:
        """1-based adjacency test."""
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def degree(self, i: int) -> int:
        return self.rows[i - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted 1-based pairs (i < j), lexicographic order."""
        out = []
        for i, row in enumerate(self.rows):
            for j in range(i + 1, self.n):
                if row >> j & 1:
                    out.append((i + 1, j + 1))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def adjacency(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.rows]

    def __str__(self) -> str:
        return graph6_encode(self)


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


@dataclass(frozen=True)
class Cut:
    side_a: frozenset[int]
    side_b: frozenset[int]

    @classmethod
    def of(cls, n: int, side_a: Iterable[int]) -> Cut:
        a = frozenset(side_a)
        return cls(a, frozenset(range(1, n + 1)) - a)


@dataclass(frozen=True)
class Classification:
    connected: bool
    components: int
    bipartition: Bipartition | None
    tree: bool
    unicyclic: bool


def _check_vertex(n: int, v: int) -> None:
    if not 1 <= v <= n:
        raise VertexOutOfRange(f"vertex {v} outside 1..{n}")


def build_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from 1-based unordered pairs; duplicates collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise VertexOutOfRange(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for pair in edges:
        ends = tuple(pair)
        if len(ends) == 1:
            ends = ends * 2
        if len(ends) != 2:
            raise ValueError(f"edge {pair!r} is not a pair")
        i, j = ends
        _check_vertex(n, i)
        _check_vertex(n, j)
        if i == j:
            raise LoopRejected(f"loop at vertex {i}")
        rows[i - 1] |= 1 << (j - 1)
        rows[j - 1] |= 1 << (i - 1)
    return Graph(n, tuple(rows))


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise VertexOutOfRange("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(1, j) for j in range(2, leaves + 2)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``h``'s vertices are shifted past ``g``'s."""
    shift = g.n
    return Graph(g.n + h.n, g.rows + tuple(row << shift for row in h.rows))


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks (0-based bits), ordered by smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.rows[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append(comp)
    return out


def two_coloring(g: Graph) -> Bipartition | None:
    """BFS 2-colouring, each component's smallest vertex on the left; None if an odd cycle exists."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            row = g.rows[u]
            for v in range(g.n):
                if row >> v & 1:
                    if color[v] < 0:
                        color[v] = 1 - color[u]
                        queue.append(v)
                    elif color[v] == color[u]:
                        return None
    left = frozenset(i + 1 for i in range(g.n) if color[i] == 0)
    right = frozenset(i + 1 for i in range(g.n) if color[i] == 1)
    return Bipartition(left, right)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def classify(g: Graph) -> Classification:
    ncomp = len(components(g))
    connected = ncomp == 1
    m = g.num_edges
    return Classification(
        connected=connected,
        components=ncomp,
        bipartition=two_coloring(g),
        tree=connected and m == g.n - 1,
        unicyclic=connected and m == g.n,
    )


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and len(components(g)) == 1


def neighborhood(g: Graph, i: int) -> frozenset[int]:
    _check_vertex(g.n, i)
    row = g.rows[i - 1]
    return frozenset(j + 1 for j in range(g.n) if row >> j & 1)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled 1..|S| in increasing order."""
    keep = sorted(set(vertices))
    if not keep:
        raise EmptySelection("induced subgraph needs at least one vertex")
    for v in keep:
        _check_vertex(g.n, v)
    index = [v - 1 for v in keep]
    rows = []
    for old in index:
        row = g.rows[old]
        new = 0
        for k, other in enumerate(index):
            if row >> other & 1:
                new |= 1 << k
        rows.append(new)
    return Graph(len(keep), tuple(rows))


def delete_vertices(g: Graph, vertices: Iterable[int]) -> Graph:
    """Like :func:`induced_subgraph` on the complement, but allows the 0-vertex result."""
    drop = set(vertices)
    keep = [v for v in range(1, g.n + 1) if v not in drop]
    if not keep:
        return Graph.empty(0)
    return induced_subgraph(g, keep)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Vertex ``v`` (1-based) becomes ``perm[v - 1]``."""
    rows = [0] * g.n
    for i, row in enumerate(g.rows):
        for j in range(g.n):
            if row >> j & 1:
                rows[perm[i] - 1] |= 1 << (perm[j] - 1)
    return Graph(g.n, tuple(rows))


# graph6 -----------------------------------------------------------------


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_size(g.n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise MalformedGraph6("unsupported or truncated size field")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        if n < 63:
            raise MalformedGraph6("long size form used for n < 63")
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_VERTICES:
        raise MalformedGraph6(f"graph6 declares {n} vertices, limit is {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data characters, got {len(body)}")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_dot(g: Graph) -> str:
    lines = ["graph {"]
    lines += [f"  {v};" for v in range(1, g.n + 1) if not g.rows[v - 1]]
    lines += [f"  {i} -- {j};" for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, in edge-mask order."""
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph.from_edge_mask(n, mask)
