"""Certified generators of nonsingular two-colorable graphs and the exhaustive
searches around them (minimum edge counts, singular fraction, anti-Hadamard
maxima)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial
from typing import Iterator, Sequence

import numpy as np

from .enumeration import edge_subsets, perfect_matchings, prufer_decode, tree_shapes
from .errors import (
    BadModulus,
    BadSelection,
    NonBinaryEntry,
    NotALeaf,
    NotAReplaceablePath,
    NotATree,
    NotBipartite,
    NotElementaryUnicyclic,
    NotPerfectTree,
    OddOrder,
    TooLarge,
    VertexOutOfRange,
)
from .graph import Bipartition, Cut, Graph, components, cycle_graph, delete_vertices, graph6_decode, graph6_encode, is_tree, two_coloring
from .linalg import batch_det, gf2_rows, rank_gf2, rank_int
from .oracle import MAX_CUT_SEARCH, max_cut_rank
from .parallel import run_shards, split_range

MAX_ANTI_HADAMARD_N = 5
MAX_MIN_EDGE_N = 7
MAX_EXACT_SINGULAR_N = 4
MAX_MC_SINGULAR_N = 8
MC_BLOCK = 1 << 16

# perfect trees -------------------------------------------------------


def _require_even(n: int) -> None:
    if n < 2 or n % 2:
        raise OddOrder(f"perfect trees need an even order >= 2, got {n}")


def random_perfect_tree(n: int, rng: np.random.Generator) -> Graph:
    """Apply the recursive rule: K2, or two perfect trees joined by one edge."""
    _require_even(n)
    labels = rng.permutation(n).tolist()
    rows = [0] * n

    def build(verts: list[int]) -> None:
        if len(verts) == 2:
            a, b = verts
            rows[a] |= 1 << b
            rows[b] |= 1 << a
            return
        pairs = len(verts) // 2
        k = 2 * int(rng.integers(1, pairs))
        left, right = verts[:k], verts[k:]
        build(left)
        build(right)
        a = left[int(rng.integers(len(left)))]
        b = right[int(rng.integers(len(right)))]
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    build(labels)
    return Graph.trusted(n, tuple(rows))


def _join_pairs(n: int, matching: list[tuple[int, int]], pair_tree: Graph, ends: Sequence[int]) -> Graph:
    rows = [0] * n
    for a, b in matching:
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    for (p, q), choice in zip(pair_tree.edges(), ends):
        a = matching[p - 1][choice & 1]
        b = matching[q - 1][choice >> 1]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph.trusted(n, tuple(rows))


def _pair_trees(m: int, labeled: bool) -> Iterator[Graph]:
    if m <= 2:
        yield prufer_decode((), m)
        return
    if labeled:
        for seq in product(range(m), repeat=m - 2):
            yield prufer_decode(seq, m)
    else:
        yield from tree_shapes(m)


def enumerate_perfect_trees(n: int) -> Iterator[Graph]:
    """Every labeled perfect tree on ``n`` vertices exactly once.

    A tree has at most one perfect matching; contracting it leaves a tree on
    the n/2 matched pairs whose edges each pick one endpoint per pair, so
    (matching, pair tree, endpoint choices) is a bijection.
    """
    _require_even(n)
    m = n // 2
    for matching in perfect_matchings(list(range(n))):
        for pt in _pair_trees(m, labeled=True):
            for ends in product(range(4), repeat=m - 1):
                yield _join_pairs(n, matching, pt, ends)


def perfect_tree_shapes(n: int) -> Iterator[Graph]:
    """Perfect trees matched on {1,2},{3,4},...; a relabeling of every labeled perfect tree occurs."""
    _require_even(n)
    m = n // 2
    matching = [(2 * k, 2 * k + 1) for k in range(m)]
    for pt in _pair_trees(m, labeled=False):
        for ends in product(range(4), repeat=m - 1):
            yield _join_pairs(n, matching, pt, ends)


def count_labeled_perfect_trees(n: int) -> int:
    _require_even(n)
    m = n // 2
    matchings = factorial(n) // (2**m * factorial(m))
    pair_trees = m ** (m - 2) if m >= 2 else 1
    return matchings * pair_trees * 4 ** (m - 1)


def gen_perfect_tree(n: int, mode: str = "random", seed: int = 0) -> Graph | Iterator[Graph]:
    if mode == "random":
        return random_perfect_tree(n, np.random.default_rng(seed))
    if mode == "enumerate":
        return enumerate_perfect_trees(n)
    raise ValueError(f"unknown mode {mode!r}")


def matching_number_tree(t: Graph) -> int:
    """Leaf-greedy maximum matching: match a leaf with its neighbour, delete both."""
    if not is_tree(t):
        raise NotATree("matching_number_tree needs a tree")
    rows = list(t.rows)
    alive = (1 << t.n) - 1
    size = 0
    while alive:
        progressed = False
        v_mask = alive
        while v_mask:
            low = v_mask & -v_mask
            v_mask ^= low
            v = low.bit_length() - 1
            if not alive >> v & 1:
                continue
            nb = rows[v] & alive
            if nb == 0:
                alive &= ~low
                progressed = True
            elif nb & (nb - 1) == 0:
                alive &= ~(low | nb)
                size += 1
                progressed = True
        if not progressed:
            raise AssertionError("a forest always has a leaf or an isolated vertex")
    return size


def is_perfect_tree(t: Graph) -> bool:
    return t.n % 2 == 0 and is_tree(t) and 2 * matching_number_tree(t) == t.n


# cographs -----------------------------------------------------------


def random_cograph(n: int, rng: np.random.Generator) -> tuple[Graph, str]:
    """Random cotree: leaves are vertices, internal nodes union (+) or join (*)."""
    if n < 1:
        raise VertexOutOfRange("a cograph needs at least one vertex")
    labels = rng.permutation(n).tolist()
    rows = [0] * n

    def build(verts: list[int]) -> tuple[int, str]:
        if len(verts) == 1:
            return 1 << verts[0], str(verts[0] + 1)
        k = int(rng.integers(1, len(verts)))
        ma, ta = build(verts[:k])
        mb, tb = build(verts[k:])
        if rng.integers(2):
            for v in verts[:k]:
                rows[v] |= mb
            for v in verts[k:]:
                rows[v] |= ma
            return ma | mb, f"join({ta},{tb})"
        return ma | mb, f"union({ta},{tb})"

    _, trace = build(labels)
    return Graph.trusted(n, tuple(rows)), trace


def royle_condition(g: Graph) -> bool:
    """All adjacency rows nonzero and pairwise distinct."""
    return all(g.rows) and len(set(g.rows)) == g.n


def gen_cograph_certified(n: int, seed: int) -> tuple[Graph, str] | None:
    """A random cograph, kept only when it satisfies the Royle condition."""
    g, trace = random_cograph(n, np.random.default_rng(seed))
    if not royle_condition(g):
        return None
    return g, trace


# bipartite doubles and anti-Hadamard matrices -----------------------


def bipartite_double(m: Sequence[Sequence[int]]) -> tuple[Graph, Bipartition]:
    """Adjacency [[0, M], [M^T, 0]]; left side 1..n, right side n+1..2n."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("bipartite double needs a square matrix")
    rows = [0] * (2 * n)
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if x not in (0, 1):
                raise NonBinaryEntry(f"entry {x!r} at ({i + 1}, {j + 1})")
            if x:
                rows[i] |= 1 << (n + j)
                rows[n + j] |= 1 << i
    left = frozenset(range(1, n + 1))
    right = frozenset(range(n + 1, 2 * n + 1))
    return Graph(2 * n, tuple(rows)), Bipartition(left, right)


def double_to_matrix(g: Graph) -> list[list[int]]:
    """Recover M from the top-right block of a bipartite double."""
    n = g.n // 2
    return [[g.rows[i] >> (n + j) & 1 for j in range(n)] for i in range(n)]


REFERENCE_ANTI_HADAMARD_4 = [[1, 1, 0, 1], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]]


def _matrices(n: int, start: int, end: int) -> np.ndarray:
    idx = np.arange(start, end, dtype=np.int64)
    shifts = np.arange(n * n, dtype=np.int64)
    return ((idx[:, None] >> shifts[None, :]) & 1).reshape(-1, n, n)


def matrix_index(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    return sum(int(m[i][j]) << (i * n + j) for i in range(n) for j in range(n))


def _mu_chunk(args: tuple[int, int, int]) -> tuple[tuple[int, int] | None, list[int], int]:
    n, start, end = args
    mats = _matrices(n, start, end)
    det = batch_det(mats)
    keep = det != 0
    mats, det = mats[keep], det[keep]
    index = np.arange(start, end, dtype=np.int64)[keep]
    if not len(det):
        return None, [], 0
    num = np.zeros(len(det), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(mats, i, axis=1), j, axis=2)
            cof = batch_det(minor)
            num += cof * cof
    den = det * det
    g = np.gcd(num, den)
    num, den = num // g, den // g
    pairs = np.unique(np.stack([num, den], axis=1), axis=0)
    best = max((Fraction(int(a), int(b)) for a, b in pairs))
    hit = (num == best.numerator) & (den == best.denominator)
    return (best.numerator, best.denominator), index[hit].tolist(), int(len(det))


@dataclass
class SearchReport:
    n: int
    predicate: str
    optimum: int | Fraction | None
    witnesses: list[str]
    search_space: int
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        opt = self.optimum
        return {
            "n": self.n,
            "predicate": self.predicate,
            "optimum": str(opt) if isinstance(opt, Fraction) else opt,
            "witnesses": self.witnesses,
            "search_space": self.search_space,
            **self.extra,
        }


def anti_hadamard_search(n: int, workers: int | None = None, chunk: int = 1 << 18) -> SearchReport:
    """Exact maximum of mu over invertible n x n (0,1)-matrices, with every maximiser.

    Witnesses are graph6 strings of the bipartite doubles; ``extra["matrices"]``
    holds the matrices themselves.
    """
    if n < 1 or n > MAX_ANTI_HADAMARD_N:
        raise TooLarge(f"anti-Hadamard search supports 1 <= n <= {MAX_ANTI_HADAMARD_N}")
    total = 1 << (n * n)
    shards = [(n, a, b) for a, b in split_range(total, max(1, -(-total // chunk)))]
    results = run_shards(_mu_chunk, shards, workers)
    best = None
    for frac, _, _ in results:
        if frac is not None and (best is None or Fraction(*frac) > best):
            best = Fraction(*frac)
    witnesses_idx = [i for frac, idx, _ in results if frac is not None and Fraction(*frac) == best for i in idx]
    invertible = sum(r[2] for r in results)
    mats = [_matrices(n, i, i + 1)[0].tolist() for i in witnesses_idx]
    return SearchReport(
        n=n,
        predicate="anti_hadamard",
        optimum=best,
        witnesses=[graph6_encode(bipartite_double(m)[0]) for m in mats],
        search_space=total,
        extra={"invertible": invertible, "matrices": mats},
    )


# unicyclic graphs ----------------------------------------------------


def _check_selection(l: int, selected: Sequence[int]) -> list[int]:
    sel = sorted(set(selected))
    t = len(sel)
    if len(sel) != len(selected):
        raise BadSelection("selected vertices repeat")
    if not 0 < t <= l:
        raise BadSelection(f"need 0 < t <= l, got t={t}, l={l}")
    if any(not 1 <= v <= l for v in sel):
        raise BadSelection("selected vertices must lie on the cycle 1..l")
    if (l - t) % 2:
        raise BadSelection(f"need l = t (mod 2), got l={l}, t={t}")
    gaps = [b - a - 1 for a, b in zip(sel, sel[1:])] + [l - sel[-1] + sel[0] - 1]
    if any(gap % 2 for gap in gaps):
        raise BadSelection(f"odd gap between selected vertices: {gaps}")
    return sel


def decorated_cycle(l: int, selected: Sequence[int]) -> Graph:
    """C_l with one pendant vertex on each selected vertex, no validity checks."""
    base = cycle_graph(l)
    sel = sorted(selected)
    rows = list(base.rows) + [0] * len(sel)
    for k, v in enumerate(sel):
        p = l + k
        rows[v - 1] |= 1 << p
        rows[p] |= 1 << (v - 1)
    return Graph(l + len(sel), tuple(rows))


def gen_elementary_unicyclic(l: int, selected: Sequence[int] | None = None) -> Graph:
    """``selected=None``: the cycle C_l (l not divisible by 4); otherwise the decorated cycle."""
    if l < 3:
        raise BadSelection("a cycle needs at least 3 vertices")
    if selected is None:
        if l % 4 == 0:
            raise BadModulus(f"C_{l} has l = 0 (mod 4)")
        return cycle_graph(l)
    return decorated_cycle(l, _check_selection(l, selected))


def _cycle_order(g: Graph, cycle_mask: int) -> list[int]:
    start = (cycle_mask & -cycle_mask).bit_length() - 1
    order = [start]
    prev, cur = -1, start
    while True:
        nb = g.rows[cur] & cycle_mask
        nxt = [v for v in range(g.n) if nb >> v & 1 and v != prev]
        if not nxt or nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def is_elementary_unicyclic(g: Graph) -> bool:
    if g.num_edges != g.n or len(components(g)) != 1:
        return False
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if alive >> v & 1 and (g.rows[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    cycle = alive
    l = cycle.bit_count()
    outside = [v for v in range(g.n) if not cycle >> v & 1]
    if not outside:
        return l % 4 != 0
    hosts = []
    for v in outside:
        if g.rows[v].bit_count() != 1 or not g.rows[v] & cycle:
            return False
        hosts.append(g.rows[v].bit_length() - 1)
    if len(set(hosts)) != len(hosts):
        return False
    order = _cycle_order(g, cycle)
    pos = {v: k + 1 for k, v in enumerate(order)}
    try:
        _check_selection(l, [pos[h] for h in hosts])
    except BadSelection:
        return False
    return True


def join_graphs(t: Graph, u: Graph, a: int, b: int) -> Graph:
    """Disjoint union with ``u`` shifted past ``t`` plus the edge {a, |t| + b}."""
    if not 1 <= a <= t.n or not 1 <= b <= u.n:
        raise VertexOutOfRange("join vertex outside its graph")
    shift = t.n
    rows = list(t.rows) + [row << shift for row in u.rows]
    p, q = a - 1, shift + b - 1
    rows[p] |= 1 << q
    rows[q] |= 1 << p
    return Graph(t.n + u.n, tuple(rows))


def join_tree_unicyclic(t: Graph, u: Graph, a: int, b: int) -> Graph:
    if not is_perfect_tree(t):
        raise NotPerfectTree("first argument is not a perfect tree")
    if not is_elementary_unicyclic(u):
        raise NotElementaryUnicyclic("second argument is not an elementary unicyclic graph")
    return join_graphs(t, u, a, b)


def elementary_unicyclic_graphs(max_vertices: int) -> Iterator[tuple[str, Graph]]:
    """Every elementary unicyclic graph in construction form with at most ``max_vertices`` vertices."""
    for l in range(3, max_vertices + 1):
        if l % 4:
            yield f"cycle({l})", cycle_graph(l)
        for t in range(1, min(l, max_vertices - l) + 1):
            if (l - t) % 2:
                continue
            for sel in combinations(range(1, l + 1), t):
                try:
                    g = gen_elementary_unicyclic(l, sel)
                except BadSelection:
                    continue
                yield f"decorated({l},{list(sel)})", g


# certification ------------------------------------------------------


def max_bipartite_matching(g: Graph, left: frozenset[int]) -> int:
    """Kuhn's augmenting paths; equals the minimum vertex cover size (König)."""
    lefts = sorted(v - 1 for v in left)
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        row = g.rows[u]
        for v in range(g.n):
            if row >> v & 1 and v not in seen:
                seen.add(v)
                if v not in match_right or augment(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    return sum(augment(u, set()) for u in lefts)


@dataclass
class Certificate:
    graph: Graph
    bipartition: Bipartition
    rank_real: int
    rank_gf2: int
    witness_cut: Cut | None
    es_lower: Fraction
    es_upper: Fraction
    verdict: str
    cover_bound: int

    def to_dict(self) -> dict:
        return {
            "graph6": graph6_encode(self.graph),
            "n": self.graph.n,
            "bipartition": [sorted(self.bipartition.left), sorted(self.bipartition.right)],
            "rank_real": self.rank_real,
            "rank_gf2": self.rank_gf2,
            "witness_cut": sorted(self.witness_cut.side_a) if self.witness_cut else None,
            "es_lower": str(self.es_lower),
            "es_upper": str(self.es_upper),
            "cover_bound": self.cover_bound,
            "verdict": self.verdict,
        }


MAXIMAL = "Maximal"
NOT_MAXIMAL = "NotMaximal"
INCONCLUSIVE = "Inconclusive"


def certify_max_schmidt(g: Graph) -> Certificate:
    """Bracket the Schmidt measure of a two-colorable graph state.

    Lower bound: the best GF(2) cut rank (a witnessed Schmidt rank).  Upper
    bound: floor(n/2).  A vertex cover of size c also writes the state as
    2**c product terms, so a cover smaller than floor(n/2) rules maximality
    out; otherwise an unmatched bracket is inconclusive.
    """
    bip = two_coloring(g)
    if bip is None:
        raise NotBipartite("graph has an odd cycle")
    if g.n > MAX_CUT_SEARCH:
        raise TooLarge(f"cut search limited to {MAX_CUT_SEARCH} vertices")
    lower, witness = max_cut_rank(g, bip.left)
    upper = g.n // 2
    cover = max_bipartite_matching(g, bip.left)
    if lower == upper:
        verdict = MAXIMAL
    elif cover < upper:
        verdict = NOT_MAXIMAL
    else:
        verdict = INCONCLUSIVE
    return Certificate(
        graph=g,
        bipartition=bip,
        rank_real=rank_int(g.adjacency()) if g.n else 0,
        rank_gf2=rank_gf2(gf2_rows(g.adjacency())),
        witness_cut=witness,
        es_lower=Fraction(lower),
        es_upper=Fraction(upper),
        verdict=verdict,
        cover_bound=cover,
    )


# exhaustive searches ------------------------------------------------


def _adjacency_batch(n: int, masks: Sequence[int]) -> np.ndarray:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    m = np.asarray(masks, dtype=np.int64)
    out = np.zeros((len(m), n, n), dtype=np.int64)
    for b, (i, j) in enumerate(pairs):
        bit = (m >> b) & 1
        out[:, i, j] = bit
        out[:, j, i] = bit
    return out


def _min_edge_chunk(args: tuple[int, str, bool, list[int]]) -> list[int]:
    n, predicate, connected, masks = args
    if connected:
        masks = [mk for mk in masks if len(components(Graph.from_edge_mask(n, mk))) == 1]
    if not masks:
        return []
    if predicate == "nonsingular_any":
        det = batch_det(_adjacency_batch(n, masks))
        return [mk for mk, d in zip(masks, det.tolist()) if d]
    hits = []
    for mk in masks:
        g = Graph.from_edge_mask(n, mk)
        if two_coloring(g) is not None and max_cut_rank(g)[0] == n // 2:
            hits.append(mk)
    return hits


PREDICATES = ("nonsingular_any", "bipartite_maximal")


def min_edge_search(
    n: int, predicate: str = "nonsingular_any", connected: bool = False, workers: int | None = None, shard_size: int = 4096
) -> SearchReport:
    """Smallest edge count among labeled graphs on ``n`` vertices meeting ``predicate``.

    Edge counts are scanned upward and every graph with that count is
    tested, so the first count with a hit is the minimum; all hits at that
    count are returned as witnesses.
    """
    if n > MAX_MIN_EDGE_N:
        raise TooLarge(f"minimum-edge search limited to {MAX_MIN_EDGE_N} vertices")
    if predicate not in PREDICATES:
        raise ValueError(f"unknown predicate {predicate!r}")
    total_pairs = n * (n - 1) // 2
    examined = 0
    for m in range(total_pairs + 1):
        masks = list(edge_subsets(n, m))
        examined += len(masks)
        shards = [(n, predicate, connected, masks[a:b]) for a, b in split_range(len(masks), max(1, -(-len(masks) // shard_size)))]
        hits = [mk for part in run_shards(_min_edge_chunk, shards, workers) for mk in part]
        if hits:
            return SearchReport(
                n=n,
                predicate=predicate,
                optimum=m,
                witnesses=[graph6_encode(Graph.from_edge_mask(n, mk)) for mk in hits],
                search_space=examined,
                extra={"connected": connected, "total_graphs": 1 << total_pairs},
            )
    return SearchReport(n, predicate, None, [], examined, {"connected": connected, "total_graphs": 1 << total_pairs})


def min_edge_formula(n: int, connected: bool) -> int:
    """Closed forms for the nonsingular minimum-edge counts."""
    if connected:
        return n - 1 if n % 2 == 0 else n
    return n // 2 if n % 2 == 0 else (n + 3) // 2


def witness_satisfies(report: SearchReport, g6: str) -> bool:
    """Re-check a decoded witness against the report's predicate."""
    g = graph6_decode(g6)
    if report.predicate == "anti_hadamard":
        from .linalg import mu_measure

        return mu_measure(double_to_matrix(g)) == report.optimum
    if g.num_edges != report.optimum:
        return False
    if report.extra.get("connected") and len(components(g)) != 1:
        return False
    if report.predicate == "nonsingular_any":
        return rank_int(g.adjacency()) == g.n
    return two_coloring(g) is not None and max_cut_rank(g)[0] == g.n // 2


def _singular_exact_chunk(args: tuple[int, int, int]) -> int:
    n, start, end = args
    return int((batch_det(_matrices(n, start, end)) == 0).sum())


def _singular_mc_block(args: tuple[int, int, int, int]) -> int:
    n, seed, block, size = args
    rng = np.random.Generator(np.random.Philox(key=np.array([seed, block], dtype=np.uint64)))
    mats = rng.integers(0, 2, size=(size, n, n), dtype=np.int64)
    return int((batch_det(mats) == 0).sum())


def singular_fraction(n: int, samples: int | None = None, seed: int = 0, workers: int | None = None) -> SearchReport:
    """Fraction of singular n x n (0,1)-matrices: exact for n <= 4, Monte Carlo above.

    Monte Carlo draws come from Philox keyed by (seed, block index) in fixed
    blocks of 2**16, so estimates do not depend on the worker count.
    """
    conjecture = Fraction(n * n, 2**n)
    if n < 1:
        raise ValueError("n must be positive")
    if samples is None:
        if n > MAX_EXACT_SINGULAR_N:
            raise TooLarge(f"exact enumeration limited to n <= {MAX_EXACT_SINGULAR_N}; pass samples for Monte Carlo")
        total = 1 << (n * n)
        shards = [(n, a, b) for a, b in split_range(total, max(1, total // MC_BLOCK))]
        singular = sum(run_shards(_singular_exact_chunk, shards, workers))
        return SearchReport(
            n=n,
            predicate="singular",
            optimum=Fraction(singular, total),
            witnesses=[],
            search_space=total,
            extra={"mode": "exact", "singular": singular, "conjecture": str(conjecture)},
        )
    if n > MAX_MC_SINGULAR_N:
        raise TooLarge(f"Monte Carlo limited to n <= {MAX_MC_SINGULAR_N}")
    blocks = [(n, seed, b, min(MC_BLOCK, samples - b * MC_BLOCK)) for b in range(-(-samples // MC_BLOCK))]
    singular = sum(run_shards(_singular_mc_block, blocks, workers))
    p = singular / samples
    stderr = (p * (1 - p) / samples) ** 0.5
    return SearchReport(
        n=n,
        predicate="singular",
        optimum=Fraction(singular, samples),
        witnesses=[],
        search_space=samples,
        extra={
            "mode": "monte_carlo",
            "singular": singular,
            "seed": seed,
            "generator": "philox(key=(seed, block)), block=65536",
            "estimate": p,
            "stderr": stderr,
            "conjecture": str(conjecture),
        },
    )


# nullity-preserving operations --------------------------------------


def pendant_pair_delete(g: Graph, leaf: int) -> Graph:
    """Delete a degree-one vertex together with its neighbour."""
    if not 1 <= leaf <= g.n:
        raise VertexOutOfRange(f"vertex {leaf} outside 1..{g.n}")
    row = g.rows[leaf - 1]
    if row.bit_count() != 1:
        raise NotALeaf(f"vertex {leaf} has degree {row.bit_count()}")
    return delete_vertices(g, [leaf, row.bit_length()])


PATH_VARIANTS = {"six_vertices": 6, "six_edges": 7}
DEFAULT_PATH_VARIANT = "six_vertices"


def path_replace(g: Graph, path: Sequence[int], variant: str = DEFAULT_PATH_VARIANT) -> Graph:
    """Replace an induced path by an edge between its ends.

    ``six_vertices`` takes a path on 6 vertices (4 internal), ``six_edges``
    one on 7 vertices (5 internal); internal vertices must have degree 2.
    """
    if variant not in PATH_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    p = list(path)
    if len(p) != PATH_VARIANTS[variant] or len(set(p)) != len(p):
        raise NotAReplaceablePath(f"{variant} needs {PATH_VARIANTS[variant]} distinct vertices")
    if any(not 1 <= v <= g.n for v in p):
        raise VertexOutOfRange("path vertex outside the graph")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise NotAReplaceablePath(f"{a} and {b} are not adjacent")
    for a, b in combinations(range(len(p)), 2):
        if b - a > 1 and g.has_edge(p[a], p[b]):
            raise NotAReplaceablePath("path is not induced")
    if any(g.degree(v) != 2 for v in p[1:-1]):
        raise NotAReplaceablePath("internal path vertices must have degree 2")
    rows = list(g.rows)
    a, b = p[0] - 1, p[-1] - 1
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    return delete_vertices(Graph(g.n, tuple(rows)), p[1:-1])


def nullity_of(g: Graph) -> int:
    return g.n - rank_int(g.adjacency()) if g.n else 0
