"""Enumerators for trees and bipartite graphs.

Two kinds of families appear here.  ``all_labeled_*`` yield every labeled
object.  ``*_shapes`` / ``*_forms`` yield a much smaller family that contains
a relabeling of every labeled object; any property invariant under vertex
relabeling (rank, nullity, cut ranks, chromatic number, ...) holds for all
labeled objects iff it holds on the shapes.
"""

from __future__ import annotations

import heapq
from itertools import combinations, product
from typing import Iterator

import numpy as np

from .graph import Graph


def prufer_decode(seq: tuple[int, ...] | list[int], n: int) -> Graph:
    """Labeled tree from a Prüfer sequence over 0..n-1 (length n - 2)."""
    if n == 1:
        return Graph.empty(1)
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    rows = [0] * n
    for v in seq:
        leaf = heapq.heappop(leaves)
        rows[leaf] |= 1 << v
        rows[v] |= 1 << leaf
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    a, b = heapq.heappop(leaves), heapq.heappop(leaves)
    rows[a] |= 1 << b
    rows[b] |= 1 << a
    return Graph.trusted(n, tuple(rows))


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """All n**(n-2) labeled trees (Cayley), via Prüfer sequences."""
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform random labeled tree."""
    if n <= 2:
        return prufer_decode((), n)
    return prufer_decode(rng.integers(0, n, n - 2).tolist(), n)


def _parent_tree(parents: tuple[int, ...]) -> Graph:
    n = len(parents) + 1
    rows = [0] * n
    for child, p in enumerate(parents, start=1):
        rows[child] |= 1 << p
        rows[p] |= 1 << child
    return Graph.trusted(n, tuple(rows))


def tree_shapes(n: int) -> Iterator[Graph]:
    """Trees whose vertices are numbered in breadth-first order from vertex 1.

    Parent sequences are non-decreasing with parent(v) < v, so there are
    Catalan(n - 1) of them.  Every tree has a BFS numbering, hence every
    labeled tree is a relabeling of one of these.
    """
    if n == 1:
        yield Graph.empty(1)
        return

    def grow(prefix: list[int]):
        v = len(prefix) + 1
        if v == n:
            yield tuple(prefix)
            return
        lo = prefix[-1] if prefix else 0
        for p in range(lo, v):
            prefix.append(p)
            yield from grow(prefix)
            prefix.pop()

    for parents in grow([]):
        yield _parent_tree(parents)


def bipartite_forms(n: int) -> Iterator[tuple[int, Graph]]:
    """``(k, G)`` with left side {1..k}, k <= n/2, and every k x (n-k) biadjacency.

    Every bipartite graph on n vertices has a 2-colouring with a side of size
    at most n/2, so this covers all labeled bipartite graphs up to relabeling.
    """
    for k in range(n // 2 + 1):
        r = n - k
        for bits in range(1 << (k * r)):
            rows = [0] * n
            for i in range(k):
                chunk = bits >> (i * r) & ((1 << r) - 1)
                rows[i] = chunk << k
                for j in range(r):
                    if chunk >> j & 1:
                        rows[k + j] |= 1 << i
            yield k, Graph.trusted(n, tuple(rows))


def perfect_matchings(vertices: list[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings of an even-size vertex list."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for k, partner in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1 :]):
            yield [(first, partner)] + m


def edge_subsets(n: int, m: int) -> Iterator[int]:
    """Edge masks (graph6 bit order) with exactly ``m`` edges."""
    total = n * (n - 1) // 2
    for combo in combinations(range(total), m):
        mask = 0
        for b in combo:
            mask |= 1 << b
        yield mask
