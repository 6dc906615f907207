"""Slow, obviously-correct reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def det_cofactor(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1 :] for row in m[1:]]
            total += (-1) ** j * m[0][j] * det_cofactor(minor)
    return total


def rank_fraction(m: list[list[int]]) -> int:
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def rank_mod2(m: list[list[int]]) -> int:
    a = [[x & 1 for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                a[i] = [x ^ y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def graph_state_signs(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """(-1)**(number of edges with both ends set), index with vertex 1 as the top bit."""
    out = []
    for x in product((0, 1), repeat=n):
        k = sum(x[i - 1] & x[j - 1] for i, j in edges)
        out.append(-1 if k % 2 else 1)
    return out


def local_complement_naive(adj: list[list[int]], v: int) -> list[list[int]]:
    """v is 1-based; toggles every pair of distinct neighbours of v."""
    n = len(adj)
    nb = [j for j in range(n) if adj[v - 1][j]]
    out = [row[:] for row in adj]
    for a in nb:
        for b in nb:
            if a != b:
                out[a][b] ^= 1
    return out
