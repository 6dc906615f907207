"""Exact linear algebra over the integers, the rationals and GF(2).

No floating point is used here.  Integer matrices are plain nested lists of
Python ints (arbitrary precision); GF(2) matrices are lists of row bitmasks.
The batched determinant works on int64 numpy arrays and refuses inputs whose
Hadamard bound could overflow, so it is exact as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, Singular

IntMatrix = list[list[int]]
RationalMatrix = list[list[Fraction]]


def _copy(m: Sequence[Sequence[int]]) -> IntMatrix:
    rows = [list(r) for r in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


def _require_square(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if any(len(r) != n for r in m):
        raise DimensionMismatch("matrix is not square")
    return n


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _bareiss(a: IntMatrix) -> tuple[int, int]:
    """In-place fraction-free elimination. Returns (rank, signed last pivot).

    Pivot is the first nonzero entry at or below the current row, columns
    scanned left to right.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        piv = a[r][c]
        row_r = a[r]
        for i in range(r + 1, nrows):
            row_i = a[i]
            f = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r, sign * prev


def rank_int(m: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by Bareiss elimination."""
    a = _copy(m)
    if not a or not a[0]:
        return 0
    return _bareiss(a)[0]


def det_int(m: Sequence[Sequence[int]]) -> int:
    n = _require_square(m)
    if n == 0:
        return 1
    a = _copy(m)
    rank, last = _bareiss(a)
    return last if rank == n else 0


def rank_gf2(rows: Sequence[int], ncols: int | None = None) -> int:
    """Rank over GF(2) of a matrix given as row bitmasks.

    ``ncols`` is accepted for interface symmetry; elimination keys on the
    lowest set bit of each row so it is not needed.
    """
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
    return len(basis)


def gf2_rows(m: Sequence[Sequence[int]]) -> list[int]:
    """Pack a 0/1 (or integer, reduced mod 2) matrix into row bitmasks, column j at bit j."""
    return [sum((x & 1) << j for j, x in enumerate(row)) for row in m]


def inverse_rational(m: Sequence[Sequence[int]]) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan over Fraction; verified against the input."""
    n = _require_square(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise Singular("matrix is singular")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    inv = [row[n:] for row in a]
    if matmul(m, inv) != identity(n):
        raise ArithmeticError("inverse check failed")
    return inv


@dataclass(frozen=True)
class CharPoly:
    """Monic integer polynomial; ``coeffs[k]`` multiplies x**(degree - k)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def zero_multiplicity(self) -> int:
        k = 0
        for c in reversed(self.coeffs):
            if c:
                break
            k += 1
        return k

    def __str__(self) -> str:
        terms = []
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            p = d - k
            mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out


def char_poly(m: Sequence[Sequence[int]]) -> CharPoly:
    """det(xI - M) by the Faddeev-LeVerrier recurrence in integer arithmetic.

    Uses M_k = A M_{k-1} + c_{n-k+1} I and c_{n-k} = -tr(A M_k) / k; the
    division is exact for integer A.
    """
    n = _require_square(m)
    a = _copy(m)
    coeffs = [1]
    mk = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{prev} I, with M_0 = 0
        prod = matmul(a, mk) if k > 1 else [[0] * n for _ in range(n)]
        for i in range(n):
            prod[i][i] += c
        mk = prod
        am = matmul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("non-exact Faddeev-LeVerrier step")
        c = -tr // k
        coeffs.append(c)
    return CharPoly(tuple(coeffs))


def nullity(m: Sequence[Sequence[int]]) -> int:
    return len(m) - rank_int(m)


def mu_measure(m: Sequence[Sequence[int]]) -> Fraction:
    """Sum of squared entries of the inverse."""
    return sum((x * x for row in inverse_rational(m) for x in row), Fraction(0))


# batched ---------------------------------------------------------------

_INT64_SAFE = 1 << 61


def hadamard_bound_sq(a: np.ndarray) -> int:
    """Largest squared Hadamard bound over a batch (B, n, n); computed in Python ints."""
    norms = (a.astype(np.int64) ** 2).sum(axis=2)
    worst = norms.max(axis=0) if len(a) else np.zeros(a.shape[1], dtype=np.int64)
    out = 1
    for v in worst.tolist():
        out *= max(int(v), 1)
    return out


def batch_det(a: np.ndarray) -> np.ndarray:
    """Exact determinants of a batch of small integer matrices, shape (B, n, n).

    Bareiss intermediates are minors of the input, so the squared Hadamard
    bound caps every intermediate; inputs that could overflow int64 are
    rejected instead of silently wrapping.
    """
    a = np.array(a, dtype=np.int64, copy=True)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise DimensionMismatch("expected a (B, n, n) array")
    batch, n, _ = a.shape
    if n == 0:
        return np.ones(batch, dtype=np.int64)
    if 4 * hadamard_bound_sq(a) >= _INT64_SAFE:
        raise OverflowError("entries too large for exact int64 Bareiss")
    idx = np.arange(batch)
    sign = np.ones(batch, dtype=np.int64)
    alive = np.ones(batch, dtype=bool)
    prev = np.ones(batch, dtype=np.int64)
    for k in range(n):
        col = a[:, k:, k] != 0
        has = col.any(axis=1)
        alive &= has
        p = np.where(has, col.argmax(axis=1) + k, k)
        swap = p != k
        if swap.any():
            rk = a[idx, k].copy()
            a[idx, k] = a[idx, p]
            a[idx, p] = rk
            sign[swap] = -sign[swap]
        piv = np.where(alive, a[:, k, k], 1)
        if k + 1 < n:
            sub = a[:, k + 1 :, k + 1 :]
            num = piv[:, None, None] * sub - a[:, k + 1 :, k : k + 1] * a[:, k : k + 1, k + 1 :]
            a[:, k + 1 :, k + 1 :] = num // prev[:, None, None]
        prev = piv
    return np.where(alive, sign * prev, 0)
