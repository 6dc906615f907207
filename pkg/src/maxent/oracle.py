"""Dense, exact graph-state vectors and the operators acting on them.

Amplitudes are Gaussian integers with one global scale: amplitude ``k`` is
``(re[k] + 1j * im[k]) / sqrt(2) ** scale``.  Pauli strings, the switching
phase and the Clifford square roots all keep vectors in this ring, so every
comparison below is exact equality.

Basis index convention: ``|x_1 x_2 ... x_n>`` has index ``sum x_k 2**(n-k)``,
i.e. vertex 1 is the most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import BadCut, DimensionMismatch, NotBipartite, TooLarge, VertexOutOfRange, ZeroVector
from .graph import Cut, Graph, two_coloring
from .linalg import rank_gf2, rank_int

MAX_QUBITS = 12
MAX_CUT_SEARCH = 20


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    re: np.ndarray
    im: np.ndarray
    scale: int

    def norm_sq_scaled(self) -> int:
        """Sum of |numerator|^2; the state is normalised iff this equals 2**scale."""
        return int((self.re.astype(object) ** 2 + self.im.astype(object) ** 2).sum())

    def is_normalized(self) -> bool:
        return self.norm_sq_scaled() == 2**self.scale

    def amplitudes(self) -> np.ndarray:
        """Floating-point view for display only; never used in checks."""
        return (self.re + 1j * self.im) / np.sqrt(2.0) ** self.scale

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StateVector) and states_equal(self, other)

    __hash__ = None  # type: ignore[assignment]


def _normalize(n: int, re: np.ndarray, im: np.ndarray, scale: int) -> StateVector:
    while scale >= 2 and not (re % 2).any() and not (im % 2).any() and (re.any() or im.any()):
        re, im, scale = re // 2, im // 2, scale - 2
    if scale >= 1 and not ((re + im) % 2).any() and (re.any() or im.any()):
        # divide by (1 + i)
        re, im, scale = (re + im) // 2, (im - re) // 2, scale - 1
    return StateVector(n, re, im, scale)


def _parity(v: np.ndarray) -> np.ndarray:
    v = v.astype(np.int64)
    for shift in (16, 8, 4, 2, 1):
        v = v ^ (v >> shift)
    return v & 1


def basis_state(n: int, index: int) -> StateVector:
    re = np.zeros(1 << n, dtype=np.int64)
    re[index] = 1
    return StateVector(n, re, np.zeros_like(re), 0)


def _bits(n: int) -> np.ndarray:
    """(2**n, n) array; column k-1 holds bit x_k."""
    idx = np.arange(1 << n)
    return (idx[:, None] >> np.arange(n - 1, -1, -1)[None, :]) & 1


def build_graph_state(g: Graph) -> StateVector:
    """Amplitude of ``x`` is 2**(-n/2) * (-1)**(sum over edges of x_i x_j)."""
    if g.n > MAX_QUBITS:
        raise TooLarge(f"dense states limited to {MAX_QUBITS} qubits")
    bits = _bits(g.n)
    q = np.zeros(1 << g.n, dtype=np.int64)
    for i, j in g.edges():
        q ^= bits[:, i - 1] & bits[:, j - 1]
    re = 1 - 2 * q
    return StateVector(g.n, re, np.zeros_like(re), g.n)


def states_equal(a: StateVector, b: StateVector) -> bool:
    if a.n != b.n:
        raise DimensionMismatch("states live on different numbers of qubits")
    if (a.scale - b.scale) % 2:
        # sqrt(2) times a Gaussian-integer vector is never a Gaussian-integer vector
        return not (a.re.any() or a.im.any() or b.re.any() or b.im.any())
    lo, hi = (a, b) if a.scale <= b.scale else (b, a)
    f = 2 ** ((hi.scale - lo.scale) // 2)
    return bool(np.array_equal(lo.re.astype(object) * f, hi.re.astype(object)) and np.array_equal(lo.im.astype(object) * f, hi.im.astype(object)))


def states_equal_up_to_phase(a: StateVector, b: StateVector) -> bool:
    """True iff ``b = c * a`` with ``|c| = 1``, checked by exact amplitude ratios."""
    if a.n != b.n:
        raise DimensionMismatch("states live on different numbers of qubits")
    sup_a = (a.re != 0) | (a.im != 0)
    sup_b = (b.re != 0) | (b.im != 0)
    if not sup_a.any() or not sup_b.any():
        raise ZeroVector("phase comparison needs nonzero vectors")
    if not np.array_equal(sup_a, sup_b):
        return False
    p = int(np.argmax(sup_a))
    ar, ai = a.re.astype(object), a.im.astype(object)
    br, bi = b.re.astype(object), b.im.astype(object)
    # b_k * a_p == b_p * a_k for every k (Gaussian products)
    lhs_r = br * ar[p] - bi * ai[p]
    lhs_i = br * ai[p] + bi * ar[p]
    rhs_r = br[p] * ar - bi[p] * ai
    rhs_i = br[p] * ai + bi[p] * ar
    if not (np.array_equal(lhs_r, rhs_r) and np.array_equal(lhs_i, rhs_i)):
        return False
    mod_a = ar[p] ** 2 + ai[p] ** 2
    mod_b = br[p] ** 2 + bi[p] ** 2
    return mod_b * 2**a.scale == mod_a * 2**b.scale


# Pauli strings ---------------------------------------------------------


@dataclass(frozen=True)
class PauliString:
    letters: str
    sign: int = 1

    def __post_init__(self) -> None:
        if set(self.letters) - set("IXYZ"):
            raise ValueError(f"bad Pauli letters {self.letters!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.letters)

    def _masks(self) -> tuple[int, int]:
        xm = zm = 0
        for k, ch in enumerate(self.letters):
            bit = 1 << (self.n - 1 - k)
            if ch in "XY":
                xm |= bit
            if ch in "ZY":
                zm |= bit
        return xm, zm

    def symplectic(self) -> int:
        """x-bits in the high half, z-bits in the low half."""
        xm, zm = self._masks()
        return xm << self.n | zm

    def commutes_with(self, other: PauliString) -> bool:
        xa, za = self._masks()
        xb, zb = other._masks()
        return ((xa & zb).bit_count() + (za & xb).bit_count()) % 2 == 0

    def apply(self, psi: StateVector) -> StateVector:
        """P = sign * i**(#Y) * X^x Z^z, using Y = iXZ."""
        if psi.n != self.n:
            raise DimensionMismatch("Pauli string and state sizes differ")
        xm, zm = self._masks()
        idx = np.arange(1 << self.n)
        par = _parity(idx & zm)
        s = self.sign * (1 - 2 * par)
        re, im = s * psi.re, s * psi.im
        for _ in range(self.letters.count("Y") % 4):
            re, im = -im, re
        out_re = np.empty_like(re)
        out_im = np.empty_like(im)
        out_re[idx ^ xm] = re
        out_im[idx ^ xm] = im
        return StateVector(psi.n, out_re, out_im, psi.scale)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + self.letters


def stabilizer_generators(g: Graph) -> list[PauliString]:
    """Row i: X at i, Z on the neighbours of i."""
    out = []
    for i in range(g.n):
        row = g.rows[i]
        letters = "".join("X" if j == i else ("Z" if row >> j & 1 else "I") for j in range(g.n))
        out.append(PauliString(letters))
    return out


def joint_eigenspace_dimension(gens: list[PauliString], method: str = "symplectic") -> int:
    """Dimension of the common +1 eigenspace of commuting Pauli strings.

    ``symplectic``: for commuting generators the projector trace is
    2**(n - k), k the GF(2) rank of the symplectic vectors, provided -I is
    not generated (every product with trivial symplectic part is checked).
    ``dense``: the trace of prod (I + S)/2 is accumulated over every basis
    vector.
    """
    n = gens[0].n
    for a, b in combinations(gens, 2):
        if not a.commutes_with(b):
            raise ValueError("generators do not commute")
    if method == "dense":
        return _dense_projector_trace(gens)
    if method != "symplectic":
        raise ValueError(f"unknown method {method!r}")
    k = rank_gf2([p.symplectic() for p in gens])
    if k < len(gens) and _generates_minus_identity(gens):
        return 0
    return 2 ** (n - k)


def _generates_minus_identity(gens: list[PauliString]) -> bool:
    n = gens[0].n
    for r in range(1, len(gens) + 1):
        for subset in combinations(gens, r):
            sym = 0
            for p in subset:
                sym ^= p.symplectic()
            if sym:
                continue
            psi = basis_state(n, 0)
            for p in subset:
                psi = p.apply(psi)
            if psi.re[0] == -1:
                return True
    return False


def _dense_projector_trace(gens: list[PauliString]) -> int:
    n = gens[0].n
    dim = 1 << n
    idx = np.arange(dim)
    # columns of the identity, then left-multiply by each (I + S_i)
    re = np.eye(dim, dtype=np.int64)
    im = np.zeros_like(re)
    for p in gens:
        xm, zm = p._masks()
        par = _parity(idx & zm)
        s = (p.sign * (1 - 2 * par))[:, None]
        pr, pi = s * re, s * im
        for _ in range(p.letters.count("Y") % 4):
            pr, pi = -pi, pr
        sr = np.empty_like(pr)
        si = np.empty_like(pi)
        sr[idx ^ xm] = pr
        si[idx ^ xm] = pi
        re, im = re + sr, im + si
    trace = int(np.trace(re))
    if int(np.trace(im)) or trace % (1 << len(gens)):
        raise ArithmeticError("projector trace is not a nonnegative integer")
    return trace >> len(gens)


def verify_stabilizer(g: Graph, psi: StateVector, method: str = "symplectic") -> bool:
    """Every S_i fixes psi exactly and the joint +1 eigenspace is one-dimensional."""
    if psi.n != g.n:
        raise DimensionMismatch("graph and state sizes differ")
    gens = stabilizer_generators(g)
    if not gens:
        return True
    if any(not states_equal(p.apply(psi), psi) for p in gens):
        return False
    return joint_eigenspace_dimension(gens, method) == 1


# Schmidt ranks --------------------------------------------------------


def _cut_sides(n: int, cut: Cut) -> tuple[list[int], list[int]]:
    a, b = sorted(cut.side_a), sorted(cut.side_b)
    if not a or not b or set(a) & set(b) or set(a) | set(b) != set(range(1, n + 1)):
        raise BadCut("cut must split all vertices into two nonempty sides")
    return a, b


def amplitude_matrix(psi: StateVector, cut: Cut) -> tuple[np.ndarray, np.ndarray]:
    """Numerators reshaped to (2**|A|, 2**|B|), rows indexed by side-A basis states."""
    a, b = _cut_sides(psi.n, cut)
    order = [v - 1 for v in a + b]
    shape = (1 << len(a), 1 << len(b))
    re = psi.re.reshape((2,) * psi.n).transpose(order).reshape(shape)
    im = psi.im.reshape((2,) * psi.n).transpose(order).reshape(shape)
    return re, im


def schmidt_rank(psi: StateVector, cut: Cut) -> int:
    """Exact rank of the reshaped amplitude matrix over Q(i)."""
    re, im = amplitude_matrix(psi, cut)
    if not im.any():
        return rank_int(re.tolist())
    # rank of the real 2x2-block form is twice the complex rank
    block = np.block([[re, -im], [im, re]])
    return rank_int(block.tolist()) // 2


def cut_rank_gf2(g: Graph, side_a: frozenset[int] | set[int]) -> int:
    """GF(2) rank of the off-diagonal submatrix A(G)[A, B]."""
    amask = sum(1 << (v - 1) for v in side_a)
    bmask = ((1 << g.n) - 1) & ~amask
    if side_a and amask.bit_count() <= bmask.bit_count():
        return rank_gf2([g.rows[v - 1] & bmask for v in side_a])
    return rank_gf2([g.rows[v] & amask for v in range(g.n) if bmask >> v & 1])


def _cut_candidates(n: int):
    """Unordered cuts with |A| <= n/2, larger sides first; ties at n/2 keep vertex 1 in A."""
    for size in range(n // 2, 0, -1):
        for combo in combinations(range(n), size):
            if 2 * size == n and combo[0] != 0:
                continue
            yield size, combo


def max_cut_rank(g: Graph, hint: frozenset[int] | None = None) -> tuple[int, Cut | None]:
    """Largest GF(2) cut rank with its first witness in search order.

    ``hint`` (a side A) is tried first.  Stops early once floor(n/2) is
    reached or once no smaller side can win.
    """
    if g.n > MAX_CUT_SEARCH:
        raise TooLarge(f"cut search limited to {MAX_CUT_SEARCH} vertices")
    best, witness = 0, None
    full = (1 << g.n) - 1
    if hint and len(hint) < g.n:
        best = cut_rank_gf2(g, hint)
        witness = Cut.of(g.n, hint) if best else None
        if best == g.n // 2:
            return best, witness
    for size, combo in _cut_candidates(g.n):
        if best >= size:
            break
        amask = 0
        for v in combo:
            amask |= 1 << v
        r = rank_gf2([g.rows[v] & full & ~amask for v in combo])
        if r > best:
            best = r
            witness = Cut.of(g.n, (v + 1 for v in combo))
            if best == g.n // 2:
                break
    return best, witness


@dataclass(frozen=True)
class SchmidtBounds:
    lower: Fraction
    upper: Fraction
    half_rank_real: Fraction
    witness: Cut | None

    @property
    def pinned(self) -> bool:
        return self.lower == self.upper


def schmidt_measure_bounds(g: Graph) -> SchmidtBounds:
    """Bracket E_S for a two-colorable graph state from GF(2) cut ranks.

    Each cut's log2 Schmidt rank is a lower bound; floor(n/2) is the upper
    bound.  Half the real adjacency rank is reported alongside.
    """
    if two_coloring(g) is None:
        raise NotBipartite("graph has an odd cycle")
    if g.n > MAX_CUT_SEARCH:
        raise TooLarge(f"cut search limited to {MAX_CUT_SEARCH} vertices")
    lower, witness = max_cut_rank(g) if g.n > 1 else (0, None)
    return SchmidtBounds(
        lower=Fraction(lower),
        upper=Fraction(g.n // 2),
        half_rank_real=Fraction(rank_int(g.adjacency()), 2) if g.n else Fraction(0),
        witness=witness,
    )


# local operators -----------------------------------------------------


@dataclass(frozen=True)
class Gate:
    """2x2 Gaussian-integer matrix times 2**(-scale/2)."""

    re: tuple[tuple[int, int], tuple[int, int]]
    im: tuple[tuple[int, int], tuple[int, int]]
    scale: int = 0


# sqrt(-i X) = (I - iX)/sqrt(2),  sqrt(i Z) = diag(1 + i, 1 - i)/sqrt(2)
TAU_X = Gate(re=((1, 0), (0, 1)), im=((0, -1), (-1, 0)), scale=1)
TAU_Z = Gate(re=((1, 0), (0, 1)), im=((1, 0), (0, -1)), scale=1)
PAULI_X = Gate(re=((0, 1), (1, 0)), im=((0, 0), (0, 0)))
PAULI_Z = Gate(re=((1, 0), (0, -1)), im=((0, 0), (0, 0)))


def apply_gate(psi: StateVector, site: int, gate: Gate) -> StateVector:
    """Apply a single-qubit gate at 1-based ``site``."""
    if not 1 <= site <= psi.n:
        raise VertexOutOfRange(f"site {site} outside 1..{psi.n}")
    shape = (1 << (site - 1), 2, 1 << (psi.n - site))
    re = psi.re.reshape(shape)
    im = psi.im.reshape(shape)
    out_re = np.zeros_like(re)
    out_im = np.zeros_like(im)
    for a in range(2):
        for b in range(2):
            gr, gi = gate.re[a][b], gate.im[a][b]
            if gr or gi:
                out_re[:, a] += gr * re[:, b] - gi * im[:, b]
                out_im[:, a] += gr * im[:, b] + gi * re[:, b]
    return _normalize(psi.n, out_re.reshape(-1), out_im.reshape(-1), psi.scale + gate.scale)


@dataclass(frozen=True)
class LocalUnitary:
    """Tensor product of per-site gates; ``None`` is the identity."""

    factors: tuple[Gate | None, ...]

    def apply(self, psi: StateVector) -> StateVector:
        if len(self.factors) != psi.n:
            raise DimensionMismatch("local unitary and state sizes differ")
        for k, gate in enumerate(self.factors, start=1):
            if gate is not None:
                psi = apply_gate(psi, k, gate)
        return psi


def lc_unitary(g: Graph, i: int) -> LocalUnitary:
    """tau_x at ``i`` and tau_z on every neighbour of ``i``."""
    if not 1 <= i <= g.n:
        raise VertexOutOfRange(f"vertex {i} outside 1..{g.n}")
    row = g.rows[i - 1]
    factors = tuple(TAU_X if k == i - 1 else (TAU_Z if row >> k & 1 else None) for k in range(g.n))
    return LocalUnitary(factors)


def apply_lc_unitary(psi: StateVector, g: Graph, i: int) -> StateVector:
    if psi.n != g.n:
        raise DimensionMismatch("graph and state sizes differ")
    return lc_unitary(g, i).apply(psi)


def apply_switching_operator(psi: StateVector, k: int) -> StateVector:
    """T_k |x> = (-1)**(x_k * sum_{i != k} x_i) |x>."""
    if not 1 <= k <= psi.n:
        raise VertexOutOfRange(f"vertex {k} outside 1..{psi.n}")
    bits = _bits(psi.n)
    xk = bits[:, k - 1]
    others = bits.sum(axis=1) - xk
    s = 1 - 2 * ((xk * others) & 1)
    return StateVector(psi.n, s * psi.re, s * psi.im, psi.scale)
