"""Dense linear algebra over GF(2).

Vectors are 1-D numpy ``uint8`` arrays with entries in {0, 1}; matrices
are 2-D.  Addition is XOR and products are reduced mod 2.  ``uint8``
matmul accumulates mod 256, which preserves parity, so no dtype
widening is needed at the sizes used here (dimensions well below 256).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

__all__ = [
    "asbits",
    "ident",
    "zeros",
    "j_mat",
    "p_mat",
    "mat_mul",
    "lows",
    "diag_vec",
    "quad_form",
    "rref",
    "rank",
    "inverse",
    "solve",
    "kernel_basis",
    "image_pivots",
    "is_involution",
    "is_symplectic",
    "symmetric_congruence",
    "Lagrangian",
    "enumerate_lagrangians",
    "symplectic_complete",
]


def asbits(data) -> np.ndarray:
    """Coerce an array-like to uint8 with entries reduced mod 2."""
    return np.asarray(data, dtype=np.uint8) & 1


def frozenbits(data) -> np.ndarray:
    """Mod-2 copy of *data*, marked read-only."""
    out = asbits(data).copy()
    out.flags.writeable = False
    return out


def ident(n):
    return np.eye(n, dtype=np.uint8)


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.uint8)


def j_mat(n):
    """The strictly upper block matrix (0 I_n; 0 0) of size 2n."""
    j = zeros(2 * n, 2 * n)
    j[:n, n:] = ident(n)
    return j


def p_mat(n):
    """The binary symplectic form (0 I_n; I_n 0) of size 2n."""
    p = zeros(2 * n, 2 * n)
    p[:n, n:] = ident(n)
    p[n:, :n] = ident(n)
    return p


def mat_mul(a, b):
    """Matrix (or matrix-vector) product over GF(2).

    Raises:
        ValueError: if the inner dimensions do not conform.
    """
    a = asbits(a)
    b = asbits(b)
    inner_a = a.shape[-1]
    inner_b = b.shape[0]
    if inner_a != inner_b:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return (a @ b) & 1


def lows(m):
    """Strictly lower triangular part of a square matrix."""
    return np.tril(asbits(m), -1)


def diag_vec(m):
    """Diagonal of a square matrix as a vector."""
    return np.diagonal(asbits(m)).copy()


def quad_form(m, v) -> int:
    """Evaluate v^T m v over GF(2)."""
    v = asbits(v)
    return int(v @ (asbits(m) @ v & 1)) & 1


def dot(u, v) -> int:
    """Inner product of two vectors over GF(2)."""
    return int(asbits(u) @ asbits(v)) & 1


def rref(m, n_pivot_cols=None):
    """Reduced row echelon form over GF(2).

    Args:
        m: binary matrix.
        n_pivot_cols: restrict pivot search to the first this-many
            columns (row operations still span the full width).

    Returns:
        (R, pivot_cols): the reduced matrix and the pivot column list
        (its length is the GF(2) rank of the searched columns).
    """
    r = asbits(m).copy()
    rows, cols = r.shape
    if n_pivot_cols is None:
        n_pivot_cols = cols
    pivots: list[int] = []
    row = 0
    for col in range(n_pivot_cols):
        hit = -1
        for k in range(row, rows):
            if r[k, col]:
                hit = k
                break
        if hit < 0:
            continue
        if hit != row:
            r[[row, hit]] = r[[hit, row]]
        for k in range(rows):
            if k != row and r[k, col]:
                r[k] ^= r[row]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    return r, pivots


def rank(m) -> int:
    """Row rank over GF(2)."""
    return len(rref(m)[1])


def inverse(m):
    """Inverse of a square matrix over GF(2).

    Raises:
        ValueError: if *m* is not square or is singular.
    """
    m = asbits(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"not a square matrix: {m.shape}")
    n = m.shape[0]
    aug = np.concatenate([m, ident(n)], axis=1)
    red, pivots = rref(aug, n_pivot_cols=n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular over GF(2)")
    return red[:, n:].copy()


def solve(m, rhs):
    """Some x with m @ x = rhs over GF(2), or None if inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    m = asbits(m)
    rhs = asbits(rhs)
    if rhs.ndim != 1 or m.shape[0] != rhs.shape[0]:
        raise ValueError(f"dimension mismatch: {m.shape} vs {rhs.shape}")
    rows, cols = m.shape
    aug = np.concatenate([m, rhs.reshape(-1, 1)], axis=1)
    red, pivots = rref(aug, n_pivot_cols=cols)
    for k in range(rows):
        if red[k, cols] and not red[k, :cols].any():
            return None
    x = np.zeros(cols, dtype=np.uint8)
    for row, col in enumerate(pivots):
        x[col] = red[row, cols]
    return x


def kernel_basis(m):
    """Basis of the null space, one vector per row.

    The result has shape (cols - rank, cols); it is empty (0 rows) for
    injective maps.
    """
    m = asbits(m)
    rows, cols = m.shape
    red, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, col in enumerate(pivots):
            basis[i, col] = red[row, f]
    return basis


def image_pivots(m) -> list[int]:
    """Column indices whose columns form a basis of the image."""
    return rref(m)[1]


def is_involution(m) -> bool:
    m = asbits(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return np.array_equal(mat_mul(m, m), ident(m.shape[0]))


def is_symplectic(c) -> bool:
    """Whether C^T P C = P for the binary symplectic form P.

    Raises:
        ValueError: if the matrix is not square of even size.
    """
    c = asbits(c)
    if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] % 2:
        raise ValueError(f"need a square even-dimensional matrix, got {c.shape}")
    p = p_mat(c.shape[0] // 2)
    return np.array_equal(mat_mul(mat_mul(c.T, p), c), p)


def symmetric_congruence(e):
    """Congruence-reduce a symmetric matrix to (e 0; 0 0) form.

    Returns (R, r) with R invertible such that R e R^T has an
    invertible symmetric r x r leading block and zeros elsewhere.
    Over GF(2) a symmetric matrix can have an all-zero diagonal, so
    after diagonal pivots are exhausted the remaining alternating part
    is reduced with antidiagonal 2x2 pivots.
    """
    e0 = asbits(e)
    if e0.ndim != 2 or e0.shape[0] != e0.shape[1]:
        raise ValueError(f"not a square matrix: {e0.shape}")
    if not np.array_equal(e0, e0.T):
        raise ValueError("matrix is not symmetric")
    n = e0.shape[0]
    w = e0.copy()
    r_acc = ident(n)

    def row_op(dst, src):
        # dst += src on rows and columns of w keeps w symmetric
        w[dst] ^= w[src]
        w[:, dst] ^= w[:, src]
        r_acc[dst] ^= r_acc[src]

    def swap(i, j):
        if i == j:
            return
        w[[i, j]] = w[[j, i]]
        w[:, [i, j]] = w[:, [j, i]]
        r_acc[[i, j]] = r_acc[[j, i]]

    pos = 0
    while pos < n:
        diag_hit = next((k for k in range(pos, n) if w[k, k]), None)
        if diag_hit is not None:
            swap(pos, diag_hit)
            for k in range(n):
                if k != pos and w[k, pos]:
                    row_op(k, pos)
            pos += 1
            continue
        pair = next(
            ((i, j) for i in range(pos, n) for j in range(i + 1, n) if w[i, j]),
            None,
        )
        if pair is None:
            break
        i, j = pair
        # j > i >= pos, so swapping pos with i leaves the partner at (pos, j)
        swap(pos, i)
        swap(pos + 1, j)
        for k in range(n):
            if k in (pos, pos + 1):
                continue
            if w[k, pos + 1]:
                row_op(k, pos)
            if w[k, pos]:
                row_op(k, pos + 1)
        pos += 2

    r = pos
    check = mat_mul(mat_mul(r_acc, e0), r_acc.T)
    if not np.array_equal(check, w):
        raise AssertionError("congruence bookkeeping failed")
    if w[r:, :].any() or w[:, r:].any():
        raise AssertionError("trailing block not cleared")
    if rank(w[:r, :r]) != r:
        raise AssertionError("leading block is singular")
    return r_acc, r


@dataclass(frozen=True)
class Lagrangian:
    """Maximal isotropic subspace of Z_2^{2n}, stored as an RREF basis.

    The basis matrix has one vector per row; it is canonicalized to
    reduced row echelon form on construction so equal subspaces compare
    equal.
    """

    basis: np.ndarray

    def __post_init__(self):
        basis = asbits(self.basis)
        if basis.ndim != 2 or basis.shape[1] % 2:
            raise ValueError(f"bad basis shape {basis.shape}")
        n = basis.shape[1] // 2
        red, pivots = rref(basis)
        if len(pivots) != basis.shape[0]:
            raise ValueError("basis vectors are dependent")
        if basis.shape[0] != n:
            raise ValueError(f"need {n} basis vectors, got {basis.shape[0]}")
        p = p_mat(n)
        if mat_mul(mat_mul(red, p), red.T).any():
            raise ValueError("basis is not isotropic")
        red.flags.writeable = False
        object.__setattr__(self, "basis", red)

    @property
    def n(self) -> int:
        return self.basis.shape[1] // 2

    def __eq__(self, other):
        return isinstance(other, Lagrangian) and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        return hash(self.basis.tobytes())

    def vectors(self):
        """All 2^n member vectors, in span-enumeration order."""
        n = self.basis.shape[0]
        for mask in range(1 << n):
            v = np.zeros(2 * self.n, dtype=np.uint8)
            for i in range(n):
                if (mask >> i) & 1:
                    v ^= self.basis[i]
            yield v


LAGRANGIAN_QUBIT_CAP = 3


def enumerate_lagrangians(n) -> list[Lagrangian]:
    """All maximal isotropic subspaces of Z_2^{2n}, each exactly once.

    Enumerates canonical RREF bases (pivot sets in lexicographic order,
    free entries in integer order) and keeps the isotropic ones, so the
    result order is deterministic.  Guarded to n <= 3; the counts are
    3, 15, 135 for n = 1, 2, 3.
    """
    if n > LAGRANGIAN_QUBIT_CAP:
        raise ValueError(f"n={n} exceeds the enumeration cap {LAGRANGIAN_QUBIT_CAP}")
    cols = 2 * n
    p = p_mat(n)
    out = []
    for pivots in combinations(range(cols), n):
        free_slots = []
        for i, pc in enumerate(pivots):
            for c in range(pc + 1, cols):
                if c not in pivots:
                    free_slots.append((i, c))
        for mask in range(1 << len(free_slots)):
            basis = np.zeros((n, cols), dtype=np.uint8)
            for i, pc in enumerate(pivots):
                basis[i, pc] = 1
            for bit, (i, c) in enumerate(free_slots):
                if (mask >> bit) & 1:
                    basis[i, c] = 1
            if not mat_mul(mat_mul(basis, p), basis.T).any():
                out.append(Lagrangian(basis))
    return out


def symplectic_complete(lag: Lagrangian):
    """Symplectic matrix whose first n columns span the given Lagrangian.

    The partner columns are found one at a time by solving the
    symplectic pairing constraints; free variables default to zero, so
    the completion is deterministic.

    Raises:
        ValueError: propagated from Lagrangian validation if the input
            was built unsoundly.
    """
    n = lag.n
    p = p_mat(n)
    zcols = [lag.basis[i] for i in range(n)]
    xcols: list[np.ndarray] = []
    for i in range(n):
        lhs = [mat_mul(p, z) for z in zcols] + [mat_mul(p, x) for x in xcols]
        rhs = [1 if j == i else 0 for j in range(n)] + [0] * len(xcols)
        sol = solve(np.array(lhs, dtype=np.uint8), np.array(rhs, dtype=np.uint8))
        if sol is None:
            raise AssertionError("symplectic completion has no solution")
        xcols.append(sol)
    c = np.array(zcols + xcols, dtype=np.uint8).T
    if not is_symplectic(c):
        raise AssertionError("completion is not symplectic")
    return c
