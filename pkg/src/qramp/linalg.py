"""Exact linear algebra over a prime field GF(q).

Matrices are plain ``numpy`` int64 arrays with entries in ``[0, q)``; the
modulus travels alongside as an argument.  Row reduction is the only hot loop
and is provided twice: a scalar kernel (numba-compiled when available) and a
vectorized numpy variant.  ``QRAMP_DISABLE_NUMBA=1`` selects the latter.
"""
import numpy as np

from ._accel import HAS_NUMBA, jit
from .errors import IndexOutOfRange, InconsistentShares, NotNested, NotQualified


@jit
def _inv_mod(a, q):
    result = 1
    base = a % q
    e = q - 2
    while e > 0:
        if e & 1:
            result = result * base % q
        base = base * base % q
        e >>= 1
    return result


@jit
def rref_loops(R, q):
    """Reduce ``R`` in place to RREF with leftmost pivots; return pivot columns."""
    rows, cols = R.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(cols):
                tmp = R[r, j]
                R[r, j] = R[piv, j]
                R[piv, j] = tmp
        inv = _inv_mod(R[r, c], q)
        for j in range(cols):
            R[r, j] = R[r, j] * inv % q
        for i in range(rows):
            if i != r and R[i, c] != 0:
                f = q - R[i, c]
                for j in range(cols):
                    R[i, j] = (R[i, j] + f * R[r, j]) % q
        pivots[r] = c
        r += 1
    return pivots[:r]


def rref_numpy(R, q):
    """Vectorized counterpart of :func:`rref_loops` (same output, in place)."""
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = R[r] * pow(int(R[r, c]), q - 2, q) % q
        f = R[:, c].copy()
        f[r] = 0
        R -= np.outer(f, R[r])
        R %= q
        pivots.append(c)
        r += 1
    return np.array(pivots, dtype=np.int64)


_rref_kernel = rref_loops if HAS_NUMBA else rref_numpy


def as_matrix(M, q, cols=None):
    """Coerce rows (possibly empty) into a reduced int64 matrix."""
    A = np.asarray(M, dtype=np.int64)
    if A.size == 0:
        width = cols if cols is not None else (A.shape[1] if A.ndim == 2 else 0)
        return np.zeros((0, width), dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    return np.mod(A, q)


def rref(M, q):
    """Return ``(R, pivots)``: the reduced row echelon form of ``M`` and its pivot columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {R.shape}")
    R %= q
    if R.size == 0:
        return R, np.zeros(0, dtype=np.int64)
    pivots = _rref_kernel(R, q)
    return R, pivots


def rank(M, q):
    M = np.asarray(M)
    if M.ndim != 2 or M.size == 0:
        return 0
    return int(rref(M, q)[1].size)


def row_basis(M, q):
    """Rows of the RREF that span the row space of ``M`` (canonical basis)."""
    M = np.asarray(M)
    if M.ndim != 2 or M.size == 0:
        return np.zeros((0, M.shape[1] if M.ndim == 2 else 0), dtype=np.int64)
    R, piv = rref(M, q)
    return R[: piv.size].copy()


def project_columns(M, I):
    """Restrict ``M`` to the 1-based column indices in ``I`` (order preserved)."""
    M = np.asarray(M)
    idx = np.asarray(sorted(set(int(i) for i in I)), dtype=np.int64)
    if idx.size and (idx[0] < 1 or idx[-1] > M.shape[1]):
        raise IndexOutOfRange(f"column index out of 1..{M.shape[1]}: {list(idx)}")
    return M[:, idx - 1]


def in_row_space(v, M, q):
    M = np.asarray(M)
    if M.size == 0:
        return not np.any(np.asarray(v) % q)
    return rank(np.vstack([M, np.asarray(v).reshape(1, -1)]), q) == rank(M, q)


def rref_and_basis_completion(G2, G1, q):
    """Canonical transversal of C1/C2.

    Rows of RREF(G1) are reduced against the pivots of RREF(G2); the RREF of
    what survives gives L rows in C1 that extend a basis of C2 to one of C1.
    """
    G1 = np.asarray(G1, dtype=np.int64)
    width = G1.shape[1]
    G2 = as_matrix(G2, q, cols=width)
    r1 = rank(G1, q)
    if G2.shape[0] and rank(np.vstack([G1, G2]), q) != r1:
        raise NotNested("row space of G2 is not contained in row space of G1")
    B1 = row_basis(G1, q)
    if G2.shape[0] == 0:
        return B1
    R2, piv2 = rref(G2, q)
    R2 = R2[: piv2.size]
    W = B1.copy()
    for k, c in enumerate(piv2):
        W = (W - np.outer(W[:, c], R2[k])) % q
    leaders = row_basis(W, q)
    if leaders.shape[0] != r1 - R2.shape[0]:
        raise NotNested("inconsistent dimensions while completing the basis")
    return leaders


def solve_linear(A, b, q):
    """One solution x of ``A @ x = b`` over GF(q) (free variables set to 0), or None."""
    A = np.asarray(A, dtype=np.int64) % q
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1) % q
    n = A.shape[1]
    aug = np.hstack([A, b])
    if aug.shape[0] == 0:
        return np.zeros(n, dtype=np.int64)
    R, piv = rref(aug, q)
    if piv.size and piv[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    for k, c in enumerate(piv):
        x[c] = R[k, n]
    return x


def coset_dimension_gap(G1, G2, coords, q):
    """dim P_I(C1) - dim P_I(C2) for the 1-based coordinate set ``coords``."""
    return rank(project_columns(G1, coords), q) - rank(project_columns(G2, coords), q)


def solve_coset(G1, G2, leaders, coords, observed, q):
    """Recover the secret s from values observed on coordinates ``coords``.

    Raises NotQualified if the coordinates do not determine the coset and
    InconsistentShares if ``observed`` is not the projection of any codeword.
    """
    G1 = np.asarray(G1, dtype=np.int64)
    width = G1.shape[1]
    G2 = as_matrix(G2, q, cols=width)
    leaders = as_matrix(leaders, q, cols=width)
    L = leaders.shape[0]
    coords = sorted(set(int(c) for c in coords))
    observed = np.asarray(observed, dtype=np.int64).reshape(-1) % q
    if observed.size != len(coords):
        raise InconsistentShares(f"{observed.size} values for {len(coords)} coordinates")
    if coset_dimension_gap(G1, G2, coords, q) != L:
        raise NotQualified(f"coordinates {coords} do not determine the secret")
    B2 = row_basis(G2, q)
    basis = np.vstack([B2, leaders])
    coeffs = solve_linear(project_columns(basis, coords).T, observed, q)
    if coeffs is None:
        raise InconsistentShares("observed values are not a projection of any codeword of C1")
    return coeffs[B2.shape[0]:]
