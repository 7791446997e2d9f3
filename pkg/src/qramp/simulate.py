"""Direct state-vector simulation of the CSS coset encoding.

Basis labels are vectors in GF(q)^{m'} indexed little-endian: coordinate 1 is
the least significant base-q digit.  Reduced density matrices use the same
convention over the kept coordinates in ascending order.
"""
import itertools
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .access import from_mask
from .errors import DimensionCap, ParameterViolation
from .linalg import row_basis

DEFAULT_CAP = 1 << 22
PAIRWISE_LIMIT = 100


@dataclass(frozen=True, eq=False)
class StateVector:
    q: int
    num_qudits: int
    amplitudes: np.ndarray

    def norm(self):
        return float(np.linalg.norm(self.amplitudes))


def _check_cap(scheme, cap):
    dim = scheme.q ** scheme.m_prime
    if dim > cap:
        raise DimensionCap(f"q^m' = {scheme.q}^{scheme.m_prime} = {dim} exceeds the cap {cap}")
    return dim


def _digits(index, q, length):
    out = np.zeros(length, dtype=np.int64)
    for k in range(length):
        index, out[k] = divmod(index, q)
    return out


def coset_words(scheme):
    """For each basis secret s (little-endian index), the codewords of f(s) and their amplitude."""
    pair = scheme.pair
    q = pair.q
    B2 = row_basis(pair.G2, q)
    k2 = B2.shape[0]
    coeffs = np.array(list(itertools.product(range(q), repeat=k2)), dtype=np.int64).reshape(q**k2, k2)
    C2 = coeffs @ B2 % q if k2 else np.zeros((1, pair.length), dtype=np.int64)
    amp = 1.0 / np.sqrt(float(C2.shape[0]))
    words = []
    for s in range(q ** pair.L):
        offset = _digits(s, q, pair.L) @ pair.leaders % q
        words.append((C2 + offset) % q)
    return words, amp


def _index(words, coords, q):
    """Little-endian basis index of ``words`` restricted to 1-based ``coords``."""
    if not len(coords):
        return np.zeros(words.shape[0], dtype=np.int64)
    place = q ** np.arange(len(coords), dtype=np.int64)
    return words[:, np.asarray(coords) - 1] @ place


def encode_css(scheme, secret_state, cap=DEFAULT_CAP):
    """Map sum_s a_s |s> to sum_s a_s |f(s)> with |f(s)> the uniform superposition over the coset."""
    dim = _check_cap(scheme, cap)
    q = scheme.q
    a = np.asarray(secret_state, dtype=np.complex128).reshape(-1)
    if a.size != q ** scheme.L:
        raise ParameterViolation(f"secret state has {a.size} amplitudes, expected {q ** scheme.L}")
    if abs(np.linalg.norm(a) - 1.0) > 1e-10:
        raise ParameterViolation("secret state is not normalized")
    words, amp = coset_words(scheme)
    psi = np.zeros(dim, dtype=np.complex128)
    allc = range(1, scheme.m_prime + 1)
    for s, coeff in enumerate(a):
        if coeff != 0:
            np.add.at(psi, _index(words[s], allc, q), coeff * amp)
    return StateVector(q=q, num_qudits=scheme.m_prime, amplitudes=psi)


def basis_secret(scheme, s):
    e = np.zeros(scheme.q ** scheme.L, dtype=np.complex128)
    e[s] = 1.0
    return e


def partial_trace(state, keep):
    """Reduced density matrix on the 1-based qudits ``keep`` (others traced out)."""
    q, k = state.q, state.num_qudits
    keep = sorted(set(int(j) for j in keep))
    rest = [j for j in range(1, k + 1) if j not in keep]
    if k == 0:
        return np.ones((1, 1), dtype=np.complex128)
    # C-order axis a holds coordinate k - a
    T = state.amplitudes.reshape((q,) * k)
    axes = [k - j for j in reversed(keep)] + [k - j for j in reversed(rest)]
    A = T.transpose(axes).reshape(q ** len(keep), q ** len(rest))
    return A @ A.conj().T


def trace_distance(rho, sigma):
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(rho - sigma))))


def probe_family(S):
    """Weights of the probe secrets: all basis states, then (|s>+|s'>)/sqrt2 and (|s>+i|s'>)/sqrt2."""
    r = 1 / np.sqrt(2)
    probes = [{s: 1.0} for s in range(S)]
    for s, s2 in itertools.combinations(range(S), 2):
        probes.append({s: r, s2: r})
        probes.append({s: r, s2: 1j * r})
    return probes


class _ReducedFamily:
    """Reduced operators of the encoded basis secrets on a fixed coordinate set.

    Each encoded basis state is stored as a sparse factor A_s with
    rho_s = A_s A_s^dagger (rows: kept qudits, columns: traced qudits).  When the
    kept side is the larger one, distances go through the Gram matrix of the
    factors instead, whose size is bounded by twice the traced dimension.
    """

    def __init__(self, scheme, coords, words, amp):
        q = scheme.q
        keep = sorted(coords)
        rest = [j for j in range(1, scheme.m_prime + 1) if j not in set(keep)]
        self.dK = q ** len(keep)
        self.dR = q ** len(rest)
        self.factors = []
        for w in words:
            vals = np.full(w.shape[0], amp, dtype=np.complex128)
            A = sparse.csr_matrix(
                (vals, (_index(w, keep, q), _index(w, rest, q))), shape=(self.dK, self.dR)
            )
            self.factors.append(A)
        self.gram = self.dK > self.dR
        self._cache = {}

    def _op(self, a, b):
        key = (a, b)
        if key not in self._cache:
            A, B = self.factors[a], self.factors[b]
            M = (A.conj().T @ B) if self.gram else (A @ B.conj().T)
            self._cache[key] = M.toarray()
        return self._cache[key]

    def _combine(self, u, v):
        # gram: sum conj(u_a) v_b A_a^dag A_b ; rho: sum u_a conj(v_b) A_a A_b^dag
        out = 0
        for a, ua in u.items():
            for b, vb in v.items():
                w = np.conj(ua) * vb if self.gram else ua * np.conj(vb)
                out = out + w * self._op(a, b)
        return out

    def distance(self, u, v):
        if not self.gram:
            return trace_distance(self._combine(u, u), self._combine(v, v))
        d = self.dR
        G = np.empty((2 * d, 2 * d), dtype=np.complex128)
        G[:d, :d] = self._combine(u, u)
        G[:d, d:] = self._combine(u, v)
        G[d:, :d] = self._combine(v, u)
        G[d:, d:] = self._combine(v, v)
        w, U = np.linalg.eigh(0.5 * (G + G.conj().T))
        root = (U * np.sqrt(np.clip(w, 0, None))) @ U.conj().T
        J = np.concatenate([np.ones(d), -np.ones(d)])
        H = root @ (J[:, None] * root)
        return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(0.5 * (H + H.conj().T)))))


@dataclass(frozen=True)
class ForbiddenCertificate:
    I: tuple
    max_trace_distance: float
    passed: bool
    exact_pairwise: bool


def certify_forbidden(scheme, I, tolerance=1e-9, cap=DEFAULT_CAP, _cache=None):
    """Check that the qudits of participants ``I`` carry no information about the secret.

    Every probe secret is encoded and reduced to the qudits of ``I``.  With at
    most PAIRWISE_LIMIT probes the exact maximum pairwise trace distance is
    reported; beyond that, twice the largest distance to the first probe (an
    upper bound on the pairwise maximum, capped at 1).
    """
    _check_cap(scheme, cap)
    if _cache is None:
        _cache = coset_words(scheme)
    words, amp = _cache
    coords = scheme.coordinates(I)
    fam = _ReducedFamily(scheme, coords, words, amp)
    probes = probe_family(len(words))
    if len(probes) <= PAIRWISE_LIMIT:
        dmax = max(
            (fam.distance(u, v) for u, v in itertools.combinations(probes, 2)), default=0.0
        )
        exact = True
    else:
        ref = probes[0]
        dmax = min(1.0, 2 * max(fam.distance(ref, v) for v in probes[1:]))
        exact = False
    return ForbiddenCertificate(tuple(sorted(I)), dmax, dmax < tolerance, exact)


@dataclass
class SimulationReport:
    certificates: list
    agreement: list
    skipped: str = ""

    @property
    def agrees(self):
        return not self.skipped and all(self.agreement)

    def to_json(self):
        if self.skipped:
            return {"subsets": [], "agrees_with_rank_criteria": False, "skipped": self.skipped}
        return {
            "subsets": [
                {
                    "I": list(c.I),
                    "max_trace_distance": round(c.max_trace_distance, 12),
                    "forbidden_pass": c.passed,
                    "agrees": ok,
                }
                for c, ok in zip(self.certificates, self.agreement)
            ],
            "agrees_with_rank_criteria": self.agrees,
        }


def cross_check(scheme, report, tolerance=1e-9, cap=DEFAULT_CAP):
    """Simulated secrecy of I must hold exactly when the rank criteria call its complement qualified."""
    _check_cap(scheme, cap)
    words = coset_words(scheme)
    full = (1 << scheme.n) - 1
    certs, agree = [], []
    for mask in range(1 << scheme.n):
        cert = certify_forbidden(scheme, from_mask(mask), tolerance, cap, _cache=words)
        certs.append(cert)
        agree.append(cert.passed == report.rows[full ^ mask][2])
    return SimulationReport(certificates=certs, agreement=agree)
