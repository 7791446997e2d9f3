"""Nested Reed-Solomon code pairs and the coordinate-duplication expansion.

A (t, L, m) ramp threshold scheme is the pair C2 < C1 of evaluation codes of
polynomials of degree < t - L and < t at the points 0..m-1 of GF(q).  The
expansion then copies coordinate j once for each participant holding it, so
every participant owns physically distinct positions.
"""
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterViolation, UncoveredCoordinate
from .field import is_prime, smallest_prime_geq
from .linalg import as_matrix, rref_and_basis_completion, row_basis, solve_coset

RNG_NAME = "numpy.random.PCG64"


@dataclass(frozen=True, eq=False)
class NestedCodePair:
    q: int
    G1: np.ndarray
    G2: np.ndarray
    leaders: np.ndarray
    eval_points: tuple = ()

    @property
    def length(self):
        return self.G1.shape[1]

    @property
    def L(self):
        return self.leaders.shape[0]


@dataclass(frozen=True, eq=False)
class QuantumScheme:
    pair: NestedCodePair
    V_prime: tuple
    n: int
    L: int
    q: int
    t: int
    m: int
    gamma: tuple
    groups: tuple = ()
    seed: int = field(default=0)

    @property
    def m_prime(self):
        return self.pair.length

    def coordinates(self, participants):
        """Sorted 1-based coordinates held jointly by ``participants``."""
        out = []
        for i in participants:
            out.extend(self.V_prime[i - 1])
        return sorted(out)

    def to_json(self):
        p = self.pair
        return {
            "n": self.n,
            "L": self.L,
            "q": self.q,
            "t": self.t,
            "m": self.m,
            "m_prime": self.m_prime,
            "G1": p.G1.tolist(),
            "G2": p.G2.tolist(),
            "leaders": p.leaders.tolist(),
            "V_prime": [list(v) for v in self.V_prime],
            "gamma": list(self.gamma),
            "groups": [{"participants": list(s), "count": c} for s, c in self.groups],
            "rng": RNG_NAME,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, doc):
        q = int(doc["q"])
        width = int(doc["m_prime"])
        pair = NestedCodePair(
            q=q,
            G1=as_matrix(doc["G1"], q, cols=width),
            G2=as_matrix(doc["G2"], q, cols=width),
            leaders=as_matrix(doc["leaders"], q, cols=width),
        )
        return cls(
            pair=pair,
            V_prime=tuple(tuple(int(j) for j in v) for v in doc["V_prime"]),
            n=int(doc["n"]),
            L=int(doc["L"]),
            q=q,
            t=int(doc["t"]),
            m=int(doc["m"]),
            gamma=tuple(doc.get("gamma", ())),
            groups=tuple((tuple(g["participants"]), g["count"]) for g in doc.get("groups", ())),
            seed=int(doc.get("seed", 0)),
        )

    def replace(self, **changes):
        kw = {k: getattr(self, k) for k in self.__dataclass_fields__}
        kw.update(changes)
        return QuantumScheme(**kw)


def build_rs_pair(t, L, m, q):
    if not is_prime(q):
        raise ParameterViolation(f"q={q} is not prime")
    if not 1 <= L <= t <= m <= q:
        raise ParameterViolation(f"need 1 <= L <= t <= m <= q, got t={t} L={L} m={m} q={q}")
    points = np.arange(m, dtype=np.int64)
    V = np.ones((t, m), dtype=np.int64)
    for i in range(1, t):
        V[i] = V[i - 1] * points % q
    G1 = V
    G2 = V[: t - L].copy()
    leaders = rref_and_basis_completion(G2, G1, q)
    return NestedCodePair(q=q, G1=G1, G2=G2, leaders=leaders, eval_points=tuple(range(m)))


def expand_phi(pair, V):
    """Duplicate coordinates so the share index sets become pairwise disjoint.

    Returns ``(expanded_pair, V_prime, gamma)``.  Layout: the copies of
    coordinate 1 first, then of coordinate 2, ...; inside a block the copies go
    to participants in ascending order.
    """
    m = pair.length
    holders = [[] for _ in range(m)]
    for i, Vi in enumerate(V, start=1):
        for j in Vi:
            if not 1 <= j <= m:
                raise UncoveredCoordinate(f"share index {j} outside 1..{m}")
            holders[j - 1].append(i)
    missing = [j + 1 for j, h in enumerate(holders) if not h]
    if missing:
        raise UncoveredCoordinate(f"coordinates held by nobody: {missing}")
    gamma = tuple(len(h) for h in holders)
    Vp = [[] for _ in V]
    source = []
    pos = 0
    for j, h in enumerate(holders):
        for i in sorted(h):
            pos += 1
            source.append(j)
            Vp[i - 1].append(pos)
    cols = np.array(source, dtype=np.int64)
    expanded = NestedCodePair(
        q=pair.q,
        G1=pair.G1[:, cols],
        G2=pair.G2[:, cols] if pair.G2.shape[0] else np.zeros((0, cols.size), dtype=np.int64),
        leaders=pair.leaders[:, cols],
    )
    return expanded, tuple(tuple(v) for v in Vp), gamma


def build_scheme(assignment, solution, L, q=None, seed=0):
    """Underlying RS pair for the assignment, expanded into a :class:`QuantumScheme`."""
    m = assignment.m
    if q is None:
        q = smallest_prime_geq(max(m, 2))
    elif not is_prime(q) or q < m:
        raise ParameterViolation(f"field size q={q} must be a prime >= m={m}")
    pair = build_rs_pair(solution.t, L, m, q)
    expanded, Vp, gamma = expand_phi(pair, assignment.V)
    return QuantumScheme(
        pair=expanded,
        V_prime=Vp,
        n=assignment.n,
        L=L,
        q=q,
        t=solution.t,
        m=m,
        gamma=gamma,
        groups=assignment.groups,
        seed=seed,
    )


def _share_sets(target, V):
    if isinstance(target, QuantumScheme):
        return target.pair, target.V_prime
    if V is None:
        V = tuple((j,) for j in range(1, target.length + 1))
    return target, tuple(tuple(v) for v in V)


def sample_codeword(pair, secret, rng):
    """Uniform draw from the coset f(secret) = secret . leaders + C2."""
    q = pair.q
    if pair.L == 0:
        raise ParameterViolation("code pair has no secret space (L = 0)")
    s = np.asarray(secret, dtype=np.int64).reshape(-1) % q
    if s.size != pair.L:
        raise ParameterViolation(f"secret has length {s.size}, expected {pair.L}")
    X = s @ pair.leaders % q
    B2 = row_basis(pair.G2, q)
    if B2.shape[0]:
        r = rng.integers(0, q, size=B2.shape[0])
        X = (X + r @ B2) % q
    return X


def share_classical(target, secret, seed, V=None):
    """Classical shares per participant, sampled with ``numpy.random.default_rng(seed)``.

    ``target`` is a QuantumScheme (shares follow V') or a bare NestedCodePair
    (shares follow ``V``, or one coordinate per participant).
    """
    pair, sets = _share_sets(target, V)
    X = sample_codeword(pair, secret, np.random.default_rng(seed))
    return [X[np.asarray(v, dtype=np.int64) - 1] if v else X[:0] for v in sets]


def reconstruct_classical(target, I, shares, V=None):
    """Recover the secret from the shares of participants ``I``.

    ``shares`` maps participant -> values (or is the full per-participant list).
    """
    pair, sets = _share_sets(target, V)
    coords, values = [], []
    for i in sorted(set(I)):
        vals = shares[i] if isinstance(shares, dict) else shares[i - 1]
        vals = list(np.asarray(vals).reshape(-1))
        if len(vals) != len(sets[i - 1]):
            raise ParameterViolation(f"participant {i} has {len(vals)} values, expected {len(sets[i - 1])}")
        coords.extend(sets[i - 1])
        values.extend(vals)
    order = np.argsort(coords, kind="stable")
    coords = [coords[k] for k in order]
    values = [values[k] for k in order]
    # overlapping pre-expansion share sets can list a coordinate twice
    uniq_c, uniq_v = [], []
    for c, v in zip(coords, values):
        if not uniq_c or uniq_c[-1] != c:
            uniq_c.append(c)
            uniq_v.append(v)
    return solve_coset(pair.G1, pair.G2, pair.leaders, uniq_c, uniq_v, pair.q)
