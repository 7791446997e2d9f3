"""Independent oracles and fixtures-by-function shared across test modules."""
import itertools
from dataclasses import replace

import numpy as np

from qramp.access import AccessStructure, from_mask
from qramp.codes import build_scheme
from qramp.optimizer import build_ip, solution_to_assignment, solve_ip

THRESHOLD_2_OF_3 = [[1, 2], [1, 3], [2, 3]]
FOUR_PARTY = [[1, 2], [1, 3], [1, 4], [2, 3, 4]]


def span(rows, q):
    """Every vector of the row space, by enumerating all coefficient tuples."""
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return {()} if rows.ndim < 2 else {tuple([0] * rows.shape[1])}
    out = set()
    for coeffs in itertools.product(range(q), repeat=rows.shape[0]):
        out.add(tuple(int(v) for v in np.asarray(coeffs) @ rows % q))
    return out


def span_dim(rows, q):
    size = len(span(rows, q))
    d = 0
    while q ** d < size:
        d += 1
    assert q ** d == size
    return d


def self_dual_structures(n):
    """All monotone self-dual structures on n participants.

    Brute force: pick, for every complementary pair {I, ~I}, which side is
    qualified (2^(2^(n-1)) candidates) and keep the upward-closed families.
    """
    full = (1 << n) - 1
    reps = [m for m in range(1 << n) if m < full ^ m]
    found = []
    for choice in itertools.product((0, 1), repeat=len(reps)):
        fam = {r if c else full ^ r for r, c in zip(reps, choice)}
        if all((m | (1 << i)) in fam for m in fam for i in range(n)):
            found.append(AccessStructure(n, [from_mask(m) for m in fam]))
    return found


def compile_scheme(n, qualified, L, q=None, seed=0):
    A = AccessStructure(n, qualified)
    ip = build_ip(A, L)
    sol = solve_ip(ip)
    assignment = solution_to_assignment(sol, n)
    return A, ip, sol, assignment, build_scheme(assignment, sol, L, q=q, seed=seed)


def move_coordinate(scheme, rng):
    """Hand one qudit of a random participant to a different participant."""
    donors = [i for i, v in enumerate(scheme.V_prime) if v]
    i = int(rng.choice(donors))
    j = int(rng.choice([k for k in range(scheme.n) if k != i]))
    Vp = [list(v) for v in scheme.V_prime]
    c = Vp[i].pop(int(rng.integers(len(Vp[i]))))
    Vp[j] = sorted(Vp[j] + [c])
    return scheme.replace(V_prime=tuple(tuple(v) for v in Vp))


def replace_g2_row(scheme, rng):
    """Overwrite one row of G'2 with a random vector outside C'1."""
    pair = scheme.pair
    q = pair.q
    code = span(pair.G1, q)
    while True:
        v = rng.integers(0, q, size=pair.length)
        if tuple(int(a) for a in v) not in code:
            break
    G2 = pair.G2.copy()
    G2[int(rng.integers(G2.shape[0]))] = v
    return scheme.replace(pair=replace(pair, G2=G2))
