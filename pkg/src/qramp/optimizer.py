"""Integer program for a minimum-total-share multiple assignment.

Variables are ``y = (t, x_1, ..., x_{2^n-1})`` where ``x_p`` counts shares of
the underlying (t, L, m) threshold scheme handed to every participant in the
bit pattern ``p``.  The objective is ``<h, y>`` with ``h_p = popcount(p)`` and
``h_0 = 0``, i.e. the total number of share symbols held by all participants.

For a fixed ``x`` write ``s(A)`` for the number of shares reachable by ``A``.
The threshold ``t`` is feasible iff ``max_F s(F) + L <= t <= min_Q s(Q)``, so
the solver searches over ``x`` alone and then sets ``t`` to the lower end.
"""
import json
from dataclasses import dataclass, field

import numpy as np

from ._accel import jit
from .access import AccessStructure, from_mask, maximal_forbidden, require_self_dual, to_mask
from .errors import ParameterViolation, SolverInternal


def popcount(p):
    return bin(p).count("1")


def indicator(A, p):
    """1(A)_p: 1 when some participant of A has its bit set in pattern p."""
    return 1 if to_mask(A) & p else 0


def a_vector(ell, A, n):
    """The 2^n-dimensional row (ell, 1(A)_1, ..., 1(A)_{2^n-1})."""
    mask = to_mask(A)
    return np.array([ell] + [1 if mask & p else 0 for p in range(1, 1 << n)], dtype=np.int64)


def h_vector(n):
    return np.array([popcount(p) for p in range(1 << n)], dtype=np.int64)


@dataclass(frozen=True)
class IpInstance:
    access: AccessStructure
    L: int
    h: np.ndarray
    qualified_rows: tuple  # masks of minimal qualified sets
    forbidden_rows: tuple  # masks of maximal forbidden sets

    @property
    def n(self):
        return self.access.n

    @property
    def num_patterns(self):
        return (1 << self.n) - 1

    def incidence(self, rows):
        P = self.num_patterns
        return np.array(
            [[1 if r & p else 0 for p in range(1, P + 1)] for r in rows], dtype=np.int64
        ).reshape(len(rows), P)


@dataclass(frozen=True)
class IpSolution:
    t: int
    x: tuple
    objective: int

    @property
    def y(self):
        return (self.t,) + tuple(self.x)

    @property
    def m(self):
        return sum(self.x)

    def to_json(self):
        groups = {
            json.dumps(list(from_mask(p)), separators=(",", ":")): c
            for p, c in enumerate(self.x, start=1)
            if c
        }
        return {"t": self.t, "x": groups, "objective": self.objective, "m": self.m}


@dataclass(frozen=True)
class AssignmentMap:
    groups: tuple  # ((participants...), count) in ascending pattern order
    V: tuple  # V_1..V_n, each a sorted tuple of 1-based share indices
    m: int
    pattern_of_share: tuple = field(default=())

    @property
    def n(self):
        return len(self.V)


def build_ip(A, L):
    require_self_dual(A)
    if not isinstance(L, int) or L < 1:
        raise ParameterViolation(f"secret length L must be >= 1, got {L!r}")
    return IpInstance(
        access=A,
        L=L,
        h=h_vector(A.n),
        qualified_rows=tuple(to_mask(Q) for Q in A.minimal_qualified),
        forbidden_rows=tuple(to_mask(F) for F in maximal_forbidden(A)),
    )


def reachable_counts(rows, x):
    """s(A) = sum of x_p over patterns p meeting A, for each row mask A."""
    return [sum(c for p, c in enumerate(x, start=1) if p & r) for r in rows]


def smallest_threshold(ip, x):
    """Least feasible t for ``x`` (or None when ``x`` is infeasible)."""
    sq = reachable_counts(ip.qualified_rows, x)
    sf = reachable_counts(ip.forbidden_rows, x)
    t = max(sf) + ip.L
    return t if min(sq) >= t else None


@jit
def search_exact_budget(costs, qinc, finc, L, budget, x):
    """Lexicographically first x with sum(costs * x) == budget that is feasible.

    Writes the answer into ``x`` and returns True, or returns False.  Subtrees
    are cut when some qualified row cannot catch up with the largest forbidden
    row even if all remaining budget went to it.
    """
    P = costs.shape[0]
    nq = qinc.shape[0]
    nf = finc.shape[0]
    sq = np.zeros(nq, dtype=np.int64)
    sf = np.zeros(nf, dtype=np.int64)
    for k in range(P):
        x[k] = 0
    rem = budget
    p = 0
    while True:
        maxf = 0
        for j in range(nf):
            if sf[j] > maxf:
                maxf = sf[j]
        minq = sq[0]
        for j in range(1, nq):
            if sq[j] < minq:
                minq = sq[j]
        descend = True
        if p == P:
            if rem == 0 and minq >= maxf + L:
                return True
            descend = False
        elif minq + rem < maxf + L:
            descend = False
        if descend:
            x[p] = 0
            p += 1
            continue
        # backtrack to the deepest level that can still be incremented
        while True:
            p -= 1
            if p < 0:
                return False
            if rem >= costs[p]:
                x[p] += 1
                rem -= costs[p]
                for j in range(nq):
                    sq[j] += qinc[j, p]
                for j in range(nf):
                    sf[j] += finc[j, p]
                p += 1
                break
            c = x[p]
            if c:
                rem += c * costs[p]
                for j in range(nq):
                    sq[j] -= c * qinc[j, p]
                for j in range(nf):
                    sf[j] -= c * finc[j, p]
                x[p] = 0


def objective_upper_bound(ip):
    """Cost of the always-feasible assignment giving L shares to the complement of each maximal forbidden set."""
    full = ip.access.full_mask
    return ip.L * sum(popcount(full ^ F) for F in ip.forbidden_rows)


def solve_ip(ip):
    """Exact optimum by iterative deepening on the objective value.

    Ties are broken by the lexicographically smallest x (patterns ordered by
    their integer value); t is then the smallest feasible threshold.
    """
    costs = ip.h[1:].copy()
    qinc = ip.incidence(ip.qualified_rows)
    finc = ip.incidence(ip.forbidden_rows)
    x = np.zeros(ip.num_patterns, dtype=np.int64)
    cap = objective_upper_bound(ip)
    for budget in range(cap + 1):
        if search_exact_budget(costs, qinc, finc, ip.L, budget, x):
            xs = tuple(int(v) for v in x)
            t = smallest_threshold(ip, xs)
            if t is None:
                raise SolverInternal("search returned an infeasible assignment")
            return IpSolution(t=t, x=xs, objective=budget)
    raise SolverInternal(f"no feasible assignment with objective <= {cap}; input not validated?")


def _enumerate_lex(costs, budget):
    P = len(costs)
    x = [0] * P

    def rec(p, rem):
        if p == P:
            yield tuple(x)
            return
        for v in range(rem // costs[p] + 1):
            x[p] = v
            yield from rec(p + 1, rem - v * costs[p])
        x[p] = 0

    return rec(0, budget)


def brute_force_ip(ip, budget):
    """Exhaustive oracle for :func:`solve_ip` over every x with objective <= budget.

    Constraints are evaluated literally on the full qualified and forbidden
    families with explicit inner products, scanning t upward, so the oracle
    shares nothing with the reduced formulation used by the solver.
    """
    n = ip.n
    h = ip.h
    Q = np.array([a_vector(-1, from_mask(A), n) for A in ip.access.qualified_masks()])
    F = np.array([-a_vector(-1, from_mask(A), n) for A in ip.access.forbidden_masks()])
    costs = [int(c) for c in h[1:]]
    best = None
    for x in _enumerate_lex(costs, budget):
        obj = int(np.dot(h, (0,) + x))
        if best is not None and obj >= best.objective:
            continue
        for t in range(sum(x) + 1):
            y = np.array((t,) + x, dtype=np.int64)
            if np.all(Q @ y >= 0) and np.all(F @ y >= ip.L):
                best = IpSolution(t=t, x=x, objective=obj)
                break
    return best


def solution_to_assignment(sol, n):
    """Hand out x_p fresh share indices to pattern p (ascending p, ascending index)."""
    V = [[] for _ in range(n)]
    groups = []
    owner = []
    j = 0
    for p, count in enumerate(sol.x, start=1):
        if not count:
            continue
        members = from_mask(p)
        groups.append((members, count))
        for _ in range(count):
            j += 1
            owner.append(members)
            for i in members:
                V[i - 1].append(j)
    return AssignmentMap(
        groups=tuple(groups), V=tuple(tuple(v) for v in V), m=j, pattern_of_share=tuple(owner)
    )
