import numpy as np
import pytest

from helpers import FOUR_PARTY, THRESHOLD_2_OF_3, self_dual_structures
from qramp.access import AccessStructure, from_mask
from qramp.errors import NotSelfDual
from qramp.optimizer import (
    IpSolution,
    a_vector,
    brute_force_ip,
    build_ip,
    reachable_counts,
    search_exact_budget,
    solution_to_assignment,
    solve_ip,
)


def x_of(n, groups):
    x = [0] * ((1 << n) - 1)
    for members, c in groups.items():
        x[sum(1 << (i - 1) for i in members) - 1] = c
    return tuple(x)


def test_a_vector_and_h():
    ip = build_ip(AccessStructure(2, [[1]]), 1)
    assert ip.h.tolist() == [0, 1, 1, 2]
    assert a_vector(-1, (2,), 2).tolist() == [-1, 0, 1, 1]


def test_build_ip_examples():
    ip = build_ip(AccessStructure(3, THRESHOLD_2_OF_3), 1)
    assert len(ip.qualified_rows) == 3 and len(ip.forbidden_rows) == 3
    assert ip.num_patterns == 7
    ip1 = build_ip(AccessStructure(1, [[1]]), 1)
    assert ip1.qualified_rows == (1,) and ip1.forbidden_rows == (0,)
    with pytest.raises(NotSelfDual):
        build_ip(AccessStructure(2, [[1, 2]]), 1)


def test_solve_threshold_l1():
    ip = build_ip(AccessStructure(3, THRESHOLD_2_OF_3), 1)
    sol = solve_ip(ip)
    assert sol == IpSolution(t=2, x=x_of(3, {(1,): 1, (2,): 1, (3,): 1}), objective=3)
    assert brute_force_ip(ip, 3) == sol
    assert brute_force_ip(ip, 2) is None


def test_solve_threshold_l2():
    ip = build_ip(AccessStructure(3, THRESHOLD_2_OF_3), 2)
    sol = solve_ip(ip)
    assert sol == IpSolution(t=4, x=x_of(3, {(1,): 2, (2,): 2, (3,): 2}), objective=6)
    assert brute_force_ip(ip, 5) is None
    assert brute_force_ip(ip, 6) == sol


def test_solve_four_party():
    ip = build_ip(AccessStructure(4, FOUR_PARTY), 1)
    sol = solve_ip(ip)
    assert brute_force_ip(ip, 4) is None
    assert brute_force_ip(ip, 5) == sol
    assert sol == IpSolution(t=3, x=x_of(4, {(1,): 2, (2,): 1, (3,): 1, (4,): 1}), objective=5)


def test_single_participant():
    ip = build_ip(AccessStructure(1, [[1]]), 1)
    assert brute_force_ip(ip, 1) == IpSolution(t=1, x=(1,), objective=1) == solve_ip(ip)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("L", [1, 2])
def test_solver_matches_oracle_exhaustively(n, L):
    for A in self_dual_structures(n):
        ip = build_ip(A, L)
        sol = solve_ip(ip)
        assert brute_force_ip(ip, sol.objective) == sol
        if sol.objective:
            assert brute_force_ip(ip, sol.objective - 1) is None


@pytest.mark.parametrize("n", [2, 3, 4])
def test_t_in_feasibility_interval(n):
    for A in self_dual_structures(n):
        for L in (1, 2, 3):
            ip = build_ip(A, L)
            sol = solve_ip(ip)
            sq = reachable_counts(ip.qualified_rows, sol.x)
            sf = reachable_counts(ip.forbidden_rows, sol.x)
            assert max(sf) + L == sol.t <= min(sq) <= sol.m
            assert sol.objective == int(np.dot(ip.h, sol.y))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_reduced_constraints_equivalent_to_full(n):
    rng = np.random.default_rng(7)
    for A in self_dual_structures(n):
        ip = build_ip(A, 1)
        fullQ = A.qualified_masks()
        fullF = A.forbidden_masks()
        for _ in range(200):
            x = tuple(int(v) for v in rng.integers(0, 3, size=(1 << n) - 1))
            red = min(reachable_counts(ip.qualified_rows, x)) >= max(reachable_counts(ip.forbidden_rows, x)) + 1
            full = min(reachable_counts(fullQ, x)) >= max(reachable_counts(fullF, x)) + 1
            assert red == full


def test_search_kernel_reports_infeasible_budget():
    ip = build_ip(AccessStructure(3, THRESHOLD_2_OF_3), 1)
    x = np.zeros(7, dtype=np.int64)
    costs = ip.h[1:].copy()
    qinc, finc = ip.incidence(ip.qualified_rows), ip.incidence(ip.forbidden_rows)
    assert not search_exact_budget(costs, qinc, finc, 1, 2, x)
    assert search_exact_budget(costs, qinc, finc, 1, 3, x)
    assert tuple(x) == (1, 1, 0, 1, 0, 0, 0)


def test_solution_to_assignment_examples():
    a = solution_to_assignment(IpSolution(2, x_of(3, {(1,): 1, (2,): 1, (3,): 1}), 3), 3)
    assert a.m == 3 and a.V == ((1,), (2,), (3,))
    a = solution_to_assignment(IpSolution(4, x_of(3, {(1,): 2, (2,): 2, (3,): 2}), 6), 3)
    assert a.m == 6 and a.V == ((1, 2), (3, 4), (5, 6))
    a = solution_to_assignment(IpSolution(1, x_of(2, {(1, 2): 1}), 2), 2)
    assert a.m == 1 and a.V == ((1,), (1,))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_share_count_equals_objective(n):
    for A in self_dual_structures(n):
        sol = solve_ip(build_ip(A, 2))
        a = solution_to_assignment(sol, n)
        assert sum(len(v) for v in a.V) == sol.objective
        for j, members in enumerate(a.pattern_of_share, start=1):
            assert all((j in a.V[i - 1]) == (i in members) for i in range(1, n + 1))


def test_solver_report_json():
    sol = solve_ip(build_ip(AccessStructure(4, FOUR_PARTY), 1))
    assert sol.to_json() == {"t": 3, "x": {"[1]": 2, "[2]": 1, "[3]": 1, "[4]": 1}, "objective": 5, "m": 5}
    assert from_mask(5) == (1, 3)
