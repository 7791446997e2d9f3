import numpy as np

from helpers import FOUR_PARTY, compile_scheme, move_coordinate, self_dual_structures
from qramp.access import AccessStructure, SubsetClass, from_mask
from qramp.codes import build_rs_pair
from qramp.verify import classify_subset, derive_quantum_access, verify_against_spec


def test_classify_examples():
    p = build_rs_pair(2, 1, 3, 3)
    assert classify_subset(p, []) is SubsetClass.FORBIDDEN
    assert classify_subset(p, [1, 2]) is SubsetClass.QUALIFIED
    ramp = build_rs_pair(4, 2, 6, 7)
    assert classify_subset(ramp, [1, 2, 3]) is SubsetClass.INTERMEDIATE
    assert classify_subset(ramp, [4, 5]) is SubsetClass.FORBIDDEN
    assert classify_subset(ramp, [1, 3, 4, 6]) is SubsetClass.QUALIFIED


def test_quantum_access_examples(threshold_scheme):
    A, *_, scheme = threshold_scheme
    rep = derive_quantum_access(scheme)
    assert rep.quantum_qualified((1, 2))
    assert not rep.quantum_qualified((1,))
    assert rep.quantum_qualified((1, 2, 3))
    assert len(rep.rows) == 8
    assert verify_against_spec(rep, A) == []
    doc = rep.to_json([])
    assert doc["pass"] and doc["average_share_qudits"] == {"num": 1, "den": 1}


def test_ramp_and_four_party_pass(ramp_scheme, four_party_scheme):
    for A, _, sol, _, scheme in (ramp_scheme, four_party_scheme):
        rep = derive_quantum_access(scheme)
        assert verify_against_spec(rep, A) == []
        assert rep.average_share * A.n == sol.objective == scheme.m_prime


def test_move_mutation_detected(threshold_scheme):
    A, *_, scheme = threshold_scheme
    bad = move_coordinate(scheme, np.random.default_rng(0))
    assert verify_against_spec(derive_quantum_access(bad), A)


def test_exchange_is_undetectable_on_symmetric_threshold(threshold_scheme):
    # exchanging qudits between participants relabels coordinates of a
    # symmetric RS code: the result is a valid 2-of-3 scheme again
    A, *_, scheme = threshold_scheme
    swapped = scheme.replace(V_prime=((2,), (1,), (3,)))
    assert verify_against_spec(derive_quantum_access(swapped), A) == []


def test_duality_and_chain_monotonicity():
    for n in (2, 3, 4):
        for A in self_dual_structures(n):
            for L in (1, 2):
                *_, scheme = compile_scheme(n, A.minimal_qualified, L)
                rep = derive_quantum_access(scheme)
                full = (1 << n) - 1
                order = {SubsetClass.FORBIDDEN: 0, SubsetClass.INTERMEDIATE: 1, SubsetClass.QUALIFIED: 2}
                for mask in range(1 << n):
                    assert rep.rows[mask][2] != rep.rows[full ^ mask][2]
                    for i in range(n):
                        assert order[rep.rows[mask | 1 << i][1]] >= order[rep.rows[mask][1]]
                assert verify_against_spec(rep, A) == []
                assert rep.rows[mask][0] == from_mask(mask)


def test_mismatched_structure_reported():
    *_, scheme = compile_scheme(4, FOUR_PARTY, 1)
    other = AccessStructure(4, [[1]])
    bad = verify_against_spec(derive_quantum_access(scheme), other)
    assert bad and all("I" in b for b in bad)
