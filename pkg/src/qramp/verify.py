"""Rank-criterion verification of a built scheme against the requested structure."""
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .access import SubsetClass, from_mask
from .linalg import coset_dimension_gap, rank


def classify_subset(pair, coords):
    """Qualified when the projected dimension gap equals L, Forbidden when it is 0."""
    gap = coset_dimension_gap(pair.G1, pair.G2, coords, pair.q)
    if gap == pair.L:
        return SubsetClass.QUALIFIED
    if gap == 0:
        return SubsetClass.FORBIDDEN
    return SubsetClass.INTERMEDIATE


def structure_errors(scheme):
    """Well-formedness problems that make the rank criteria meaningless."""
    errs = []
    pair = scheme.pair
    q = pair.q
    seen = sorted(j for v in scheme.V_prime for j in v)
    if seen != list(range(1, scheme.m_prime + 1)):
        errs.append("V' is not a partition of 1..m'")
    if len(scheme.V_prime) != scheme.n:
        errs.append(f"{len(scheme.V_prime)} share sets for n={scheme.n} participants")
    if pair.L != scheme.L:
        errs.append(f"{pair.L} coset leaders for L={scheme.L}")
    r1 = rank(pair.G1, q)
    r2 = rank(pair.G2, q)
    if pair.G2.shape[0] and rank(np.vstack([pair.G1, pair.G2]), q) != r1:
        errs.append("C2 is not contained in C1")
    elif r1 - r2 != scheme.L:
        errs.append(f"dim C1 - dim C2 = {r1 - r2}, expected L={scheme.L}")
    elif pair.L and rank(np.vstack([pair.G1, pair.leaders]), q) != r1:
        errs.append("coset leaders are not codewords of C1")
    elif pair.L and rank(np.vstack([pair.G2, pair.leaders]) if pair.G2.shape[0] else pair.leaders, q) != r1:
        errs.append("coset leaders do not complete C2 to C1")
    return errs


@dataclass
class VerificationReport:
    n: int
    rows: list  # (I, classical SubsetClass, quantum_qualified)
    share_sizes: tuple
    m_prime: int
    errors: list = field(default_factory=list)

    @property
    def average_share(self):
        return Fraction(self.m_prime, self.n)

    def quantum_qualified(self, I):
        mask = 0
        for i in I:
            mask |= 1 << (i - 1)
        return self.rows[mask][2]

    def to_json(self, mismatches=None):
        avg = self.average_share
        doc = {
            "subsets": [
                {"I": list(I), "classical": cls.value, "quantum_qualified": qq}
                for I, cls, qq in self.rows
            ],
            "pass": not self.errors and (mismatches is not None and not mismatches),
            "average_share_qudits": {"num": avg.numerator, "den": avg.denominator},
            "share_sizes": list(self.share_sizes),
        }
        if self.errors:
            doc["structure_errors"] = list(self.errors)
        if mismatches:
            doc["mismatches"] = mismatches
        return doc


def derive_quantum_access(scheme):
    """Quantum qualified iff I's qudits are classically qualified and the rest forbidden."""
    pair = scheme.pair
    n = scheme.n
    full = (1 << n) - 1
    cache = {}

    def cls_of(mask):
        if mask not in cache:
            cache[mask] = classify_subset(pair, scheme.coordinates(from_mask(mask)))
        return cache[mask]

    rows = []
    for mask in range(1 << n):
        c = cls_of(mask)
        qq = c is SubsetClass.QUALIFIED and cls_of(full ^ mask) is SubsetClass.FORBIDDEN
        rows.append((from_mask(mask), c, qq))
    return VerificationReport(
        n=n,
        rows=rows,
        share_sizes=tuple(len(v) for v in scheme.V_prime),
        m_prime=scheme.m_prime,
        errors=structure_errors(scheme),
    )


def verify_against_spec(report, A):
    """Empty list on success, else one entry per offending subset or structural defect."""
    if report.n != A.n:
        return [{"structure": f"report has n={report.n}, access structure n={A.n}"}]
    out = [{"structure": e} for e in report.errors]
    for I, _, qq in report.rows:
        want = A.is_qualified(I)
        if qq != want:
            out.append({"I": list(I), "scheme_qualified": qq, "requested_qualified": want})
    return out
