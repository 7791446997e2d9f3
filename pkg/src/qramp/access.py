"""Monotone access structures over participants 1..n."""
import enum
import json
from dataclasses import dataclass

from .errors import NotMonotone, NotSelfDual, ParseError, TooManyParticipants

MAX_PARTICIPANTS = 12


class SubsetClass(enum.Enum):
    QUALIFIED = "Qualified"
    FORBIDDEN = "Forbidden"
    INTERMEDIATE = "Intermediate"


def to_mask(subset):
    mask = 0
    for i in subset:
        mask |= 1 << (int(i) - 1)
    return mask


def from_mask(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _minimal_antichain(masks):
    uniq = sorted(set(masks), key=lambda m: (bin(m).count("1"), from_mask(m)))
    keep = []
    for m in uniq:
        if not any(k & m == k for k in keep):
            keep.append(m)
    return keep


@dataclass(frozen=True)
class AccessStructure:
    """Participants ``1..n`` and the minimal qualified sets generating A_Q.

    Non-minimal sets are accepted and normalized away on construction.
    """

    n: int
    minimal_qualified: tuple

    def __init__(self, n, qualified):
        if not isinstance(n, int) or n < 1:
            raise ParseError(f"participant count must be a positive integer, got {n!r}")
        if n > MAX_PARTICIPANTS:
            raise TooManyParticipants(f"n={n} exceeds the supported maximum {MAX_PARTICIPANTS}")
        masks = []
        for A in qualified:
            A = list(A)
            if not A:
                raise ParseError("qualified sets must be nonempty")
            for i in A:
                if not isinstance(i, int) or not 1 <= i <= n:
                    raise ParseError(f"participant index {i!r} outside 1..{n}")
            masks.append(to_mask(A))
        object.__setattr__(self, "n", n)
        object.__setattr__(
            self, "minimal_qualified", tuple(from_mask(m) for m in _minimal_antichain(masks))
        )
        object.__setattr__(self, "_masks", tuple(to_mask(A) for A in self.minimal_qualified))

    @classmethod
    def from_family(cls, n, family):
        """Build from an explicit, complete qualified family; it must be upward closed."""
        masks = {to_mask(A) for A in family}
        for m in masks:
            for i in range(n):
                if (m | (1 << i)) not in masks:
                    raise NotMonotone(
                        f"{list(from_mask(m))} is qualified but {list(from_mask(m | (1 << i)))} is not"
                    )
        if 0 in masks:
            raise NotMonotone("the empty set cannot be qualified")
        return cls(n, [from_mask(m) for m in masks])

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    def is_qualified_mask(self, mask):
        return any(k & mask == k for k in self._masks)

    def is_qualified(self, I):
        return self.is_qualified_mask(to_mask(I))

    def qualified_masks(self):
        return [m for m in range(1 << self.n) if self.is_qualified_mask(m)]

    def forbidden_masks(self):
        return [m for m in range(1 << self.n) if not self.is_qualified_mask(m)]

    def to_json(self):
        return {"n": self.n, "qualified": [list(A) for A in self.minimal_qualified]}


def is_qualified(A, I):
    return A.is_qualified(I)


def check_self_dual(A):
    """Return None when exactly one of I and its complement is qualified for every I.

    Otherwise return the first violating subset (as a sorted tuple).
    """
    full = A.full_mask
    for m in range(1 << A.n):
        if A.is_qualified_mask(m) == A.is_qualified_mask(full ^ m):
            return from_mask(m)
    return None


def require_self_dual(A):
    witness = check_self_dual(A)
    if witness is not None:
        raise NotSelfDual(witness)
    return A


def maximal_forbidden(A):
    forb = A.forbidden_masks()
    out = [m for m in forb if not any(o != m and o & m == m for o in forb)]
    out.sort(key=lambda m: (bin(m).count("1"), from_mask(m)))
    return [from_mask(m) for m in out]


def load_input(text):
    """Parse the input JSON document ``{"n", "qualified", "L", optional "q"}``.

    Returns ``(AccessStructure, L, q_or_None)``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("input must be a JSON object")
    for key in ("n", "qualified", "L"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    L = doc["L"]
    if not isinstance(L, int) or isinstance(L, bool) or L < 1:
        raise ParseError(f"L must be a positive integer, got {L!r}")
    q = doc.get("q")
    if q is not None and (not isinstance(q, int) or isinstance(q, bool)):
        raise ParseError(f"q must be an integer, got {q!r}")
    qualified = doc["qualified"]
    if not isinstance(qualified, list) or not all(isinstance(A, list) for A in qualified):
        raise ParseError("qualified must be a list of lists of participant indices")
    return AccessStructure(doc["n"], qualified), L, q
