"""Prime-field arithmetic GF(q)."""
from dataclasses import dataclass

from .errors import FieldDivisionByZero, ModulusMismatch, ParameterViolation


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_geq(m):
    """Least prime p with p >= m (m >= 1)."""
    if m < 1:
        raise ParameterViolation(f"smallest_prime_geq needs m >= 1, got {m}")
    p = max(m, 2)
    while not is_prime(p):
        p += 1
    return p


def inverse(a, q):
    a %= q
    if a == 0:
        raise FieldDivisionByZero(f"0 has no inverse in GF({q})")
    return pow(a, q - 2, q)


@dataclass(frozen=True)
class FieldElement:
    value: int
    q: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ParameterViolation(f"modulus {self.q} is not prime")
        object.__setattr__(self, "value", self.value % self.q)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.q != self.q:
                raise ModulusMismatch(f"GF({self.q}) vs GF({other.q})")
            return other.value
        if isinstance(other, int):
            return other % self.q
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FieldElement((self.value + b) % self.q, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FieldElement((self.value - b) % self.q, self.q)

    def __rsub__(self, other):
        b = self._coerce(other)
        return FieldElement((b - self.value) % self.q, self.q)

    def __mul__(self, other):
        b = self._coerce(other)
        return FieldElement((self.value * b) % self.q, self.q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return FieldElement((self.value * inverse(b, self.q)) % self.q, self.q)

    def __neg__(self):
        return FieldElement(-self.value % self.q, self.q)

    def inverse(self):
        return FieldElement(inverse(self.value, self.q), self.q)

    def __int__(self):
        return self.value


def field_arith(a, b, op):
    """Apply ``op`` in {"add", "sub", "mul", "div"} to two elements of the same field."""
    ops = {
        "add": FieldElement.__add__,
        "sub": FieldElement.__sub__,
        "mul": FieldElement.__mul__,
        "div": FieldElement.__truediv__,
    }
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    if a.q != b.q:
        raise ModulusMismatch(f"GF({a.q}) vs GF({b.q})")
    return ops[op](a, b)
