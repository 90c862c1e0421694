"""Exact arithmetic in prime fields F_p.

`PrimeField` carries the modulus and does integer-level arithmetic on
canonical residues in [0, p); `FieldElement` is a thin typed wrapper for
call sites that want operator syntax and modulus checking.  Everything is
immutable and pure, so values can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterError

# Witness set making Miller-Rabin deterministic for all n < 3.3 * 10**24,
# far beyond the 64-bit moduli this package targets.
_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality check (exact below 3.3e24)."""
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime modulus p, with residue-level operations."""

    p: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ParameterError(f"modulus {self.p} is not prime")

    def normalize(self, n: int) -> int:
        """Reduce any signed integer to its canonical residue in [0, p)."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a nonzero residue."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        """a**e mod p by square-and-multiply; 0**0 is defined as 1."""
        if e < 0:
            raise ParameterError("exponent must be non-negative")
        return pow(a % self.p, e, self.p)

    def element(self, n: int) -> FieldElement:
        return FieldElement(n % self.p, self)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


@dataclass(frozen=True)
class FieldElement:
    """A canonical residue tagged with its field."""

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.field.p)

    def _same_field(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise ParameterError(f"cannot combine FieldElement with {type(other).__name__}")
        if other.field.p != self.field.p:
            raise ParameterError(
                f"modulus mismatch: {self.field.p} vs {other.field.p}"
            )

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same_field(other)
        return FieldElement(self.value + other.value, self.field)

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._same_field(other)
        return FieldElement(self.value - other.value, self.field)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._same_field(other)
        return FieldElement(self.value * other.value, self.field)

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.field)

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field.pow(self.value, e), self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"
