"""Prime fields F_p and the roots of unity the example catalog needs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NoSuchRoot, NotPrime

# deterministic Miller-Rabin witnesses, valid for all n < 3.3e24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
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
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise NotPrime(self.p)

    def __call__(self, value: int) -> Scalar:
        return Scalar(value % self.p, self)

    def __iter__(self):
        for v in range(self.p):
            yield Scalar(v, self)

    def __len__(self):
        return self.p

    def zero(self) -> Scalar:
        return Scalar(0, self)

    def one(self) -> Scalar:
        return Scalar(1, self)

    def to_dict(self) -> dict:
        return {"p": self.p}

    @classmethod
    def from_dict(cls, d: dict) -> PrimeField:
        return make_prime_field(int(d["p"]))

    def __repr__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Scalar:
    """An element of F_p, always stored in canonical form 0 <= value < p."""

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            object.__setattr__(self, "value", self.value % self.field.p)

    def _coerce(self, other) -> int:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError(f"mixing {self.field} and {other.field}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar((self.value + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar((self.value - o) % self.field.p, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar((o - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Scalar(self.value * o % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(-self.value % self.field.p, self.field)

    def inverse(self) -> Scalar:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        return Scalar(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Scalar(o, self.field).inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Scalar(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __repr__(self):
        return str(self.value)


@lru_cache(maxsize=None)
def make_prime_field(p: int) -> PrimeField:
    if p < 2:
        raise NotPrime(p)
    return PrimeField(p)


def multiplicative_order(value: int, p: int) -> int:
    value %= p
    if value == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    x, k = value, 1
    while x != 1:
        x = x * value % p
        k += 1
    return k


def primitive_root_of_unity(field: PrimeField, n: int) -> Scalar:
    """Smallest representative of multiplicative order exactly n."""
    if n < 2:
        raise ValueError("n must be at least 2")
    p = field.p
    if (p - 1) % n:
        raise NoSuchRoot(p, n)
    for v in range(2, p):
        if pow(v, n, p) == 1 and multiplicative_order(v, p) == n:
            return field(v)
    raise NoSuchRoot(p, n)  # pragma: no cover


def zeta_binomial(i: int, s: int, zeta: Scalar) -> Scalar:
    """Gaussian binomial (i choose s) at zeta.

    Pascal rule: C(i, s) = C(i-1, s-1) + zeta**s * C(i-1, s), with
    C(i, 0) = C(i, i) = 1.
    """
    if not 0 <= s <= i:
        raise ValueError(f"need 0 <= s <= i, got i={i}, s={s}")
    return zeta.field(_zeta_binomial(i, s, zeta.value, zeta.field.p))


@lru_cache(maxsize=None)
def _zeta_binomial(i: int, s: int, z: int, p: int) -> int:
    if s == 0 or s == i:
        return 1
    return (_zeta_binomial(i - 1, s - 1, z, p) + pow(z, s, p) * _zeta_binomial(i - 1, s, z, p)) % p
