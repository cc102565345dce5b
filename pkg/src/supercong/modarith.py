"""Exact modular arithmetic over Z/p^k Z for odd primes p.

Residues are stored canonically in [0, p^k); every operation is a pure
function of immutable inputs, so values can be shared freely across
threads or worker processes.
"""

from __future__ import annotations

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertible(ArithmeticError):
    """Inversion of a residue divisible by p."""


class NotAUnit(ArithmeticError):
    """Teichmuller lift requested for a multiple of p."""


class RangeError(ValueError):
    """Argument outside the p-free range of a computation."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound: int) -> list[int]:
    """Ascending list of all primes <= bound (sieve of Eratosthenes)."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, int(bound**0.5) + 1):
        if sieve[q]:
            start = q * q
            sieve[start : bound + 1 : q] = b"\x00" * ((bound - start) // q + 1)
    return [i for i in range(bound + 1) if sieve[i]]


def odd_primes_up_to(bound: int) -> list[int]:
    return [p for p in primes_up_to(bound) if p > 2]


class RingDesc:
    """The ring Z/p^k Z for an odd prime p; modulus is computed once."""

    __slots__ = ("p", "k", "modulus")

    def __init__(self, p: int, k: int):
        if p == 2:
            raise ValueError("p must be odd")
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if k < 1:
            raise ValueError("exponent k must be >= 1")
        self.p = p
        self.k = k
        self.modulus = p**k

    def __eq__(self, other):
        return isinstance(other, RingDesc) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    def __repr__(self):
        return f"RingDesc(p={self.p}, k={self.k})"

    def residue(self, value: int) -> "Residue":
        return Residue(value, self)


class Residue:
    """An element of Z/p^k Z, canonically in [0, modulus)."""

    __slots__ = ("value", "ring")

    def __init__(self, value: int, ring: RingDesc):
        self.value = value % ring.modulus
        self.ring = ring

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.ring != self.ring:
                raise ValueError("mixed rings")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value + v, self.ring)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value - v, self.ring)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(v - self.value, self.ring)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return Residue(self.value * v, self.ring)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.ring)

    def __pow__(self, exponent: int):
        if exponent < 0 and self.value % self.ring.p == 0:
            raise NotInvertible(f"{self.value} is divisible by {self.ring.p}")
        return Residue(pow(self.value, exponent, self.ring.modulus), self.ring)

    def inverse(self) -> "Residue":
        return mod_inverse(self)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ring.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ring))

    def __repr__(self):
        return f"Residue({self.value} mod {self.ring.p}^{self.ring.k})"


def mod_inverse(a: Residue) -> Residue:
    """Inverse of a modulo p^k; raises NotInvertible when p | a."""
    if a.value % a.ring.p == 0:
        raise NotInvertible(f"{a.value} not invertible mod {a.ring.p}^{a.ring.k}")
    return Residue(pow(a.value, -1, a.ring.modulus), a.ring)


def legendre(a: int, p: int) -> int:
    """Quadratic-character value of a mod p in {-1, 0, +1} (Euler criterion).

    Follows the chi(0) := 0 convention for multiples of p.
    """
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def teichmuller(lam: int, p: int, s: int) -> Residue:
    """The (p-1)-th-root-of-unity lift of lam, as a residue mod p^s.

    Computed by iterating p-th powers s-1 times, so the result is
    lam^(p^(s-1)) mod p^s; it satisfies w^(p-1) = 1 and w = lam (mod p).
    """
    ring = RingDesc(p, s)
    if lam % p == 0:
        raise NotAUnit(f"{lam} is divisible by {p}")
    w = lam % ring.modulus
    for _ in range(s - 1):
        w = pow(w, p, ring.modulus)
    return Residue(w, ring)


def binomial_mod(top: int, bot: int, ring: RingDesc) -> Residue:
    """C(top, bot) mod p^k for 0 <= bot <= top <= p-1.

    The range restriction keeps every factor prime to p, so the value is
    a plain product of factorials inverted in the ring.
    """
    if not 0 <= bot <= top:
        raise RangeError(f"need 0 <= bot <= top, got C({top}, {bot})")
    if top >= ring.p:
        raise RangeError(f"top = {top} >= p = {ring.p}: p-divisible factors")
    m = ring.modulus
    num = 1
    den = 1
    for i in range(1, bot + 1):
        num = num * (top - bot + i) % m
        den = den * i % m
    return Residue(num * pow(den, -1, m), ring)
