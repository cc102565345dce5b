"""Exact arithmetic in Z[zeta_m] and character-sum evaluation of
finite-field hypergeometric values.

Elements of Z[zeta_m] are coefficient vectors over the power basis of
Z[x]/Phi_m(x); coordinates are unique, so "this value is a rational
integer" is a directly checkable predicate.  With m = p-1 this hosts
Jacobi sums, multiplicative characters of F_p^*, and the two oracle
routes to the integer p^n * F(n, lambda).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .modarith import is_prime

DEFAULT_INT_GUARD = 61
DEFAULT_DEF2_GUARD = 31


class NonRationalResult(ArithmeticError):
    """A value expected to be rational kept nonconstant coordinates."""


class NonIntegerResult(ArithmeticError):
    """A value expected to be a rational integer failed integrality."""


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending coeffs, den monic)."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        out[i - dd] = c
        if c:
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("division not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m (ascending), by dividing x^m - 1 by lower Phi_d."""
    if m < 1:
        raise ValueError("m must be >= 1")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


class CycRing:
    """Z[x]/Phi_m(x) with a cached monomial-reduction table."""

    def __init__(self, m: int):
        self.m = m
        self.poly = cyclotomic_poly(m)
        self.degree = len(self.poly) - 1
        # x^e mod Phi_m for e in [0, m): zeta powers wrap with period m
        table = []
        cur = [0] * self.degree
        if self.degree > 0:
            cur[0] = 1
        for _ in range(m):
            table.append(tuple(cur))
            nxt = [0] + cur[:-1]
            lead = cur[-1]
            if lead:
                for j in range(self.degree):
                    nxt[j] -= lead * self.poly[j]
            cur = nxt
        self.monomials = table

    def reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        """Reduce an ascending coefficient list mod Phi_m (any degree)."""
        coeffs = list(coeffs) + [0] * (self.degree - len(coeffs))
        for i in range(len(coeffs) - 1, self.degree - 1, -1):
            c = coeffs[i]
            if c:
                coeffs[i] = 0
                for j in range(self.degree):
                    coeffs[i - self.degree + j] -= c * self.poly[j]
        return tuple(coeffs[: self.degree])

    def zero(self) -> "CycInt":
        return CycInt(self, (0,) * self.degree)

    def one(self) -> "CycInt":
        return self.from_int(1)

    def from_int(self, c: int) -> "CycInt":
        v = [0] * self.degree
        v[0] = c
        return CycInt(self, tuple(v))

    def monomial(self, e: int, c: int = 1) -> "CycInt":
        base = self.monomials[e % self.m]
        return CycInt(self, tuple(c * b for b in base))


@lru_cache(maxsize=None)
def cyc_ring(m: int) -> CycRing:
    return CycRing(m)


@dataclass(frozen=True)
class CycInt:
    """An element of Z[zeta_m] in canonical power-basis coordinates."""

    ring: CycRing
    coeffs: tuple[int, ...]

    def _check(self, other: "CycInt"):
        if self.ring is not other.ring and self.ring.m != other.ring.m:
            raise ValueError("mixed cyclotomic rings")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check(other)
        return CycInt(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycInt":
        return CycInt(self.ring, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.ring, tuple(a * other for a in self.coeffs))
        self._check(other)
        d = self.ring.degree
        prod = [0] * (2 * d - 1 if d else 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycInt(self.ring, self.ring.reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycInt":
        if e < 0:
            raise ValueError("negative powers not defined in Z[zeta]")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conjugate(self) -> "CycInt":
        """The image under zeta -> zeta^(-1)."""
        out = [0] * max(self.ring.m, 1)
        for i, a in enumerate(self.coeffs):
            if a:
                out[(-i) % self.ring.m] += a
        return CycInt(self.ring, self.ring.reduce(out))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def constant(self) -> int:
        """The rational-integer value; requires all higher coordinates zero."""
        if not self.is_rational():
            raise NonRationalResult(f"nonconstant coordinates: {self.coeffs}")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CycInt):
            return self.ring.m == other.ring.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.m, self.coeffs))

    def __repr__(self):
        return f"CycInt(m={self.ring.m}, {list(self.coeffs)})"


@lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest positive primitive root mod p (deterministic)."""
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    factors = []
    n = p - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no primitive root found")


class CharTable:
    """Discrete logarithms of F_p^* with respect to the smallest primitive root."""

    def __init__(self, p: int):
        self.p = p
        self.g = primitive_root(p)
        log = [0] * p
        a = 1
        for e in range(p - 1):
            log[a] = e
            a = a * self.g % p
        self.log = log


@lru_cache(maxsize=None)
def char_table(p: int) -> CharTable:
    return CharTable(p)


@dataclass(frozen=True)
class MultChar:
    """A multiplicative character of F_p^*, chi(g^a) = zeta_{p-1}^(t a).

    t = 0 is the trivial character, t = (p-1)/2 the quadratic one; all
    characters vanish at 0 by convention.
    """

    t: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "t", self.t % (self.p - 1))

    def conjugate(self) -> "MultChar":
        return MultChar(-self.t, self.p)

    def __mul__(self, other: "MultChar") -> "MultChar":
        if other.p != self.p:
            raise ValueError("mixed primes")
        return MultChar(self.t + other.t, self.p)

    def is_trivial(self) -> bool:
        return self.t == 0

    def at_minus_one(self) -> int:
        """chi(-1) = (-1)^t."""
        return -1 if self.t % 2 else 1

    def value(self, a: int) -> CycInt:
        """chi(a) as an element of Z[zeta_{p-1}] (0 at multiples of p)."""
        ring = cyc_ring(self.p - 1)
        a %= self.p
        if a == 0:
            return ring.zero()
        return ring.monomial(self.t * char_table(self.p).log[a])


def trivial_char(p: int) -> MultChar:
    return MultChar(0, p)


def quadratic_char(p: int) -> MultChar:
    return MultChar((p - 1) // 2, p)


def jacobi_sum(chi: MultChar, psi: MultChar) -> CycInt:
    """J(chi, psi) = sum_x chi(x) psi(1-x) over F_p, with chi(0) := 0."""
    if chi.p != psi.p:
        raise ValueError("mixed primes")
    p = chi.p
    m = p - 1
    log = char_table(p).log
    counts = [0] * m
    for x in range(2, p):
        counts[(chi.t * log[x] + psi.t * log[(1 - x) % p]) % m] += 1
    ring = cyc_ring(m)
    return CycInt(ring, ring.reduce(counts))


def greene_binomial(a: MultChar, b: MultChar) -> tuple[CycInt, int]:
    """The character binomial (A choose B) as an exact pair (numerator, p).

    The value is B(-1) * J(A, conj(B)) / p; the division by p is left
    symbolic so everything stays in Z[zeta_{p-1}].
    """
    num = jacobi_sum(a, b.conjugate()) * b.at_minus_one()
    return num, a.p


@lru_cache(maxsize=None)
def _jacobi_phi_powers(p: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of J(phi, chi_t)^(n+1) for t = 0 .. p-2."""
    phi = quadratic_char(p)
    return tuple(
        (jacobi_sum(phi, MultChar(t, p)) ** (n + 1)).coeffs for t in range(p - 1)
    )


def hypergeometric_int(
    n: int, lam: int, p: int, p_guard: int = DEFAULT_INT_GUARD
) -> int:
    """The integer p^n * F(n, lambda) via the Jacobi-power character sum.

    Accumulates sum_chi J(phi, chi)^(n+1) conj(chi)(lambda) in
    Z[zeta_{p-1}], asserts the result is a rational integer divisible by
    1-p, and returns the negated quotient.
    """
    if p > p_guard:
        raise ValueError(f"p = {p} exceeds oracle guard {p_guard}; raise p_guard to override")
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if not 1 <= lam <= p - 1:
        raise ValueError("lambda must be a unit of F_p")
    if n < 1:
        raise ValueError("n must be >= 1")
    ring = cyc_ring(p - 1)
    log = char_table(p).log
    powers = _jacobi_phi_powers(p, n)
    total = ring.zero()
    for t in range(p - 1):
        term = CycInt(ring, powers[t]) * ring.monomial((-t * log[lam]) % (p - 1))
        total = total + term
    if not total.is_rational():
        raise NonIntegerResult(f"higher coordinates nonzero: {total.coeffs}")
    c = total.coeffs[0]
    if c % (p - 1):
        raise NonIntegerResult(f"constant term {c} not divisible by 1-p")
    # -(c / (1-p)) == c / (p-1)
    return c // (p - 1)


def hypergeometric_def2(
    chars_top: list[MultChar],
    chars_bot: list[MultChar],
    x: int,
    p_guard: int = DEFAULT_DEF2_GUARD,
) -> Fraction:
    """Literal evaluation of the Gaussian hypergeometric character sum.

    chars_top = [A_0, ..., A_n], chars_bot = [B_1, ..., B_n]; returns the
    exact rational value of the full sum over all characters chi, i.e.
    p/(p-1) * sum_chi binom(A_0 chi, chi) * prod_i binom(A_i chi, B_i chi)
    * chi(x).  Cost grows as O(p^2 (n+1)) cyclotomic multiplications.
    """
    if not chars_top or len(chars_top) != len(chars_bot) + 1:
        raise ValueError("need n+1 numerator and n denominator characters")
    p = chars_top[0].p
    if any(c.p != p for c in chars_top + chars_bot):
        raise ValueError("mixed primes")
    if p > p_guard:
        raise ValueError(f"p = {p} exceeds oracle guard {p_guard}; raise p_guard to override")
    n = len(chars_bot)
    ring = cyc_ring(p - 1)
    log = char_table(p).log
    x %= p
    if x == 0:
        return Fraction(0)
    total = ring.zero()
    for t in range(p - 1):
        chi = MultChar(t, p)
        sign = chi.at_minus_one()
        term = jacobi_sum(chars_top[0] * chi, chi.conjugate())
        for a, b in zip(chars_top[1:], chars_bot):
            bchi = b * chi
            sign *= bchi.at_minus_one()
            term = term * jacobi_sum(a * chi, bchi.conjugate())
        term = term * sign * ring.monomial(t * log[x])
        total = total + term
    c = total.constant()  # raises NonRationalResult on failure
    return Fraction(c, (p - 1) * p**n)
