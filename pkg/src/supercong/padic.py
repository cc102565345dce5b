"""The p-adic Gamma function mod p^k and its verification kernels.

Gamma_p is tabulated on [0, p^k) by the ratio recurrence
Gamma_p(x+1)/Gamma_p(x) = -x (p does not divide x) or -1 (p | x); by the
congruence-invariance property a table entry at r is Gamma_p of any
p-adic integer congruent to r.  Tables are built once per (p, k),
cached, and shared read-only.
"""

from __future__ import annotations

from array import array
from functools import lru_cache

from .checks import CheckReport, FAIL, PASS, SKIPPED
from .harmonic import HarmonicCache, odd_square_sum
from .modarith import RingDesc, Residue, legendre, teichmuller

MAX_PRECISION = 5


class PrecisionError(ValueError):
    """Requested precision beyond the desk-scale table ceiling."""


class SingularSystem(ArithmeticError):
    """The 2x2 Taylor system for (G1, G2) failed to solve."""


class GammaTable:
    """Values Gamma_p(r) mod p^k for every r in [0, p^k)."""

    def __init__(self, ring: RingDesc):
        self.ring = ring
        p, m = ring.p, ring.modulus
        vals = array("q", bytes(8 * m)) if m < 2**63 else [0] * m
        vals[0] = 1
        v = 1
        for r in range(m - 1):
            v = v * (m - 1 if r % p == 0 else m - r) % m
            vals[r + 1] = v
        self.values = vals

    def at(self, r: int) -> int:
        return self.values[r % self.ring.modulus]


@lru_cache(maxsize=None)
def gamma_table(p: int, k: int, allow_large: bool = False) -> GammaTable:
    if k > MAX_PRECISION and not allow_large:
        raise PrecisionError(f"k = {k} > {MAX_PRECISION}; table cost is O(p^k)")
    return GammaTable(RingDesc(p, k))


def padic_point(num: int, den: int, ring: RingDesc) -> int:
    """The residue mod p^k representing the p-adic integer num/den."""
    return num * pow(den, -1, ring.modulus) % ring.modulus


def gamma_p(x: int | Residue, ring: RingDesc) -> Residue:
    """Gamma_p at the residue x, valid mod p^k."""
    r = x.value if isinstance(x, Residue) else x % ring.modulus
    return Residue(gamma_table(ring.p, ring.k).at(r), ring)


def constant_digit(x: int, p: int) -> int:
    """First p-adic digit of x taken in [1..p] (0 maps to p)."""
    d = x % p
    return d if d else p


def reflection_check(x: int, ring: RingDesc) -> bool:
    """Does Gamma_p(x) * Gamma_p(1-x) = (-1)^(x_0) hold mod p^k?"""
    table = gamma_table(ring.p, ring.k)
    m = ring.modulus
    lhs = table.at(x % m) * table.at((1 - x) % m) % m
    return lhs == (-1) ** constant_digit(x, ring.p) % m


@lru_cache(maxsize=None)
def _g1_g2_raw(p: int, x: int) -> tuple[int, int]:
    """(G1(x) mod p^2, G2(x) mod p) from Gamma_p(x + p), Gamma_p(x + 2p) mod p^3.

    Writes Gamma_p(x+z)/Gamma_p(x) - 1 = z G1 + z^2/2 G2 (mod p^3) at
    z = p and z = 2p and solves the resulting linear system.
    """
    if p < 7:
        raise ValueError("Taylor expansion of Gamma_p requires p >= 7")
    m = p**3
    table = gamma_table(p, 3)
    x %= m
    inv_gx = pow(table.at(x), -1, m)
    u1 = (table.at((x + p) % m) * inv_gx - 1) % m
    u2 = (table.at((x + 2 * p) % m) * inv_gx - 1) % m
    inv2 = (m + 1) // 2
    a = (4 * u1 - u2) * inv2 % m  # p * G1 mod p^3
    c = (u2 - 2 * u1) % m  # p^2 * G2 mod p^3
    if a % p or c % (p * p):
        raise SingularSystem(f"G1/G2 not p-integral at x = {x} (p = {p})")
    return (a // p) % (p * p), (c // (p * p)) % p


def g1_g2(x: int | Residue, p: int) -> tuple[Residue, Residue]:
    """Logarithmic-derivative quotients at x: (G1 mod p^2, G2 mod p)."""
    r = x.value if isinstance(x, Residue) else x
    v1, v2 = _g1_g2_raw(p, r % p**3)
    return Residue(v1, RingDesc(p, 2)), Residue(v2, RingDesc(p, 1))


def gamma_half_square_check(p: int, k: int = 2) -> bool:
    """Gamma_p(1/2)^2 = -phi_p(-1), checked mod p^k."""
    ring = RingDesc(p, k)
    m = ring.modulus
    g = gamma_table(p, k).at(padic_point(1, 2, ring))
    return g * g % m == (-legendre(-1, p)) % m


def verify_lemma_bc(p: int) -> CheckReport:
    """Binomial form of the squared Gamma quotient, mod p^2, all j."""
    ring = RingDesc(p, 2)
    m = ring.modulus
    table = gamma_table(p, 2)
    half = (m + 1) // 2
    phi_m1 = legendre(-1, p)
    r = (p - 1) // 2
    bin1 = bin2 = 1  # C(r+j, j), C(r, j) stepped over j
    failures = []
    lhs = rhs = None
    for j in range(1, r + 1):
        inv_j = pow(j, -1, m)
        bin1 = bin1 * (r + j) % m * inv_j % m
        bin2 = bin2 * (r - j + 1) % m * inv_j % m
        lhs = -phi_m1 * (-1) ** j * bin1 * bin2 % m
        rhs = pow(table.at(half + j), 2, m) * pow(table.at((1 + j) % m), -2, m) % m
        if lhs != rhs:
            failures.append(j)
    status = PASS if not failures else FAIL
    note = f"j = 1..{r}" if not failures else f"failing j: {failures}"
    return CheckReport(
        family="lemma_bc", inputs={"p": p}, modulus=m,
        lhs=lhs, rhs=rhs, status=status, note=note,
    )


def gamma_log_derivative_diff(j: int, p: int) -> Residue:
    """A(j) = G1(1/2 + j) - G1(1 + j) mod p^2."""
    ring3 = RingDesc(p, 3)
    half = padic_point(1, 2, ring3)
    a1, _ = _g1_g2_raw(p, (half + j) % ring3.modulus)
    a2, _ = _g1_g2_raw(p, (1 + j) % ring3.modulus)
    return Residue(a1 - a2, RingDesc(p, 2))


def gamma_second_order_comb(n: int, j: int, p: int) -> Residue:
    """B(n, j), the quadratic G1/G2 combination, mod p."""
    ring3 = RingDesc(p, 3)
    half = padic_point(1, 2, ring3)
    g1a, g2a = _g1_g2_raw(p, (half + j) % ring3.modulus)
    g1b, g2b = _g1_g2_raw(p, (1 + j) % ring3.modulus)
    inv2 = (p + 1) // 2
    v = (
        (n + 1) * inv2 * (g2a - g2b)
        + (n + 1) * n * inv2 * g1a * g1a
        + (n + 1) * (n + 2) * inv2 * g1b * g1b
        - (n + 1) * (n + 1) * g1a * g1b
    )
    return Residue(v, RingDesc(p, 1))


def verify_lemma_har(
    p: int, n_set: tuple[int, ...] = (1, 2, 3, 4), cache: HarmonicCache | None = None
) -> CheckReport:
    """Harmonic forms of A(j) mod p^2 and B(n, j) mod p for all j."""
    if p < 7:
        return CheckReport(
            family="lemma_har", inputs={"p": p}, modulus=None,
            lhs=None, rhs=None, status=SKIPPED,
            note="G1/G2 extraction requires p >= 7",
        )
    cache = cache or HarmonicCache()
    ring2 = RingDesc(p, 2)
    ring1 = RingDesc(p, 1)
    m2 = ring2.modulus
    r = (p - 1) // 2
    failures = []
    for j in range(r + 1):
        a = gamma_log_derivative_diff(j, p).value
        rhs_a = (
            cache.mod(r + j, 1, ring2)
            - cache.mod(j, 1, ring2)
            + 2 * p * odd_square_sum(j, ring2).value
        ) % m2
        if a != rhs_a:
            failures.append(("A", j))
        h1d = (cache.mod(r + j, 1, ring1) - cache.mod(j, 1, ring1)) % p
        h2d = (cache.mod(r + j, 2, ring1) - cache.mod(j, 2, ring1)) % p
        inv2 = (p + 1) // 2
        for n in n_set:
            b = gamma_second_order_comb(n, j, p).value
            rhs_b = ((n + 1) ** 2 * inv2 * h1d * h1d - (n + 1) * inv2 * h2d) % p
            if b != rhs_b:
                failures.append(("B", n, j))
    status = PASS if not failures else FAIL
    note = f"j = 0..{r}, n in {list(n_set)}" if not failures else f"failing: {failures}"
    return CheckReport(
        family="lemma_har", inputs={"p": p}, modulus=m2,
        lhs=None, rhs=None, status=status, note=note,
    )


def nasty_rhs(n: int, lam: int, p: int, k: int) -> Residue:
    """Right side of the exact Gamma-quotient expansion of -p^n F(n, lambda).

    Evaluates, mod p^k: the 1/(1-p) prefactor, the standalone quadratic
    character term, the j = 0..(p-3)/2 sum of
    Gamma_p(j/(p-1))^(n+1) / Gamma_p(1/2 + j/(p-1))^(n+1) * w^j(lambda),
    and the p^(n+1)-weighted tail over j = (p+1)/2..p-2, with w the
    Teichmuller lift at precision k.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("only odd n is covered by this expansion")
    if k > MAX_PRECISION:
        raise PrecisionError(f"k = {k} > {MAX_PRECISION}")
    if k < 3:
        raise ValueError("intended for k in 3..5")
    if not 1 <= lam <= p - 1:
        raise ValueError("lambda must be a unit of F_p")
    ring = RingDesc(p, k)
    m = ring.modulus
    table = gamma_table(p, k)
    inv_pm1 = pow(p - 1, -1, m)
    half = (m + 1) // 2
    w = teichmuller(lam, p, k).value
    sign = (-legendre(-1, p)) ** ((n + 1) // 2)

    first = 0
    wj = 1
    for j in range((p - 1) // 2):  # j = 0 .. (p-3)/2
        arg = j * inv_pm1 % m
        num = pow(table.at(arg), n + 1, m)
        den = pow(table.at((half + arg) % m), -(n + 1), m)
        first = (first + num * den % m * wj) % m
        wj = wj * w % m

    tail = 0
    wj = pow(w, (p + 1) // 2, m)
    for j in range((p + 1) // 2, p - 1):  # j = (p+1)/2 .. p-2
        arg = j * inv_pm1 % m
        num = pow(table.at(arg), n + 1, m)
        den = pow(table.at((arg - half) % m), -(n + 1), m)
        tail = (tail + num * den % m * wj) % m
        wj = wj * w % m

    inner = (legendre(lam, p) + sign * (first + pow(p, n + 1, m) * tail)) % m
    return Residue(pow(1 - p, -1, m) * inner, ring)
