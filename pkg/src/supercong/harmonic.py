"""Generalized harmonic sums H_n^(i), exact (fractions.Fraction) and mod p^k.

H_n^(i) = sum_{j=1..n} 1/j^i with H_0^(i) = 0.  Prefix tables are grown
on demand and never mutated afterwards, so a warm cache can be shared by
concurrent readers.
"""

from __future__ import annotations

from fractions import Fraction

from .modarith import RangeError, Residue, RingDesc


class HarmonicCache:
    """Prefix tables of H_n^(i) as exact rationals and as residues."""

    def __init__(self):
        self._exact: dict[int, list[Fraction]] = {}
        self._mod: dict[tuple[int, int, int], list[int]] = {}

    def exact(self, n: int, i: int) -> Fraction:
        if n < 0:
            raise ValueError("harmonic index must be >= 0")
        if i < 1:
            raise ValueError("harmonic order must be >= 1")
        table = self._exact.setdefault(i, [Fraction(0)])
        while len(table) <= n:
            j = len(table)
            table.append(table[-1] + Fraction(1, j**i))
        return table[n]

    def mod(self, n: int, i: int, ring: RingDesc) -> int:
        if n < 0:
            raise ValueError("harmonic index must be >= 0")
        if n >= ring.p:
            raise RangeError(f"H_{n} has a 1/{ring.p} term, not defined mod {ring.p}^k")
        key = (i, ring.p, ring.k)
        table = self._mod.setdefault(key, [0])
        m = ring.modulus
        while len(table) <= n:
            j = len(table)
            table.append((table[-1] + pow(j, -i, m)) % m)
        return table[n]


_CACHE = HarmonicCache()


def harmonic(n: int, i: int, cache: HarmonicCache | None = None) -> Fraction:
    """Exact H_n^(i)."""
    return (cache or _CACHE).exact(n, i)


def harmonic_mod(n: int, i: int, ring: RingDesc, cache: HarmonicCache | None = None) -> Residue:
    """H_n^(i) with denominators inverted mod p^k; requires n < p."""
    return Residue((cache or _CACHE).mod(n, i, ring), ring)


def odd_square_sum(j: int, ring: RingDesc) -> Residue:
    """sum_{r=0..j-1} 1/(2r+1)^2 mod p^k; the empty sum (j = 0) is 0."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if j > 0 and 2 * j - 1 >= ring.p:
        raise RangeError(f"2r+1 reaches a multiple of p = {ring.p}")
    m = ring.modulus
    total = 0
    for r in range(j):
        total = (total + pow(2 * r + 1, -2, m)) % m
    return Residue(total, ring)
