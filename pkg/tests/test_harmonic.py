from fractions import Fraction

import pytest

from supercong.harmonic import HarmonicCache, harmonic, harmonic_mod, odd_square_sum
from supercong.modarith import RangeError, RingDesc, primes_up_to


def test_harmonic_examples():
    assert harmonic(0, 1) == 0
    assert harmonic(3, 1) == Fraction(11, 6)
    assert harmonic(2, 2) == Fraction(5, 4)


def test_harmonic_difference_property():
    for i in (1, 2, 3):
        for n in range(1, 60):
            assert harmonic(n, i) - harmonic(n - 1, i) == Fraction(1, n**i)


def test_harmonic_mod_examples():
    assert harmonic_mod(0, 1, RingDesc(7, 2)).value == 0
    # H_2 = 3/2 and 2^{-1} = 14 mod 27
    assert harmonic_mod(2, 1, RingDesc(3, 3)).value == 15
    # H_4 = 25/12 has numerator divisible by 25
    assert harmonic_mod(4, 1, RingDesc(5, 2)).value == 0


@pytest.mark.parametrize("p,k", [(5, 1), (7, 2), (13, 2), (31, 3)])
def test_harmonic_mod_matches_exact_reduction(p, k):
    ring = RingDesc(p, k)
    m = ring.modulus
    for i in (1, 2):
        for n in range(p):
            q = harmonic(n, i)
            expected = q.numerator % m * pow(q.denominator, -1, m) % m
            assert harmonic_mod(n, i, ring).value == expected


def test_harmonic_mod_rejects_indices_reaching_p():
    with pytest.raises(RangeError):
        harmonic_mod(5, 1, RingDesc(5, 2))


def test_wolstenholme_smoke():
    # numerator of H_{p-1} is divisible by p^2 for p >= 5
    for p in primes_up_to(61):
        if p < 5:
            continue
        assert harmonic(p - 1, 1).numerator % (p * p) == 0


def test_odd_square_sum_examples():
    assert odd_square_sum(0, RingDesc(11, 2)).value == 0
    assert odd_square_sum(1, RingDesc(7, 3)).value == 1
    # 1 + 9^{-1} = 1 + 11 = 12 mod 49
    assert odd_square_sum(2, RingDesc(7, 2)).value == 12


def test_odd_square_sum_range_error():
    with pytest.raises(RangeError):
        odd_square_sum(4, RingDesc(7, 2))  # 2r+1 reaches 7


def test_cache_is_shared_and_consistent():
    cache = HarmonicCache()
    a = harmonic(20, 1, cache)
    b = harmonic(10, 1, cache)
    assert a - b == sum(Fraction(1, j) for j in range(11, 21))
