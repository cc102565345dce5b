from fractions import Fraction

import pytest

from supercong.congruences import (
    CongruenceInput,
    D_eval,
    EvenNUnsupported,
    Kernel,
    X_eval,
    Y_eval,
    Z_eval,
    alternate_tail_sum,
    assembly_check,
    corollary_check,
    corollary_lhs,
    kernel_eval,
    nasty_check,
    reduced_gamma_sum,
    theorem_check,
    xd_check,
    yeah_check,
    yp_check,
)
from supercong.modarith import RingDesc, legendre, primes_up_to

ODD_PRIMES_31 = [p for p in primes_up_to(31) if p > 2]


def test_x_eval_worked_example():
    # X(3,1,1) = -11/2 = 2 mod 3
    assert X_eval(CongruenceInput(3, 1, 1), RingDesc(3, 1)).value == 2


def test_x_eval_structure_in_lambda():
    # the only lambda-dependence is phi_p(lambda) and the lam^{-j} weights;
    # rebuild X from its pieces at a non-residue and compare
    p, n = 7, 3
    ring = RingDesc(p, 1)
    from supercong.harmonic import HarmonicCache

    cache = HarmonicCache()
    for lam in range(1, p):
        direct = X_eval(CongruenceInput(p, n, lam), ring).value
        r = (p - 1) // 2
        l = (n + 1) // 2
        total = 0
        from math import comb

        for j in range(r + 1):
            h1 = (cache.mod(r + j, 1, ring) - cache.mod(j, 1, ring)) % p
            h2 = (cache.mod(r + j, 2, ring) - cache.mod(j, 2, ring)) % p
            bracket = 1 + 2 * (n + 1) * j * h1 + j * j * (l * (1 + n) * h1 * h1 - l * h2)
            body = pow(comb(r + j, j) * comb(r, j), l, p) * (-1) ** (j * l)
            total += body * pow(lam, -j, p) * bracket
        assert direct == legendre(lam, p) * total % p


def test_x_eval_rejects_even_n():
    with pytest.raises(EvenNUnsupported):
        X_eval(CongruenceInput(7, 2, 1), RingDesc(7, 1))
    with pytest.raises(EvenNUnsupported):
        Y_eval(CongruenceInput(7, 2, 1), RingDesc(7, 2))


def test_y_eval_worked_example():
    assert Y_eval(CongruenceInput(3, 1, 1), RingDesc(3, 2)).value == 0


def test_z_eval_examples():
    assert Z_eval(CongruenceInput(3, 1, 1), RingDesc(3, 3)).value == 8
    assert Z_eval(CongruenceInput(5, 1, 1), RingDesc(5, 3)).value == 101


def test_z_eval_lambda_one_drops_weight():
    # at lambda = 1 the lam^{-j p^2} factor is inert for any n
    inp_even = CongruenceInput(7, 2, 1)
    inp_odd = CongruenceInput(7, 3, 1)
    ring = RingDesc(7, 3)
    assert Z_eval(inp_even, ring).value != 0
    assert Z_eval(inp_odd, ring).value != 0


def test_d_eval_examples():
    assert D_eval(3, 1, RingDesc(3, 1)).value == 0  # empty sum
    assert D_eval(3, 2, RingDesc(3, 1)).value == 0
    assert D_eval(5, 1, RingDesc(5, 1)).value == 4


@pytest.mark.parametrize("p", [p for p in primes_up_to(97) if p > 3])
def test_d_congruent_to_inverse_binomial_form(p):
    ring = RingDesc(p, 1)
    assert D_eval(p, 1, ring).value == alternate_tail_sum(p, ring).value


def test_yeah_examples():
    assert yeah_check(7, 1).status == "PASS"
    assert yeah_check(97, 3).status == "PASS"


@pytest.mark.parametrize("p", [p for p in primes_up_to(97) if p > 2])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_yeah_sweep(p, n):
    assert yeah_check(p, n).status == "PASS"


@pytest.mark.parametrize("p", [7, 11, 13])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_kernels_match_binomial_forms_for_odd_n(p, n):
    for lam in range(1, p):
        inp = CongruenceInput(p, n, lam)
        assert (
            kernel_eval(inp, Kernel.COEP2, RingDesc(p, 1)).value
            == X_eval(inp, RingDesc(p, 1)).value
        )
        assert (
            kernel_eval(inp, Kernel.COEP, RingDesc(p, 2)).value
            == Y_eval(inp, RingDesc(p, 2)).value
        )


@pytest.mark.parametrize("p", [7, 11, 13])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_constant_kernel_equals_z_for_odd_n(p, n):
    for lam in range(1, p):
        inp = CongruenceInput(p, n, lam)
        assert (
            kernel_eval(inp, Kernel.COE1, RingDesc(p, 3)).value
            == Z_eval(inp, RingDesc(p, 3)).value
        )


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19])
@pytest.mark.parametrize("n", [2, 4])
def test_constant_kernel_vs_z_for_even_n(p, n):
    # for even n the square root of -phi_p(-1) carries j-dependent signs
    # when p = 1 mod 4, so the central-binomial form only matches the
    # kernel for p = 3 mod 4; the theorem check therefore always uses the
    # kernel assembly for even n
    equal = all(
        kernel_eval(CongruenceInput(p, n, lam), Kernel.COE1, RingDesc(p, 3)).value
        == Z_eval(CongruenceInput(p, n, lam), RingDesc(p, 3)).value
        for lam in range(1, p)
    )
    assert equal == (p % 4 == 3)


def test_kernel_guards():
    inp = CongruenceInput(5, 2, 1)
    with pytest.raises(ValueError):
        kernel_eval(inp, Kernel.COEP2, RingDesc(5, 1))  # p < 7 needs G1/G2
    with pytest.raises(ValueError):
        kernel_eval(CongruenceInput(7, 2, 1), Kernel.COEP2, RingDesc(7, 2))  # wrong k


@pytest.mark.parametrize("p", [7, 11, 13])
@pytest.mark.parametrize("n", [1, 3, 5])
def test_assembly_identity(p, n):
    for lam in range(1, p):
        assert assembly_check(CongruenceInput(p, n, lam)).status == "PASS"


@pytest.mark.parametrize("p", [7, 11, 13])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_reduced_gamma_sum_equals_kernel_assembly(p, n):
    # the pre-split form and the kernel assembly express the same residue
    for lam in range(1, p):
        inp = CongruenceInput(p, n, lam)
        m = p**3
        assembled = (
            p * p * kernel_eval(inp, Kernel.COEP2, RingDesc(p, 1)).value
            + p * kernel_eval(inp, Kernel.COEP, RingDesc(p, 2)).value
            + kernel_eval(inp, Kernel.COE1, RingDesc(p, 3)).value
        ) % m
        assert reduced_gamma_sum(inp, RingDesc(p, 3)).value == assembled


def test_theorem_worked_example():
    report = theorem_check(CongruenceInput(3, 1, 1))
    assert report.status == "PASS"
    assert report.lhs == 26 and report.rhs == 26


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_theorem_sweep_small(p, n):
    for lam in range(1, p):
        assert theorem_check(CongruenceInput(p, n, lam)).status == "PASS"


def test_congruence_input_validation():
    with pytest.raises(ValueError):
        CongruenceInput(9, 1, 1)
    with pytest.raises(ValueError):
        CongruenceInput(7, 0, 1)
    with pytest.raises(ValueError):
        CongruenceInput(7, 1, 7)
    assert CongruenceInput(7, 2, 1).l == Fraction(3, 2)


def test_corollary_worked_examples():
    assert corollary_lhs(3, RingDesc(3, 3)).value == 26
    assert corollary_lhs(5, RingDesc(5, 3)).value == 1
    assert corollary_check(3, 3).status == "PASS"
    assert corollary_check(5, 3).status == "PASS"


def test_corollary_k4_is_informational():
    report = corollary_check(3, 4)
    assert report.informational
    assert not corollary_check(3, 3).informational


@pytest.mark.parametrize("p", [p for p in primes_up_to(499) if p > 2])
def test_corollary_and_section4_sweep(p):
    assert corollary_check(p, 3).status == "PASS"
    assert xd_check(p).status == "PASS"
    assert yp_check(p).status == "PASS"


def test_xd_yp_worked_examples():
    assert xd_check(3).lhs == 0
    assert yp_check(3).status == "PASS"


@pytest.mark.parametrize("p", ODD_PRIMES_31)
def test_nasty_check_family(p):
    assert nasty_check(1, 1, p, 3).status == "PASS"


def test_theorem_oracle_guard_propagates():
    with pytest.raises(ValueError):
        theorem_check(CongruenceInput(67, 1, 1))
