"""Exact verification of finite-field hypergeometric supercongruences.

A library plus CLI that evaluates Gaussian hypergeometric character
sums over F_p, the p-adic Gamma function mod p^k, the mod-p^3
supercongruence machinery built from them, and the exact-rational
harmonic-sum identity and telescoping-certificate suite.
"""

__version__ = "0.1.0"

from .checks import FAIL, PASS, SKIPPED, CheckReport
from .congruences import (
    CongruenceInput,
    D_eval,
    Kernel,
    X_eval,
    Y_eval,
    Z_eval,
    corollary_check,
    corollary_lhs,
    kernel_eval,
    theorem_check,
    xd_check,
    yeah_check,
    yp_check,
)
from .cyclotomic import (
    CycInt,
    CycRing,
    MultChar,
    cyclotomic_poly,
    greene_binomial,
    hypergeometric_def2,
    hypergeometric_int,
    jacobi_sum,
    primitive_root,
    quadratic_char,
    trivial_char,
)
from .harmonic import HarmonicCache, harmonic, harmonic_mod, odd_square_sum
from .identities import (
    CERT_ALG,
    CERT_SUMNMK,
    Certificate,
    IdentityId,
    RecurrenceId,
    eval_identity,
    verify_certificate,
    verify_identity,
    verify_recurrence,
    verify_solutions,
)
from .modarith import (
    NotAUnit,
    NotInvertible,
    RangeError,
    Residue,
    RingDesc,
    binomial_mod,
    legendre,
    mod_inverse,
    primes_up_to,
    teichmuller,
)
from .padic import (
    GammaTable,
    PrecisionError,
    g1_g2,
    gamma_p,
    gamma_table,
    nasty_rhs,
    padic_point,
    reflection_check,
    verify_lemma_bc,
    verify_lemma_har,
)

__all__ = [name for name in dir() if not name.startswith("_")]
