"""Finite multiple zeta value toolkit.

Truncated multiple harmonic sums mod p, Bernoulli residues, exact
generating-function machinery, and verification sweeps for the
identities relating them.
"""

from .errors import (
    AllSamplesSkippedError,
    DegenerateParametersError,
    InfeasibleFamilyError,
    PoleCancellationError,
    VonStaudtPoleError,
    ZeroInverseError,
)
from .indices import (
    Index,
    enumerate_admissible_indices,
    enumerate_all_indices,
    iter_admissible_indices,
    iter_all_indices,
    parse_index,
    reverse,
    stats,
)
from .modfield import (
    PrimeCtx,
    Residue,
    batch_inv,
    binom_mod,
    is_prime,
    mod_inv,
    pochhammer_mod,
    power_sum_mod,
    prime_ctx,
    primes_in_range,
)
from .harmonic import (
    AWindow,
    family_sum_alt_strict,
    family_sum_star,
    family_sum_star_unrestricted,
    family_sums_dp,
    mhs_star,
    mhs_strict,
)
from .bernoulli import (
    BernoulliTable,
    alternating_power_sum,
    bernoulli_mod_recurrence,
    check_euler_congruence,
    zeta_residue,
    zeta_sweep,
)
from .records import VerificationRecord
from .verify import (
    verify_antipode,
    verify_ao,
    verify_height_sum,
    verify_lemma,
    verify_lm,
    verify_range,
    verify_reversal,
)
from .symbolic import (
    anl_form_agreement,
    gauss_terminating_check,
    gf_coeff_series,
    gf_coefficient_check,
    hypergeom_congruence_check,
    pochhammer_poly,
    pole_weight,
    pole_weight_product_form,
    polylog_star_coeff,
)

__version__ = "0.1.0"

__all__ = [
    "AWindow",
    "AllSamplesSkippedError",
    "BernoulliTable",
    "DegenerateParametersError",
    "Index",
    "InfeasibleFamilyError",
    "PoleCancellationError",
    "PrimeCtx",
    "Residue",
    "VerificationRecord",
    "VonStaudtPoleError",
    "ZeroInverseError",
    "alternating_power_sum",
    "anl_form_agreement",
    "batch_inv",
    "bernoulli_mod_recurrence",
    "binom_mod",
    "check_euler_congruence",
    "enumerate_admissible_indices",
    "enumerate_all_indices",
    "family_sum_alt_strict",
    "family_sum_star",
    "family_sum_star_unrestricted",
    "family_sums_dp",
    "gauss_terminating_check",
    "gf_coeff_series",
    "gf_coefficient_check",
    "hypergeom_congruence_check",
    "is_prime",
    "iter_admissible_indices",
    "iter_all_indices",
    "mhs_star",
    "mhs_strict",
    "mod_inv",
    "parse_index",
    "pochhammer_mod",
    "pochhammer_poly",
    "pole_weight",
    "pole_weight_product_form",
    "polylog_star_coeff",
    "power_sum_mod",
    "prime_ctx",
    "primes_in_range",
    "reverse",
    "stats",
    "verify_antipode",
    "verify_ao",
    "verify_height_sum",
    "verify_lemma",
    "verify_lm",
    "verify_range",
    "verify_reversal",
    "zeta_residue",
    "zeta_sweep",
]
