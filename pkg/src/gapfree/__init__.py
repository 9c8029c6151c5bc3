"""gapfree: an exact-arithmetic laboratory for gap-free partition identities.

The library verifies, coefficient by coefficient, the chain of q-series
identities behind the fact that the number of gap-free partitions of n
(A034296) equals the sum of smallest parts over the distinct partitions
of n with an odd number of parts.  Everything is exact: truncated integer
power series on one side, brute-force partition enumeration on the other.

Layers, bottom up:

  series      truncated univariate power series over the integers
  biseries    bivariate series in z (bounded degree) and q (truncated)
  qspecial    q-Pochhammer symbols and the basic hypergeometric sum
  partitions  enumeration oracles and partition statistics
  identities  one named check per identity, with a runnable catalog
  cli         `gapfree verify | table | oeis` command-line harness
"""

from .series import (
    Mismatch,
    QSeries,
    eq_up_to,
    first_mismatch,
    geometric,
    monomial,
    one,
    zero,
)
from .biseries import (
    BiMismatch,
    BiSeries,
    bi_eq_up_to,
    bi_first_mismatch,
    bi_one,
    bi_zero,
    dz,
    from_qseries,
    poch_z_inf,
    substitute_z_eq_q,
    z_dz,
    z_poch_finite,
)
from .qspecial import (
    MINUS_ONE,
    MINUS_Q,
    ONE,
    Q,
    Z,
    ZERO,
    HypergeometricSpec,
    MonomialArg,
    phi,
    poch_finite,
    poch_inf,
    q_power,
)
from .partitions import (
    a_direct,
    b_direct,
    conjugate,
    distinct_partitions,
    enumerate_partitions,
    is_distinct,
    is_gap_free,
    num_parts,
    only_largest_repeats,
    partition_count,
    smallest,
    weight,
)
from .identities import (
    CHECKS,
    CheckReport,
    check_eq_1_1,
    check_eq_2_1,
    check_eq_2_2,
    check_eq_2_3,
    check_euler_sum,
    check_finite_identity,
    check_heine_instance,
    check_logderiv,
    check_sigma_sums,
    check_theorem_1,
    genfun_a,
    genfun_a_oracle,
    genfun_b_oracle,
    run_check,
    run_checks,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # series
    "QSeries", "Mismatch", "zero", "one", "monomial", "geometric",
    "eq_up_to", "first_mismatch",
    # biseries
    "BiSeries", "BiMismatch", "bi_zero", "bi_one", "from_qseries",
    "poch_z_inf", "z_poch_finite", "dz", "z_dz", "substitute_z_eq_q",
    "bi_eq_up_to", "bi_first_mismatch",
    # qspecial
    "MonomialArg", "HypergeometricSpec", "Z", "ZERO", "ONE", "MINUS_ONE",
    "Q", "MINUS_Q", "q_power", "poch_finite", "poch_inf", "phi",
    # partitions
    "enumerate_partitions", "distinct_partitions", "partition_count",
    "is_gap_free", "is_distinct", "only_largest_repeats", "conjugate",
    "weight", "smallest", "num_parts", "a_direct", "b_direct",
    # identities
    "CheckReport", "CHECKS", "run_check", "run_checks",
    "genfun_a", "genfun_a_oracle", "genfun_b_oracle",
    "check_eq_1_1", "check_sigma_sums", "check_eq_2_1", "check_euler_sum",
    "check_logderiv", "check_eq_2_2", "check_heine_instance",
    "check_finite_identity", "check_eq_2_3", "check_theorem_1",
]
