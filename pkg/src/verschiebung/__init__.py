"""Exact computations around the Verschiebung operator phi_t.

Littlewood decomposition of partitions, symmetric functions over the h basis,
universal characters and their factorizations under phi_t, and the SXP rules
for plethysm by p_t.
"""

from .partitions import (
    SkewShape,
    conjugate,
    enumerate_z_asymmetric,
    frobenius,
    is_z_asymmetric,
    parse_partition,
    partitions_of,
    rank,
)
from .littlewood import (
    CoreQuotient,
    core_quotient,
    from_core_quotient,
    is_t_tileable,
    minimal_z_asym,
    peel_sign,
    sgn_t,
    sigma_perm,
    zasym_witness,
)
from .symfunc import (
    DegreeLimitError,
    SymFunc,
    hall,
    lr_coeff,
    omega,
    plethysm_pt,
    schur,
    set_max_degree,
    skew_schur,
    verschiebung,
    verschiebung_schur,
)
from .universal import (
    FactorizationResult,
    factor_classical,
    factor_verschiebung,
    hamel_king,
    rs,
    rs2,
    universal_char,
    universal_expand,
)
from .sxp import (
    a_coeff,
    b_coeff,
    character_table,
    chi,
    chi_skew,
    construction_so,
    sxp_schur,
    sxp_wildon,
)

__version__ = "0.1.0"
