from .berezin import berezin_covariance, berezin_expansion_agreement, berezin_trivial_symbols
from .calculus import (box_factorization, box_tilde_flip, box_tilde_multipliers, box_two_forms, leibniz_consistency,
                       partial_closed_forms)
from .oracle import commutation_at_t0, covariant_symbol_round_trip, q_map_homomorphism, zhat_star_adjoint
from .rewrite import (degree_bookkeeping, field_laws, involution_antihomomorphism, nc_mul_associativity, nc_mul_unit,
                      normal_order_agreement, qpochhammer_split, qpochhammer_vanishing, tseries_rational_inverse)
from .star import (holomorphic_triviality, m_series_associativity, m_series_unit, pk_normalization,
                   series_involution_antihomomorphism)
from .uq import (uq_box_equivariance, uq_coproduct_relations, uq_hopf_counit, uq_involution_compat,
                 uq_module_algebra, uq_relations, uq_star_equivariance, uq_well_defined)

__all__ = [
    'LAW_NAMES',
    'laws',
    'NUM_LAWS',
    'SUITE_NAMES',
    'SUITES',
]

laws = (
    berezin_covariance,
    berezin_expansion_agreement,
    berezin_trivial_symbols,
    box_factorization,
    box_tilde_flip,
    box_tilde_multipliers,
    box_two_forms,
    commutation_at_t0,
    covariant_symbol_round_trip,
    degree_bookkeeping,
    field_laws,
    holomorphic_triviality,
    involution_antihomomorphism,
    leibniz_consistency,
    m_series_associativity,
    m_series_unit,
    nc_mul_associativity,
    nc_mul_unit,
    normal_order_agreement,
    partial_closed_forms,
    pk_normalization,
    q_map_homomorphism,
    qpochhammer_split,
    qpochhammer_vanishing,
    series_involution_antihomomorphism,
    tseries_rational_inverse,
    uq_box_equivariance,
    uq_coproduct_relations,
    uq_hopf_counit,
    uq_involution_compat,
    uq_module_algebra,
    uq_relations,
    uq_star_equivariance,
    uq_well_defined,
    zhat_star_adjoint,
)

NUM_LAWS = len(laws)
LAW_NAMES = [law.__name__.replace('_', '-') for law in laws]

SUITE_NAMES = ('rewrite', 'calculus', 'star', 'oracle', 'berezin', 'uq')
SUITES = {suite: [law for law in laws if law.__module__ == 'qdisc.verifier.' + suite] for suite in SUITE_NAMES}
