from qdisc.algebra.fockrep import (FockOp, covariant_symbol, i_op, i_op_poly, q_map, zhat, zhat_star)
from qdisc.algebra.qpoly import NCPoly, WindowedSeries
from qdisc.algebra.scalar import ONE, q_power
from qdisc.algebra.star import star
from qdisc.verifier.decorators import verified_law
from qdisc.verifier.utils import ResidualTracker, finish, monomials_by_exponent, new_output, record


# Largest exponent of the round-trip monomials
ROUND_TRIP_EXPONENT = 3


@verified_law('oracle', 'Qm(\\psi_1,\\psi_2)=(Q \\psi_1)\\cdot(Q \\psi_2)')
def q_map_homomorphism(params: dict, expectation='q-map-homomorphism-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    order, cutoff = params['order'], params['cutoff']

    grid = monomials_by_exponent(params['max_degree'])
    for f1 in grid:
        for f2 in grid:
            lhs = q_map(star(f1, f2, order), cutoff, order)
            rhs = i_op_poly(f1, cutoff, order) * i_op_poly(f2, cutoff, order)

            ok = tracker.operators(lhs, rhs)
            record(output, ok, {'f1': f1, 'f2': f2, 'columns': min(lhs.valid, rhs.valid) + 1})

    return finish(output, tracker)


@verified_law('oracle', '(z^j,z^k)_\\alpha=\\delta_{jk}')
def zhat_star_adjoint(params: dict, expectation='zhat-star-adjoint-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    order, cutoff = params['order'], params['cutoff']

    record(output, tracker.operators(zhat_star(cutoff, order), i_op(0, 1, cutoff, order)), {'operator': 'zhat*'})
    record(output, tracker.operators(zhat(cutoff, order), i_op(1, 0, cutoff, order)), {'operator': 'zhat'})

    return finish(output, tracker)


@verified_law('oracle', 'z^*z=q^2zz^*+1-q^2')
def commutation_at_t0(params: dict, expectation='commutation-at-t0-holds') -> dict:
    output = new_output(expectation)
    order, cutoff = params['order'], params['cutoff']

    up, down = zhat(cutoff, order), zhat_star(cutoff, order)
    commutator = down * up - (up * down).scale(q_power(2))

    expected = {(m, m): ONE - q_power(2) for m in range(commutator.valid + 1)}
    record(output, commutator.t_coefficient(0) == expected, {'columns': commutator.valid + 1})

    return finish(output)


@verified_law('oracle', '\\sum_{j,k}a_{jk}\\hat z^j\\hat z^{*k}=A')
def covariant_symbol_round_trip(params: dict, expectation='covariant-symbol-round-trip-holds') -> dict:
    output = new_output(expectation)
    order, cutoff, window = params['order'], params['cutoff'], params['window']

    identity = covariant_symbol(FockOp.identity(cutoff, order), window)
    record(output, identity == WindowedSeries.from_ncpoly(NCPoly.one(), window, order), {'operator': 'identity'})

    bound = min(window, ROUND_TRIP_EXPONENT)
    for j in range(bound + 1):
        for k in range(bound + 1):
            symbol = covariant_symbol(i_op(j, k, cutoff, order), window)
            expected = WindowedSeries.from_ncpoly(NCPoly.monomial(j, k), window, order)
            record(output, symbol == expected, {'j': j, 'k': k})

    return finish(output)
