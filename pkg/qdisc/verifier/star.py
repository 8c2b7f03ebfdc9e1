import random

from qdisc.algebra.qpoly import NCPoly, nc_mul_left_z_power, nc_mul_right_zstar_power
from qdisc.algebra.scalar import ONE, q_power
from qdisc.algebra.star import StarSeries, m_series, pk, series_involution, series_unit, star, star_series
from qdisc.verifier.decorators import verified_law
from qdisc.verifier.utils import (ResidualTracker, finish, monomials_by_degree, monomials_by_exponent, new_output,
                                  random_ncpoly, record)


# Largest k whose p_k is checked
PK_BOUND = 8


def _random_series(rng: random.Random, order: int) -> StarSeries:
    return StarSeries(order, tuple(random_ncpoly(rng, 2, 2) for _ in range(order + 1)))


@verified_law('star', 'p_k(x)=\\sum_{j=0}^k')
def pk_normalization(params: dict, expectation='pk-normalization-holds') -> dict:
    output = new_output(expectation)

    record(output, pk(0).coeffs == (ONE,), {'k': 0, 'p': pk(0)})
    record(output, pk(1).coeffs == (ONE, ONE - q_power(2)), {'k': 1, 'p': pk(1)})

    for k in range(PK_BOUND + 1):
        p = pk(k)
        record(output, p.degree == k and p.coeffs[0] == ONE, {'k': k, 'degree': p.degree, 'p(0)': p.coeffs[0]})

    return finish(output)


@verified_law('star', 'm_t(z^if_1,f_2)=z^im_t(f_1,f_2)')
def holomorphic_triviality(params: dict, expectation='holomorphic-triviality-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    order = params['order']

    for i in range(4):
        for f in monomials_by_degree(3):
            left = star(NCPoly.monomial(i, 0), f, order)
            right = star(f, NCPoly.monomial(0, i), order)
            ok = not any(left.coeffs[1:]) and not any(right.coeffs[1:])
            record(output, ok, {'z^i': NCPoly.monomial(i, 0), 'f': f})

    grid = monomials_by_degree(2)
    for i in range(3):
        for f1 in grid:
            for f2 in grid:
                shifted = star(nc_mul_left_z_power(i, f1), f2, order)
                expected = star(f1, f2, order).map(lambda f: nc_mul_left_z_power(i, f))
                ok = tracker.series(shifted, expected)

                shifted = star(f1, nc_mul_right_zstar_power(i, f2), order)
                expected = star(f1, f2, order).map(lambda f: nc_mul_right_zstar_power(i, f))
                ok = tracker.series(shifted, expected) and ok

                record(output, ok, {'i': i, 'f1': f1, 'f2': f2})

    return finish(output, tracker)


@verified_law('star', '\\sum_{j+k=i}a_j*b_k')
def m_series_associativity(params: dict, expectation='m-series-associativity-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    order = params['order']

    grid = [star_series(f, order) for f in monomials_by_exponent(params['max_degree'])]
    for a in grid:
        for b in grid:
            ab = m_series(a, b)
            for c in grid:
                ok = tracker.series(m_series(ab, c), m_series(a, m_series(b, c)))
                record(output, ok, {'f1': a.coeffs[0], 'f2': b.coeffs[0], 'f3': c.coeffs[0]})

    return finish(output, tracker)


@verified_law('star', '\\sum_{j+k=i}a_j*b_k')
def m_series_unit(params: dict, expectation='m-series-unit-holds') -> dict:
    output = new_output(expectation)
    rng = random.Random(params['seed'])
    order = params['order']
    unit = series_unit(order)

    cases = [star(f1, f2, order) for f1 in monomials_by_degree(1) for f2 in monomials_by_degree(1)]
    cases += [_random_series(rng, order) for _ in range(min(params['samples'], 10))]

    for psi in cases:
        record(output, m_series(unit, psi) == psi and m_series(psi, unit) == psi, {'psi': psi})

    return finish(output)


@verified_law('star', 'm(\\psi_1,\\psi_2)^*=m(\\psi_2^*,\\psi_1^*)')
def series_involution_antihomomorphism(params: dict, expectation='series-involution-antihomomorphism-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])
    order = params['order']

    zs_z = star(NCPoly.zs(), NCPoly.z(), order)
    record(output, series_involution(zs_z) == zs_z, {'psi': 'zs * z'})

    for _ in range(params['samples']):
        psi1, psi2 = _random_series(rng, order), _random_series(rng, order)

        lhs = series_involution(m_series(psi1, psi2))
        rhs = m_series(series_involution(psi2), series_involution(psi1))
        ok = tracker.series(lhs, rhs) and series_involution(series_involution(psi1)) == psi1
        record(output, ok, {'psi1': psi1, 'psi2': psi2})

    return finish(output, tracker)
