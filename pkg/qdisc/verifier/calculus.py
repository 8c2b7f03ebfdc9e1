import random

from qdisc.algebra.qcalc import (SIDES, VARIABLES, box, box_right, box_tilde, d_partial, leibniz_partial, m0,
                                 partial_closed_form, tensor_involution)
from qdisc.algebra.qpoly import NCPoly, TensorPoly, nc_mul
from qdisc.verifier.decorators import verified_law
from qdisc.verifier.utils import (ResidualTracker, finish, monomials_by_degree, monomials_by_exponent, new_output,
                                  pure_power_pairs, random_ncpoly, random_scalar, record)


def _random_one_sided(rng: random.Random, degree: int, antiholomorphic: bool) -> NCPoly:
    result = NCPoly.zero()
    for n in range(degree + 1):
        if rng.random() < 0.6:
            result = result + NCPoly.monomial(0 if antiholomorphic else n, n if antiholomorphic else 0,
                                              random_scalar(rng))
    return result if result else NCPoly.one()


@verified_law('calculus', 'df=\\frac{\\partial^{(r)}f}{\\partial z}dz+')
def partial_closed_forms(params: dict, expectation='partial-closed-forms-holds') -> dict:
    output = new_output(expectation)

    for f in monomials_by_degree(4):
        (j, k), = f.keys()
        for side in SIDES:
            for variable in VARIABLES:
                ok = d_partial(f, side, variable) == partial_closed_form(j, k, side, variable)
                record(output, ok, {'f': f, 'side': side, 'variable': variable})

    return finish(output)


@verified_law('calculus', 'd(fg)=df\\,g+f\\,dg')
def leibniz_consistency(params: dict, expectation='leibniz-consistency-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])

    for _ in range(params['samples']):
        f, g = random_ncpoly(rng, 3), random_ncpoly(rng, 3)
        product = nc_mul(f, g)

        for side in SIDES:
            for variable in VARIABLES:
                ok = tracker.ncpolys(d_partial(product, side, variable), leibniz_partial(f, g, side, variable))
                record(output, ok, {'f': f, 'g': g, 'side': side, 'variable': variable})

    return finish(output, tracker)


@verified_law('calculus', '(1-zz^*)^2\\frac{\\partial^{(l)}}{\\partial z^*}\\frac{\\partial^{(l)}f}{\\partial z}')
def box_two_forms(params: dict, expectation='box-two-forms-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))

    for f in monomials_by_degree(4):
        record(output, tracker.ncpolys(box(f), box_right(f)), {'f': f})

    return finish(output, tracker)


@verified_law('calculus', 'q^{-2}(1-(1+q^{-2})z^*z+')
def box_factorization(params: dict, expectation='box-factorization-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])

    pairs = list(pure_power_pairs(3))
    pairs += [(_random_one_sided(rng, 3, True), _random_one_sided(rng, 3, False)) for _ in range(params['samples'])]

    for f2, f1 in pairs:
        lhs = box(nc_mul(f2, f1))
        rhs = m0(box_tilde(TensorPoly.from_pair(f2, f1)))
        record(output, tracker.ncpolys(lhs, rhs), {'f2': f2, 'f1': f1})

    return finish(output, tracker)


@verified_law('calculus', '(g_1(z)\\otimes 1)\\widetilde{\\square}')
def box_tilde_multipliers(params: dict, expectation='box-tilde-multipliers-holds') -> dict:
    output = new_output(expectation)
    one = NCPoly.one()

    for a in range(3):
        for b in range(3):
            for c in range(3):
                for d in range(3):
                    outer = TensorPoly.from_pair(NCPoly.monomial(a, b), NCPoly.monomial(c, d))
                    inner = box_tilde(TensorPoly.from_pair(NCPoly.monomial(0, b), NCPoly.monomial(c, 0)))

                    lhs = box_tilde(outer)
                    rhs = TensorPoly.from_pair(NCPoly.monomial(a, 0), one) * inner * \
                        TensorPoly.from_pair(one, NCPoly.monomial(0, d))
                    record(output, lhs == rhs, {'g1': 'z^{0}'.format(a), 'f1': 'zs^{0}'.format(b),
                                                'f2': 'z^{0}'.format(c), 'g2': 'zs^{0}'.format(d)})

    return finish(output)


@verified_law('calculus', '\\widetilde{\\square}^{21}=c_0 \\square c_0')
def box_tilde_flip(params: dict, expectation='box-tilde-flip-holds') -> dict:
    output = new_output(expectation)
    rng = random.Random(params['seed'])

    grid = monomials_by_exponent(params['max_degree'])
    tensors = [TensorPoly.from_pair(f1, f2) for f1 in grid for f2 in grid]
    tensors += [TensorPoly.from_pair(random_ncpoly(rng, 3), random_ncpoly(rng, 3)) for _ in range(params['samples'])]

    for tensor in tensors:
        ok = box_tilde(tensor_involution(tensor)) == tensor_involution(box_tilde(tensor))
        record(output, ok, {'tensor': tensor})

    return finish(output)
