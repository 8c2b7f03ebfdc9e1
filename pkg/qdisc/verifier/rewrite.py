import random

from qdisc.algebra.qpoly import NCPoly, involution, monomial_word, nc_mul, normal_order, swap_block
from qdisc.algebra.scalar import ONE, TSeries, q_power, qpochhammer, qscalar_arith, tseries_from_rational
from qdisc.verifier.decorators import verified_law
from qdisc.verifier.utils import (ResidualTracker, finish, monomials_by_exponent, new_output, random_ncpoly,
                                  random_scalar, random_word, record)


# Exponent bound of the sampled monomial grids
SAMPLED_EXPONENT = 4


@verified_law('rewrite', 'z^*z=q^2zz^*+1-q^2')
def field_laws(params: dict, expectation='field-laws-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])

    for _ in range(params['samples']):
        a, b, c = random_scalar(rng), random_scalar(rng), random_scalar(rng)

        ok = all([
            tracker.scalars((a + b) + c, a + (b + c)),
            tracker.scalars((a * b) * c, a * (b * c)),
            tracker.scalars(a * (b + c), a * b + a * c),
            tracker.scalars(qscalar_arith(a, a, 'div'), ONE),
        ])
        record(output, ok, {'a': a, 'b': b, 'c': c})

    return finish(output, tracker)


@verified_law('rewrite', '(a;q^2)_k=(1-a)(1-q^2a)')
def qpochhammer_split(params: dict, expectation='qpochhammer-split-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])

    for _ in range(params['samples']):
        a, n, m = random_scalar(rng), rng.randint(0, 6), rng.randint(0, 6)

        whole = qpochhammer(a, 2, n + m)
        split = qpochhammer(a, 2, n) * qpochhammer(a * q_power(2 * n), 2, m)
        record(output, tracker.scalars(whole, split), {'a': a, 'n': n, 'm': m})

    return finish(output, tracker)


@verified_law('rewrite', '(q^{-2k};q^2)_j')
def qpochhammer_vanishing(params: dict, expectation='qpochhammer-vanishing-holds') -> dict:
    output = new_output(expectation)

    for k in range(9):
        for j in range(k + 1, k + 4):
            value = qpochhammer(q_power(-2 * k), 2, j)
            record(output, not value, {'k': k, 'j': j, 'value': value})

    return finish(output)


@verified_law('rewrite', '\\frac{p(t)}{r(t)}\\cdot\\frac{r(t)}{p(t)}=1')
def tseries_rational_inverse(params: dict, expectation='tseries-rational-inverse-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])
    order = params['order']

    for _ in range(params['samples']):
        p = [random_scalar(rng)] + [rng.randint(-2, 2) * q_power(rng.randint(-1, 1)) for _ in range(2)]
        r = [random_scalar(rng)] + [rng.randint(-2, 2) * q_power(rng.randint(-1, 1)) for _ in range(2)]

        product = tseries_from_rational(p, r, order) * tseries_from_rational(r, p, order)
        one = TSeries.constant(ONE, order)
        ok = all([tracker.scalars(a, b) for a, b in zip(product.coeffs, one.coeffs)])
        record(output, ok, {'p': p, 'r': r})

    return finish(output, tracker)


@verified_law('rewrite', 'z^*z=q^2zz^*+1-q^2')
def nc_mul_associativity(params: dict, expectation='nc-mul-associativity-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))

    # Every monomial triple up to the bound; --samples does not shrink it
    grid = monomials_by_exponent(max(params['max_degree'], params['associativity_exponent']))
    triples = ((f, g, h) for f in grid for g in grid for h in grid)

    for f, g, h in triples:
        ok = tracker.ncpolys(nc_mul(nc_mul(f, g), h), nc_mul(f, nc_mul(g, h)))
        record(output, ok, {'f': f, 'g': g, 'h': h})

    return finish(output, tracker)


@verified_law('rewrite', 'z^*z=q^2zz^*+1-q^2')
def nc_mul_unit(params: dict, expectation='nc-mul-unit-holds') -> dict:
    output = new_output(expectation)
    rng = random.Random(params['seed'])
    one = NCPoly.one()

    cases = monomials_by_exponent(SAMPLED_EXPONENT) + [random_ncpoly(rng, 3) for _ in range(params['samples'])]
    for f in cases + [NCPoly.zero()]:
        record(output, nc_mul(f, one) == f and nc_mul(one, f) == f, {'f': f})

    return finish(output)


@verified_law('rewrite', 'z^*z=q^2zz^*+1-q^2')
def normal_order_agreement(params: dict, expectation='normal-order-agreement-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])

    for b in range(5):
        for c in range(5):
            rewritten = normal_order(('zs',) * b + ('z',) * c)
            record(output, tracker.ncpolys(rewritten, NCPoly(swap_block(b, c))), {'word': 'zs^{0} z^{1}'.format(b, c)})

    letters = {'z': NCPoly.z(), 'zs': NCPoly.zs()}
    for _ in range(params['samples']):
        word = random_word(rng, rng.randint(0, 8))

        product = NCPoly.one()
        for letter in word:
            product = nc_mul(product, letters[letter])

        record(output, tracker.ncpolys(normal_order(word), product), {'word': ' '.join(word)})

    for j in range(4):
        for k in range(4):
            record(output, normal_order(monomial_word(j, k)) == NCPoly.monomial(j, k), {'j': j, 'k': k})

    return finish(output, tracker)


@verified_law('rewrite', '\\{z^jz^{*k}\\}_{j,k\\ge 0}')
def degree_bookkeeping(params: dict, expectation='degree-bookkeeping-holds') -> dict:
    output = new_output(expectation)
    grid = monomials_by_exponent(SAMPLED_EXPONENT)

    for f in grid:
        for g in grid:
            (a, b), = f.keys()
            (c, d), = g.keys()
            allowed = {(a + c - r, b + d - r) for r in range(min(b, c) + 1)}

            product = nc_mul(f, g)
            record(output, set(product.keys()) <= allowed, {'f': f, 'g': g, 'product': product})

    return finish(output)


@verified_law('rewrite', 'm(\\psi_1,\\psi_2)^*=m(\\psi_2^*,\\psi_1^*)')
def involution_antihomomorphism(params: dict, expectation='involution-antihomomorphism-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    rng = random.Random(params['seed'])

    for _ in range(params['samples']):
        f, g = random_ncpoly(rng, 3), random_ncpoly(rng, 3)

        ok = tracker.ncpolys(involution(nc_mul(f, g)), nc_mul(involution(g), involution(f)))
        ok = involution(involution(f)) == f and ok
        record(output, ok, {'f': f, 'g': g})

    return finish(output, tracker)
