import logging

from qdisc.algebra.fockrep import berezin, berezin_expansion, m_t
from qdisc.algebra.qpoly import NCPoly, WindowedSeries
from qdisc.verifier.decorators import verified_law
from qdisc.verifier.utils import ResidualTracker, finish, new_output, record


logger = logging.getLogger(__name__)

EXPANSION_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 2))


def _warn_on_boundary(symbol: WindowedSeries, case: str) -> None:
    if symbol.boundary:
        logger.warning('%s: the window touches the last trusted column', case)


@verified_law('berezin', 'B_{q,t}f=\\sum_k(p_k(\\square)-p_{k-1}(\\square))f\\,t^k')
def berezin_expansion_agreement(params: dict, expectation='berezin-expansion-agreement-holds') -> dict:
    output = new_output(expectation)
    tracker = ResidualTracker(params.get('s0'))
    order, cutoff, window = params['order'], params['cutoff'], params['window']

    for j, k in EXPANSION_PAIRS:
        symbol = berezin(j, k, window, cutoff, order)
        _warn_on_boundary(symbol, 'B(zs^{0} z^{1})'.format(j, k))

        expansion = WindowedSeries.from_ncpoly_coefficients(berezin_expansion(j, k, order), window, order)

        ok = all([tracker.ncpolys(symbol.t_coefficient(n), expansion.t_coefficient(n)) for n in range(order + 1)])
        record(output, ok and symbol.agrees_with(expansion), {'j': j, 'k': k,
                                                              'differences': symbol.differences(expansion)})

    return finish(output, tracker)


@verified_law('berezin', 'z^iB_{q,t}(z^{*j}z^k)z^{*l}')
def berezin_covariance(params: dict, expectation='berezin-covariance-holds') -> dict:
    output = new_output(expectation)
    order, cutoff, window = params['order'], params['cutoff'], params['window']

    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    symbol = m_t(NCPoly.monomial(i, j), NCPoly.monomial(k, l), window, cutoff, order)
                    expected = berezin(j, k, window, cutoff, order).shift(i, l)

                    record(output, symbol.agrees_with(expected), {'i': i, 'j': j, 'k': k, 'l': l})

    return finish(output)


@verified_law('berezin', 'B_{q,t}:\\stackrel{\\circ}{f}\\mapsto f')
def berezin_trivial_symbols(params: dict, expectation='berezin-trivial-symbols-holds') -> dict:
    output = new_output(expectation)
    order, cutoff, window = params['order'], params['cutoff'], params['window']

    for n in range(4):
        holomorphic = berezin(0, n, window, cutoff, order)
        antiholomorphic = berezin(n, 0, window, cutoff, order)

        record(output, holomorphic == WindowedSeries.from_ncpoly(NCPoly.monomial(n, 0), window, order), {'k': n})
        record(output, antiholomorphic == WindowedSeries.from_ncpoly(NCPoly.monomial(0, n), window, order), {'j': n})

    return finish(output)
