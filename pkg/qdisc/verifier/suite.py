from fractions import Fraction
from typing import Iterable

import logging

import qdisc.conf

from qdisc.algebra.scalar import parse_rational
from qdisc.errors import QDiscError
from qdisc.verifier import SUITE_NAMES, SUITES
from qdisc.verifier.results import get_result_description


logger = logging.getLogger(__name__)

SCHEMA = 1


def default_parameters() -> dict:
    return {
        'associativity_exponent': qdisc.conf.ASSOCIATIVITY_EXPONENT,
        'cutoff': qdisc.conf.FOCK_CUTOFF,
        'max_degree': qdisc.conf.MAX_DEGREE,
        'order': qdisc.conf.SERIES_ORDER,
        'samples': qdisc.conf.VERIFIER_SAMPLES,
        's0': None,
        'seed': qdisc.conf.VERIFIER_SEED,
        'window': qdisc.conf.SYMBOL_WINDOW,
    }


def expand_suite_names(names: Iterable[str]) -> list:
    selected = []
    for name in names:
        if name == 'all':
            return list(SUITE_NAMES)
        if name not in SUITES:
            raise ValueError('unknown suite {0}; expected one of {1} or all'.format(name, ', '.join(SUITE_NAMES)))
        if name not in selected:
            selected.append(name)

    return selected


def _failed_law(law, error: QDiscError) -> dict:
    name = law.__name__.replace('_', '-')
    result = name + '-fails'

    return {
        'anchor': None,
        'cases': 0,
        'description': get_result_description(result),
        'error': error.as_dict(),
        'expectation': name + '-holds',
        'failed': 0,
        'failures': [],
        'name': name,
        'pass': False,
        'result': result,
        'suite': law.__module__.rsplit('.', 1)[-1],
    }


def run_law(law, params: dict) -> dict:
    try:
        return law(params)
    except QDiscError as e:
        logger.error('%s raised %s: %s', law.__name__, e.code, e.text)
        return _failed_law(law, e)


def run_suites(names: Iterable[str] = ('all',), **kwargs) -> dict:
    """Runs every law of the named suites and collects the results, the way a local scan collects its tests.

    Args:
        names (list): suite names, or ['all']

    Kwargs:
        order (int): truncation order T of every t-series
        max_degree (int): exponent bound of the monomial grids
        associativity_exponent (int): exponent bound of the exhaustive associativity grid
        cutoff (int): Fock basis cutoff M
        window (int): symbol window J
        seed (int): seed of the sampled laws
        samples (int): number of sampled cases
        s0 (Fraction or str): when set, both sides of every comparison are also evaluated at s = s0

    Returns:
        {
            'schema': 1,
            'suite': {
                'laws_passed': 35,
                ...
            },
            'laws': {
                'berezin-covariance': {
                    'pass': True,
                    ...
                }
            }
        }
    """
    params = default_parameters()
    params.update({key: value for key, value in kwargs.items() if value is not None})
    if isinstance(params['s0'], str):
        params['s0'] = parse_rational(params['s0'])

    suites = expand_suite_names(names)

    results = []
    for suite in suites:
        for law in SUITES[suite]:
            result = run_law(law, params)
            results.append(result)

            if result['pass']:
                logger.info('%s: %s (%d cases)', result['name'], result['result'], result['cases'])
            else:
                logger.error('%s: %s (%d of %d cases failed)', result['name'], result['result'], result['failed'],
                             result['cases'])

    laws_passed = sum([1 if result['pass'] else 0 for result in results])

    return {
        'schema': SCHEMA,
        'suite': {
            'laws_failed': len(results) - laws_passed,
            'laws_passed': laws_passed,
            'laws_quantity': len(results),
            'names': suites,
            'parameters': {key: str(value) if isinstance(value, Fraction) else value
                           for key, value in sorted(params.items())},
            'pass': laws_passed == len(results),
        },
        'laws': {result.pop('name'): result for result in sorted(results, key=lambda result: result['name'])},
    }
