from flask import Blueprint, request

import qdisc.conf

from qdisc.algebra.fockrep import berezin
from qdisc.algebra.qcalc import box, box_right
from qdisc.algebra.star import ck, pk, star
from qdisc.cli.parser import parse_ncpoly
from qdisc.cli.printer import ncpoly_json, pk_json, series_json, windowed_json
from qdisc.verifier import SUITE_NAMES
from qdisc.verifier.suite import run_suites
from qdisc.website import add_response_headers, sanitized_api_response


api = Blueprint('api', __name__)

# Grids above these bounds are too slow to run inside a request; the full suite is CLI only
MAX_API_ORDER = 6
MAX_API_CUTOFF = 32


def _int_arg(name: str, default: int = None, minimum: int = 0, maximum: int = None) -> int:
    value = request.args.get(name)
    if value is None:
        if default is None:
            raise ValueError('missing parameter: {0}'.format(name))
        return default

    try:
        value = int(value)
    except ValueError:
        raise ValueError('{0} must be an integer, got {1!r}'.format(name, value))

    if value < minimum or (maximum is not None and value > maximum):
        raise ValueError('{0} is out of range: {1}'.format(name, value))

    return value


def _expression_arg(name: str) -> str:
    value = request.args.get(name, '')
    if not value:
        raise ValueError('missing parameter: {0}'.format(name))
    return value


@api.route('/api/v1/pk', methods=['GET', 'OPTIONS'])
@add_response_headers(cors=True)
@sanitized_api_response
def api_get_pk():
    return pk_json(pk(_int_arg('k', maximum=64)))


@api.route('/api/v1/ck', methods=['GET', 'OPTIONS'])
@add_response_headers(cors=True)
@sanitized_api_response
def api_get_ck():
    k = _int_arg('k', maximum=MAX_API_ORDER)
    f1, f2 = _expression_arg('f1'), _expression_arg('f2')

    return {'k': k, 'f1': f1, 'f2': f2, 'value': ncpoly_json(ck(k, parse_ncpoly(f1), parse_ncpoly(f2)))}


@api.route('/api/v1/star', methods=['GET', 'OPTIONS'])
@add_response_headers(cors=True)
@sanitized_api_response
def api_get_star():
    order = _int_arg('order', qdisc.conf.SERIES_ORDER, maximum=MAX_API_ORDER)
    f1, f2 = _expression_arg('f1'), _expression_arg('f2')

    return {'f1': f1, 'f2': f2, 'product': series_json(star(parse_ncpoly(f1), parse_ncpoly(f2), order))}


@api.route('/api/v1/box', methods=['GET', 'OPTIONS'])
@add_response_headers(cors=True)
@sanitized_api_response
def api_get_box():
    f = _expression_arg('f')
    right = request.args.get('right', 'false') == 'true'

    value = (box_right if right else box)(parse_ncpoly(f))
    return {'f': f, 'form': 'right' if right else 'left', 'value': ncpoly_json(value)}


@api.route('/api/v1/berezin', methods=['GET', 'OPTIONS'])
@add_response_headers(cors=True)
@sanitized_api_response
def api_get_berezin():
    j, k = _int_arg('j', maximum=MAX_API_CUTOFF), _int_arg('k', maximum=MAX_API_CUTOFF)
    window = _int_arg('window', qdisc.conf.SYMBOL_WINDOW)
    cutoff = _int_arg('cutoff', qdisc.conf.FOCK_CUTOFF, maximum=MAX_API_CUTOFF)
    order = _int_arg('order', qdisc.conf.SERIES_ORDER, maximum=MAX_API_ORDER)

    return {'j': j, 'k': k, 'cutoff': cutoff, 'symbol': windowed_json(berezin(j, k, window, cutoff, order))}


@api.route('/api/v1/verify', methods=['GET', 'OPTIONS'])
@add_response_headers(cors=True)
@sanitized_api_response
def api_get_verify():
    suite = request.args.get('suite', '')
    if suite == 'all':
        return {
            'error': 'invalid-suite',
            'text': 'the full verification is too slow for a request; run qdisc verify all instead',
        }
    elif suite not in SUITE_NAMES:
        return {
            'error': 'invalid-suite',
            'text': '{suite} is not a verification suite'.format(suite=suite),
        }

    report = run_suites([suite], associativity_exponent=qdisc.conf.MAX_DEGREE)
    report.pop('schema')

    return report
