from fractions import Fraction

import json

from qdisc.algebra.qpoly import NCPoly, WindowedSeries, format_ncpoly
from qdisc.algebra.scalar import ONE, eval_numeric, format_qscalar, latex_qscalar, to_qscalar
from qdisc.algebra.star import PkPolynomial, StarSeries


SCHEMA = 1


def emit(payload: dict) -> str:
    """Every machine-readable document carries the schema version"""
    document = {'schema': SCHEMA}
    document.update(payload)

    return json.dumps(document, indent=2, sort_keys=True)


def ncpoly_json(f: NCPoly) -> dict:
    return {
        'terms': [{'coefficient': format_qscalar(c), 'j': j, 'k': k} for (j, k), c in f.sorted_terms()],
        'text': format_ncpoly(f),
    }


def _pairs(f: NCPoly) -> list:
    return [[[j, k], format_qscalar(c)] for (j, k), c in f.sorted_terms()]


def series_json(psi: StarSeries) -> dict:
    """One list of [[j, k], coefficient] pairs per power of t"""
    return {
        'order': psi.order,
        'terms': [_pairs(c) for c in psi.coeffs],
    }


def windowed_json(series: WindowedSeries) -> dict:
    entries = sorted(series.items(), key=lambda item: (item[0][0] + item[0][1], item[0][0]))
    output = {
        'boundary': series.boundary,
        'order': series.order,
        'terms': [[[j, k], [format_qscalar(value.coefficient(n)) for n in range(series.order + 1)]]
                  for (j, k), value in entries],
        'window': series.window,
    }

    if series.boundary:
        output['warning'] = 'the window touches the validity boundary of the Fock cutoff'

    return output


def pk_json(p: PkPolynomial) -> dict:
    return {
        'coefficients': [format_qscalar(c) for c in p.coeffs],
        'degree': p.degree,
        'k': p.k,
        'text': str(p),
    }


def instantiate(f: NCPoly, s0: Fraction) -> NCPoly:
    """Every coefficient evaluated at s = s0, as an exact rational"""
    return NCPoly({key: to_qscalar(eval_numeric(c, s0)) for key, c in f.items()})


def _latex_monomial(j: int, k: int) -> str:
    parts = []
    if j:
        parts.append('z' if j == 1 else 'z^{%d}' % j)
    if k:
        parts.append('z^{*}' if k == 1 else 'z^{*%d}' % k)
    return ' '.join(parts)


def latex_ncpoly(f: NCPoly) -> str:
    if not f:
        return '0'

    terms = []
    for (j, k), c in f.sorted_terms():
        mono = _latex_monomial(j, k)
        if not mono:
            terms.append(latex_qscalar(c))
        elif c == ONE:
            terms.append(mono)
        elif c == -ONE:
            terms.append('-' + mono)
        else:
            terms.append('\\left(' + latex_qscalar(c) + '\\right) ' + mono)

    return ' + '.join(terms).replace('+ -', '- ')


def latex_series(psi: StarSeries) -> str:
    terms = []
    for n, c in enumerate(psi.coeffs):
        if not c:
            continue
        body = latex_ncpoly(c)
        if n:
            body = '\\left(' + body + '\\right) ' + ('t' if n == 1 else 't^{%d}' % n)
        terms.append(body)

    return ' + '.join(terms) or '0'


def latex_star(f1: NCPoly, f2: NCPoly, psi: StarSeries) -> str:
    """f1 * f2 = f1 f2 + sum_k C_k(f1, f2) t^k"""
    return '\\left({0}\\right) * \\left({1}\\right) = {2}'.format(latex_ncpoly(f1), latex_ncpoly(f2),
                                                                  latex_series(psi))


def latex_pk(p: PkPolynomial) -> str:
    terms = []
    for n, c in enumerate(p.coeffs):
        if not c:
            continue
        power = '' if n == 0 else ' x' if n == 1 else ' x^{%d}' % n
        terms.append(('\\left(' + latex_qscalar(c) + '\\right)' if n else latex_qscalar(c)) + power)

    return 'p_{%d}(x) = ' % p.k + (' + '.join(terms) or '0')
