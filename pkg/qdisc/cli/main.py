from functools import wraps

import click
import sys

import qdisc.conf

from qdisc import VERSION
from qdisc.algebra.fockrep import berezin, berezin_expansion
from qdisc.algebra.qcalc import LEFT, RIGHT, SIDES, ZSTAR, box, box_right, d_partial
from qdisc.algebra.qpoly import Z, ZS, format_ncpoly
from qdisc.algebra.scalar import eval_numeric, format_qscalar, latex_qscalar, parse_rational
from qdisc.algebra.star import StarSeries, ck, pk, star
from qdisc.cli.parser import parse_ncpoly, parse_scalar
from qdisc.cli.printer import (emit, instantiate, latex_ncpoly, latex_pk, latex_series, latex_star, ncpoly_json,
                               pk_json, series_json, windowed_json)
from qdisc.conf import configure_logging
from qdisc.errors import QDiscError
from qdisc.verifier import SUITE_NAMES
from qdisc.verifier.suite import run_suites


EXIT_PASS = 0
EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2


def reports_errors(fn):
    """Any QDiscError becomes {"schema": 1, "error": ..., "text": ...} on stdout and exit status 2"""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except QDiscError as e:
            click.echo(emit(e.as_dict()))
            sys.exit(EXIT_USAGE)
        except ValueError as e:
            click.echo(emit({'error': 'invalid-argument', 'text': str(e)}))
            sys.exit(EXIT_USAGE)

    return wrapper


def _echo(ctx: click.Context, payload: dict, latex: str = None) -> None:
    if latex is not None and ctx.obj.get('latex'):
        click.echo(latex)
    else:
        click.echo(emit(payload))


@click.group(name='qdisc')
@click.version_option(VERSION)
@click.option('--latex', is_flag=True, help='Print LaTeX instead of JSON, where a command supports it.')
@click.option('--log-level', default=None, help='Level of the qdisc logger (default from the config files).')
@click.pass_context
def qdisc_group(ctx: click.Context, latex: bool, log_level: str):
    """Exact symbolic computations in the q-deformed disc algebra."""
    configure_logging(log_level.upper() if log_level else None)
    ctx.ensure_object(dict)
    ctx.obj['latex'] = latex


@qdisc_group.command('pk')
@click.argument('k', type=click.IntRange(min=0))
@click.pass_context
@reports_errors
def pk_command(ctx, k):
    """The polynomial p_k."""
    p = pk(k)
    _echo(ctx, pk_json(p), latex_pk(p))


@qdisc_group.command('ck')
@click.argument('k', type=int)
@click.argument('f1')
@click.argument('f2')
@click.pass_context
@reports_errors
def ck_command(ctx, k, f1, f2):
    """The bidifferential operator C_k applied to F1 and F2."""
    value = ck(k, parse_ncpoly(f1), parse_ncpoly(f2))
    _echo(ctx, {'k': k, 'f1': f1, 'f2': f2, 'value': ncpoly_json(value)}, latex_ncpoly(value))


@qdisc_group.command('star')
@click.argument('f1')
@click.argument('f2')
@click.option('--order', type=click.IntRange(min=0), default=None, help='Truncation order T.')
@click.pass_context
@reports_errors
def star_command(ctx, f1, f2, order):
    """The star product F1 * F2 modulo t^(T+1)."""
    order = qdisc.conf.SERIES_ORDER if order is None else order
    left, right = parse_ncpoly(f1), parse_ncpoly(f2)

    psi = star(left, right, order)
    _echo(ctx, {'f1': f1, 'f2': f2, 'product': series_json(psi)}, latex_star(left, right, psi))


@qdisc_group.command('box')
@click.argument('f')
@click.option('--right', 'right_form', is_flag=True, help='Use the right-derivative form of the operator.')
@click.pass_context
@reports_errors
def box_command(ctx, f, right_form):
    """The invariant Laplace operator applied to F."""
    value = (box_right if right_form else box)(parse_ncpoly(f))
    _echo(ctx, {'f': f, 'form': RIGHT if right_form else LEFT, 'value': ncpoly_json(value)}, latex_ncpoly(value))


@qdisc_group.command('d')
@click.argument('f')
@click.option('--side', type=click.Choice(SIDES), default=LEFT, show_default=True)
@click.option('--variable', type=click.Choice([Z, ZS]), default=Z, show_default=True)
@click.pass_context
@reports_errors
def d_command(ctx, f, side, variable):
    """One partial derivative of F."""
    value = d_partial(parse_ncpoly(f), side, ZSTAR if variable == ZS else Z)
    _echo(ctx, {'f': f, 'side': side, 'variable': variable, 'value': ncpoly_json(value)}, latex_ncpoly(value))


@qdisc_group.command('berezin')
@click.argument('j', type=click.IntRange(min=0))
@click.argument('k', type=click.IntRange(min=0))
@click.option('--window', type=click.IntRange(min=0), default=None, help='Symbol window J.')
@click.option('--cutoff', type=click.IntRange(min=0), default=None, help='Fock basis cutoff M.')
@click.option('--order', type=click.IntRange(min=0), default=None, help='Truncation order T.')
@click.pass_context
@reports_errors
def berezin_command(ctx, j, k, window, cutoff, order):
    """The covariant symbol of zhat*^J zhat^K, computed in the Fock representation."""
    window = qdisc.conf.SYMBOL_WINDOW if window is None else window
    cutoff = qdisc.conf.FOCK_CUTOFF if cutoff is None else cutoff
    order = qdisc.conf.SERIES_ORDER if order is None else order

    symbol = berezin(j, k, window, cutoff, order)
    _echo(ctx, {'j': j, 'k': k, 'cutoff': cutoff, 'symbol': windowed_json(symbol)})


@qdisc_group.command('berezin-expand')
@click.argument('j', type=click.IntRange(min=0))
@click.argument('k', type=click.IntRange(min=0))
@click.option('--terms', type=click.IntRange(min=0), default=None, help='Number of correction terms.')
@click.pass_context
@reports_errors
def berezin_expand_command(ctx, j, k, terms):
    """The asymptotic expansion of the Berezin transform of zs^J z^K."""
    terms = qdisc.conf.SERIES_ORDER if terms is None else terms

    expansion = StarSeries(terms, tuple(berezin_expansion(j, k, terms)))
    _echo(ctx, {'j': j, 'k': k, 'expansion': series_json(expansion)}, latex_series(expansion))


@qdisc_group.command('verify')
@click.argument('suites', nargs=-1, type=click.Choice(SUITE_NAMES + ('all',)))
@click.option('--t-order', 'order', type=click.IntRange(min=0), default=None, help='Truncation order T.')
@click.option('--max-degree', type=click.IntRange(min=0), default=None, help='Exponent bound of the grids.')
@click.option('--cutoff', type=click.IntRange(min=1), default=None, help='Fock basis cutoff M.')
@click.option('--window', type=click.IntRange(min=0), default=None, help='Symbol window J.')
@click.option('--seed', type=int, default=None, help='Seed of the sampled laws.')
@click.option('--samples', type=click.IntRange(min=1), default=None, help='Number of sampled cases.')
@click.option('--s0', default=None, help='Also evaluate both sides of every comparison at s = P/Q.')
@click.pass_context
@reports_errors
def verify_command(ctx, suites, order, max_degree, cutoff, window, seed, samples, s0):
    """Run verification suites; exits 0 only if every law holds."""
    report = run_suites(suites or ('all',), order=order, max_degree=max_degree, cutoff=cutoff, window=window,
                        seed=seed, samples=samples, s0=parse_rational(s0) if s0 else None)

    click.echo(emit({key: value for key, value in report.items() if key != 'schema'}))
    sys.exit(EXIT_PASS if report['suite']['pass'] else EXIT_CHECK_FAILURE)


@qdisc_group.command('eval')
@click.argument('expression')
@click.option('--s0', default=None, help='Evaluation point P/Q (default from the config files).')
@click.pass_context
@reports_errors
def eval_command(ctx, expression, s0):
    """Instantiate an expression at s = s0."""
    point = parse_rational(s0 or qdisc.conf.NUMERIC_S0)

    value = instantiate(parse_ncpoly(expression), point)
    _echo(ctx, {'expression': expression, 's0': str(point), 'value': ncpoly_json(value),
                'text': format_ncpoly(value)}, latex_ncpoly(value))


@qdisc_group.command('scalar')
@click.argument('expression')
@click.option('--s0', default=None, help='Also evaluate at s = P/Q.')
@click.pass_context
@reports_errors
def scalar_command(ctx, expression, s0):
    """Canonical text of a scalar expression in q and s."""
    value = parse_scalar(expression)

    payload = {'expression': expression, 'value': format_qscalar(value)}
    if s0:
        point = parse_rational(s0)
        payload.update({'s0': str(point), 'at_s0': str(eval_numeric(value, point))})

    _echo(ctx, payload, latex_qscalar(value))


def main():
    qdisc_group(obj={})


if __name__ == '__main__':
    main()
