from fractions import Fraction

from qdisc.algebra.qpoly import NCPoly
from qdisc.algebra.scalar import ONE, q_power
from qdisc.cli.parser import parse_ncpoly


def small_params(**overrides) -> dict:
    """Verifier parameters small enough for a unit test run"""
    params = {
        'associativity_exponent': 1,
        'cutoff': 8,
        'max_degree': 1,
        'order': 1,
        's0': None,
        'samples': 3,
        'seed': 1,
        'window': 3,
    }
    params.update(overrides)

    return params


def poly(text: str) -> NCPoly:
    return parse_ncpoly(text)


def mono(j: int, k: int, c=ONE) -> NCPoly:
    return NCPoly.monomial(j, k, c)


def zs_z() -> NCPoly:
    """z* z in normal order: q^2 z z* + 1 - q^2"""
    return mono(1, 1, q_power(2)) + NCPoly.scalar(ONE - q_power(2))


def one_minus_w_squared_expanded() -> NCPoly:
    """(1 - z z*)^2 = 1 - (1 + q^2) z z* + q^2 z^2 z*^2"""
    return NCPoly.one() + mono(1, 1, -(ONE + q_power(2))) + mono(2, 2, q_power(2))


S0 = Fraction(7, 10)
