"""
Exact coefficient arithmetic.

The ground field is Q(s) with q = s**2, so q**(1/2) is the generator s. Truncated power series in the
formal parameter t are sympy sparse polynomials over that field, multiplied and inverted with
sympy.polys.ring_series modulo t**(order + 1).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from sympy import QQ, latex
from sympy.polys.fields import FracElement, field
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from qdisc.errors import NotAPowerSeriesError, PoleError, ScalarDivisionError, SeriesOrderError


QField, s = field('s', QQ)
SeriesRing, t = ring('t', QField.to_domain())

QScalar = FracElement

ZERO = QField.zero
ONE = QField.one
q = s**2

SCALAR_OPS = ('add', 'sub', 'mul', 'div')


def to_qscalar(value: Union[int, Fraction, FracElement]) -> FracElement:
    if isinstance(value, FracElement):
        return value
    if isinstance(value, Fraction):
        return QField(value.numerator) / value.denominator
    if isinstance(value, int):
        return QField(value)

    raise TypeError('cannot interpret {0!r} as a scalar'.format(value))


def qscalar_arith(a: FracElement, b: FracElement, op: str) -> FracElement:
    if op == 'add':
        return a + b
    elif op == 'sub':
        return a - b
    elif op == 'mul':
        return a * b
    elif op == 'div':
        if not b:
            raise ScalarDivisionError('division of {0} by zero'.format(format_qscalar(a)))
        return a / b

    raise ValueError('unknown scalar operation: {0}'.format(op))


def s_power(n: int) -> FracElement:
    return s**n


def q_power(n: int) -> FracElement:
    return s**(2 * n)


def qpochhammer(a: FracElement, base_exponent: int, n: int) -> FracElement:
    """(a; q^e)_n = (1 - a)(1 - a q^e) ... (1 - a q^(e(n-1)))"""
    if n < 0:
        raise ValueError('the q-Pochhammer length must be nonnegative, got {0}'.format(n))

    result = ONE
    for i in range(n):
        result *= ONE - a * q_power(base_exponent * i)

    return result


def qnumber(n: int, base_exponent: int = 2) -> FracElement:
    """[n] = 1 + q^e + ... + q^(e(n-1)) = (1 - q^(en)) / (1 - q^e)"""
    return sum((q_power(base_exponent * i) for i in range(n)), ZERO)


def _to_rational(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError('{0!r} is not an exact rational number'.format(text))


def eval_numeric(x: FracElement, s0: Fraction) -> Fraction:
    point = QQ(s0.numerator, s0.denominator)

    denominator = x.denom(point)
    if not denominator:
        raise PoleError('{0} has a pole at s = {1}'.format(format_qscalar(x), s0), s0=str(s0))

    return _to_rational(x.numer(point)) / _to_rational(denominator)


def _format_poly(p: PolyElement) -> str:
    if not p:
        return '0'

    text = ''
    for (n,), c in sorted(p.terms(), reverse=True):
        c = _to_rational(c)
        sign = '-' if c < 0 else '+'
        c = abs(c)

        if n == 0:
            term = str(c)
        else:
            power = 's' if n == 1 else 's^{0}'.format(n)
            term = power if c == 1 else '{0}*{1}'.format(c, power)

        if not text:
            text = term if sign == '+' else '-' + term
        else:
            text += ' {0} {1}'.format(sign, term)

    return text


def is_atomic_text(text: str) -> bool:
    return not any(c in text for c in ' */') and not text.startswith('-')


def format_qscalar(x: FracElement) -> str:
    """Canonical text: reduced fraction in s with a monic denominator, '^' for powers"""
    numer, denom = x.numer, x.denom
    lc = denom.LC
    numer, denom = numer.quo_ground(lc), denom.quo_ground(lc)

    numer_text = _format_poly(numer)
    if denom == denom.ring.one:
        return numer_text

    denom_text = _format_poly(denom)
    numer_text = numer_text if is_atomic_text(numer_text) else '(' + numer_text + ')'
    denom_text = denom_text if is_atomic_text(denom_text) else '(' + denom_text + ')'

    return numer_text + '/' + denom_text


def latex_qscalar(x: FracElement) -> str:
    return latex(x.as_expr())


@dataclass(frozen=True)
class TSeries:
    """Power series in t truncated modulo t^(order + 1)"""
    order: int
    poly: PolyElement

    def __post_init__(self):
        if self.order < 0:
            raise ValueError('series order must be nonnegative, got {0}'.format(self.order))

        # Everything above t^order is dropped on construction
        object.__setattr__(self, 'poly', rs_trunc(self.poly, t, self.order + 1))

    @classmethod
    def constant(cls, c, order: int) -> 'TSeries':
        return cls(order, SeriesRing(to_qscalar(c)))

    @classmethod
    def zero(cls, order: int) -> 'TSeries':
        return cls(order, SeriesRing.zero)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int) -> 'TSeries':
        poly = SeriesRing.zero
        for n, c in enumerate(coeffs):
            if n > order:
                break
            poly += SeriesRing(to_qscalar(c)) * t**n

        return cls(order, poly)

    @property
    def coeffs(self) -> tuple:
        return tuple(self.coefficient(n) for n in range(self.order + 1))

    def coefficient(self, n: int) -> FracElement:
        return self.poly.get((n,), ZERO)

    def is_zero(self) -> bool:
        return not self.poly

    def _check(self, other: 'TSeries'):
        if self.order != other.order:
            raise SeriesOrderError('cannot combine series of orders {0} and {1}'.format(self.order, other.order))

    def __add__(self, other: 'TSeries') -> 'TSeries':
        return tseries_arith(self, other, 'add')

    def __sub__(self, other: 'TSeries') -> 'TSeries':
        return tseries_arith(self, other, 'sub')

    def __mul__(self, other: 'TSeries') -> 'TSeries':
        return tseries_arith(self, other, 'mul')

    def __neg__(self) -> 'TSeries':
        return TSeries(self.order, -self.poly)

    def scale(self, c) -> 'TSeries':
        return TSeries(self.order, self.poly.mul_ground(to_qscalar(c)))

    def inverse(self) -> 'TSeries':
        return tseries_inverse(self)

    def evaluate(self, s0: Fraction) -> list:
        return [eval_numeric(c, s0) for c in self.coeffs]

    def __str__(self):
        return format_tseries(self)


def tseries_arith(a: TSeries, b: TSeries, op: str) -> TSeries:
    a._check(b)

    if op == 'add':
        return TSeries(a.order, a.poly + b.poly)
    elif op == 'sub':
        return TSeries(a.order, a.poly - b.poly)
    elif op == 'mul':
        return TSeries(a.order, rs_mul(a.poly, b.poly, t, a.order + 1))

    raise ValueError('unknown series operation: {0}'.format(op))


def tseries_inverse(a: TSeries) -> TSeries:
    if not a.coefficient(0):
        raise ScalarDivisionError('series without constant term is not invertible')

    return TSeries(a.order, rs_series_inversion(a.poly, t, a.order + 1))


def _as_series_poly(p) -> PolyElement:
    if isinstance(p, PolyElement):
        return p
    if isinstance(p, TSeries):
        return p.poly

    # A coefficient list, constant term first
    return sum((SeriesRing(to_qscalar(c)) * t**n for n, c in enumerate(p)), SeriesRing.zero)


def tseries_from_rational(num, den, order: int) -> TSeries:
    """Taylor expansion of num(t)/den(t) modulo t^(order + 1)"""
    num, den = _as_series_poly(num), _as_series_poly(den)

    if not den.get((0,), ZERO):
        raise NotAPowerSeriesError('denominator vanishes at t = 0')

    inverse = rs_series_inversion(den, t, order + 1)

    return TSeries(order, rs_mul(rs_trunc(num, t, order + 1), inverse, t, order + 1))


def format_tseries(a: TSeries) -> str:
    terms = []
    for n, c in enumerate(a.coeffs):
        if not c:
            continue
        text = format_qscalar(c)
        if n:
            text = ('(' + text + ')' if not is_atomic_text(text) else text) + ('*t' if n == 1 else '*t^{0}'.format(n))
        terms.append(text)

    return ' + '.join(terms) if terms else '0'
