"""
The deformed product f1 * f2 = f1 f2 + sum_k C_k(f1, f2) t^k and its extension to Pol(C)_q[[t]].

    C_k(f1, f2) = m0((p_k(box~) - p_(k-1)(box~))(f1 (x) f2))

with the polynomials

    p_k(x) = sum_j (q^-2k; q^2)_j / (q^2; q^2)_j^2 q^2j prod_(i<j) (1 - q^2i ((1 - q^2)^2 x + 1 + q^2) + q^(4i+2))

The sum over j stops at k because (q^-2k; q^2)_j vanishes for j > k.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence, Tuple

from sympy.polys.rings import ring

from qdisc.algebra.qcalc import box_tilde, m0
from qdisc.algebra.qpoly import NCPoly, TensorPoly, involution, nc_mul, ncpoly_sum
from qdisc.algebra.scalar import ONE, QField, ZERO, format_qscalar, q_power, qpochhammer, to_qscalar
from qdisc.errors import SeriesOrderError, UndefinedCoefficientError


XRing, x = ring('x', QField.to_domain())


@dataclass(frozen=True)
class PkPolynomial:
    k: int
    coeffs: Tuple

    @property
    def degree(self) -> int:
        return max((n for n, c in enumerate(self.coeffs) if c), default=-1)

    def evaluate(self, value):
        value = to_qscalar(value)

        result = ZERO
        for c in reversed(self.coeffs):
            result = result * value + c

        return result

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            text = format_qscalar(c)
            if n:
                text = '({0})*{1}'.format(text, 'x' if n == 1 else 'x^{0}'.format(n))
            terms.append(text)

        return ' + '.join(terms) or '0'


@lru_cache(maxsize=None)
def pk(k: int) -> PkPolynomial:
    if k < 0:
        raise ValueError('p_k is defined for k >= 0, got {0}'.format(k))

    inner = (ONE - q_power(2))**2 * x + ONE + q_power(2)

    poly = XRing.zero
    product = XRing.one
    for j in range(k + 1):
        if j:
            i = j - 1
            product *= XRing.one - q_power(2 * i) * inner + q_power(4 * i + 2)

        weight = qpochhammer(q_power(-2 * k), 2, j) / qpochhammer(q_power(2), 2, j)**2 * q_power(2 * j)
        poly += product * weight

    return PkPolynomial(k, tuple(poly.get((n,), ZERO) for n in range(k + 1)))


def pk_difference(k: int) -> Tuple:
    """Coefficients of p_k - p_(k-1)"""
    upper, lower = pk(k).coeffs, pk(k - 1).coeffs if k > 0 else ()
    return tuple(c - (lower[n] if n < len(lower) else ZERO) for n, c in enumerate(upper))


def apply_polynomial(coeffs: Sequence, operator: Callable, element):
    """
    p(operator)(element) for p = sum coeffs[n] x^n, Horner style: operator is applied deg p times and
    its powers are never formed.
    """
    if not coeffs:
        return element.scale(ZERO)

    result = element.scale(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        result = operator(result) + element.scale(c)

    return result


@lru_cache(maxsize=None)
def _ck_monomial(k: int, j1: int, k1: int, j2: int, k2: int) -> NCPoly:
    tensor = TensorPoly({(j1, k1, j2, k2): ONE})
    return m0(apply_polynomial(pk_difference(k), box_tilde, tensor))


def ck(k: int, f1: NCPoly, f2: NCPoly) -> NCPoly:
    if k < 1:
        raise UndefinedCoefficientError('C_k is defined for k >= 1, got {0}; the t^0 term is f1 f2'.format(k), k=k)

    return ncpoly_sum(_ck_monomial(k, j1, k1, j2, k2).scale(u * v)
                      for (j1, k1), u in f1.items()
                      for (j2, k2), v in f2.items())


@dataclass(frozen=True)
class StarSeries:
    """Element of Pol(C)_q[[t]] modulo t^(order + 1)"""
    order: int
    coeffs: Tuple[NCPoly, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError('series order must be nonnegative, got {0}'.format(self.order))

        coeffs = tuple(self.coeffs)[:self.order + 1]
        coeffs += (NCPoly.zero(),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, 'coeffs', coeffs)

    def coefficient(self, n: int) -> NCPoly:
        return self.coeffs[n] if n <= self.order else NCPoly.zero()

    def _check(self, other: 'StarSeries'):
        if self.order != other.order:
            raise SeriesOrderError('cannot combine series of orders {0} and {1}'.format(self.order, other.order))

    def __add__(self, other: 'StarSeries') -> 'StarSeries':
        self._check(other)
        return StarSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'StarSeries') -> 'StarSeries':
        self._check(other)
        return StarSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> 'StarSeries':
        return StarSeries(self.order, tuple(f.scale(c) for f in self.coeffs))

    def map(self, operation: Callable[[NCPoly], NCPoly]) -> 'StarSeries':
        return StarSeries(self.order, tuple(operation(f) for f in self.coeffs))

    def truncate(self, order: int) -> 'StarSeries':
        return StarSeries(order, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def star_series(f: NCPoly, order: int) -> StarSeries:
    return StarSeries(order, (f,))


def series_unit(order: int) -> StarSeries:
    return star_series(NCPoly.one(), order)


def star(f1: NCPoly, f2: NCPoly, order: int) -> StarSeries:
    if order < 0:
        raise ValueError('series order must be nonnegative, got {0}'.format(order))

    return StarSeries(order, (nc_mul(f1, f2),) + tuple(ck(k, f1, f2) for k in range(1, order + 1)))


def m_series(psi1: StarSeries, psi2: StarSeries) -> StarSeries:
    """Cauchy product, each a_j * b_k expanded with star and re-truncated"""
    psi1._check(psi2)
    order = psi1.order

    coeffs = [[] for _ in range(order + 1)]
    for a, f1 in enumerate(psi1.coeffs):
        for b, f2 in enumerate(psi2.coeffs[:order + 1 - a]):
            if not f1 or not f2:
                continue
            for c, term in enumerate(star(f1, f2, order - a - b).coeffs):
                coeffs[a + b + c].append(term)

    return StarSeries(order, tuple(ncpoly_sum(terms) for terms in coeffs))


def series_involution(psi: StarSeries) -> StarSeries:
    return psi.map(involution)
