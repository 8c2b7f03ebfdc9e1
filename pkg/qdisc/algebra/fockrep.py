"""
Operators on span{z^m : 0 <= m <= M} with t-series entries.

The weighted scalar product has (z^j, z^k) = delta_jk (q^2; q^2)_j / (t q^2; q^2)_j, and the map I sends a
normal-ordered monomial to

    I(z^j z*^k): z^m -> (q^2m; q^-2)_k / (t q^2m; q^-2)_k z^(m - k + j)    (0 when k > m)

with the rational function in t replaced by its Taylor expansion. Every FockOp knows the highest column
on which its entries are exact (`valid`); anything above it is never compared.
"""

import logging
from functools import lru_cache
from typing import Dict

from qdisc.algebra.qcalc import box
from qdisc.algebra.qpoly import NCPoly, WindowedSeries, swap_block
from qdisc.algebra.scalar import ONE, SeriesRing, TSeries, q_power, qpochhammer, t, tseries_from_rational
from qdisc.algebra.star import StarSeries, apply_polynomial, pk_difference
from qdisc.errors import InconsistentSymbolError, SeriesOrderError, ValidityRangeError, WindowError


logger = logging.getLogger(__name__)


def _add_entry(entries: dict, row: int, col: int, value: TSeries) -> None:
    column = entries.setdefault(col, {})
    total = column[row] + value if row in column else value

    if total.is_zero():
        column.pop(row, None)
    else:
        column[row] = total

    if not column:
        del entries[col]


class FockOp:
    """
    Sparse matrix {column m: {row m': TSeries}} acting on z^0 .. z^M.

    `raise_` is the largest degree shift m' - m the operator can produce, `valid` the highest trusted
    column. Rows above M may be stored; they only feed untrusted columns of later products.
    """

    def __init__(self, cutoff: int, order: int, entries: Dict[int, Dict[int, TSeries]] = None,
                 raise_: int = 0, valid: int = None):
        if cutoff < 0:
            raise ValueError('basis cutoff must be nonnegative, got {0}'.format(cutoff))

        self.cutoff = cutoff
        self.order = order
        self.raise_ = raise_
        self.valid = cutoff if valid is None else min(valid, cutoff)
        self.entries = {}

        for col, column in (entries or {}).items():
            if col > cutoff:
                continue
            for row, value in column.items():
                if value.order != order:
                    raise SeriesOrderError('entry ({0}, {1}) has order {2}, expected {3}'.format(
                        row, col, value.order, order))
                if not value.is_zero():
                    self.entries.setdefault(col, {})[row] = value

    @classmethod
    def identity(cls, cutoff: int, order: int) -> 'FockOp':
        one = TSeries.constant(ONE, order)
        return cls(cutoff, order, {m: {m: one} for m in range(cutoff + 1)})

    @classmethod
    def zero(cls, cutoff: int, order: int) -> 'FockOp':
        return cls(cutoff, order)

    def _check(self, other: 'FockOp'):
        if self.order != other.order:
            raise SeriesOrderError('cannot combine operators of orders {0} and {1}'.format(self.order, other.order))
        if self.cutoff != other.cutoff:
            raise ValueError('cannot combine operators with cutoffs {0} and {1}'.format(self.cutoff, other.cutoff))

    def column(self, m: int) -> Dict[int, TSeries]:
        if not 0 <= m <= self.valid:
            raise ValidityRangeError('column {0} is outside the trusted range 0..{1}'.format(m, self.valid),
                                     column=m, valid=self.valid)
        return dict(self.entries.get(m, {}))

    def entry(self, row: int, col: int) -> TSeries:
        return self.column(col).get(row, TSeries.zero(self.order))

    def __add__(self, other: 'FockOp') -> 'FockOp':
        self._check(other)

        entries = {col: dict(column) for col, column in self.entries.items()}
        for col, column in other.entries.items():
            for row, value in column.items():
                _add_entry(entries, row, col, value)

        return FockOp(self.cutoff, self.order, entries, max(self.raise_, other.raise_), min(self.valid, other.valid))

    def __neg__(self) -> 'FockOp':
        return self.scale(-ONE)

    def __sub__(self, other: 'FockOp') -> 'FockOp':
        return self + (-other)

    def __mul__(self, other: 'FockOp') -> 'FockOp':
        """self after other; column c is exact when every row it reaches in `other` is trusted in self"""
        self._check(other)

        entries = {}
        for col, column in other.entries.items():
            for middle, b in column.items():
                for row, a in self.entries.get(middle, {}).items():
                    _add_entry(entries, row, col, a * b)

        valid = min(other.valid, self.valid - other.raise_)
        return FockOp(self.cutoff, self.order, entries, self.raise_ + other.raise_, valid)

    def __pow__(self, n: int) -> 'FockOp':
        result = FockOp.identity(self.cutoff, self.order)
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c) -> 'FockOp':
        entries = {col: {row: value.scale(c) for row, value in column.items()} for col, column in self.entries.items()}
        return FockOp(self.cutoff, self.order, entries, self.raise_, self.valid)

    def times_series(self, series: TSeries) -> 'FockOp':
        entries = {col: {row: value * series for row, value in column.items()} for col, column in self.entries.items()}
        return FockOp(self.cutoff, self.order, entries, self.raise_, self.valid)

    def t_coefficient(self, n: int) -> dict:
        """{(row, col): coefficient of t^n} over the trusted columns"""
        return {(row, col): value.coefficient(n)
                for col, column in self.entries.items() if col <= self.valid
                for row, value in column.items() if value.coefficient(n)}

    def differences(self, other: 'FockOp') -> Dict[tuple, TSeries]:
        """Entrywise differences on the columns both operators trust"""
        self._check(other)

        differences = {}
        for col in range(min(self.valid, other.valid) + 1):
            mine, theirs = self.entries.get(col, {}), other.entries.get(col, {})
            for row in sorted(set(mine) | set(theirs)):
                zero = TSeries.zero(self.order)
                delta = mine.get(row, zero) - theirs.get(row, zero)
                if not delta.is_zero():
                    differences[(row, col)] = delta

        return differences

    def agrees_with(self, other: 'FockOp') -> bool:
        return not self.differences(other)

    def __repr__(self):
        return 'FockOp(cutoff={0}, order={1}, raise={2}, valid={3})'.format(
            self.cutoff, self.order, self.raise_, self.valid)


@lru_cache(maxsize=None)
def fock_coefficient(k: int, m: int, order: int) -> TSeries:
    """(q^2m; q^-2)_k / (t q^2m; q^-2)_k expanded modulo t^(order + 1)"""
    numerator = qpochhammer(q_power(2 * m), -2, k)

    denominator = SeriesRing.one
    for i in range(k):
        denominator *= SeriesRing.one - t * q_power(2 * (m - i))

    return tseries_from_rational(SeriesRing(numerator), denominator, order)


@lru_cache(maxsize=None)
def i_op(j: int, k: int, cutoff: int, order: int) -> FockOp:
    if j < 0 or k < 0:
        raise ValueError('monomial exponents must be nonnegative, got ({0}, {1})'.format(j, k))

    entries = {m: {m - k + j: fock_coefficient(k, m, order)} for m in range(k, cutoff + 1)}
    return FockOp(cutoff, order, entries, j - k, cutoff - max(j - k, 0))


def i_op_poly(f: NCPoly, cutoff: int, order: int) -> FockOp:
    if not f:
        return FockOp.zero(cutoff, order)

    raise_ = max(j - k for j, k in f.keys())
    result = FockOp(cutoff, order, raise_=raise_, valid=cutoff - max(raise_, 0))
    for (j, k), c in f.items():
        result = result + i_op(j, k, cutoff, order).scale(c)

    return result


def norm_squared(m: int, order: int) -> TSeries:
    """(z^m, z^m) = (q^2; q^2)_m / (t q^2; q^2)_m"""
    denominator = SeriesRing.one
    for i in range(m):
        denominator *= SeriesRing.one - t * q_power(2 * (i + 1))

    return tseries_from_rational(SeriesRing(qpochhammer(q_power(2), 2, m)), denominator, order)


def zhat(cutoff: int, order: int) -> FockOp:
    one = TSeries.constant(ONE, order)
    return FockOp(cutoff, order, {m: {m + 1: one} for m in range(cutoff + 1)}, 1, cutoff - 1)


def zhat_star(cutoff: int, order: int) -> FockOp:
    """Adjoint of zhat: z^m -> (|z^m|^2 / |z^(m-1)|^2) z^(m-1)"""
    entries = {m: {m - 1: norm_squared(m, order) * norm_squared(m - 1, order).inverse()}
               for m in range(1, cutoff + 1)}
    return FockOp(cutoff, order, entries, -1, cutoff)


def q_map(psi: StarSeries, cutoff: int, order: int) -> FockOp:
    """sum_n I(f_n) t^n"""
    if psi.order != order:
        raise SeriesOrderError('series of order {0} mapped into operators of order {1}'.format(psi.order, order))

    result = None
    for n, f in enumerate(psi.coeffs):
        term = i_op_poly(f, cutoff, order).times_series(TSeries.from_coeffs([0] * n + [1], order))
        result = term if result is None else result + term

    return result


def covariant_symbol(operator: FockOp, window: int) -> WindowedSeries:
    """
    The coefficients a_jk with sum a_jk I(z^j z*^k) = operator, for j, k <= window.

    For a fixed shift d = j - k, column m of the operator at row m + d reads
    sum_(k <= m) a_(k+d, k) c_k(m) with c_m(m) invertible, so increasing m solves for a_(m+d, m).
    """
    if window > operator.valid:
        raise WindowError('window {0} needs columns up to {0}, but only 0..{1} are trusted; increase the cutoff'.format(
            window, operator.valid), window=window, valid=operator.valid)

    order = operator.order
    zero = TSeries.zero(order)
    terms = {}

    for d in range(-window, window + 1):
        for m in range(max(0, -d), min(window, window - d) + 1):
            target = operator.entries.get(m, {}).get(m + d, zero)
            for k in range(max(0, -d), m):
                if (k + d, k) in terms:
                    target = target - terms[(k + d, k)] * fock_coefficient(k, m, order)

            value = target * fock_coefficient(m, m, order).inverse()
            if not value.is_zero():
                terms[(m + d, m)] = value

    # Every entry of the window must be reproduced by the solved coefficients
    for col in range(window + 1):
        for row in range(window + 1):
            expected = operator.entries.get(col, {}).get(row, zero)
            d = row - col
            rebuilt = zero
            for k in range(max(0, -d), col + 1):
                if (k + d, k) in terms:
                    rebuilt = rebuilt + terms[(k + d, k)] * fock_coefficient(k, col, order)
            if rebuilt != expected:
                raise InconsistentSymbolError('operator is not in the image of I at column {0}, row {1}'.format(
                    col, row), row=row, column=col)

    boundary = window == operator.valid
    if boundary:
        logger.warning('window %d reaches the last trusted column of %r', window, operator)

    return WindowedSeries(window, order, terms, boundary)


def berezin(j: int, k: int, window: int, cutoff: int, order: int) -> WindowedSeries:
    """Covariant symbol of zhat*^j zhat^k, whose contravariant symbol is z*^j z^k"""
    operator = (zhat_star(cutoff, order) ** j) * (zhat(cutoff, order) ** k)
    return covariant_symbol(operator, window)


def contravariant_polynomial(j: int, k: int) -> NCPoly:
    """z*^j z^k brought into normal order"""
    return NCPoly(swap_block(j, k))


def berezin_expansion(j: int, k: int, terms: int) -> list:
    """[f, (p_1(box) - p_0(box)) f, ..., (p_K(box) - p_(K-1)(box)) f] with f = z*^j z^k"""
    if terms < 0:
        raise ValueError('number of terms must be nonnegative, got {0}'.format(terms))

    f = contravariant_polynomial(j, k)
    return [f] + [apply_polynomial(pk_difference(n), box, f) for n in range(1, terms + 1)]


def m_t(f1: NCPoly, f2: NCPoly, window: int, cutoff: int, order: int) -> WindowedSeries:
    """Covariant symbol of I(f1) I(f2)"""
    return covariant_symbol(i_op_poly(f1, cutoff, order) * i_op_poly(f2, cutoff, order), window)
