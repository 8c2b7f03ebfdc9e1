"""
Pol(C)_q in the normal-ordered basis z^j z*^k.

The single relation z* z = q^2 z z* + 1 - q^2 is applied as a rewrite rule on words; the product of
normal-ordered monomials uses the cached normal form of each z*^b z^c block.
"""

from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from qdisc.algebra.scalar import ONE, TSeries, ZERO, format_qscalar, is_atomic_text, q_power, to_qscalar
from qdisc.errors import SeriesOrderError, WindowError


Z = 'z'
ZS = 'zs'


def _strip(terms: Mapping) -> dict:
    return {key: c for key, c in terms.items() if c}


def _accumulate(target: dict, key, c) -> None:
    value = target.get(key, ZERO) + c
    if value:
        target[key] = value
    else:
        target.pop(key, None)


class NCPoly:
    """Finite sum of a_jk z^j z*^k; zero coefficients are never stored"""
    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[Tuple[int, int], object] = None):
        self._terms = _strip({key: to_qscalar(c) for key, c in (terms or {}).items()})
        self._hash = None

    @classmethod
    def zero(cls) -> 'NCPoly':
        return cls()

    @classmethod
    def one(cls) -> 'NCPoly':
        return cls({(0, 0): ONE})

    @classmethod
    def scalar(cls, c) -> 'NCPoly':
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, j: int, k: int, c=ONE) -> 'NCPoly':
        if j < 0 or k < 0:
            raise ValueError('monomial exponents must be nonnegative, got ({0}, {1})'.format(j, k))
        return cls({(j, k): c})

    @classmethod
    def z(cls) -> 'NCPoly':
        return cls.monomial(1, 0)

    @classmethod
    def zs(cls) -> 'NCPoly':
        return cls.monomial(0, 1)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, j: int, k: int):
        return self._terms.get((j, k), ZERO)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda item: (item[0][0] + item[0][1], item[0][0]))

    def degree(self) -> int:
        return max((j + k for j, k in self._terms), default=-1)

    def is_scalar(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: 'NCPoly') -> 'NCPoly':
        terms = dict(self._terms)
        for key, c in other.items():
            _accumulate(terms, key, c)
        return NCPoly(terms)

    def __neg__(self) -> 'NCPoly':
        return NCPoly({key: -c for key, c in self.items()})

    def __sub__(self, other: 'NCPoly') -> 'NCPoly':
        return self + (-other)

    def __mul__(self, other: 'NCPoly') -> 'NCPoly':
        return nc_mul(self, other)

    def __pow__(self, n: int) -> 'NCPoly':
        result = NCPoly.one()
        for _ in range(n):
            result = nc_mul(result, self)
        return result

    def scale(self, c) -> 'NCPoly':
        c = to_qscalar(c)
        return NCPoly({key: c * value for key, value in self.items()})

    def __repr__(self):
        return 'NCPoly({0})'.format(format_ncpoly(self))

    def __str__(self):
        return format_ncpoly(self)


def ncpoly_sum(polys: Iterable[NCPoly]) -> NCPoly:
    terms = {}
    for f in polys:
        for key, c in f.items():
            _accumulate(terms, key, c)
    return NCPoly(terms)


def monomial_word(j: int, k: int) -> tuple:
    return (Z,) * j + (ZS,) * k


def normal_order(word: Sequence[str], coeff=ONE) -> NCPoly:
    """
    Rewrite a word over {z, zs} into normal order, always replacing the leftmost zs z factor by
    q^2 z zs + (1 - q^2). The result does not depend on the strategy since z^j z*^k is a basis.
    """
    result = {}
    pending = [(to_qscalar(coeff), tuple(word))]

    while pending:
        c, w = pending.pop()
        for i in range(len(w) - 1):
            if w[i] == ZS and w[i + 1] == Z:
                pending.append((c * q_power(2), w[:i] + (Z, ZS) + w[i + 2:]))
                pending.append((c * (ONE - q_power(2)), w[:i] + w[i + 2:]))
                break
        else:
            if any(letter not in (Z, ZS) for letter in w):
                raise ValueError('words are built from {0!r} and {1!r} only'.format(Z, ZS))
            _accumulate(result, (w.count(Z), w.count(ZS)), c)

    return NCPoly(result)


@lru_cache(maxsize=None)
def swap_block(b: int, c: int) -> Dict[Tuple[int, int], object]:
    """
    Normal form of z*^b z^c, using z* z^c = q^(2c) z^c z* + (1 - q^(2c)) z^(c-1) on the rightmost z*.
    Only exponents (c - r, b - r) with 0 <= r <= min(b, c) occur.
    """
    if b == 0 or c == 0:
        return {(c, b): ONE}

    terms = {}
    for (j, k), v in swap_block(b - 1, c).items():
        _accumulate(terms, (j, k + 1), v * q_power(2 * c))
    for (j, k), v in swap_block(b - 1, c - 1).items():
        _accumulate(terms, (j, k), v * (ONE - q_power(2 * c)))

    return terms


def nc_mul(f: NCPoly, g: NCPoly) -> NCPoly:
    terms = {}
    for (a, b), u in f.items():
        for (c, d), v in g.items():
            uv = u * v
            for (j, k), w in swap_block(b, c).items():
                _accumulate(terms, (a + j, k + d), uv * w)

    return NCPoly(terms)


def nc_mul_left_z_power(i: int, f: NCPoly) -> NCPoly:
    """z^i f"""
    return NCPoly({(j + i, k): c for (j, k), c in f.items()})


def nc_mul_right_zstar_power(i: int, f: NCPoly) -> NCPoly:
    """f z*^i"""
    return NCPoly({(j, k + i): c for (j, k), c in f.items()})


def involution(f: NCPoly) -> NCPoly:
    # (z^j z*^k)* = z^k z*^j; scalars are real
    return NCPoly({(k, j): c for (j, k), c in f.items()})


def _power_text(letter: str, n: int) -> str:
    if n == 0:
        return ''
    return letter if n == 1 else '{0}^{1}'.format(letter, n)


def format_ncpoly(f: NCPoly) -> str:
    """Canonical text, terms ordered by (j + k, j), 'zs' standing for z*"""
    if not f:
        return '0'

    text = ''
    for (j, k), c in f.sorted_terms():
        mono = '*'.join(part for part in (_power_text(Z, j), _power_text(ZS, k)) if part)
        coeff = format_qscalar(c)

        sign = '+'
        if coeff.startswith('-') and is_atomic_text(coeff[1:]):
            sign, coeff = '-', coeff[1:]
        if not is_atomic_text(coeff):
            coeff = '(' + coeff + ')'

        if not mono:
            term = coeff
        elif coeff == '1':
            term = mono
        else:
            term = coeff + '*' + mono

        if not text:
            text = term if sign == '+' else '-' + term
        else:
            text += ' {0} {1}'.format(sign, term)

    return text


class TensorPoly:
    """Element of Pol(C)_q (x) Pol(C)_q, keys (j1, k1, j2, k2), each leg normal-ordered"""
    __slots__ = ('_terms',)

    def __init__(self, terms: Mapping[Tuple[int, int, int, int], object] = None):
        self._terms = _strip({key: to_qscalar(c) for key, c in (terms or {}).items()})

    @classmethod
    def from_pair(cls, f1: NCPoly, f2: NCPoly) -> 'TensorPoly':
        terms = {}
        for (j1, k1), u in f1.items():
            for (j2, k2), v in f2.items():
                _accumulate(terms, (j1, k1, j2, k2), u * v)
        return cls(terms)

    def items(self):
        return self._terms.items()

    def legs(self) -> Iterator:
        """(coefficient, left monomial, right monomial) triples"""
        for (j1, k1, j2, k2), c in self._terms.items():
            yield c, NCPoly.monomial(j1, k1), NCPoly.monomial(j2, k2)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: 'TensorPoly') -> 'TensorPoly':
        terms = dict(self._terms)
        for key, c in other.items():
            _accumulate(terms, key, c)
        return TensorPoly(terms)

    def __neg__(self) -> 'TensorPoly':
        return TensorPoly({key: -c for key, c in self.items()})

    def __sub__(self, other: 'TensorPoly') -> 'TensorPoly':
        return self + (-other)

    def __mul__(self, other: 'TensorPoly') -> 'TensorPoly':
        # (a (x) b)(c (x) d) = ac (x) bd
        terms = {}
        for (a1, b1, a2, b2), u in self.items():
            for (c1, d1, c2, d2), v in other.items():
                left = nc_mul(NCPoly.monomial(a1, b1), NCPoly.monomial(c1, d1))
                right = nc_mul(NCPoly.monomial(a2, b2), NCPoly.monomial(c2, d2))
                uv = u * v
                for (j1, k1), x in left.items():
                    for (j2, k2), y in right.items():
                        _accumulate(terms, (j1, k1, j2, k2), uv * x * y)
        return TensorPoly(terms)

    def scale(self, c) -> 'TensorPoly':
        c = to_qscalar(c)
        return TensorPoly({key: c * value for key, value in self.items()})

    def flip(self) -> 'TensorPoly':
        return TensorPoly({(j2, k2, j1, k1): c for (j1, k1, j2, k2), c in self.items()})

    def involution(self) -> 'TensorPoly':
        """* (x) * applied leg by leg"""
        return TensorPoly({(k1, j1, k2, j2): c for (j1, k1, j2, k2), c in self.items()})

    def __repr__(self):
        terms = ['{0} (x) {1}'.format(format_ncpoly(x.scale(c)), format_ncpoly(y)) for c, x, y in self.legs()]
        return 'TensorPoly({0})'.format(' + '.join(terms) or '0')


def tensor_sum(tensors: Iterable[TensorPoly]) -> TensorPoly:
    terms = {}
    for tensor in tensors:
        for key, c in tensor.items():
            _accumulate(terms, key, c)
    return TensorPoly(terms)


class WindowedSeries:
    """
    Restriction of a formal series sum a_jk z^j z*^k to exponents j, k <= window. Coefficients are
    t-series; anything outside the window is unknown, so comparisons are only made inside it.
    """

    def __init__(self, window: int, order: int, terms: Mapping[Tuple[int, int], TSeries] = None,
                 boundary: bool = False):
        if window < 0:
            raise WindowError('window must be nonnegative, got {0}'.format(window))

        self.window = window
        self.order = order
        self.boundary = boundary
        self._terms = {}

        for (j, k), value in (terms or {}).items():
            if j > window or k > window:
                continue
            if value.order != order:
                raise SeriesOrderError('entry ({0}, {1}) has order {2}, expected {3}'.format(j, k, value.order, order))
            if not value.is_zero():
                self._terms[(j, k)] = value

    @classmethod
    def from_ncpoly_coefficients(cls, polys: Sequence[NCPoly], window: int, order: int) -> 'WindowedSeries':
        """The series sum_n polys[n] t^n, restricted to the window"""
        coeffs = {}
        for n, f in enumerate(polys[:order + 1]):
            for key, c in f.items():
                coeffs.setdefault(key, [ZERO] * (order + 1))[n] = c

        return cls(window, order, {key: TSeries.from_coeffs(cs, order) for key, cs in coeffs.items()})

    @classmethod
    def from_ncpoly(cls, f: NCPoly, window: int, order: int) -> 'WindowedSeries':
        return cls.from_ncpoly_coefficients([f], window, order)

    def restrict(self, window: int) -> 'WindowedSeries':
        if window > self.window:
            raise WindowError('cannot widen a window from {0} to {1}'.format(self.window, window))
        return WindowedSeries(window, self.order, self._terms, self.boundary)

    def is_known(self, j: int, k: int) -> bool:
        return 0 <= j <= self.window and 0 <= k <= self.window

    def get(self, j: int, k: int) -> TSeries:
        if not self.is_known(j, k):
            raise WindowError('entry ({0}, {1}) is outside the window {2}'.format(j, k, self.window))
        return self._terms.get((j, k), TSeries.zero(self.order))

    def items(self):
        return self._terms.items()

    def t_coefficient(self, n: int) -> NCPoly:
        return NCPoly({key: value.coefficient(n) for key, value in self._terms.items()})

    def shift(self, i: int, l: int) -> 'WindowedSeries':
        """z^i (series) z*^l, still known on the whole window"""
        terms = {(j + i, k + l): value for (j, k), value in self._terms.items()}
        return WindowedSeries(self.window, self.order, terms, self.boundary)

    def agrees_with(self, other: 'WindowedSeries') -> bool:
        if self.order != other.order:
            raise SeriesOrderError('cannot compare series of orders {0} and {1}'.format(self.order, other.order))

        window = min(self.window, other.window)
        keys = set(self._terms) | set(other._terms)

        return all(self.get(j, k) == other.get(j, k) for j, k in keys if j <= window and k <= window)

    def differences(self, other: 'WindowedSeries') -> Dict[Tuple[int, int], TSeries]:
        window = min(self.window, other.window)
        keys = set(self._terms) | set(other._terms)

        return {(j, k): self.get(j, k) - other.get(j, k) for j, k in sorted(keys)
                if j <= window and k <= window and self.get(j, k) != other.get(j, k)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, WindowedSeries):
            return NotImplemented
        return self.window == other.window and self.order == other.order and self._terms == other._terms

    def __repr__(self):
        return 'WindowedSeries(window={0}, order={1}, terms={2})'.format(self.window, self.order, len(self._terms))
