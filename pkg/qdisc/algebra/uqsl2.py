"""
U_q sl2 as a Hopf *-algebra acting on Pol(C)_q.

    K z = q^2 z     K^-1 z = q^-2 z     F z = q^(1/2)     E z = -q^(1/2) z^2

    Delta(K) = K (x) K      Delta(E) = E (x) 1 + K (x) E      Delta(F) = F (x) K^-1 + 1 (x) F
    S(K) = K^-1             S(E) = -K^-1 E                    S(F) = -F K
    K* = K                  E* = -K F                         F* = -E K^-1

The action on z* follows from (xi f)* = S(xi)* f*; the resulting values are kept in Z_STAR_ACTIONS and
re-derived by check_involution_compat.
"""

from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from qdisc.algebra.qcalc import box
from qdisc.algebra.qpoly import NCPoly, TensorPoly, involution, nc_mul, ncpoly_sum, tensor_sum
from qdisc.algebra.scalar import ONE, ZERO, format_qscalar, q_power, s_power, to_qscalar
from qdisc.algebra.star import StarSeries, star


E = 'E'
F = 'F'
K = 'K'
KINV = 'Kinv'
GENERATORS = (E, F, K, KINV)

Word = Tuple[str, ...]


# g z and g z*, as {(j, k): coefficient}
Z_ACTIONS = {
    K: {(1, 0): q_power(2)},
    KINV: {(1, 0): q_power(-2)},
    F: {(0, 0): s_power(1)},
    E: {(2, 0): -s_power(1)},
}

Z_STAR_ACTIONS = {
    K: {(0, 1): q_power(-2)},
    KINV: {(0, 1): q_power(2)},
    E: {(0, 0): s_power(-3)},
    F: {(0, 2): -s_power(5)},
}


class UqElement:
    """Finite linear combination of words in E, F, K, K^-1; no relations are imposed on the words"""
    __slots__ = ('_terms',)

    def __init__(self, terms: Dict[Word, object] = None):
        self._terms = {}
        for word, c in (terms or {}).items():
            for letter in word:
                if letter not in GENERATORS:
                    raise ValueError('unknown generator {0!r}'.format(letter))
            c = to_qscalar(c)
            if c:
                self._terms[tuple(word)] = c

    @classmethod
    def generator(cls, letter: str) -> 'UqElement':
        return cls({(letter,): ONE})

    @classmethod
    def scalar(cls, c) -> 'UqElement':
        return cls({(): c})

    @classmethod
    def word(cls, *letters: str) -> 'UqElement':
        return cls({tuple(letters): ONE})

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UqElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: 'UqElement') -> 'UqElement':
        terms = dict(self._terms)
        for word, c in other.items():
            terms[word] = terms.get(word, ZERO) + c
        return UqElement(terms)

    def __neg__(self) -> 'UqElement':
        return self.scale(-ONE)

    def __sub__(self, other: 'UqElement') -> 'UqElement':
        return self + (-other)

    def __mul__(self, other: 'UqElement') -> 'UqElement':
        terms = {}
        for w1, c1 in self.items():
            for w2, c2 in other.items():
                terms[w1 + w2] = terms.get(w1 + w2, ZERO) + c1 * c2
        return UqElement(terms)

    def scale(self, c) -> 'UqElement':
        c = to_qscalar(c)
        return UqElement({word: c * value for word, value in self.items()})

    def antipode(self) -> 'UqElement':
        return _reverse_map(self, _ANTIPODE)

    def star(self) -> 'UqElement':
        # Scalars of Q(s) are real, so * is linear here
        return _reverse_map(self, _INVOLUTION)

    def counit(self):
        total = ZERO
        for word, c in self.items():
            if all(letter in (K, KINV) for letter in word):
                total += c
        return total

    def coproduct(self) -> Dict[Tuple[Word, Word], object]:
        """Delta extended multiplicatively, as {(left word, right word): coefficient}"""
        result = {}
        for word, c in self.items():
            partial = {((), ()): c}
            for letter in word:
                step = {}
                for (l1, r1), u in partial.items():
                    for l2, r2, v in _COPRODUCT[letter]:
                        key = (l1 + l2, r1 + r2)
                        step[key] = step.get(key, ZERO) + u * v
                partial = step
            for key, value in partial.items():
                result[key] = result.get(key, ZERO) + value

        return {key: value for key, value in result.items() if value}

    def __repr__(self):
        terms = ['{0}*{1}'.format(format_qscalar(c), '.'.join(word) or '1') for word, c in sorted(self.items())]
        return 'UqElement({0})'.format(' + '.join(terms) or '0')


_COPRODUCT = {
    K: [((K,), (K,), ONE)],
    KINV: [((KINV,), (KINV,), ONE)],
    E: [((E,), (), ONE), ((K,), (E,), ONE)],
    F: [((F,), (KINV,), ONE), ((), (F,), ONE)],
}

_ANTIPODE = {
    K: UqElement.generator(KINV),
    KINV: UqElement.generator(K),
    E: UqElement.word(KINV, E).scale(-ONE),
    F: UqElement.word(F, K).scale(-ONE),
}

_INVOLUTION = {
    K: UqElement.generator(K),
    KINV: UqElement.generator(KINV),
    E: UqElement.word(K, F).scale(-ONE),
    F: UqElement.word(E, KINV).scale(-ONE),
}


def _reverse_map(element: UqElement, images: Dict[str, UqElement]) -> UqElement:
    result = UqElement()
    for word, c in element.items():
        image = UqElement.scalar(c)
        for letter in reversed(word):
            image = image * images[letter]
        result = result + image
    return result


def as_element(g) -> UqElement:
    return g if isinstance(g, UqElement) else UqElement.generator(g)


@lru_cache(maxsize=None)
def _act_monomial(g: str, j: int, k: int) -> NCPoly:
    """g (z^j z*^k), splitting off the leftmost letter and applying Delta(g)"""
    if j == 0 and k == 0:
        return NCPoly.scalar(ONE if g in (K, KINV) else ZERO)

    if j:
        first, first_action, rest = (1, 0), Z_ACTIONS, (j - 1, k)
    else:
        first, first_action, rest = (0, 1), Z_STAR_ACTIONS, (0, k - 1)

    terms = []
    for left, right, c in _COPRODUCT[g]:
        head = NCPoly(first_action[left[0]]) if left else NCPoly.monomial(*first)
        tail = _act_monomial(right[0], *rest) if right else NCPoly.monomial(*rest)
        terms.append(nc_mul(head, tail).scale(c))

    return ncpoly_sum(terms)


def act(g: str, f: NCPoly) -> NCPoly:
    if g not in GENERATORS:
        raise ValueError('unknown generator {0!r}'.format(g))
    return ncpoly_sum(_act_monomial(g, j, k).scale(c) for (j, k), c in f.items())


def act_letters(word: Word, f: NCPoly) -> NCPoly:
    # The rightmost letter acts first
    for letter in reversed(word):
        f = act(letter, f)
    return f


def act_word(element, f: NCPoly) -> NCPoly:
    element = as_element(element)
    return ncpoly_sum(act_letters(word, f).scale(c) for word, c in element.items())


def act_series(element, psi: StarSeries) -> StarSeries:
    return psi.map(lambda f: act_word(element, f))


def act_tensor(element, f1: NCPoly, f2: NCPoly) -> TensorPoly:
    """Delta(element) acting on f1 (x) f2"""
    return tensor_sum(TensorPoly.from_pair(act_letters(w1, f1), act_letters(w2, f2)).scale(c)
                      for (w1, w2), c in as_element(element).coproduct().items())


def coproduct_image(element, f1: NCPoly, f2: NCPoly) -> NCPoly:
    """sum g(1) f1 . g(2) f2"""
    return ncpoly_sum(nc_mul(act_letters(w1, f1), act_letters(w2, f2)).scale(c)
                      for (w1, w2), c in as_element(element).coproduct().items())


def relations() -> List[Tuple[str, UqElement, UqElement]]:
    """The defining relations of U_q sl2 as (name, left side, right side)"""
    e, f, k, kinv = (UqElement.generator(g) for g in (E, F, K, KINV))
    one = UqElement.scalar(ONE)
    q, qinv = q_power(1), q_power(-1)

    return [
        ('k-kinv', k * kinv, one),
        ('kinv-k', kinv * k, one),
        ('k-e-kinv', k * e * kinv, e.scale(q_power(2))),
        ('k-f-kinv', k * f * kinv, f.scale(q_power(-2))),
        ('e-f-commutator', e * f - f * e, (k - kinv).scale(ONE / (q - qinv))),
    ]


def check_relations(f: NCPoly) -> Dict[str, bool]:
    return {name: act_word(lhs, f) == act_word(rhs, f) for name, lhs, rhs in relations()}


def check_module_algebra(g, f1: NCPoly, f2: NCPoly) -> bool:
    return act_word(g, nc_mul(f1, f2)) == coproduct_image(g, f1, f2)


def check_well_defined(g) -> bool:
    """g acting on the normal form of z* z agrees with Delta(g) acting on the factors z*, z"""
    return check_module_algebra(g, NCPoly.zs(), NCPoly.z())


def check_star_equivariance(g, f1: NCPoly, f2: NCPoly, order: int) -> bool:
    lhs = act_series(g, star(f1, f2, order))

    rhs = StarSeries(order, ())
    for (w1, w2), c in as_element(g).coproduct().items():
        rhs = rhs + star(act_letters(w1, f1), act_letters(w2, f2), order).scale(c)

    return lhs == rhs


def check_box_equivariance(g, f: NCPoly) -> bool:
    return act_word(g, box(f)) == box(act_word(g, f))


def check_involution_compat(g, f: NCPoly) -> bool:
    """(g f)* = S(g)* f*"""
    element = as_element(g)
    return involution(act_word(element, f)) == act_word(element.antipode().star(), involution(f))


def check_hopf_counit(g) -> bool:
    """(eps (x) id) Delta(g) = g = (id (x) eps) Delta(g), as combinations of words"""
    element = as_element(g)
    coproduct = element.coproduct()

    left = UqElement()
    right = UqElement()
    for (w1, w2), c in coproduct.items():
        left = left + UqElement({w2: c * UqElement.word(*w1).counit()})
        right = right + UqElement({w1: c * UqElement.word(*w2).counit()})

    return left == element and right == element


def check_coproduct_relations(f1: NCPoly, f2: NCPoly) -> Dict[str, bool]:
    """Delta(lhs - rhs) annihilates f1 (x) f2 for every defining relation"""
    return {name: not act_tensor(lhs - rhs, f1, f2) for name, lhs, rhs in relations()}


def words_up_to(length: int) -> Iterable[UqElement]:
    words = [()]
    frontier = [()]
    for _ in range(length):
        frontier = [w + (g,) for w in frontier for g in GENERATORS]
        words.extend(frontier)
    return [UqElement.word(*w) for w in words]
