import random
from fractions import Fraction
from typing import Iterable, List, Tuple

from qdisc.algebra.qpoly import NCPoly
from qdisc.algebra.scalar import ZERO, eval_numeric, s_power
from qdisc.errors import PoleError


# Most failing cases recorded per law
MAX_FAILURES = 5


def monomials_by_exponent(bound: int) -> List[NCPoly]:
    """z^j z*^k with j, k <= bound"""
    return [NCPoly.monomial(j, k) for j in range(bound + 1) for k in range(bound + 1)]


def monomials_by_degree(degree: int) -> List[NCPoly]:
    """z^j z*^k with j + k <= degree"""
    return [NCPoly.monomial(j, n - j) for n in range(degree + 1) for j in range(n + 1)]


def random_scalar(rng: random.Random):
    # Small integers times a power of s keep the rational functions honest without blowing up
    c = ZERO
    while not c:
        c = rng.randint(-3, 3) * s_power(rng.randint(-2, 2))
    return c


def random_ncpoly(rng: random.Random, degree: int, terms: int = 3) -> NCPoly:
    result = NCPoly.zero()
    for _ in range(terms):
        n = rng.randint(0, degree)
        j = rng.randint(0, n)
        result = result + NCPoly.monomial(j, n - j, random_scalar(rng))

    return result if result else NCPoly.one()


def random_word(rng: random.Random, length: int) -> Tuple[str, ...]:
    return tuple(rng.choice(('z', 'zs')) for _ in range(length))


def pure_power_pairs(degree: int) -> Iterable[Tuple[NCPoly, NCPoly]]:
    """(z*^a, z^b) for a, b <= degree"""
    for a in range(degree + 1):
        for b in range(degree + 1):
            yield NCPoly.monomial(0, a), NCPoly.monomial(b, 0)


class ResidualTracker:
    """
    Evaluates both sides of every comparison at s = s0 and keeps the exact rational differences,
    so a canonicalisation bug in the symbolic layer shows up as a nonzero number.
    """

    def __init__(self, s0: Fraction = None):
        self.s0 = s0
        self.checked = 0
        self.nonzero = 0
        self.poles = 0
        self.largest = Fraction(0)

    def scalars(self, lhs, rhs) -> bool:
        if self.s0 is not None:
            try:
                delta = eval_numeric(lhs, self.s0) - eval_numeric(rhs, self.s0)
            except PoleError:
                self.poles += 1
            else:
                self.checked += 1
                if delta:
                    self.nonzero += 1
                    self.largest = max(self.largest, abs(delta))

        return lhs == rhs

    def ncpolys(self, lhs: NCPoly, rhs: NCPoly) -> bool:
        if self.s0 is None:
            return lhs == rhs

        keys = set(lhs.keys()) | set(rhs.keys())
        results = [self.scalars(lhs.coefficient(j, k), rhs.coefficient(j, k)) for j, k in sorted(keys)]
        return all(results)

    def series(self, lhs, rhs) -> bool:
        """Two StarSeries, coefficient by coefficient"""
        if self.s0 is None:
            return lhs == rhs
        return all([self.ncpolys(a, b) for a, b in zip(lhs.coeffs, rhs.coeffs)]) and lhs.order == rhs.order

    def operators(self, lhs, rhs) -> bool:
        """Two FockOps on the columns both trust"""
        differences = lhs.differences(rhs)

        if self.s0 is not None:
            for col in range(min(lhs.valid, rhs.valid) + 1):
                mine, theirs = lhs.entries.get(col, {}), rhs.entries.get(col, {})
                for row in set(mine) | set(theirs):
                    for n in range(lhs.order + 1):
                        a = mine[row].coefficient(n) if row in mine else ZERO
                        b = theirs[row].coefficient(n) if row in theirs else ZERO
                        self.scalars(a, b)

        return not differences

    def as_dict(self) -> dict:
        return {
            'checked': self.checked,
            'largest': str(self.largest),
            'nonzero': self.nonzero,
            'poles': self.poles,
            's0': str(self.s0),
        }


def new_output(expectation: str) -> dict:
    return {
        'cases': 0,
        'expectation': expectation,
        'failures': [],
        'pass': False,
        'result': expectation.replace('-holds', '-fails'),
    }


def record(output: dict, ok: bool, case: dict) -> None:
    output['cases'] += 1
    if not ok and len(output['failures']) < MAX_FAILURES:
        output['failures'].append({key: str(value) for key, value in case.items()})
    if not ok:
        output['failed'] = output.get('failed', 0) + 1


def finish(output: dict, tracker: ResidualTracker = None) -> dict:
    failed = output.pop('failed', 0)

    if not failed and output['cases']:
        output['result'] = output['expectation']
        output['pass'] = True

    if tracker is not None and tracker.s0 is not None:
        output['residuals'] = tracker.as_dict()

    output['failed'] = failed
    return output
