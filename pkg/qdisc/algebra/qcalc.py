"""
First order differential calculus over Pol(C)_q.

Differentials commute past generators with

    dz z = q^2 z dz        dz z* = q^-2 z* dz
    dz* z = q^2 z dz*      dz* z* = q^-2 z* dz*

so moving either differential one letter to the right costs q^2 for a z and q^-2 for a z*, and moving
it one letter to the left costs the inverse. The partial derivatives are read off after every
differential of a Leibniz expansion has been pushed to the requested side.
"""

from functools import lru_cache
from typing import Sequence, Tuple

from qdisc.algebra.qpoly import (NCPoly, TensorPoly, Z, ZS, monomial_word, nc_mul, nc_mul_left_z_power,
                                 nc_mul_right_zstar_power, ncpoly_sum, normal_order, tensor_sum)
from qdisc.algebra.scalar import ONE, q_power, qnumber


LEFT = 'left'
RIGHT = 'right'
SIDES = (LEFT, RIGHT)

ZSTAR = 'zstar'
VARIABLES = (Z, ZSTAR)

# q^-2 (1 (x) 1 - (1 + q^-2) z* (x) z + q^-2 z*^2 (x) z^2), as (power i, coefficient of z*^i (x) z^i)
MIDDLE_FACTOR = (
    (0, q_power(-2)),
    (1, -q_power(-2) * (ONE + q_power(-2))),
    (2, q_power(-4)),
)


def _check_side(side: str, variable: str = Z):
    if side not in SIDES:
        raise ValueError('side must be one of {0}, got {1!r}'.format(SIDES, side))
    if variable not in VARIABLES:
        raise ValueError('variable must be one of {0}, got {1!r}'.format(VARIABLES, variable))


def _passing_factor(letter: str, side: str):
    if side == RIGHT:
        return q_power(2) if letter == Z else q_power(-2)
    return q_power(-2) if letter == Z else q_power(2)


def d_word(word: Sequence[str], side: str) -> Tuple[NCPoly, NCPoly]:
    """
    Expand d(w) for an arbitrary word with the Leibniz rule and move each differential to `side`.
    Returns the coefficients of (dz, dz*), normal-ordered.
    """
    _check_side(side)

    word = tuple(word)
    parts = {Z: [], ZS: []}

    for i, letter in enumerate(word):
        passed = word[i + 1:] if side == RIGHT else word[:i]

        coeff = ONE
        for other in passed:
            coeff *= _passing_factor(other, side)

        parts[letter].append(normal_order(word[:i] + word[i + 1:], coeff))

    return ncpoly_sum(parts[Z]), ncpoly_sum(parts[ZS])


@lru_cache(maxsize=None)
def _monomial_differential(j: int, k: int, side: str) -> Tuple[NCPoly, NCPoly]:
    return d_word(monomial_word(j, k), side)


def partial_closed_form(j: int, k: int, side: str, variable: str) -> NCPoly:
    """q-number formula for a partial derivative of z^j z*^k"""
    _check_side(side, variable)

    if variable == Z:
        if j == 0:
            return NCPoly.zero()
        if side == RIGHT:
            return NCPoly.monomial(j - 1, k, q_power(-2 * k) * qnumber(j, 2))
        return NCPoly.monomial(j - 1, k, qnumber(j, -2))

    if k == 0:
        return NCPoly.zero()
    if side == RIGHT:
        return NCPoly.monomial(j, k - 1, qnumber(k, -2))
    return NCPoly.monomial(j, k - 1, q_power(-2 * j) * qnumber(k, 2))


def d_partial(f: NCPoly, side: str, variable: str) -> NCPoly:
    _check_side(side, variable)

    index = 0 if variable == Z else 1
    return ncpoly_sum(_monomial_differential(j, k, side)[index].scale(c) for (j, k), c in f.items())


def grading_twist(f: NCPoly, power: int) -> NCPoly:
    """z^j z*^k -> q^(power (j - k)) z^j z*^k"""
    return NCPoly({(j, k): c * q_power(power * (j - k)) for (j, k), c in f.items()})


def leibniz_partial(f: NCPoly, g: NCPoly, side: str, variable: str) -> NCPoly:
    """
    The partial derivative of fg assembled from d(fg) = df g + f dg.

    Pushing a differential through g to the right multiplies by q^(2(j - k)) on z^j z*^k; pushing it
    through f to the left multiplies by q^(-2(j - k)).
    """
    _check_side(side, variable)

    if side == RIGHT:
        return nc_mul(d_partial(f, side, variable), grading_twist(g, 2)) + nc_mul(f, d_partial(g, side, variable))
    return nc_mul(d_partial(f, side, variable), g) + nc_mul(grading_twist(f, -2), d_partial(g, side, variable))


def one_minus_w_squared() -> NCPoly:
    one_minus_w = NCPoly.one() - NCPoly.monomial(1, 1)
    return nc_mul(one_minus_w, one_minus_w)


def box(f: NCPoly) -> NCPoly:
    """(1 - z z*)^2 d(l)/dz* d(l)f/dz"""
    inner = d_partial(f, LEFT, Z)
    return nc_mul(one_minus_w_squared(), d_partial(inner, LEFT, ZSTAR))


def box_right(f: NCPoly) -> NCPoly:
    """q^2 d(r)/dz* d(r)f/dz (1 - z z*)^2, equal to box(f)"""
    inner = d_partial(f, RIGHT, Z)
    return nc_mul(d_partial(inner, RIGHT, ZSTAR), one_minus_w_squared()).scale(q_power(2))


def box_tilde(tensor: TensorPoly) -> TensorPoly:
    """
    (d(r)f1/dz* (x) 1) . MIDDLE_FACTOR . (1 (x) d(l)f2/dz), with the legs multiplied separately.

    Each middle term is z*^i (x) z^i, so the left leg only grows on the right by z*^i and the right
    leg only on the left by z^i; both stay normal-ordered.
    """
    terms = []

    for c, f1, f2 in tensor.legs():
        left = d_partial(f1, RIGHT, ZSTAR)
        right = d_partial(f2, LEFT, Z)
        if not left or not right:
            continue

        for i, coeff in MIDDLE_FACTOR:
            terms.append(TensorPoly.from_pair(nc_mul_right_zstar_power(i, left),
                                              nc_mul_left_z_power(i, right)).scale(c * coeff))

    return tensor_sum(terms)


def m0(tensor: TensorPoly) -> NCPoly:
    return ncpoly_sum(nc_mul(f1, f2).scale(c) for c, f1, f2 in tensor.legs())


def tensor_involution(tensor: TensorPoly) -> TensorPoly:
    """f1 (x) f2 -> f2* (x) f1*, the flip composed with * on each leg; m0 turns it into *"""
    return tensor.involution().flip()
