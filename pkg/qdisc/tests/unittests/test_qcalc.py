from unittest import TestCase

from qdisc.algebra.qcalc import (LEFT, RIGHT, SIDES, VARIABLES, ZSTAR, box, box_right, box_tilde, d_partial, d_word,
                                 grading_twist, leibniz_partial, m0, one_minus_w_squared, partial_closed_form,
                                 tensor_involution)
from qdisc.algebra.qpoly import NCPoly, TensorPoly, Z, involution, nc_mul
from qdisc.algebra.scalar import ONE, q_power, qnumber
from qdisc.tests.utils import mono, one_minus_w_squared_expanded, zs_z


class TestPartialDerivatives(TestCase):
    def test_generators(self):
        for side in SIDES:
            self.assertEqual(NCPoly.one(), d_partial(NCPoly.z(), side, Z))
            self.assertEqual(NCPoly.one(), d_partial(NCPoly.zs(), side, ZSTAR))
            self.assertFalse(d_partial(NCPoly.z(), side, ZSTAR))
            self.assertFalse(d_partial(NCPoly.one(), side, Z))

    def test_z_squared(self):
        self.assertEqual(mono(1, 0, qnumber(2, -2)), d_partial(mono(2, 0), LEFT, Z))
        self.assertEqual(mono(1, 0, qnumber(2)), d_partial(mono(2, 0), RIGHT, Z))

    def test_mixed_monomial(self):
        # dz* has to pass z on its way to the left
        self.assertEqual(mono(1, 0, q_power(-2)), d_partial(mono(1, 1), LEFT, ZSTAR))
        self.assertEqual(mono(0, 1, q_power(-2)), d_partial(mono(1, 1), RIGHT, Z))
        self.assertEqual(NCPoly.zs(), d_partial(mono(1, 1), LEFT, Z))

    def test_d_word(self):
        dz, dzs = d_word(('zs', 'z'), LEFT)

        self.assertEqual(mono(0, 1, q_power(2)), dz)
        self.assertEqual(NCPoly.z(), dzs)

    def test_closed_forms(self):
        for j in range(4):
            for k in range(4 - j):
                for side in SIDES:
                    for variable in VARIABLES:
                        self.assertEqual(partial_closed_form(j, k, side, variable),
                                         d_partial(mono(j, k), side, variable))

    def test_leibniz(self):
        f, g = zs_z(), NCPoly.z() + mono(0, 2)

        for side in SIDES:
            for variable in VARIABLES:
                self.assertEqual(d_partial(nc_mul(f, g), side, variable), leibniz_partial(f, g, side, variable))

    def test_grading_twist(self):
        self.assertEqual(mono(2, 1, q_power(2)) + mono(1, 1), grading_twist(mono(2, 1) + mono(1, 1), 2))

    def test_bad_side(self):
        with self.assertRaises(ValueError):
            d_partial(NCPoly.z(), 'middle', Z)

        with self.assertRaises(ValueError):
            d_partial(NCPoly.z(), LEFT, 'w')

        with self.assertRaises(ValueError):
            d_word(('z',), 'middle')


class TestBox(TestCase):
    def test_one_minus_w_squared(self):
        self.assertEqual(one_minus_w_squared_expanded(), one_minus_w_squared())

    def test_values(self):
        self.assertEqual(one_minus_w_squared_expanded(), box(mono(1, 1)))
        self.assertEqual(one_minus_w_squared_expanded().scale(q_power(2)), box(zs_z()))

        for f in (NCPoly.one(), NCPoly.z(), NCPoly.zs(), mono(3, 0)):
            self.assertFalse(box(f))

    def test_two_forms(self):
        for f in (mono(1, 1), zs_z(), mono(2, 1), mono(1, 2) + mono(2, 2)):
            self.assertEqual(box(f), box_right(f))


class TestBoxTilde(TestCase):
    def test_factorization(self):
        tensor = TensorPoly.from_pair(NCPoly.zs(), NCPoly.z())

        self.assertEqual(one_minus_w_squared_expanded().scale(q_power(2)), m0(box_tilde(tensor)))

    def test_holomorphic_legs(self):
        self.assertFalse(box_tilde(TensorPoly.from_pair(mono(2, 0), zs_z())))
        self.assertFalse(box_tilde(TensorPoly.from_pair(zs_z(), mono(0, 2))))

    def test_m0(self):
        tensor = TensorPoly.from_pair(NCPoly.zs(), NCPoly.z()).scale(ONE + ONE)

        self.assertEqual(zs_z().scale(2), m0(tensor))

    def test_tensor_involution(self):
        tensor = TensorPoly.from_pair(mono(2, 0), mono(0, 1, q_power(1)))

        self.assertEqual(TensorPoly.from_pair(mono(1, 0, q_power(1)), mono(0, 2)), tensor_involution(tensor))
        self.assertEqual(involution(m0(tensor)), m0(tensor_involution(tensor)))
