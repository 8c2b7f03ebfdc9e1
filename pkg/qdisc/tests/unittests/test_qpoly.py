from unittest import TestCase

import random

from qdisc.algebra.qpoly import (NCPoly, TensorPoly, WindowedSeries, format_ncpoly, involution, monomial_word,
                                 nc_mul, nc_mul_left_z_power, nc_mul_right_zstar_power, ncpoly_sum, normal_order,
                                 swap_block)
from qdisc.algebra.scalar import ONE, TSeries, q_power
from qdisc.errors import SeriesOrderError, WindowError
from qdisc.tests.utils import mono, zs_z
from qdisc.verifier.utils import monomials_by_exponent


class TestNCPoly(TestCase):
    def test_zero_coefficients_are_dropped(self):
        z = NCPoly.z()

        self.assertEqual(NCPoly.zero(), z - z)
        self.assertFalse(z - z)
        self.assertEqual(0, len(NCPoly.scalar(0)))
        self.assertEqual(-1, NCPoly.zero().degree())

    def test_monomial(self):
        f = mono(2, 3, q_power(1))

        self.assertEqual(5, f.degree())
        self.assertEqual(q_power(1), f.coefficient(2, 3))
        self.assertFalse(f.coefficient(3, 2))
        self.assertFalse(f.is_scalar())
        self.assertTrue(NCPoly.scalar(q_power(1)).is_scalar())

        with self.assertRaises(ValueError):
            NCPoly.monomial(-1, 0)

    def test_commutation_relation(self):
        self.assertEqual(zs_z(), nc_mul(NCPoly.zs(), NCPoly.z()))
        self.assertEqual(zs_z(), NCPoly.zs() * NCPoly.z())

        # z z* is already normal-ordered
        self.assertEqual(mono(1, 1), nc_mul(NCPoly.z(), NCPoly.zs()))

    def test_swap_block(self):
        self.assertEqual({(2, 1): q_power(4), (1, 0): ONE - q_power(4)}, swap_block(1, 2))
        self.assertEqual({(3, 0): ONE}, swap_block(0, 3))
        self.assertEqual({(0, 2): ONE}, swap_block(2, 0))

        # z*^2 z^2
        expected = {
            (2, 2): q_power(8),
            (1, 1): q_power(4) * (ONE - q_power(4)) + q_power(2) * (ONE - q_power(4)),
            (0, 0): (ONE - q_power(4)) * (ONE - q_power(2)),
        }
        self.assertEqual(expected, swap_block(2, 2))

    def test_normal_order(self):
        self.assertEqual(zs_z(), normal_order(('zs', 'z')))
        self.assertEqual(NCPoly.one(), normal_order(()))
        self.assertEqual(mono(2, 3), normal_order(monomial_word(2, 3)))

        for b in range(4):
            for c in range(4):
                self.assertEqual(NCPoly(swap_block(b, c)), normal_order(('zs',) * b + ('z',) * c))

        with self.assertRaises(ValueError):
            normal_order(('z', 'w'))

    def test_associativity(self):
        grid = monomials_by_exponent(2)

        for f in grid:
            for g in grid:
                for h in grid:
                    self.assertEqual(nc_mul(nc_mul(f, g), h), nc_mul(f, nc_mul(g, h)))

    def test_associativity_up_to_exponent_four(self):
        grid = monomials_by_exponent(4)
        rng = random.Random(4)
        triples = [tuple(rng.choice(grid) for _ in range(3)) for _ in range(300)]
        triples.append((mono(4, 4), mono(4, 4), mono(4, 4)))
        triples.append((mono(0, 4), mono(4, 0), mono(0, 4)))

        for f, g, h in triples:
            self.assertEqual(nc_mul(nc_mul(f, g), h), nc_mul(f, nc_mul(g, h)))

    def test_power(self):
        self.assertEqual(NCPoly.one(), NCPoly.zs() ** 0)
        self.assertEqual(mono(0, 3), NCPoly.zs() ** 3)
        self.assertEqual(nc_mul(zs_z(), zs_z()), (NCPoly.zs() * NCPoly.z()) ** 2)

    def test_one_sided_multiplication(self):
        f = zs_z()

        self.assertEqual(nc_mul(mono(2, 0), f), nc_mul_left_z_power(2, f))
        self.assertEqual(nc_mul(f, mono(0, 2)), nc_mul_right_zstar_power(2, f))

    def test_involution(self):
        f = mono(2, 1, q_power(1)) + NCPoly.zs()
        g = zs_z() + mono(0, 2)

        self.assertEqual(mono(1, 2, q_power(1)) + NCPoly.z(), involution(f))
        self.assertEqual(f, involution(involution(f)))
        self.assertEqual(involution(nc_mul(f, g)), nc_mul(involution(g), involution(f)))

    def test_sum_and_scale(self):
        self.assertEqual(mono(1, 0, 3), ncpoly_sum([NCPoly.z()] * 3))
        self.assertEqual(mono(1, 0, q_power(1)), NCPoly.z().scale(q_power(1)))
        self.assertEqual(NCPoly.zero(), NCPoly.z().scale(0))

    def test_hashable(self):
        self.assertEqual(1, len({zs_z(), nc_mul(NCPoly.zs(), NCPoly.z())}))

    def test_format(self):
        self.assertEqual('0', format_ncpoly(NCPoly.zero()))
        self.assertEqual('z^2*zs', format_ncpoly(mono(2, 1)))
        self.assertEqual('-zs', format_ncpoly(mono(0, 1, -1)))
        self.assertEqual('(-s^4 + 1) + s^4*z*zs', format_ncpoly(zs_z()))
        self.assertEqual('-2*zs + z', format_ncpoly(NCPoly.z() - mono(0, 1, 2)))


class TestTensorPoly(TestCase):
    def test_from_pair(self):
        tensor = TensorPoly.from_pair(NCPoly.z() + NCPoly.one(), NCPoly.zs())

        self.assertEqual(TensorPoly({(1, 0, 0, 1): 1, (0, 0, 0, 1): 1}), tensor)
        self.assertEqual(2, len(tensor))

    def test_leg_wise_product(self):
        left = TensorPoly.from_pair(NCPoly.zs(), NCPoly.one())
        right = TensorPoly.from_pair(NCPoly.z(), NCPoly.zs())

        self.assertEqual(TensorPoly.from_pair(zs_z(), NCPoly.zs()), left * right)

    def test_flip_and_involution(self):
        tensor = TensorPoly.from_pair(mono(2, 1), mono(0, 3, q_power(1)))

        self.assertEqual(TensorPoly.from_pair(mono(0, 3, q_power(1)), mono(2, 1)), tensor.flip())
        self.assertEqual(TensorPoly.from_pair(mono(1, 2), mono(3, 0, q_power(1))), tensor.involution())
        self.assertFalse(tensor - tensor)


class TestWindowedSeries(TestCase):
    def test_window_restriction(self):
        series = WindowedSeries.from_ncpoly(mono(3, 0) + NCPoly.z(), 2, 1)

        self.assertEqual(WindowedSeries.from_ncpoly(NCPoly.z(), 2, 1), series)
        self.assertTrue(series.is_known(2, 2))
        self.assertFalse(series.is_known(3, 0))

        with self.assertRaises(WindowError):
            series.get(3, 0)

        with self.assertRaises(WindowError):
            series.restrict(3)

        with self.assertRaises(WindowError):
            WindowedSeries(-1, 1)

    def test_t_coefficients(self):
        series = WindowedSeries.from_ncpoly_coefficients([NCPoly.z(), zs_z()], 2, 1)

        self.assertEqual(NCPoly.z(), series.t_coefficient(0))
        self.assertEqual(zs_z(), series.t_coefficient(1))
        self.assertEqual(TSeries.from_coeffs([1, 0], 1), series.get(1, 0))
        self.assertEqual(TSeries.zero(1), series.get(2, 2))

    def test_shift(self):
        series = WindowedSeries.from_ncpoly(zs_z(), 3, 0)
        expected = WindowedSeries.from_ncpoly(nc_mul_right_zstar_power(1, nc_mul_left_z_power(1, zs_z())), 3, 0)

        self.assertEqual(expected, series.shift(1, 1))

    def test_agreement(self):
        small = WindowedSeries.from_ncpoly(zs_z(), 1, 0)
        large = WindowedSeries.from_ncpoly(zs_z() + mono(2, 2), 2, 0)

        self.assertTrue(small.agrees_with(large))
        self.assertNotEqual(small, large)
        exact = WindowedSeries.from_ncpoly(zs_z(), 2, 0)
        self.assertEqual({(2, 2): TSeries.constant(1, 0)}, large.differences(exact))

        with self.assertRaises(SeriesOrderError):
            small.agrees_with(WindowedSeries(1, 1))
