from unittest import TestCase
from unittest.mock import patch

from click.testing import CliRunner

import json

from qdisc import VERSION
from qdisc.algebra.qpoly import NCPoly, WindowedSeries
from qdisc.algebra.scalar import ONE, TSeries, q_power
from qdisc.algebra.star import StarSeries
from qdisc.cli.main import EXIT_CHECK_FAILURE, EXIT_PASS, EXIT_USAGE, qdisc_group
from qdisc.cli.printer import series_json, windowed_json


ZS_Z = [[[0, 0], '-s^4 + 1'], [[1, 1], 's^4']]


class TestCommands(TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        result = self.runner.invoke(qdisc_group, list(args), obj={})
        return result, json.loads(result.stdout) if result.stdout.startswith('{') else None

    def test_pk(self):
        result, output = self.invoke('pk', '0')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual({'coefficients': ['1'], 'degree': 0, 'k': 0, 'schema': 1, 'text': '1'}, output)

        result, output = self.invoke('pk', '1')
        self.assertEqual(['1', '-s^4 + 1'], output['coefficients'])

    def test_pk_latex(self):
        result, _ = self.invoke('--latex', 'pk', '1')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertTrue(result.stdout.startswith('p_{1}(x) = 1 + '))

    def test_star(self):
        result, output = self.invoke('star', 'zs', 'z', '--order', '1')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual(1, output['product']['order'])
        self.assertEqual(ZS_Z, output['product']['terms'][0])
        self.assertEqual(2, len(output['product']['terms']))

    def test_ck(self):
        result, output = self.invoke('ck', '0', 'zs', 'z')

        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual('undefined-coefficient', output['error'])

    def test_box(self):
        result, output = self.invoke('box', 'z')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual('left', output['form'])
        self.assertEqual({'terms': [], 'text': '0'}, output['value'])

        result, output = self.invoke('box', '--right', 'z*zs')
        self.assertEqual('right', output['form'])
        self.assertEqual({'coefficient': '1', 'j': 0, 'k': 0}, output['value']['terms'][0])

    def test_d(self):
        result, output = self.invoke('d', 'z*zs', '--variable', 'zs')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual([{'coefficient': '1/s^4', 'j': 1, 'k': 0}], output['value']['terms'])

    def test_berezin(self):
        result, output = self.invoke('berezin', '1', '1', '--window', '3', '--cutoff', '8', '--order', '1')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertFalse(output['symbol']['boundary'])
        self.assertEqual(3, output['symbol']['window'])
        self.assertNotIn('warning', output['symbol'])
        self.assertEqual(ZS_Z, [[key, coeffs[0]] for key, coeffs in output['symbol']['terms'][:2]])
        self.assertTrue(all(len(coeffs) == 2 for _, coeffs in output['symbol']['terms']))

    def test_berezin_window_too_wide(self):
        result, output = self.invoke('berezin', '1', '1', '--window', '8', '--cutoff', '8', '--order', '1')

        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual('window-too-large', output['error'])

    def test_berezin_expand(self):
        result, output = self.invoke('berezin-expand', '1', '1', '--terms', '1')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual(ZS_Z, output['expansion']['terms'][0])

    def test_eval(self):
        result, output = self.invoke('eval', 'q*z', '--s0', '7/10')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual('7/10', output['s0'])
        self.assertEqual([{'coefficient': '49/100', 'j': 1, 'k': 0}], output['value']['terms'])

    def test_scalar(self):
        result, output = self.invoke('scalar', '1 - q^2', '--s0', '7/10')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual('-s^4 + 1', output['value'])
        self.assertEqual('7599/10000', output['at_s0'])

        result, output = self.invoke('scalar', 'z')
        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual('not-a-scalar', output['error'])

        result, output = self.invoke('scalar', '1/(q - 1)', '--s0', '1')
        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual('pole', output['error'])

    def test_verify(self):
        with patch('qdisc.conf.ASSOCIATIVITY_EXPONENT', 1):
            result, output = self.invoke('verify', 'rewrite', '--t-order', '1', '--max-degree', '1', '--samples', '3',
                                         '--cutoff', '8', '--window', '3')

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertEqual(1, output['schema'])
        self.assertTrue(output['suite']['pass'])
        self.assertEqual(['rewrite'], output['suite']['names'])

    def test_verify_failure(self):
        result, output = self.invoke('--log-level', 'critical', 'verify', 'oracle', '--cutoff', '2', '--window', '3',
                                     '--t-order', '1', '--max-degree', '0', '--samples', '1')

        self.assertEqual(EXIT_CHECK_FAILURE, result.exit_code)
        self.assertFalse(output['suite']['pass'])

    def test_parse_errors(self):
        result, output = self.invoke('box', 'z +')

        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual({'error': 'parse-error', 'position': 3, 'schema': 1}, {key: value for key, value in
                                                                               output.items() if key != 'text'})

        result, output = self.invoke('star', 'z', 'z^-2')
        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual('negative-exponent', output['error'])

    def test_invalid_argument(self):
        result, output = self.invoke('eval', 'z', '--s0', 'x')

        self.assertEqual(EXIT_USAGE, result.exit_code)
        self.assertEqual('invalid-argument', output['error'])

    def test_version(self):
        result = self.runner.invoke(qdisc_group, ['--version'])

        self.assertEqual(EXIT_PASS, result.exit_code)
        self.assertIn(VERSION, result.stdout)


class TestPrinter(TestCase):
    def test_series_layout(self):
        psi = StarSeries(1, (NCPoly.z(),))

        self.assertEqual({'order': 1, 'terms': [[[[1, 0], '1']], []]}, series_json(psi))

    def test_windowed_layout(self):
        terms = {(0, 1): TSeries.from_coeffs([ONE, q_power(1)], 1), (5, 0): TSeries.from_coeffs([ONE, ONE], 1)}
        output = windowed_json(WindowedSeries(2, 1, terms, boundary=True))

        self.assertEqual(2, output['window'])
        self.assertEqual([[[0, 1], ['1', 's^2']]], output['terms'])
        self.assertIn('warning', output)
