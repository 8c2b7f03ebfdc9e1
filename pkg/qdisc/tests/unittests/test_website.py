from unittest import TestCase

from qdisc import VERSION
from qdisc.website.decorators import SECURITY_HEADERS
from qdisc.website.main import app


class TestApi(TestCase):
    def setUp(self):
        self.client = app.test_client()

    def test_pk(self):
        response = self.client.get('/api/v1/pk?k=1')

        self.assertEqual(200, response.status_code)
        self.assertEqual({'coefficients': ['1', '-s^4 + 1'], 'degree': 1, 'k': 1, 'schema': 1,
                          'text': '1 + (-s^4 + 1)*x'}, response.get_json())

    def test_star(self):
        response = self.client.get('/api/v1/star', query_string={'f1': 'zs', 'f2': 'z', 'order': 1})
        body = response.get_json()

        self.assertEqual(200, response.status_code)
        self.assertEqual([[[0, 0], '-s^4 + 1'], [[1, 1], 's^4']], body['product']['terms'][0])

    def test_box(self):
        body = self.client.get('/api/v1/box', query_string={'f': 'z*zs', 'right': 'true'}).get_json()

        self.assertEqual('right', body['form'])
        self.assertEqual(3, len(body['value']['terms']))

    def test_berezin(self):
        response = self.client.get('/api/v1/berezin', query_string={'j': 0, 'k': 1, 'window': 2, 'cutoff': 6,
                                                                    'order': 1})
        body = response.get_json()

        self.assertEqual(200, response.status_code)
        self.assertEqual([[[1, 0], ['1', '0']]], body['symbol']['terms'])

    def test_errors(self):
        response = self.client.get('/api/v1/pk')
        self.assertEqual(400, response.status_code)
        self.assertEqual('invalid-argument', response.get_json()['error'])

        response = self.client.get('/api/v1/pk?k=65')
        self.assertEqual(400, response.status_code)

        response = self.client.get('/api/v1/ck', query_string={'k': 0, 'f1': 'zs', 'f2': 'z'})
        self.assertEqual(400, response.status_code)
        self.assertEqual('undefined-coefficient', response.get_json()['error'])

        response = self.client.get('/api/v1/star', query_string={'f1': 'z +', 'f2': 'z'})
        self.assertEqual(400, response.status_code)
        self.assertEqual({'error': 'parse-error', 'position': 3, 'schema': 1},
                         {key: value for key, value in response.get_json().items() if key != 'text'})

        response = self.client.get('/api/v1/verify?suite=nope')
        self.assertEqual(400, response.status_code)
        self.assertEqual('invalid-suite', response.get_json()['error'])

    def test_limits(self):
        response = self.client.get('/api/v1/berezin', query_string={'j': 10 ** 7, 'k': 0})
        self.assertEqual(400, response.status_code)
        self.assertEqual('invalid-argument', response.get_json()['error'])

        response = self.client.get('/api/v1/box', query_string={'f': 'z^1000000'})
        self.assertEqual(400, response.status_code)
        self.assertEqual('exponent-too-large', response.get_json()['error'])

        response = self.client.get('/api/v1/verify?suite=all')
        self.assertEqual(400, response.status_code)
        self.assertEqual('invalid-suite', response.get_json()['error'])

    def test_headers(self):
        response = self.client.get('/api/v1/pk?k=0')

        self.assertEqual('*', response.headers['Access-Control-Allow-Origin'])
        self.assertEqual('nosniff', response.headers['X-Content-Type-Options'])
        self.assertEqual('DENY', response.headers['X-Frame-Options'])

    def test_options(self):
        response = self.client.options('/api/v1/pk')

        self.assertEqual(200, response.status_code)
        self.assertEqual('*', response.headers['Access-Control-Allow-Origin'])

    def test_cors_stays_per_route(self):
        self.client.get('/api/v1/pk?k=0')
        response = self.client.get('/')

        self.assertNotIn('Access-Control-Allow-Origin', response.headers)
        self.assertNotIn('Access-Control-Allow-Origin', SECURITY_HEADERS)


class TestMonitoring(TestCase):
    def setUp(self):
        self.client = app.test_client()

    def test_heartbeat(self):
        response = self.client.get('/__heartbeat__')

        self.assertEqual(200, response.status_code)
        self.assertEqual({'rewrite': 'OK'}, response.get_json())

    def test_lbheartbeat(self):
        self.assertEqual(200, self.client.get('/__lbheartbeat__').status_code)

    def test_version(self):
        self.assertEqual(VERSION, self.client.get('/__version__').get_json()['version'])

    def test_index(self):
        response = self.client.get('/')

        self.assertEqual(200, response.status_code)
        self.assertEqual("default-src 'none'; base-uri 'none'; frame-ancestors 'none'",
                         response.headers['Content-Security-Policy'])
