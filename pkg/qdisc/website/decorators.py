from flask import jsonify, make_response, request
from functools import wraps

from qdisc.errors import QDiscError


SCHEMA = 1

SECURITY_HEADERS = {
    'Content-Security-Policy': "default-src 'none'; base-uri 'none'; frame-ancestors 'none'",
    'Referrer-Policy': 'no-referrer',
    'Strict-Transport-Security': 'max-age=63072000',
    'X-Content-Type-Options': 'nosniff',
    'X-Frame-Options': 'DENY',
}


def add_response_headers(headers: dict = None, cors: bool = False):
    """
    Decorator for routes: every response gets the security headers, any extra `headers`, and with
    `cors` the CORS headers for the methods of the matched rule. The header set is built per request.
    """
    fixed = dict(SECURITY_HEADERS)
    fixed.update(headers or {})

    def decorator(fn):
        @wraps(fn)
        def wrapper(*args, **kwargs):
            # OPTIONS is answered without running the route
            if request.method == 'OPTIONS':
                resp = make_response()
            else:
                resp = make_response(fn(*args, **kwargs))

            response_headers = dict(fixed)
            if cors:
                response_headers['Access-Control-Allow-Origin'] = '*'
                response_headers['Access-Control-Allow-Methods'] = ', '.join(sorted(request.url_rule.methods))
                response_headers['Access-Control-Max-Age'] = '86400'

            for header, value in response_headers.items():
                resp.headers[header] = value
            return resp
        return wrapper

    return decorator


def sanitized_api_response(fn):
    """Turns the returned dict into a schema 1 JSON body; errors become {'error': ..., 'text': ...} with a 400"""
    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            output = fn(*args, **kwargs)
        except QDiscError as e:
            output = e.as_dict()
        except ValueError as e:
            output = {'error': 'invalid-argument', 'text': str(e)}

        output = dict(output)
        output['schema'] = SCHEMA

        # Drop empty optional fields
        output = {key: value for key, value in output.items() if value is not None}

        return jsonify(output), 400 if 'error' in output else 200
    return wrapper
