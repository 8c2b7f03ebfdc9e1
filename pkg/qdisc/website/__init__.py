from qdisc.website.decorators import add_response_headers, sanitized_api_response

__all__ = ['add_response_headers',
           'sanitized_api_response']
