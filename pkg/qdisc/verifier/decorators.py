from functools import wraps

from qdisc.verifier.results import get_result_description


def verified_law(suite: str, anchor: str):
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            law_result = func(*args, **kwargs)
            law_result['name'] = func.__name__.replace('_', '-')  # add the law name
            law_result['suite'] = suite
            law_result['anchor'] = anchor  # the identity being checked, as written in LaTeX
            law_result['description'] = get_result_description(law_result['result'])

            return law_result

        return wrapper

    return decorator
