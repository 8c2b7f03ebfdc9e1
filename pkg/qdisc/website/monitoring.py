from flask import abort, Blueprint, jsonify

from qdisc import SOURCE_URL, VERSION
from qdisc.algebra.qpoly import NCPoly, nc_mul
from qdisc.algebra.scalar import ONE, q_power


monitoring_api = Blueprint('monitoring-api', __name__)


@monitoring_api.route('/__heartbeat__')
def heartbeat():
    # Check the rewriting system on z* z
    expected = NCPoly.monomial(1, 1, q_power(2)) + NCPoly.scalar(ONE - q_power(2))
    try:
        if nc_mul(NCPoly.zs(), NCPoly.z()) != expected:
            abort(500)
    except ArithmeticError:
        abort(500)

    return jsonify({'rewrite': 'OK'})


@monitoring_api.route('/__lbheartbeat__')
def lbheartbeat():
    return ''


@monitoring_api.route('/__version__')
def version():
    return jsonify({'source': SOURCE_URL,
                    'version': VERSION})
