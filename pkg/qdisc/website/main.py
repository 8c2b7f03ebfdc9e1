from flask import Flask

from qdisc.conf import API_PORT, API_PROPAGATE_EXCEPTIONS, DEVELOPMENT_MODE, configure_logging
from qdisc.website import add_response_headers
from qdisc.website.api import api
from qdisc.website.monitoring import monitoring_api


# Register the application with flask
app = Flask('qdisc')
app.config['PROPAGATE_EXCEPTIONS'] = API_PROPAGATE_EXCEPTIONS
app.register_blueprint(api)
app.register_blueprint(monitoring_api)


@app.route('/')
@add_response_headers()
def main() -> str:
    return 'qdisc: star products on the quantum disc'


if __name__ == '__main__':
    configure_logging()
    app.run(debug=DEVELOPMENT_MODE,
            port=API_PORT)
