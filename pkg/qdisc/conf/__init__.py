from os import environ

import configparser
import logging
import os.path
import sys


# Read in the default config file, then let /etc/qdisc.conf and ~/.qdisc.conf override it
__dirname = os.path.abspath(os.path.dirname(__file__))
_config_parser = configparser.ConfigParser()
_config_parser.read_file(open(os.path.join(__dirname, 'qdisc.conf')))                  # default values
_config_parser.read(['/etc/qdisc.conf', os.path.expanduser('~/.qdisc.conf')])          # overridden values


# Environment first, then the config files; None if it's in neither
def __conf(section, param, type=None):
    value = environ.get('QDISC_{section}_{param}'.format(section=section.upper(), param=param.upper()))

    try:
        if value is not None:
            if type == bool:
                return value.lower() in ('1', 'yes', 'true', 'on')
            return type(value) if type else value

        if type == str or type is None:
            return _config_parser.get(section, param)
        elif type == int:
            return _config_parser.getint(section, param)
        elif type == bool:
            return _config_parser.getboolean(section, param)
        else:
            return None
    except (KeyError, configparser.NoSectionError, configparser.NoOptionError):
        return None
    except ValueError:
        print('Error with key {0} in section {1}'.format(param, section), file=sys.stderr)
        sys.exit(1)


DEVELOPMENT_MODE = bool(__conf('global', 'development', bool))
LOG_LEVEL = (__conf('global', 'log_level') or 'WARNING').upper()

# Algebra defaults
SERIES_ORDER = __conf('algebra', 'series_order', int)
MAX_EXPONENT = __conf('algebra', 'max_exponent', int)

# Fock representation defaults
FOCK_CUTOFF = __conf('fock', 'cutoff', int)
SYMBOL_WINDOW = __conf('fock', 'window', int)

# Verifier defaults
ASSOCIATIVITY_EXPONENT = __conf('verifier', 'associativity_exponent', int)
MAX_DEGREE = __conf('verifier', 'max_degree', int)
NUMERIC_S0 = __conf('verifier', 's0')
VERIFIER_SAMPLES = __conf('verifier', 'samples', int)
VERIFIER_SEED = __conf('verifier', 'seed', int)

# API configuration
API_PORT = __conf('api', 'port', int)
API_PROPAGATE_EXCEPTIONS = bool(__conf('api', 'propagate_exceptions', bool))


def configure_logging(level: str = None) -> logging.Logger:
    """Attach the stderr handler to the package logger, once."""
    logger = logging.getLogger('qdisc')
    logger.setLevel(level or LOG_LEVEL)

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('[%(asctime)s] %(levelname)s: %(message)s', '%Y-%m-%d %H:%M:%S'))
        logger.addHandler(handler)

    return logger
