SOURCE_URL = 'https://github.com/qdisc/qdisc'
VERSION = '0.3.0'
