#!/usr/bin/env python3

import os

from qdisc import SOURCE_URL, VERSION
from setuptools import setup, find_packages


__dirname = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(__dirname, 'README.md')) as readme:
    README = readme.read()

setup(
    name='qdisc',
    version=VERSION,
    description='qdisc: exact symbolic star products, Berezin symbols and U_q sl2 checks on the quantum disc.',
    url=SOURCE_URL,
    long_description=README,
    long_description_content_type='text/markdown',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Framework :: Flask',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3 :: Only',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=find_packages(),
    include_package_data=True,
    package_data={'qdisc': ['conf/qdisc.conf', 'docs/*.md']},
    install_requires=[
        'click>=8.1',
        'ply>=3.11',
        'sympy>=1.12',
    ],
    extras_require={
        'website': ['Flask>=3.0'],
    },
    entry_points={
        'console_scripts': [
            'qdisc=qdisc.cli.main:main',
        ],
    },
    zip_safe=False,
)
