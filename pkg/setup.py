#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

from os.path import dirname, join
from setuptools import (
    find_packages,
    setup,
)

with open(join(dirname(__file__), 'requirements.txt')) as f:
    req = [line.strip() for line in f if line.strip() and not line.startswith('#')]

with open(join(dirname(__file__), 'dgt/VERSION.txt'), 'rb') as f:
    version = f.read().decode('ascii').strip()

setup(
    name='dgt',
    version=version,
    description='Exact difference Galois computations over rational function fields',
    long_description='Hypergeometric solutions of linear difference operators, relation lattices of '
                     'rational functions under the shift, Galois groups of diagonal difference systems, '
                     'and checks of whether a specialization of the parameters keeps the Galois group.',
    long_description_content_type="text/x-rst",
    packages=find_packages(exclude=['tests']),
    license='Apache License v2',
    package_data={'dgt': ['VERSION.txt']},
    install_requires=req,
    extras_require={'test': ['pytest']},
    entry_points={
        'console_scripts': [
            'dgt = dgt.cli:main',
        ],
    },
    zip_safe=False,
    classifiers=[
        'Programming Language :: Python',
        'Operating System :: Microsoft :: Windows',
        'Operating System :: Unix',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
