#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

setup(
    name='metamap',
    author='metamap developers',
    packages=find_packages(exclude=['tests', 'docs', 'examples', 'examples.*']),
    version=open('VERSION').read().strip(),
    description = 'Metastability of perturbed piecewise expanding interval maps via Ulam discretizations.',
    license='GPL-3',
    platforms='Any',
    install_requires=[
        'numpy',
        'scipy',
        'h5py',
        'matplotlib',
        'jsonschema',
    ],
    extras_require={
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['metamap=metamap.exec_metamap:main'],
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
