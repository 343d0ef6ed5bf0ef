#!/usr/bin/env python
from setuptools import setup, find_packages
import sys

if sys.platform == 'win32':
    jsonnet = "jsonnetbin==0.17.0"
else:
    jsonnet = "jsonnet==0.17.0"

setup(
    name="agnostic_hexagon",
    version="0.1.0",
    license="GPL",
    description="Agnostic hypothesis tests, their hexagon of oppositions and consistency checks",
    packages=find_packages(),
    install_requires=[
        jsonnet,
        "numpy>=1.21.0",
        "scipy>=1.7.1",
        "networkx>=2.5.1",
        "pyparsing>=3.0.0",
        "tqdm>=4.61.2",
    ],
    extras_require={
        "tests": ["pytest>=6.2.5", "hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["agnostic-hexagon=agnostic_hexagon.cli.main:main"],
    },
    tests_require=["pytest", "hypothesis"],
    zip_safe=False,
)
