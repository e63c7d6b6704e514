# SPDX-FileCopyrightText: 2017 Scott Shawcroft, written for Adafruit Industries
# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT

"""A setuptools based setup module.

See:
https://packaging.python.org/en/latest/distributing.html
"""

from setuptools import setup

# To use a consistent encoding
from codecs import open
from os import path

here = path.abspath(path.dirname(__file__))

# Get the long description from the README file
with open(path.join(here, "README.rst"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="biffobear-hyperboloid",
    use_scm_version=True,
    setup_requires=["setuptools_scm"],
    description="Hyperbolic trigonometry in the hyperboloid model, with a "
    "brute-force verification harness.",
    long_description=long_description,
    long_description_content_type="text/x-rst",
    url="https://github.com/BiffoBear/Biffobear_Hyperboloid.git",
    author="Martin Stephens",
    author_email="",
    python_requires=">=3.7",
    install_requires=["numpy"],
    extras_require={"test": ["pytest", "pytest-mock", "hypothesis"]},
    license="MIT",
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
    ],
    keywords="hyperbolic geometry hyperboloid minkowski lorentz horoball "
    "trigonometry truncated tetrahedron",
    packages=["biffobear_hyperboloid"],
    entry_points={
        "console_scripts": ["hyperboloid-trig=biffobear_hyperboloid.cli:main"],
    },
)
