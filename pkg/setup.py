"""A setuptools based setup module."""

# Always prefer setuptools over distutils
# To use a consistent encoding
from codecs import open
from os import path

from setuptools import find_packages, setup

here = path.abspath(path.dirname(__file__))

# Get the long description from the relevant file
with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

with open("requirements.txt", "r") as fh:
    requirements = fh.read().splitlines()

with open("requirements_test.txt", "r") as fh:
    test_requirements = fh.read().splitlines()

setup(
    name="negacode",
    version="0.1.0",
    description="Reversible, LCD and BCH negacyclic codes over finite fields of odd characteristic",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
    keywords="coding theory negacyclic codes BCH LCD reversible codes finite fields",
    packages=find_packages(exclude=["contrib", "docs", "tests*"]),
    python_requires=">=3.8",
    install_requires=requirements,
    tests_require=test_requirements,
    entry_points={"console_scripts": ["negacode=negacode.cli:main"]},
)
