# Copyright IRT Antoine de Saint Exupéry et Université Paul Sabatier Toulouse III - All
# rights reserved. DEEL is a research program operated by IVADO, IRT Saint Exupéry,
# CRIAQ and ANITI - https://www.deel.ai/
# =====================================================================================
import setuptools
from setuptools import setup

with open("README.md", encoding="utf-8") as fh:
    README = fh.read()

setup(
    name="twomode",
    version="0.1.0",
    description="Nonclassicality and entanglement of two-mode Gaussian states",
    long_description=README,
    long_description_content_type="text/markdown",
    author="DEEL Core Team",
    license="MIT",
    install_requires=['tensorflow >=2.7.0, <2.16.0', 'numpy', 'scipy >=1.6', 'joblib'],
    extras_require={
        "tests": ["pytest", "pytest-cov", "hypothesis", "pylint"],
        "docs": ["mkdocs", "mkdocs-material", "numkdoc"],
    },
    packages=setuptools.find_namespace_packages(include=["deel.*"]),
    entry_points={"console_scripts": ["twomode=deel.twomode.cli:main"]},
    python_requires=">=3.8",
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Physics",
        "Operating System :: OS Independent",
    ],
)
