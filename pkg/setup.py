#!/usr/bin/env python

# autosieve - large sieve and zero density toolkit
# Copyright (C) 2024 autosieve contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

from setuptools import find_packages, setup

install_packages = [
    "numpy",
    "scipy",
    "pyyaml",
    "parsimonious",
    "pluginbase",
]

setup(
    author="autosieve contributors",
    name="autosieve",
    long_description="Large sieve and zero density toolkit for L-functions",
    version="0.0",
    packages=find_packages(),
    entry_points={"console_scripts": ["autosieve = autosieve.__main__:main"]},
    package_dir={"autosieve": "autosieve"},
    package_data={"autosieve": ["data/*"]},
    install_requires=install_packages,
    python_requires=">=3.7",
    extras_require={
        "develop": [
            "docstring_parser",
            "hypothesis",
            "mpmath",
            "mypy",
            "pytest",
        ]
    },
    classifiers=[
        "Environment :: Console",
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Natural Language :: English",
        "Operating System :: POSIX :: Linux",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
