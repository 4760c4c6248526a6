#!/usr/bin/env python3
"""
🌱 Script de instalación para el CLI de órdenes de Bruhat y zócalos.
"""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

with open("requirements.txt", "r", encoding="utf-8") as fh:
    requirements = [line for line in fh.read().splitlines() if line and not line.startswith("pytest")]

setup(
    name="bruhat-socle-cli",
    version="0.1.0",
    description="CLI para joins en el orden de Bruhat, polinomios KL de la celda penúltima y zócalos de Δ_e/Δ_x.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"src": ["fixtures/*.json", "fixtures/MANIFEST.sha256"]},
    include_package_data=True,
    install_requires=requirements,
    extras_require={"test": ["pytest==8.3.4"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "bruhat-cli=src.cli:main",
        ],
    },
)
