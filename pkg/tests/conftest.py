#!/usr/bin/env python3
"""
🌱 Fixtures compartidas: sistemas pequeños, sus grupos enumerados y tablas KL completas.
"""

import pytest

from src.core.coxeter import build_system, enumerate_group
from src.core.hecke import kl_table
from src.core.socle import SocleContext


@pytest.fixture(scope="session")
def systems():
    return {tag: build_system(tag) for tag in ("A2", "A3", "B2", "B3", "D4", "F4", "G2")}


@pytest.fixture(scope="session")
def kl_tables(systems):
    return {tag: kl_table(enumerate_group(systems[tag])) for tag in ("A2", "A3", "B2", "B3", "G2")}


@pytest.fixture(scope="session")
def socle_contexts(systems):
    return {tag: SocleContext(systems[tag]) for tag in ("B3", "D4", "G2", "F4")}


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """Directorio de caché aislado por prueba."""
    directory = tmp_path / "cache"
    monkeypatch.setenv("BRUHAT_CACHE_DIR", str(directory))
    return str(directory)
