#!/usr/bin/env python3
"""
🌱 Carga de datos transcritos (tablas, figuras, ejemplos) verificando el manifiesto sha256.
"""

import json
import os
from functools import lru_cache
from typing import Dict, List, Optional

from src.utils.config import (
    EXAMPLES_FIXTURE,
    FIGURE_FIXTURES,
    FIXTURE_FORMAT_VERSION,
    FIXTURE_MANIFEST,
    FIXTURES_DIR,
    KL_TABLE_FIXTURES,
    SOCLE_FIXTURES,
)
from src.utils.errors import FixtureIntegrityError, PreconditionError
from src.utils.helpers import sha256_of_file


def read_manifest(fixtures_dir: str = FIXTURES_DIR) -> Dict[str, str]:
    """Lee MANIFEST.sha256 en el formato de `sha256sum`: "<hash>  <archivo>"."""
    path = os.path.join(fixtures_dir, FIXTURE_MANIFEST)
    if not os.path.exists(path):
        raise FixtureIntegrityError(f"No se encuentra el manifiesto {path}")
    digests = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            digest, _, name = line.partition(" ")
            digests[name.strip().lstrip("*")] = digest
    return digests


def verify_manifest(fixtures_dir: str = FIXTURES_DIR) -> List[str]:
    """Lista de discrepancias entre el manifiesto y los ficheros presentes."""
    problems = []
    for name, digest in sorted(read_manifest(fixtures_dir).items()):
        path = os.path.join(fixtures_dir, name)
        if not os.path.exists(path):
            problems.append(f"{name}: no existe")
        elif sha256_of_file(path) != digest:
            problems.append(f"{name}: sha256 no coincide")
    return problems


@lru_cache(maxsize=32)
def load_fixture(file_name: str, fixtures_dir: str = FIXTURES_DIR) -> dict:
    """Carga un fichero de datos tras comprobar su hash y su format_version."""
    digests = read_manifest(fixtures_dir)
    if file_name not in digests:
        raise FixtureIntegrityError(f"{file_name} no figura en el manifiesto")
    path = os.path.join(fixtures_dir, file_name)
    if not os.path.exists(path):
        raise FixtureIntegrityError(f"No se encuentra {path}")
    if sha256_of_file(path) != digests[file_name]:
        raise FixtureIntegrityError(f"El sha256 de {file_name} no coincide con el manifiesto")
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if data.get("format_version") != FIXTURE_FORMAT_VERSION:
        raise FixtureIntegrityError(
            f"{file_name}: format_version {data.get('format_version')} ≠ {FIXTURE_FORMAT_VERSION}"
        )
    return data


def _by_type(registry: Dict[str, str], tag: str, what: str) -> dict:
    if tag not in registry:
        raise PreconditionError(f"No hay {what} transcrita para {tag}")
    return load_fixture(registry[tag])


def kl_table_fixture(tag: str) -> dict:
    return _by_type(KL_TABLE_FIXTURES, tag, "tabla de polinomios")


def figure_fixture(tag: str) -> dict:
    return _by_type(FIGURE_FIXTURES, tag, "figura")


def socle_fixture(tag: str) -> dict:
    return _by_type(SOCLE_FIXTURES, tag, "tabla de zócalos")


def examples_fixture(name: Optional[str] = None) -> dict:
    data = load_fixture(EXAMPLES_FIXTURE)
    if name is None:
        return data
    examples = data.get("examples", data)
    if name not in examples:
        raise PreconditionError(f"Ejemplo desconocido: {name}")
    return examples[name]
