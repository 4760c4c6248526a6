#!/usr/bin/env python3
"""
🌱 Cachés JSON de tablas KL completas, polinomios de la celda penúltima y posets JI(s, t).
"""

import json
import os
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from src.core.cells import CellAtlas, PenultimatePolynomialSet
from src.core.coxeter import CoxeterSystem, GroupElement, IndexedGroup, element_from_word
from src.core.hecke import KLTable, kl_table
from src.core.ji_catalog import join_irreducibles
from src.core.laurent import LaurentPoly
from src.utils.config import CACHE_FORMAT_VERSION, DEFAULT_DESCENT_BUDGET, DEFAULT_KL_BUDGET
from src.utils.errors import CacheError
from src.utils.helpers import ensure_directory_exists, resolve_cache_dir

KIND_FULL_KL = "full-kl"
KIND_PENULTIMATE = "penultimate"
KIND_JI_POSET = "ji-poset"
CACHE_KINDS = (KIND_FULL_KL, KIND_PENULTIMATE, KIND_JI_POSET)


def cache_path(system: CoxeterSystem, kind: str, cache_dir: Optional[str] = None, suffix: str = "") -> str:
    if kind not in CACHE_KINDS:
        raise CacheError(f"Tipo de caché desconocido: {kind}")
    name = f"{system.tag.lower()}_{kind}{suffix}.json"
    return os.path.join(resolve_cache_dir(cache_dir), name)


def save_cache(system: CoxeterSystem, kind: str, payload, cache_dir: Optional[str] = None,
               suffix: str = "") -> str:
    path = cache_path(system, kind, cache_dir, suffix)
    ensure_directory_exists(path)
    document = {
        "format_version": CACHE_FORMAT_VERSION,
        "type": system.tag,
        "kind": kind,
        "system_checksum": system.checksum,
        "payload": payload,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(document, fh, ensure_ascii=False, sort_keys=True)
    return path


def load_cache(system: CoxeterSystem, kind: str, cache_dir: Optional[str] = None, suffix: str = ""):
    """Carga el payload o devuelve None si no existe; rechaza versiones o sistemas distintos."""
    path = cache_path(system, kind, cache_dir, suffix)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CacheError(f"Caché corrupta en {path}: {exc}") from exc
    if document.get("format_version") != CACHE_FORMAT_VERSION:
        raise CacheError(f"{path}: format_version {document.get('format_version')} ≠ {CACHE_FORMAT_VERSION}")
    if document.get("type") != system.tag or document.get("kind") != kind:
        raise CacheError(f"{path}: contiene {document.get('type')}/{document.get('kind')}")
    if document.get("system_checksum") != system.checksum:
        raise CacheError(f"{path}: el checksum del sistema no coincide")
    return document["payload"]


# Codificaciones

def encode_kl_table(table: KLTable) -> Dict:
    return {
        "order": len(table.group),
        "columns": [[[xi, coeffs] for xi, coeffs in sorted(column.items())] for column in table.columns],
    }


def decode_kl_table(group: IndexedGroup, payload: Dict) -> KLTable:
    if payload.get("order") != len(group):
        raise CacheError(f"La caché tiene {payload.get('order')} elementos y el grupo {len(group)}")
    columns = [{int(xi): list(coeffs) for xi, coeffs in column} for column in payload["columns"]]
    return KLTable(group, columns)


def encode_penultimate(assignment: PenultimatePolynomialSet) -> Dict[str, List[List[int]]]:
    return {" ".join(y.word()): assignment.values[y].to_pairs() for y in assignment.atlas.elements}


def decode_penultimate(atlas: CellAtlas, payload: Dict[str, List[List[int]]]) -> PenultimatePolynomialSet:
    values = {element_from_word(atlas.system, word.split()): LaurentPoly.from_pairs(pairs)
              for word, pairs in payload.items()}
    if set(values) != set(atlas.elements):
        raise CacheError("La caché penúltima no cubre exactamente J")
    return PenultimatePolynomialSet(atlas, values)


def cached_kl_table(group: IndexedGroup, cache_dir: Optional[str] = None, use_cache: bool = True,
                    budget: int = DEFAULT_KL_BUDGET,
                    progress_callback: Optional[Callable[[int], None]] = None) -> KLTable:
    """Tabla KL completa, leída de la caché si existe y guardada tras calcularla."""
    system = group.system
    if use_cache:
        payload = load_cache(system, KIND_FULL_KL, cache_dir)
        if payload is not None:
            return decode_kl_table(group, payload)
    table = kl_table(group, budget, progress_callback)
    if use_cache:
        save_cache(system, KIND_FULL_KL, encode_kl_table(table), cache_dir)
    return table


def cached_join_irreducibles(system: CoxeterSystem, pairs: Iterable[Tuple[str, str]],
                             cache_dir: Optional[str] = None, use_cache: bool = True,
                             budget: int = DEFAULT_DESCENT_BUDGET) -> Dict[Tuple[str, str], List[GroupElement]]:
    """JI(s, t) por par de etiquetas; la caché guarda las palabras de cada par ya enumerado."""
    payload: Dict[str, List[str]] = {}
    if use_cache:
        payload = load_cache(system, KIND_JI_POSET, cache_dir) or {}
    result = {}
    missing = False
    for s, t in pairs:
        key = f"{s},{t}"
        if key in payload:
            result[(s, t)] = [element_from_word(system, word.split()) for word in payload[key]]
        else:
            result[(s, t)] = list(join_irreducibles(system, s, t, budget))
            payload[key] = [" ".join(x.word()) for x in result[(s, t)]]
            missing = True
    if use_cache and missing:
        save_cache(system, KIND_JI_POSET, payload, cache_dir)
    return result
