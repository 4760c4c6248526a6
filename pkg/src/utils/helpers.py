#!/usr/bin/env python3
"""
🌱 Funciones utilitarias compartidas: palabras, polinomios, rutas y sumas de control.
"""

import hashlib
import os
import re
from datetime import datetime
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.utils.config import CACHE_DIR_ENV, DEFAULT_CACHE_DIR, LABEL_ORDER
from src.utils.errors import PolynomialSyntaxError, WordError

_TOKEN = re.compile(r"0[+-]|\S")
_TERM = re.compile(r"([+-])(\d*)\*?(v(?:\^\{?(-?\d+)\}?)?)?")


def label_sort_key(label: str) -> int:
    """Posición de una etiqueta en el orden congelado."""
    try:
        return LABEL_ORDER.index(label)
    except ValueError:
        raise WordError(label) from None


def split_word(text: str, labels: Optional[Iterable[str]] = None) -> Tuple[str, ...]:
    """Divide una palabra en etiquetas.

    Acepta palabras compactas ("3423") o separadas por espacios ("1 0+ 0- 2 1").
    La palabra vacía y "e" representan la identidad.

    Args:
        text: Palabra a dividir
        labels: Etiquetas válidas; si se indica, cualquier otra produce WordError

    Returns:
        Tuple[str, ...]: Las etiquetas en orden de lectura
    """
    stripped = text.strip()
    if stripped in ("", "e"):
        return ()
    tokens = tuple(_TOKEN.findall(stripped))
    allowed = set(labels) if labels is not None else set(LABEL_ORDER)
    for token in tokens:
        if token not in allowed:
            raise WordError(token)
    return tokens


def format_word(tokens: Sequence[str], compact: bool = False) -> str:
    """Representa una palabra como cadena; la identidad es la cadena vacía."""
    if compact and all(len(t) == 1 for t in tokens):
        return "".join(tokens)
    return " ".join(tokens)


def parse_poly_terms(text: str) -> Dict[int, int]:
    """Interpreta un literal como "v^113+v^107" o "2v^9 - v^-1" en un mapa exponente→coeficiente."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise PolynomialSyntaxError("Polinomio vacío")
    if compact[0] not in "+-":
        compact = "+" + compact
    terms: Dict[int, int] = {}
    position = 0
    while position < len(compact):
        match = _TERM.match(compact, position)
        if match is None or match.end() == position or (not match.group(2) and not match.group(3)):
            raise PolynomialSyntaxError(f"Término no válido en {text!r} (posición {position})")
        sign = -1 if match.group(1) == "-" else 1
        coefficient = int(match.group(2)) if match.group(2) else 1
        if match.group(3):
            exponent = int(match.group(4)) if match.group(4) is not None else 1
        else:
            exponent = 0
        terms[exponent] = terms.get(exponent, 0) + sign * coefficient
        position = match.end()
    return {e: c for e, c in terms.items() if c != 0}


def format_poly_terms(terms: Dict[int, int]) -> str:
    """Escribe un polinomio con exponentes decrecientes, como en las tablas publicadas."""
    if not terms:
        return "0"
    pieces: List[str] = []
    for exponent in sorted(terms, reverse=True):
        coefficient = terms[exponent]
        sign = "-" if coefficient < 0 else "+"
        magnitude = abs(coefficient)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = "v" if exponent == 1 else f"v^{exponent}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        pieces.append(f"{sign}{body}")
    text = "".join(pieces)
    return text[1:] if text.startswith("+") else text


def resolve_cache_dir(override: Optional[str] = None) -> str:
    """Directorio de caché: argumento, variable de entorno o valor por defecto."""
    return override or os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR


def sha256_of_file(file_path: str) -> str:
    digest = hashlib.sha256()
    with open(file_path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def sha256_of_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def ensure_directory_exists(file_path: str) -> None:
    """Asegura que el directorio padre de un archivo existe."""
    directory = os.path.dirname(os.path.abspath(file_path))
    os.makedirs(directory, exist_ok=True)


def get_base_filename(file_path: str) -> str:
    """Obtiene el nombre base de un archivo sin extensión."""
    return os.path.splitext(os.path.basename(file_path))[0]


def create_dated_directory(base_reports_dir: str) -> str:
    """Crea (si hace falta) el subdirectorio YYYY-MM-DD dentro del directorio de informes."""
    dated_dir = os.path.join(base_reports_dir, datetime.now().strftime("%Y-%m-%d"))
    os.makedirs(dated_dir, exist_ok=True)
    return dated_dir


def get_unique_report_path(directory: str, base_filename: str, extension: str = ".md") -> str:
    """Devuelve una ruta libre, añadiendo un sufijo _NN si el archivo ya existe.

    Raises:
        ValueError: si ya existen 99 informes con el mismo nombre base
    """
    candidate = os.path.join(directory, base_filename + extension)
    counter = 0
    while os.path.exists(candidate):
        counter += 1
        if counter > 99:
            raise ValueError(f"Demasiados archivos con el mismo nombre base: {base_filename}")
        candidate = os.path.join(directory, f"{base_filename}_{counter:02d}{extension}")
    return candidate


def create_report_path_with_date(base_output_path: str) -> Tuple[str, str]:
    """Traduce una ruta de salida a (ruta_única_en_directorio_con_fecha, directorio_con_fecha).

    Si la ruta no incluye directorio se usa "reports".
    """
    base_dir = os.path.dirname(base_output_path) or "reports"
    filename_with_ext = os.path.basename(base_output_path)
    extension = os.path.splitext(filename_with_ext)[1] or ".md"
    dated_directory = create_dated_directory(base_dir)
    return (
        get_unique_report_path(dated_directory, get_base_filename(filename_with_ext), extension),
        dated_directory,
    )
