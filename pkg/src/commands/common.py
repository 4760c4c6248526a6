#!/usr/bin/env python3
"""
🌱 Utilidades compartidas por los comandos: salida JSON, tablas y errores.
"""

from typing import Iterable, List, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.core.coxeter import CoxeterSystem, GroupElement, element_from_word
from src.core.report_generator import to_json
from src.utils.config import EXIT_OK
from src.utils.errors import BruhatError


def print_json(console: Console, data) -> int:
    console.print(to_json(data), markup=False, highlight=False, soft_wrap=True)
    return EXIT_OK


def print_error(console: Console, exc: BruhatError) -> int:
    console.print(f"[bold red]Error: {escape(str(exc))}[/bold red]")
    return exc.exit_code


def print_warning(console: Console, message: str) -> None:
    console.print(f"[bold yellow]Advertencia: {escape(message)}[/bold yellow]")


def parse_elements(system: CoxeterSystem, words: Iterable[str]) -> List[GroupElement]:
    return [element_from_word(system, word) for word in words]


def text_of(x: GroupElement) -> str:
    return x.text() or "e"


def words(elements: Sequence[GroupElement]) -> List[str]:
    return [text_of(x) for x in elements]


def element_table(title: str, elements: Sequence[GroupElement], **columns: Sequence[str]) -> Table:
    """Tabla rich con palabra, longitud y columnas extra por nombre."""
    table = Table(title=title)
    table.add_column("Elemento", style="cyan")
    table.add_column("ℓ", justify="right")
    for name in columns:
        table.add_column(name)
    for row, x in enumerate(elements):
        table.add_row(escape(text_of(x)), str(x.length), *(escape(str(values[row])) for values in columns.values()))
    return table
