#!/usr/bin/env python3
"""
🌱 Comando `group`: datos básicos de un grupo de Weyl y de su celda penúltima.
"""

import argparse

from rich.console import Console
from rich.table import Table

from src.commands.common import print_error, print_json
from src.core.cells import build_atlas
from src.core.coxeter import build_system, supported_types
from src.utils.config import EXIT_OK
from src.utils.errors import BruhatError


class GroupCommand:
    """Comando para describir un sistema de Coxeter."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "group",
            help="Información de un grupo de Weyl",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        actions = parser.add_subparsers(dest="group_action", required=True)
        info = actions.add_parser("info", help="Orden, etiquetas, w0, σ y datos de J")
        info.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        return parser

    def run(self, args) -> int:
        try:
            return self.run_info(args.type, as_json=args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_info(self, descriptor: str, as_json: bool = False) -> int:
        system = build_system(descriptor)
        atlas = build_atlas(system)
        data = {
            "type": system.tag,
            "rank": system.rank,
            "labels": list(system.labels),
            "order": system.order,
            "positive_roots": system.num_positive,
            "w0": system.w0.text(),
            "w0_length": system.w0.length,
            "sigma": dict(system.sigma),
            "checksum": system.checksum,
            "penultimate_size": len(atlas.elements),
            "h_cells": len(atlas.cells),
            "a_value": atlas.a_value,
        }
        if as_json:
            return print_json(self.console, data)

        table = Table(title=f"Grupo {system.tag}")
        table.add_column("Dato", style="cyan")
        table.add_column("Valor")
        table.add_row("Rango", str(system.rank))
        table.add_row("Etiquetas", " ".join(system.labels))
        table.add_row("|W|", f"{system.order:,}")
        table.add_row("Raíces positivas", str(system.num_positive))
        table.add_row("w0", f"{data['w0']} (ℓ = {data['w0_length']})")
        table.add_row("σ", ", ".join(f"{a}→{b}" for a, b in system.sigma.items()))
        table.add_row("|J|", str(data["penultimate_size"]))
        table.add_row("Celdas H", str(data["h_cells"]))
        table.add_row("a(J)", str(atlas.a_value))
        table.add_row("Checksum", system.checksum[:16])
        self.console.print(table)
        return EXIT_OK
