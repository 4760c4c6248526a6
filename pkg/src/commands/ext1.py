#!/usr/bin/env python3
"""
🌱 Comando `ext1`: cotas de dim Ext¹(L_x, Δ_w).
"""

import argparse

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.commands.common import print_error, print_json
from src.core.coxeter import build_system, element_from_word, supported_types
from src.core.socle import SocleContext, ext1_bounds
from src.utils.config import DEFAULT_DESCENT_BUDGET, EXIT_OK
from src.utils.errors import BruhatError

CASE_NAMES = {"a": "x ∉ J ∪ {w0}", "b": "x = w0", "c": "x ∈ J"}


class Ext1Command:
    """Comando para acotar extensiones entre simples y módulos estándar."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "ext1",
            help="Cota de dim Ext¹(L_x, Δ_w)",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        parser.add_argument("x", help="Palabra de x")
        parser.add_argument("w", help="Palabra de w")
        parser.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                            help="Máximo de elementos al construir conjuntos con descensos fijados")
        return parser

    def run(self, args) -> int:
        try:
            return self.run_ext1(args.type, args.x, args.w, args.budget, args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_ext1(self, descriptor: str, x_word: str, w_word: str, budget: int = DEFAULT_DESCENT_BUDGET,
                 as_json: bool = False) -> int:
        system = build_system(descriptor)
        x, w = element_from_word(system, x_word), element_from_word(system, w_word)
        report = ext1_bounds(x, w, SocleContext(system, budget))
        if as_json:
            return print_json(self.console, report.to_dict())

        table = Table(title=f"dim Ext¹(L_x, Δ_w) en {system.tag}")
        table.add_column("Dato", style="cyan")
        table.add_column("Valor")
        table.add_row("Caso", f"({report.case}) {CASE_NAMES[report.case]}")
        table.add_row("Valor", f"{report.value} ({'exacto' if report.exact else 'cota superior'})")
        if report.case == "c":
            table.add_row("|ₛJMₜ(w)|", str(len(report.restricted_jm)))
            table.add_row("ₛJMₜ(w)", escape(", ".join(z.text() for z in report.restricted_jm)) or "∅")
            table.add_row("Cota del tipo", str(report.type_cap))
            if report.join_element is not None:
                table.add_row("b = ⋁ₛJMₜ(w)", escape(report.join_element.text()))
            if report.socle_bound is not None:
                table.add_row("[soc Δ_e/Δ_b : L_x]", str(report.socle_bound))
        self.console.print(table)
        for note in report.notes:
            self.console.print(f"[dim]{escape(note)}[/dim]")
        return EXIT_OK
