#!/usr/bin/env python3
"""
🌱 Comando `join`: supremo en el orden de Bruhat o sus cotas superiores minimales.
"""

import argparse

from rich.console import Console
from rich.markup import escape

from src.commands.common import parse_elements, print_error, print_json, text_of, words
from src.core.bruhat import join
from src.core.coxeter import build_system, supported_types
from src.utils.config import DEFAULT_DESCENT_BUDGET, EXIT_OK
from src.utils.errors import BruhatError


class JoinCommand:
    """Comando para calcular joins de elementos del grupo."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "join",
            help="Join de varios elementos",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        parser.add_argument("words", nargs="+", help="Palabras de los elementos")
        parser.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                            help="Máximo de elementos al buscar cotas superiores")
        return parser

    def run(self, args) -> int:
        try:
            return self.run_join(args.type, args.words, args.budget, args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_join(self, descriptor: str, word_list, budget: int = DEFAULT_DESCENT_BUDGET, as_json: bool = False) -> int:
        system = build_system(descriptor)
        elements = parse_elements(system, word_list)
        result = join(elements, system=system, budget=budget)
        if as_json:
            return print_json(self.console, {
                "type": system.tag,
                "elements": words(elements),
                "exists": result.exists,
                "join": text_of(result.element) if result.exists else None,
                "minimal_upper_bounds": words(result.bounds),
            })
        if result.exists:
            self.console.print(f"[bold green]⋁ = {escape(text_of(result.element))}[/bold green] "
                               f"(ℓ = {result.element.length})")
        else:
            self.console.print("[bold yellow]El join no existe.[/bold yellow] Cotas superiores minimales:")
            for bound in result.bounds:
                self.console.print(f"  {escape(text_of(bound))} (ℓ = {bound.length})")
        return EXIT_OK
