#!/usr/bin/env python3
"""
🌱 Comando `jm`: conjuntos JM(w), JM'(w) y JM''(w) de una expresión de join.
"""

import argparse
from typing import List

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel

from src.commands.common import element_table, print_error, print_json, text_of, words
from src.core.coxeter import build_system, element_from_word, supported_types
from src.core.ji_catalog import jm_sets
from src.utils.config import DEFAULT_DESCENT_BUDGET, EXIT_CHECK_FAILED, EXIT_OK
from src.utils.errors import BruhatError


class JMCommand:
    """Comando para calcular los join-irreducibles maximales bajo w."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "jm",
            help="JM(w), JM'(w) y JM''(w)",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        parser.add_argument("word", help="Palabra de w, compacta (\"3423\") o separada (\"1 0+ 2 1\")")
        parser.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                            help="Máximo de elementos al construir conjuntos con descensos fijados")
        return parser

    def run(self, args) -> int:
        try:
            return self.run_jm(args.type, args.word, args.budget, args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_jm(self, descriptor: str, word: str, budget: int = DEFAULT_DESCENT_BUDGET, as_json: bool = False) -> int:
        system = build_system(descriptor)
        w = element_from_word(system, word)
        sets = jm_sets(w, budget=budget)
        data = {
            "type": system.tag,
            "w": text_of(w),
            "jm": words(sets.jm),
            "jm_prime": words(sets.jm_prime),
            "jm_double_prime": words(sets.jm_double_prime),
            "join_jm_is_w": sets.jm_join_ok,
            "join_jm_double_prime_is_w": sets.jm_double_prime_join_ok,
        }
        code = EXIT_OK if sets.jm_join_ok else EXIT_CHECK_FAILED
        if as_json:
            print_json(self.console, data)
            return code

        elements = sorted(set(sets.jm) | set(sets.jm_prime), key=lambda x: x.sort_key())

        def marks(members) -> List[str]:
            return ["✓" if x in members else "" for x in elements]

        self.console.print(element_table(
            f"Join-irreducibles bajo w en {system.tag}", elements,
            **{"JM": marks(set(sets.jm)), "JM'": marks(set(sets.jm_prime)), "JM''": marks(set(sets.jm_double_prime))},
        ))
        body = "\n".join([
            f"⋁JM(w) = w: {'sí' if sets.jm_join_ok else 'no'}",
            f"⋁JM''(w) = w: {'sí' if sets.jm_double_prime_join_ok else 'no'}",
        ])
        self.console.print(Panel(body, title=f"w = {escape(data['w'])} en {system.tag}"))
        if not sets.jm_join_ok:
            self.console.print("[bold red]Error: ⋁JM(w) ≠ w[/bold red]")
        return code
