#!/usr/bin/env python3
"""
🌱 Punto de entrada principal para el CLI de órdenes de Bruhat, polinomios KL y zócalos.
"""

import argparse
import sys
from typing import List, Optional

from src.commands.ext1 import Ext1Command
from src.commands.group import GroupCommand
from src.commands.ji import JICommand
from src.commands.jm import JMCommand
from src.commands.join import JoinCommand
from src.commands.kl import KLCommand
from src.commands.socle import SocleCommand
from src.commands.verify import VerifyCommand
from src.utils.config import DEFAULT_WORKERS


class BruhatCLI:
    """CLI principal: despacha cada verbo a su comando."""

    def __init__(self):
        self.commands = {
            "group": GroupCommand(),
            "kl": KLCommand(),
            "ji": JICommand(),
            "jm": JMCommand(),
            "join": JoinCommand(),
            "socle": SocleCommand(),
            "ext1": Ext1Command(),
            "verify": VerifyCommand(),
        }

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="bruhat-cli",
            description="CLI para el orden de Bruhat, la celda penúltima de Kazhdan-Lusztig y los zócalos de Δ_e/Δ_x.",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument("--verbose", "-v", action="store_true",
                            help="Mostrar información detallada durante la ejecución")
        parser.add_argument("--json", action="store_true",
                            help="Salida JSON legible por máquinas, sin formato")
        parser.add_argument("--workers", "-w", type=int, default=DEFAULT_WORKERS,
                            help="Número de workers para las suites")

        cache_group = parser.add_argument_group("Configuración de caché")
        cache_group.add_argument("--cache", type=str,
                                 help="Directorio de caché (por defecto $BRUHAT_CACHE_DIR o ~/.cache/bruhat-socle)")
        cache_group.add_argument("--no-cache", action="store_true", help="No leer ni escribir cachés")

        subparsers = parser.add_subparsers(dest="command", required=True)
        for command in self.commands.values():
            command.add_arguments(subparsers)
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Ejecuta el CLI principal y devuelve el código de salida."""
        args = self.build_parser().parse_args(argv)
        return self.commands[args.command].run(args)


def main(argv: Optional[List[str]] = None):
    """Función principal que inicia el CLI."""
    cli = BruhatCLI()
    sys.exit(cli.run(argv))


if __name__ == "__main__":
    main()
