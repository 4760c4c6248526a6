#!/usr/bin/env python3
"""
🌱 Comando `verify`: ejecuta una suite de verificación y opcionalmente genera su informe.
"""

import argparse
from typing import Optional

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.commands.common import print_error, print_json
from src.core.report_generator import STATUS_ICONS, MarkdownSuiteReport
from src.core.suites import SuiteResult, run_suite, suite_names
from src.utils.config import DEFAULT_REPORT_PATH, DEFAULT_WORKERS, STATUS_FAIL
from src.utils.errors import BruhatError

STATUS_STYLES = {"pass": "green", "fail": "bold red", "skipped-budget": "yellow", "not-attempted-stretch": "dim",
                 "documented-discrepancy": "magenta"}


class VerifyCommand:
    """Comando para ejecutar las suites con nombre."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "verify",
            help="Ejecuta una suite de verificación",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        parser.add_argument("suite", choices=suite_names(), help="Nombre de la suite")
        parser.add_argument("--stretch", action="store_true",
                            help="Ejecutar también las comprobaciones costosas (polinomios sueltos de E6, B4)")
        report_group = parser.add_argument_group("Configuración del informe")
        report_group.add_argument("--report", nargs="?", const=DEFAULT_REPORT_PATH,
                                  help="Ruta del informe Markdown (se guarda en un subdirectorio con fecha)")
        return parser

    def run(self, args) -> int:
        try:
            return self.run_verify(args.suite, args.stretch, args.report, args.workers, args.json, args.verbose)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_verify(self, suite: str, stretch: bool = False, report_path: Optional[str] = None,
                   workers: int = DEFAULT_WORKERS, as_json: bool = False, verbose: bool = False) -> int:
        if not as_json:
            self.console.print(f"[bold green]Iniciando suite {suite} con {workers} workers...[/bold green]")
        result = run_suite(suite, workers=workers, stretch=stretch, console=None if as_json else self.console)

        report_output = None
        if report_path:
            generator = MarkdownSuiteReport(report_path)
            generator.generate_report(result)
            report_output = generator.output_path

        if as_json:
            data = result.to_dict()
            if report_output:
                data["report"] = report_output
            print_json(self.console, data)
            return result.exit_code

        self._print_result(result, verbose)
        if report_output:
            self.console.print(f"[bold green]Informe generado en: {report_output}[/bold green]")
        return result.exit_code

    def _print_result(self, result: SuiteResult, verbose: bool) -> None:
        table = Table(title=f"Suite {result.name}")
        table.add_column("Comprobación", style="cyan")
        table.add_column("Estado")
        table.add_column("Detalle")
        table.add_column("s", justify="right")
        for check in result.checks:
            if not verbose and check.status == "pass" and len(result.checks) > 40:
                continue
            style = STATUS_STYLES.get(check.status, "")
            table.add_row(check.check_id, f"[{style}]{STATUS_ICONS.get(check.status, '')} {check.status}[/{style}]",
                          escape(check.detail), f"{check.elapsed:.2f}")
        self.console.print(table)
        counts = ", ".join(f"{status}: {count}" for status, count in result.counts().items())
        if result.passed:
            self.console.print(f"[bold green]Suite completada en {result.elapsed:.2f} segundos ({counts}).[/bold green]")
        else:
            failed = result.counts()[STATUS_FAIL]
            self.console.print(f"[bold red]Error: {failed} comprobaciones fallidas ({counts}).[/bold red]")
