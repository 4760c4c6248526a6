#!/usr/bin/env python3
"""
🌱 Comando `socle`: zócalos de Δ_e/Δ_x, certificados de cadena y criterio de intersección.
"""

import argparse
from typing import Optional

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel

from src.commands.common import print_error, print_json, print_warning, text_of, words
from src.core.cache import cached_kl_table
from src.core.cells import build_atlas
from src.core.coxeter import build_system, element_from_word, enumerate_group, supported_types
from src.core.socle import (
    CLOSED_FORM_TYPES,
    SocleContext,
    SocleReport,
    chain_certificate,
    intersection_check,
    socle_closed_form,
    socle_window_report,
)
from src.utils.config import DEFAULT_DESCENT_BUDGET, DEFAULT_KL_BUDGET, EXIT_CHECK_FAILED, EXIT_OK
from src.utils.errors import BruhatError


class SocleCommand:
    """Comando para los zócalos de los cocientes Δ_e/Δ_x."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "socle",
            help="Zócalos, cadenas y criterio de intersección",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        actions = parser.add_subparsers(dest="socle_action", required=True)

        report = actions.add_parser("report", help="Zócalo de Δ_e/Δ_x para x join-irreducible",
                                    formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        report.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        report.add_argument("word", help="Palabra de x")
        report.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                            help="Máximo de elementos al construir JI(s, t)")

        chain = actions.add_parser("chain", help="Cadena en BG(s, t) de longitud p_st(1)",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        chain.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        chain.add_argument("-s", dest="s", required=True, help="Descenso izquierdo")
        chain.add_argument("-t", dest="t", required=True, help="Descenso derecho")
        chain.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                           help="Máximo de elementos al construir BG(s, t)")

        intersection = actions.add_parser("intersection", help="Criterio [Δ_w : L] = mín sobre JM(w)",
                                          formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        intersection.add_argument("type", help="Tipo A o B")
        intersection.add_argument("word", help="Palabra de w")
        intersection.add_argument("--budget", type=int, default=DEFAULT_KL_BUDGET,
                                  help="Máximo de elementos para la tabla KL completa")
        return parser

    def run(self, args) -> int:
        try:
            if args.socle_action == "report":
                return self.run_report(args.type, args.word, args.budget, args.json)
            if args.socle_action == "chain":
                return self.run_chain(args.type, args.s, args.t, args.budget, args.json)
            return self.run_intersection(args.type, args.word, args.budget, args.cache, not args.no_cache,
                                         args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_report(self, descriptor: str, word: str, budget: int = DEFAULT_DESCENT_BUDGET,
                   as_json: bool = False) -> int:
        system = build_system(descriptor)
        context = SocleContext(system, budget)
        x = element_from_word(system, word)
        if system.tag in CLOSED_FORM_TYPES or system.family in CLOSED_FORM_TYPES:
            report = socle_closed_form(x, context)
        else:
            report = socle_window_report(x, context)
        problems = report.consistency_problems(context.atlas)
        if as_json:
            print_json(self.console, {**report.to_dict(), "problems": problems})
        else:
            self._print_report(report, problems)
        return EXIT_CHECK_FAILED if problems else EXIT_OK

    def _print_report(self, report: SocleReport, problems) -> None:
        lines = []
        for entry in report.entries:
            lines.append(f"{escape(entry.describe())}  [dim]({entry.status}; {escape(entry.provenance)})[/dim]")
        if report.alternatives:
            options = [" ⊕ ".join(escape(e.describe()) for e in option) for option in report.alternatives]
            lines.append("[bold yellow]Alternativas:[/bold yellow] " + "  o  ".join(options))
        if report.window is not None:
            low, high = report.window.absolute
            lines.append(f"Ventana de grados absolutos: [{low}, {high}]"
                         + (" (homogénea)" if report.window.homogeneous else ""))
        lines += [f"[dim]{escape(note)}[/dim]" for note in report.notes]
        s, t = report.hcell
        self.console.print(Panel("\n".join(lines) or "sin entradas",
                                 title=f"soc Δ_e/Δ_x, x = {escape(text_of(report.subject))}, celda ({s},{t})"))
        for problem in problems:
            self.console.print(f"[bold red]Error: {escape(problem)}[/bold red]")

    def run_chain(self, descriptor: str, s: str, t: str, budget: int = DEFAULT_DESCENT_BUDGET,
                  as_json: bool = False) -> int:
        system = build_system(descriptor)
        certificate = chain_certificate(SocleContext(system, budget), s, t)
        code = EXIT_OK if certificate.valid else EXIT_CHECK_FAILED
        if as_json:
            print_json(self.console, certificate.to_dict())
            return code
        self.console.print(f"[bold]Cadena en BG({s},{t}) de {system.tag}[/bold] ({escape(certificate.source)}), "
                           f"longitud {len(certificate.chain)}, objetivo p_st(1) = {certificate.target}")
        self.console.print("  " + " < ".join(escape(w) for w in words(certificate.chain)))
        for problem in certificate.problems:
            self.console.print(f"[bold red]Error: {escape(problem)}[/bold red]")
        if certificate.fallback:
            print_warning(self.console, certificate.fallback)
        if certificate.valid:
            self.console.print("[bold green]Certificado válido.[/bold green]")
        return code

    def run_intersection(self, descriptor: str, word: str, budget: int = DEFAULT_KL_BUDGET,
                         cache_dir: Optional[str] = None, use_cache: bool = True, as_json: bool = False) -> int:
        system = build_system(descriptor)
        w = element_from_word(system, word)
        table = cached_kl_table(enumerate_group(system), cache_dir, use_cache, budget)
        verdict = intersection_check(w, table, build_atlas(system))
        code = EXIT_OK if verdict.passed else EXIT_CHECK_FAILED
        if as_json:
            data = {"type": system.tag, "w": text_of(w), "passed": verdict.passed, "jm": words(verdict.jm)}
            if verdict.violation is not None:
                u, degree, lhs, rhs = verdict.violation
                data["violation"] = {"u": text_of(u), "degree": degree, "multiplicity": lhs, "minimum": rhs}
            print_json(self.console, data)
            return code
        style = "bold green" if verdict.passed else "bold red"
        self.console.print(f"[{style}]{escape(verdict.describe())}[/{style}]")
        return code
