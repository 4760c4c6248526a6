#!/usr/bin/env python3
"""
🌱 Comando `kl`: tablas completas de polinomios KL y polinomios de la celda penúltima.
"""

import argparse
from typing import List, Optional, Tuple

from rich.console import Console
from rich.markup import escape
from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn
from rich.table import Table

from src.commands.common import print_error, print_json, print_warning
from src.core.cache import (
    KIND_PENULTIMATE,
    cached_kl_table,
    decode_penultimate,
    encode_kl_table,
    encode_penultimate,
    load_cache,
    save_cache,
)
from src.core.cells import CellAtlas, PenultimatePolynomialSet, build_atlas, octahedron_points, propagate_from_seed
from src.core.coxeter import GroupElement, build_system, enumerate_group, supported_types
from src.core.hecke import KLTable, bar_invariance_violations, check_table_invariants
from src.core.laurent import LaurentPoly
from src.core.report_generator import penultimate_frame, penultimate_graph_to_dot, penultimate_rows, to_csv
from src.core.seed_solver import SEED_CELLS, e8_seed_solver
from src.core.socle import penultimate_assignment
from src.utils.config import DEFAULT_KL_BUDGET, EXIT_CHECK_FAILED, EXIT_OK
from src.utils.errors import BruhatError, DerivationError, PreconditionError


class KLCommand:
    """Comando para calcular polinomios de Kazhdan-Lusztig."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "kl",
            help="Polinomios de Kazhdan-Lusztig",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        actions = parser.add_subparsers(dest="kl_action", required=True)

        full = actions.add_parser("full", help="Tabla completa p_{x,w}",
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        full.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        full.add_argument("--budget", type=int, default=DEFAULT_KL_BUDGET,
                          help="Máximo de elementos del grupo para la tabla completa")
        full.add_argument("--emit", choices=["summary", "json"], default="summary",
                          help="Resumen de invariantes o la tabla codificada en JSON")

        penultimate = actions.add_parser("penultimate", help="p_{e,w} para w en la celda penúltima J",
                                         formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        penultimate.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        penultimate.add_argument("--seed", type=str,
                                 help="Semilla p_{e,w} de la celda unitaria (E6, E7, E8), p. ej. \"v^113+v^107\"")
        output_group = penultimate.add_argument_group("Configuración de salida")
        output_group.add_argument("--emit", choices=["table", "csv", "json"], default="table",
                                  help="Formato de salida de los polinomios")
        output_group.add_argument("--octahedron", action="store_true",
                                  help="Emitir los puntos (i, j, k) del octaedro en JSON (solo tipo B)")
        output_group.add_argument("--graph", choices=["dot"],
                                  help="Emitir el grafo de Bruhat de J y los movimientos simples")
        return parser

    def run(self, args) -> int:
        try:
            if args.kl_action == "full":
                return self.run_full(args.type, args.budget, args.emit, args.cache, not args.no_cache,
                                     args.json, args.verbose)
            return self.run_penultimate(args.type, args.seed, args.emit, args.octahedron, args.graph,
                                        args.cache, not args.no_cache, args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_full(self, descriptor: str, budget: int = DEFAULT_KL_BUDGET, emit: str = "summary",
                 cache_dir: Optional[str] = None, use_cache: bool = True, as_json: bool = False,
                 verbose: bool = False) -> int:
        system = build_system(descriptor)
        group = enumerate_group(system)
        if as_json or emit == "json":
            table = cached_kl_table(group, cache_dir, use_cache, budget)
        else:
            with Progress(
                TextColumn("[bold blue]{task.description}"),
                BarColumn(),
                TextColumn("[bold green]{task.completed}/{task.total}"),
                TimeElapsedColumn(),
                console=self.console,
            ) as progress:
                task = progress.add_task(f"[bold green]Tabla KL de {system.tag}...", total=len(group))
                table = cached_kl_table(group, cache_dir, use_cache, budget,
                                        lambda wi: progress.update(task, completed=wi + 1))
                progress.update(task, completed=len(group))

        if emit == "json":
            return print_json(self.console, {"type": system.tag, **encode_kl_table(table)})

        problems = check_table_invariants(table) + bar_invariance_violations(table)
        summary = self._summary(table, problems)
        if as_json:
            print_json(self.console, summary)
            return EXIT_CHECK_FAILED if problems else EXIT_OK

        info = Table(title=f"Tabla KL de {system.tag}")
        info.add_column("Dato", style="cyan")
        info.add_column("Valor")
        info.add_row("|W|", str(summary["order"]))
        info.add_row("Pares x ≤ w", str(summary["comparable_pairs"]))
        info.add_row("Coeficiente máximo", str(summary["max_coefficient"]))
        info.add_row("p_e,w0", summary["p_e_w0"])
        self.console.print(info)
        if problems:
            for problem in problems[: 20 if verbose else 5]:
                self.console.print(f"[bold red]Error: {escape(problem)}[/bold red]")
            return EXIT_CHECK_FAILED
        self.console.print("[bold green]Invariantes de la tabla verificados.[/bold green]")
        return EXIT_OK

    def _summary(self, table: KLTable, problems: List[str]) -> dict:
        group = table.group
        pairs = sum(len(column) for column in table.columns)
        top = max((max(coeffs) for column in table.columns for coeffs in column.values() if coeffs), default=0)
        return {
            "type": group.system.tag,
            "order": len(group),
            "comparable_pairs": pairs,
            "max_coefficient": top,
            "p_e_w0": str(table.polynomial(group.system.identity, group.system.w0)),
            "problems": problems,
        }

    def penultimate(self, atlas: CellAtlas, seed_text: Optional[str] = None, cache_dir: Optional[str] = None,
                    use_cache: bool = True) -> Tuple[PenultimatePolynomialSet, List[GroupElement]]:
        """Asignación de J y los elementos que quedan sin determinar."""
        system = atlas.system
        if seed_text is not None and system.tag not in SEED_CELLS:
            raise PreconditionError(f"--seed solo se admite en {', '.join(SEED_CELLS)}")
        if seed_text is not None or system.tag == "E8":
            seed = LaurentPoly.parse(seed_text) if seed_text is not None else e8_seed_solver(atlas)
            result = propagate_from_seed(atlas, {atlas.member(SEED_CELLS[system.tag], "w"): seed})
            if result.violations:
                raise DerivationError(f"La semilla {seed} contradice las relaciones: {result.violations[0]}")
            return PenultimatePolynomialSet(atlas, result.values), result.undetermined
        if use_cache:
            payload = load_cache(system, KIND_PENULTIMATE, cache_dir)
            if payload is not None:
                return decode_penultimate(atlas, payload), []
        assignment = penultimate_assignment(atlas)
        if use_cache:
            save_cache(system, KIND_PENULTIMATE, encode_penultimate(assignment), cache_dir)
        return assignment, []

    def run_penultimate(self, descriptor: str, seed_text: Optional[str] = None, emit: str = "table",
                        octahedron: bool = False, graph: Optional[str] = None, cache_dir: Optional[str] = None,
                        use_cache: bool = True, as_json: bool = False) -> int:
        system = build_system(descriptor)
        if octahedron:
            if system.family != "B":
                raise PreconditionError("--octahedron solo se admite en tipo B")
            return print_json(self.console, {"type": system.tag, "points": octahedron_points(system.n)})
        atlas = build_atlas(system)
        if graph == "dot":
            self.console.print(penultimate_graph_to_dot(atlas), markup=False, highlight=False, soft_wrap=True)
            return EXIT_OK

        assignment, undetermined = self.penultimate(atlas, seed_text, cache_dir, use_cache)
        if as_json or emit == "json":
            return print_json(self.console, {
                "type": system.tag,
                "a_value": atlas.a_value,
                "entries": penultimate_rows(assignment),
                "undetermined": [y.text() for y in undetermined],
            })
        if emit == "csv":
            self.console.print(to_csv(penultimate_frame(assignment)), markup=False, highlight=False,
                               soft_wrap=True, end="")
            return EXIT_OK

        table = Table(title=f"Celda penúltima de {system.tag} (a = {atlas.a_value})")
        for column in ("Celda", "Miembro", "Elemento", "ℓ", "p_e,w"):
            table.add_column(column)
        for row in penultimate_rows(assignment):
            table.add_row(f"{row['s']},{row['t']}", row["member"], escape(row["element"]), str(row["length"]),
                          row["polynomial"] or "[yellow]sin determinar[/yellow]")
        self.console.print(table)
        if undetermined:
            print_warning(self.console, f"{len(undetermined)} entradas sin determinar a partir de la semilla")
        return EXIT_OK
