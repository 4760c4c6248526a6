#!/usr/bin/env python3
"""
🌱 Comando `ji`: enumeración de join-irreducibles y posets JI(s, t).
"""

import argparse
from typing import Dict, List, Optional, Tuple

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.commands.common import print_error, print_json, text_of
from src.core.cache import cached_join_irreducibles
from src.core.coxeter import CoxeterSystem, build_system, supported_types
from src.core.ji_catalog import bigrassmannians, classify
from src.core.report_generator import elements_frame, poset_to_dot, to_csv
from src.core.socle import SocleContext
from src.utils.config import DEFAULT_DESCENT_BUDGET, EXIT_OK
from src.utils.errors import BruhatError, WordError


def _pairs(system: CoxeterSystem, s: Optional[str], t: Optional[str]) -> List[Tuple[str, str]]:
    for label in (s, t):
        if label is not None and label not in system.labels:
            raise WordError(label)
    lefts = [s] if s is not None else list(system.labels)
    rights = [t] if t is not None else list(system.labels)
    return [(a, b) for a in lefts for b in rights]


class JICommand:
    """Comando para explorar los join-irreducibles del orden de Bruhat."""

    def __init__(self):
        self.console = Console()

    def add_arguments(self, subparsers):
        parser = subparsers.add_parser(
            "ji",
            help="Join-irreducibles y bigrassmannianos",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
        actions = parser.add_subparsers(dest="ji_action", required=True)

        enumerate_parser = actions.add_parser("enumerate", help="Lista JI(s, t) para uno o todos los pares",
                                              formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        enumerate_parser.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        enumerate_parser.add_argument("-s", dest="s", help="Descenso izquierdo")
        enumerate_parser.add_argument("-t", dest="t", help="Descenso derecho")
        enumerate_parser.add_argument("--bg", action="store_true", help="Incluir también BG(s, t) ∖ JI(s, t)")
        enumerate_parser.add_argument("--emit", choices=["table", "csv", "json"], default="table",
                                      help="Formato de salida")
        enumerate_parser.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                                      help="Máximo de elementos al construir conjuntos con descensos fijados")

        poset = actions.add_parser("poset", help="Diagrama de Hasse de JI(s, t)",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        poset.add_argument("type", help=f"Tipo del grupo ({supported_types()})")
        poset.add_argument("-s", dest="s", required=True, help="Descenso izquierdo")
        poset.add_argument("-t", dest="t", required=True, help="Descenso derecho")
        poset.add_argument("--bg", action="store_true", help="Usar BG(s, t) en lugar de JI(s, t)")
        poset.add_argument("--format", choices=["dot", "json", "text"], default="text", help="Formato de salida")
        poset.add_argument("--budget", type=int, default=DEFAULT_DESCENT_BUDGET,
                           help="Máximo de elementos al construir conjuntos con descensos fijados")
        return parser

    def run(self, args) -> int:
        try:
            if args.ji_action == "enumerate":
                return self.run_enumerate(args.type, args.s, args.t, args.bg, args.emit, args.budget,
                                          args.cache, not args.no_cache, args.json)
            return self.run_poset(args.type, args.s, args.t, args.bg, args.format, args.budget, args.json)
        except BruhatError as exc:
            return print_error(self.console, exc)

    def run_enumerate(self, descriptor: str, s: Optional[str] = None, t: Optional[str] = None,
                      include_bg: bool = False, emit: str = "table", budget: int = DEFAULT_DESCENT_BUDGET,
                      cache_dir: Optional[str] = None, use_cache: bool = True, as_json: bool = False) -> int:
        system = build_system(descriptor)
        pairs = _pairs(system, s, t)
        ji = cached_join_irreducibles(system, pairs, cache_dir, use_cache, budget)
        rows: List[Dict] = []
        for a, b in pairs:
            members = bigrassmannians(system, a, b, budget) if include_bg else ji[(a, b)]
            labels = classify(system, a, b)
            ji_set = set(ji[(a, b)])
            for x in members:
                kind, k = labels.get(x, (None, None))
                rows.append({"s": a, "t": b, "element": x, "kind": kind, "k": k, "join_irreducible": x in ji_set})

        if as_json or emit == "json":
            return print_json(self.console, {
                "type": system.tag,
                "counts": {f"{a},{b}": len(ji[(a, b)]) for a, b in pairs},
                "elements": [{**row, "element": text_of(row["element"]), "length": row["element"].length}
                             for row in rows],
            })
        if emit == "csv":
            extra = {row["element"]: {k: v for k, v in row.items() if k != "element"} for row in rows}
            frame = elements_frame([row["element"] for row in rows], extra)
            self.console.print(to_csv(frame), markup=False, highlight=False, soft_wrap=True, end="")
            return EXIT_OK

        table = Table(title=f"{'BG' if include_bg else 'JI'}(s, t) en {system.tag}")
        for column in ("s", "t", "Elemento", "ℓ", "Clase", "JI"):
            table.add_column(column)
        for row in rows:
            kind = f"{row['kind']}{row['k']}" if row["kind"] else ""
            table.add_row(row["s"], row["t"], escape(text_of(row["element"])), str(row["element"].length),
                          kind, "✓" if row["join_irreducible"] else "")
        self.console.print(table)
        self.console.print(f"[bold green]{sum(len(v) for v in ji.values())} join-irreducibles en "
                           f"{len(pairs)} pares de descensos.[/bold green]")
        return EXIT_OK

    def run_poset(self, descriptor: str, s: str, t: str, include_bg: bool = False, fmt: str = "text",
                  budget: int = DEFAULT_DESCENT_BUDGET, as_json: bool = False) -> int:
        system = build_system(descriptor)
        _pairs(system, s, t)
        context = SocleContext(system, budget)
        poset = context.poset(s, t, include_bg)
        if fmt == "dot" and not as_json:
            self.console.print(poset_to_dot(poset), markup=False, highlight=False, soft_wrap=True)
            return EXIT_OK

        stats = context.statistics(s, t)
        nodes = []
        for x in poset.elements:
            node = poset.node(x)
            skal, skbl = stats.get(x, (None, None))
            nodes.append({"element": text_of(x), "length": x.length, "kind": node.get("kind"), "k": node.get("k"),
                          "join_irreducible": node.get("join_irreducible"), "skal": skal, "skbl": skbl})
        edges = [{"from": text_of(x), "to": text_of(y), "socle_killing": poset.socle_killing(x, y)}
                 for x, y in poset.edges()]
        if fmt == "json" or as_json:
            return print_json(self.console, {"type": system.tag, "s": s, "t": t, "nodes": nodes, "edges": edges})

        table = Table(title=f"{'BG' if include_bg else 'JI'}({s},{t}) en {system.tag}")
        for column in ("Elemento", "ℓ", "Clase", "skal", "skbl"):
            table.add_column(column)
        for node in nodes:
            kind = f"{node['kind']}{node['k']}" if node["kind"] else ""
            table.add_row(escape(node["element"]), str(node["length"]), kind,
                          "" if node["skal"] is None else str(node["skal"]),
                          "" if node["skbl"] is None else str(node["skbl"]))
        self.console.print(table)
        for edge in edges:
            arrow = "━▶" if edge["socle_killing"] else "┄▶"
            self.console.print(f"  {escape(edge['from'])} {arrow} {escape(edge['to'])}")
        return EXIT_OK
