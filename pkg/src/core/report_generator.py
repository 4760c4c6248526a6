#!/usr/bin/env python3
"""
🌱 Emisión de resultados: JSON, CSV con pandas, DOT con pydot e informes Markdown de suites.
"""

import json
from typing import Dict, Iterable, List, Optional

import networkx as nx
import pandas as pd
from networkx.drawing.nx_pydot import to_pydot

from src.core.bruhat import BruhatOracle
from src.core.cells import CellAtlas, PenultimatePolynomialSet
from src.core.coxeter import GroupElement
from src.core.ji_catalog import JIPoset, hasse_graph
from src.core.suites import SuiteResult
from src.utils.helpers import create_report_path_with_date, ensure_directory_exists

STATUS_ICONS = {"pass": "✅", "fail": "❌", "skipped-budget": "⏭️", "not-attempted-stretch": "⏸️",
                "documented-discrepancy": "📝"}


def to_json(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2, sort_keys=True)


PENULTIMATE_COLUMNS = ["s", "t", "member", "element", "length", "polynomial", "value_at_one"]


def penultimate_rows(assignment: PenultimatePolynomialSet) -> List[Dict]:
    """Una fila por y ∈ J: celda, miembro, palabra, longitud, p_e,y y p_e,y(1); None si no está determinado."""
    atlas = assignment.atlas
    rows = []
    for s, t in atlas.cell_list():
        for y in atlas.cells[(s, t)]:
            poly = assignment.values.get(y)
            rows.append({
                "s": s,
                "t": t,
                "member": atlas.member_name(y),
                "element": y.text(),
                "length": y.length,
                "polynomial": str(poly) if poly is not None else None,
                "value_at_one": poly.value_at_one() if poly is not None else None,
            })
    return rows


def penultimate_frame(assignment: PenultimatePolynomialSet) -> pd.DataFrame:
    return pd.DataFrame(penultimate_rows(assignment), columns=PENULTIMATE_COLUMNS)


def elements_frame(elements: Iterable[GroupElement], extra: Optional[Dict[GroupElement, Dict]] = None) -> pd.DataFrame:
    extra = extra or {}
    rows = [{"element": x.text() or "e", "length": x.length, **extra.get(x, {})} for x in elements]
    return pd.DataFrame(rows)


def to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False)


def _dot(graph: nx.DiGraph, name: str) -> str:
    dot = to_pydot(graph)
    dot.set_name(name)
    return dot.to_string()


def poset_to_dot(poset: JIPoset) -> str:
    """Diagrama de Hasse de JI(s, t); las aristas que matan el zócalo son sólidas y el resto discontinuas."""
    graph = nx.DiGraph()
    for x in poset.elements:
        node = poset.node(x)
        label = x.text() or "e"
        if node.get("kind"):
            label += f"\\n{node['kind']}{node['k']}"
        shape = "ellipse" if node.get("join_irreducible") else "box"
        graph.add_node(x.text() or "e", label=label, shape=shape)
    for x, y in poset.edges():
        flag = poset.socle_killing(x, y)
        graph.add_edge(x.text() or "e", y.text(), style="dashed" if flag is False else "solid")
    return _dot(graph, f"JI_{poset.s}_{poset.t}".replace("+", "p").replace("-", "m"))


def penultimate_graph_to_dot(atlas: CellAtlas, oracle: Optional[BruhatOracle] = None) -> str:
    """Grafo de Bruhat de J (aristas de Hasse) y movimientos simples y → uy (aristas rotuladas)."""
    oracle = oracle or BruhatOracle(atlas.system)
    graph = nx.DiGraph()
    for y in atlas.elements:
        s, t = atlas.cell_of[y]
        graph.add_node(y.text(), label=f"{y.text()}\\n{atlas.member_name(y)}{s}{t}")
    for x, y in hasse_graph(atlas.elements, oracle).edges:
        graph.add_edge(x.text(), y.text(), color="black")
    for y, moves in atlas.simple_left_moves.items():
        for label, uy in moves:
            if not graph.has_edge(y.text(), uy.text()):
                graph.add_edge(y.text(), uy.text(), color="blue", style="dashed", label=label)
    return _dot(graph, f"J_{atlas.system.tag}")


class MarkdownSuiteReport:
    """Informe Markdown de una suite en un directorio con fecha."""

    def __init__(self, output_path: str):
        # Crear ruta con subdirectorio de fecha y manejo de duplicados
        self.output_path, self.dated_directory = create_report_path_with_date(output_path)

    def generate_report(self, result: SuiteResult) -> str:
        ensure_directory_exists(self.output_path)
        counts = result.counts()
        lines: List[str] = [
            f"# Suite `{result.name}`",
            "",
            f"- Resultado: **{'correcto' if result.passed else 'con fallos'}**",
            f"- Tiempo total: {result.elapsed:.2f} s",
            "- Recuento: " + ", ".join(f"{status} {count}" for status, count in counts.items()),
            "",
            "| Comprobación | Estado | Detalle | Tiempo (s) |",
            "|---|---|---|---|",
        ]
        for check in result.checks:
            detail = check.detail.replace("|", "\\|").replace("\n", " ")
            icon = STATUS_ICONS.get(check.status, "")
            lines.append(f"| `{check.check_id}` | {icon} {check.status} | {detail} | {check.elapsed:.2f} |")
        content = "\n".join(lines) + "\n"

        with open(self.output_path, "w", encoding="utf-8") as f:
            f.write(content)

        return content
