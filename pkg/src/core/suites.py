#!/usr/bin/env python3
"""
🌱 Suites de verificación con nombre: registro de comprobaciones y ejecución en paralelo.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from rich.console import Console
from rich.progress import BarColumn, Progress, TextColumn, TimeElapsedColumn

from src.core.bruhat import BruhatOracle
from src.core.cells import (
    assignment_from_table,
    build_atlas,
    closed_form_assignment,
    octahedron_count_B,
    octahedron_formula,
    propagate_from_seed,
    sz_relation_violations,
    verify_table,
)
from src.core.counterexamples import LEDGERS, Ledger, jm_double_prime_search
from src.core.coxeter import CoxeterSystem, build_system, element_from_word, enumerate_group
from src.core.fixtures import figure_fixture, kl_table_fixture, verify_manifest
from src.core.hecke import IntervalKL, KLTable, bar_invariance_violations, check_table_invariants, kl_table
from src.core.ji_catalog import (
    all_bigrassmannians,
    all_join_irreducibles,
    compare_with_figure,
    is_dissector,
    jm_sets,
    join_irreducibles,
    verify_generated_relations,
)
from src.core.laurent import LaurentPoly
from src.core.seed_solver import (
    E8_SEED_CELL,
    E8_CONDITIONS,
    SEED_CELLS,
    alternating_seed_sum,
    derive_seed,
    e8_intermediate_identities,
    e8_seed_derivation,
    e8_seed_solver,
)
from src.core.socle import (
    E6_OPEN_ELEMENT,
    SocleContext,
    chain_certificate,
    check_multiplicity_free,
    forced_multiplicity_problems,
    intersection_check,
    socle_closed_form,
)
from src.utils.config import (
    DEFAULT_RANDOM_SAMPLES,
    DEFAULT_RANDOM_SEED,
    DEFAULT_WORKERS,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    STATUS_DISCREPANCY,
    STATUS_FAIL,
    STATUS_NOT_ATTEMPTED,
    STATUS_PASS,
    STATUS_SKIPPED_BUDGET,
)
from src.utils.errors import BruhatError, BudgetExceededError, PreconditionError

Outcome = Union[Tuple[bool, str], Ledger]

E8_SEED = "v^113+v^107+v^103+v^97"
MAX_LISTED_PROBLEMS = 5


@dataclass
class CheckResult:
    check_id: str
    status: str
    detail: str = ""
    elapsed: float = 0.0

    def to_dict(self) -> Dict:
        return {"id": self.check_id, "status": self.status, "detail": self.detail,
                "elapsed": round(self.elapsed, 3)}


@dataclass
class SuiteResult:
    name: str
    checks: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != STATUS_FAIL for c in self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_CHECK_FAILED

    def counts(self) -> Dict[str, int]:
        counts = {status: 0 for status in (STATUS_PASS, STATUS_FAIL, STATUS_SKIPPED_BUDGET, STATUS_NOT_ATTEMPTED,
                                           STATUS_DISCREPANCY)}
        for check in self.checks:
            counts[check.status] += 1
        return counts

    def to_dict(self) -> Dict:
        return {"suite": self.name, "passed": self.passed, "elapsed": round(self.elapsed, 3),
                "counts": self.counts(), "checks": [c.to_dict() for c in self.checks]}


@dataclass(frozen=True)
class Check:
    check_id: str
    run: Callable[[bool], Outcome]
    stretch: bool = False


# Utilidades compartidas entre comprobaciones

@lru_cache(maxsize=None)
def _system(tag: str) -> CoxeterSystem:
    return build_system(tag)


@lru_cache(maxsize=None)
def _table(tag: str) -> KLTable:
    return kl_table(enumerate_group(_system(tag)))


@lru_cache(maxsize=None)
def _context(tag: str) -> SocleContext:
    return SocleContext(_system(tag))


def _problems(problems: Sequence[str], ok_detail: str) -> Tuple[bool, str]:
    if not problems:
        return True, ok_detail
    listed = "; ".join(problems[:MAX_LISTED_PROBLEMS])
    if len(problems) > MAX_LISTED_PROBLEMS:
        listed += f" (+{len(problems) - MAX_LISTED_PROBLEMS} más)"
    return False, listed


def _cell_pairs(system: CoxeterSystem) -> List[Tuple[str, str]]:
    return [(s, t) for s in system.labels for t in system.labels]


# Fórmulas cerradas de tipo B y D

def _closed_form_vs_engine(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        expected = closed_form_assignment(build_atlas(system)).values
        engine = IntervalKL(system)
        wrong = []
        for y, poly in expected.items():
            computed = engine.polynomial(system.identity, y)
            if computed != poly:
                wrong.append(f"p_e,{y.text()} = {computed} ≠ {poly}")
        return _problems(wrong, f"{len(expected)} elementos de J coinciden con el motor")
    return run


def _closed_form_vs_table(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        expected = closed_form_assignment(build_atlas(system)).values
        table = _table(tag)
        wrong = [f"p_e,{y.text()} = {table.polynomial(system.identity, y)} ≠ {poly}"
                 for y, poly in expected.items() if table.polynomial(system.identity, y) != poly]
        return _problems(wrong, f"{len(expected)} elementos de J coinciden con la tabla completa")
    return run


def _octahedron(n: int) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        count, formula = octahedron_count_B(n), octahedron_formula(n)
        return count == formula, f"Σ p_e,w(1) = {count}, fórmula {formula}"
    return run


# Tablas transcritas y derivaciones

def _verify_table(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        result = verify_table(build_atlas(_system(tag)), kl_table_fixture(tag))
        return _problems(result.violations, f"{len(result.entries)} entradas verificadas")
    return run


def _regenerate(tag: str, cell: Tuple[str, str]) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        atlas = build_atlas(_system(tag))
        table = assignment_from_table(atlas, kl_table_fixture(tag)["entries"]).values
        seed = atlas.member(cell, "w")
        result = propagate_from_seed(atlas, {seed: table[seed]})
        wrong = [f"{y.text()}: {p} ≠ {table[y]}" for y, p in result.values.items() if p != table[y]]
        wrong += result.violations
        detail = f"{len(result.values)} entradas regeneradas, {len(result.undetermined)} sin determinar"
        return _problems(wrong, detail)
    return run


def _seed_determined(tag: str, cell: Tuple[str, str]) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        derivation = derive_seed(build_atlas(_system(tag)), cell)
        if derivation.determined:
            return True, f"semilla forzada: {derivation.solutions[0]}"
        return True, f"{len(derivation.solutions)} semillas admisibles; la tabla no queda forzada"
    return run


def _e8_seed(stretch: bool) -> Outcome:
    seed = e8_seed_solver(build_atlas(_system("E8")))
    return seed == LaurentPoly.parse(E8_SEED), f"p_18 = {seed}"


def _e8_alternating(stretch: bool) -> Outcome:
    seed = e8_seed_solver(build_atlas(_system("E8")))
    total = alternating_seed_sum(seed, seed.max_degree())
    return total == 2, f"a₁ - a₂ + … + a₇ = {total}"


@lru_cache(maxsize=None)
def _e8_symbolic():
    return e8_seed_derivation()


def _e8_divisibility(stretch: bool) -> Outcome:
    derivation = _e8_symbolic()
    relations = " ; ".join(f"{r} = 0" for r in derivation.relations)
    return len(derivation.relations) == 1, f"v⁶(v²+1) divide a p₁₈ ⇔ {relations}"


def _e8_inequality(exponent: int) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        check = _e8_symbolic().check(exponent)
        return check.holds, f"{check.describe()}; valor {check.value}"
    return run


def _e8_symbolic_seed(stretch: bool) -> Outcome:
    derivation = _e8_symbolic()
    return _problems(derivation.problems(), f"p₁₈ = {derivation.polynomial()}")


def _e8_regeneration(stretch: bool) -> Outcome:
    atlas = build_atlas(_system("E8"))
    seed = e8_seed_solver(atlas)
    result = propagate_from_seed(atlas, {atlas.member(E8_SEED_CELL, "w"): seed})
    table = assignment_from_table(atlas, kl_table_fixture("E8")["entries"]).values
    problems = e8_intermediate_identities(atlas, result.values)
    problems += [f"{y.text()}: {p} ≠ {table[y]}" for y, p in result.values.items() if p != table[y]]
    problems += [f"{y.text()} sin determinar" for y in result.undetermined]
    return _problems(problems, f"{len(result.values)} entradas coinciden con la tabla")


# Tablas KL completas

def _full_kl(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        table = _table(tag)
        problems = check_table_invariants(table) + bar_invariance_violations(table)
        return _problems(problems, f"{len(table)} columnas verificadas")
    return run


def _sz_relations(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        atlas = build_atlas(_system(tag))
        return _problems(sz_relation_violations(_table(tag), atlas), f"identidades en {len(atlas.elements)} y ∈ J")
    return run


# Estructura de los join-irreducibles

def _ji_equals_bg(tag: str, strict: bool) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        ji, bg = set(all_join_irreducibles(system)), set(all_bigrassmannians(system))
        detail = f"|JI| = {len(ji)}, |BG| = {len(bg)}"
        return (ji < bg if strict else ji == bg), detail
    return run


def _dissective(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        elements = enumerate_group(system).elements
        oracle = BruhatOracle(system)
        ji = all_join_irreducibles(system)
        failing = [x.text() for x in ji if not is_dissector(x, elements, oracle)]
        return _problems([f"{w} no es disector" for w in failing], f"{len(ji)} join-irreducibles son disectores")
    return run


def b_ji_count(n: int, i: int, j: int) -> int:
    """|JI(i, j)| en B_{n+1}."""
    high = max(i, j)
    return n + 1 - high if min(i, j) == 0 else 2 * (n + 1 - high)


def _b_counts(n: int) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(f"B{n + 1}")
        wrong = []
        for s, t in _cell_pairs(system):
            found, expected = len(join_irreducibles(system, s, t)), b_ji_count(n, int(s), int(t))
            if found != expected:
                wrong.append(f"|JI({s},{t})| = {found} ≠ {expected}")
        return _problems(wrong, "cardinales de JI(i,j) correctos")
    return run


def _generated(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        wrong = []
        for s, t in _cell_pairs(system):
            report = verify_generated_relations(system, s, t)
            if not report.passed:
                wrong.append(f"JI({s},{t}): {len(report.missing)} ausentes, {len(report.extra)} sobrantes, "
                             f"{len(report.differences)} relaciones distintas")
        return _problems(wrong, "las relaciones generadoras reproducen el orden de Bruhat")
    return run


def _figures(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        context = _context(tag)
        posets = figure_fixture(tag)["posets"]
        wrong = []
        for key, figure in sorted(posets.items()):
            s, t = key.split(",")
            comparison = compare_with_figure(context.poset(s, t), figure)
            if not comparison.passed:
                wrong.append(f"JI({key}): nodos -{len(comparison.missing_nodes)}/+{len(comparison.extra_nodes)}, "
                             f"aristas -{len(comparison.missing_edges)}/+{len(comparison.extra_edges)}, "
                             f"flechas {len(comparison.flag_mismatches)}")
        return _problems(wrong, f"{len(posets)} diagramas coinciden")
    return run


# Expresiones de join

def _join_of_jm(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        oracle = BruhatOracle(system)
        elements = enumerate_group(system).elements
        wrong = [w.text() for w in elements if not jm_sets(w, oracle, include_prime=False).jm_join_ok]
        return _problems([f"⋁JM({w}) ≠ w" for w in wrong], f"⋁JM(w) = w para los {len(elements)} elementos")
    return run


def _jm_equals_jm_prime(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        oracle = BruhatOracle(system)
        elements = enumerate_group(system).elements
        wrong = []
        for w in elements:
            sets = jm_sets(w, oracle, check_joins=False)
            if set(sets.jm) != set(sets.jm_prime):
                wrong.append(f"JM({w.text()}) ≠ JM'({w.text()})")
        return _problems(wrong, f"JM = JM' en los {len(elements)} elementos")
    return run


def _jm_double_prime(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        failures = jm_double_prime_search(_system(tag))
        return _problems([f"⋁JM''({w.text()}) ≠ w" for w in failures], "⋁JM''(w) = w en todo el grupo")
    return run


def _random_e6(samples: int = DEFAULT_RANDOM_SAMPLES, seed: int = DEFAULT_RANDOM_SEED) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system("E6")
        elements = enumerate_group(system).elements
        oracle = BruhatOracle(system)
        rng = np.random.default_rng(seed)
        picks = rng.choice(len(elements), size=samples, replace=True)
        wrong = [elements[i].text() for i in picks if not jm_sets(elements[i], oracle, include_prime=False).jm_join_ok]
        return _problems([f"⋁JM({w}) ≠ w" for w in wrong], f"{samples} muestras aleatorias (semilla {seed})")
    return run


# Criterio de intersección

def _intersection(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        system = _system(tag)
        table = _table(tag)
        atlas = build_atlas(system)
        check_multiplicity_free(table, atlas)
        oracle = BruhatOracle(system)
        wrong = []
        for w in table.group.elements:
            verdict = intersection_check(w, table, atlas, oracle, verified=True)
            if not verdict.passed:
                wrong.append(verdict.describe())
        return _problems(wrong, f"criterio válido para los {len(table.group)} elementos")
    return run


# Zócalos

def _chains(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        context = _context(tag)
        wrong, by_table = [], []
        for s, t in context.atlas.cell_list():
            certificate = chain_certificate(context, s, t)
            wrong += [f"({s},{t}): {p}" for p in certificate.problems]
            if certificate.fallback:
                by_table.append(f"({s},{t})")
        detail = f"cadenas de longitud p_st(1) en las {len(context.atlas.cells)} celdas"
        if by_table:
            detail += f"; por tabla de zócalos: {', '.join(by_table)}"
        return _problems(wrong, detail)
    return run


def _socle_forms(tag: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        context = _context(tag)
        wrong = []
        checked = 0
        for s, t in context.atlas.cell_list():
            for x in context.poset(s, t).elements:
                report = socle_closed_form(x, context)
                checked += 1
                wrong += [f"{x.text()}: {p}" for p in report.consistency_problems(context.atlas)]
                if report.alternatives and len(report.alternatives) != 2:
                    wrong.append(f"{x.text()}: {len(report.alternatives)} alternativas")
            wrong += [f"({s},{t}): {p}" for p in forced_multiplicity_problems(context, s, t)]
        return _problems(wrong, f"{checked} zócalos dentro de sus ventanas")
    return run


def _e6_open_element(stretch: bool) -> Outcome:
    context = _context("E6")
    report = socle_closed_form(element_from_word(context.system, E6_OPEN_ELEMENT), context)
    options = [" ⊕ ".join(e.describe() for e in option) for option in report.alternatives]
    return len(report.alternatives) == 2, " o ".join(options)


def _manifest(stretch: bool) -> Outcome:
    return _problems(verify_manifest(), "todos los ficheros coinciden con MANIFEST.sha256")


# Libros de contraejemplos

def _ledger(name: str) -> Callable[[bool], Outcome]:
    def run(stretch: bool) -> Outcome:
        return LEDGERS[name](stretch)
    return run


def _build_registry() -> Dict[str, List[Check]]:
    suites: Dict[str, List[Check]] = {}

    def add(suite: str, item: str, run: Callable[[bool], Outcome], stretch: bool = False) -> None:
        suites.setdefault(suite, []).append(Check(f"{suite}/{item}", run, stretch))

    for n in range(1, 6):
        add("b-closed-forms", f"B{n + 1}-motor", _closed_form_vs_engine(f"B{n + 1}"))
    for n in range(1, 4):
        add("b-closed-forms", f"B{n + 1}-tabla", _closed_form_vs_table(f"B{n + 1}"))
    for n in range(1, 7):
        add("b-closed-forms", f"octaedro-B{n + 1}", _octahedron(n))
    for n in range(2, 6):
        add("d-closed-forms", f"D{n + 2}-motor", _closed_form_vs_engine(f"D{n + 2}"))
    add("d-closed-forms", "D4-tabla", _closed_form_vs_table("D4"))

    for tag in ("E6", "E7", "E8", "F4", "G2"):
        add("kl-tables", f"{tag}-tabla", _verify_table(tag))
    for tag, cell in SEED_CELLS.items():
        add("kl-tables", f"{tag}-regeneracion", _regenerate(tag, cell))
    for tag in ("E6", "E7"):
        cell = SEED_CELLS[tag]
        add("kl-tables", f"{tag}-semilla", _seed_determined(tag, cell))
    add("e8-derivation", "semilla", _e8_seed)
    add("e8-derivation", "suma-alternada", _e8_alternating)
    add("e8-derivation", "divisibilidad", _e8_divisibility)
    for exponent, _, _ in E8_CONDITIONS:
        add("e8-derivation", f"desigualdad-v{exponent}", _e8_inequality(exponent))
    add("e8-derivation", "semilla-simbolica", _e8_symbolic_seed)
    add("e8-derivation", "regeneracion", _e8_regeneration)

    for tag in ("A3", "B3", "D4", "G2", "F4"):
        add("full-kl", tag, _full_kl(tag))
    for tag in ("A3", "B3", "D4", "G2", "F4"):
        add("hecke-sz", tag, _sz_relations(tag))

    for tag in ("A2", "A3", "A4", "B3", "G2"):
        add("ji-structure", f"ji-igual-bg-{tag}", _ji_equals_bg(tag, strict=False))
    for tag in ("B4", "D4", "F4"):
        add("ji-structure", f"ji-estricto-{tag}", _ji_equals_bg(tag, strict=True))
    for tag in ("A2", "A3", "A4", "B2", "B3", "B4", "G2"):
        add("ji-structure", f"disectivo-{tag}", _dissective(tag))
    for n in range(1, 4):
        add("ji-structure", f"cardinales-B{n + 1}", _b_counts(n))
        add("ji-structure", f"relaciones-B{n + 1}", _generated(f"B{n + 1}"))
    for tag in ("D4", "D5"):
        add("ji-structure", f"relaciones-{tag}", _generated(tag))
    add("ji-structure", "figuras-F4", _figures("F4"))
    add("ji-structure", "figuras-E6", _figures("E6"))

    for tag in ("B3", "D4", "F4"):
        add("join-expressions", f"join-jm-{tag}", _join_of_jm(tag))
    for tag in ("A3", "B3"):
        add("join-expressions", f"jm-igual-jm-prima-{tag}", _jm_equals_jm_prime(tag))
    for tag in ("A2", "A3", "A4", "B2", "B3", "B4", "D4", "F4", "G2"):
        add("join-expressions", f"jm-doble-prima-{tag}", _jm_double_prime(tag))
    add("join-expressions", "aleatorio-E6", _random_e6())

    add("intersection", "B2", _intersection("B2"))
    add("intersection", "B3", _intersection("B3"))
    add("intersection", "B4", _intersection("B4"), stretch=True)

    for tag in ("B2", "B3", "B4", "B5", "B6", "D4", "D5", "D6", "F4", "G2", "E6"):
        add("socle", f"cadenas-{tag}", _chains(tag))
    for tag in ("B3", "B4", "B5", "D4", "D5", "D6", "F4", "G2", "E6"):
        add("socle", f"zocalos-{tag}", _socle_forms(tag))
    add("socle", "E6-alternativas", _e6_open_element)

    add("fixtures", "manifiesto", _manifest)

    for name in LEDGERS:
        add("counterexamples", name, _ledger(name))
        add(name, "libro", _ledger(name))
    return suites


SUITES: Dict[str, List[Check]] = _build_registry()


def suite_names() -> List[str]:
    return sorted(SUITES)


def _execute(check: Check, stretch: bool) -> List[CheckResult]:
    if check.stretch and not stretch:
        return [CheckResult(check.check_id, STATUS_NOT_ATTEMPTED, "requiere --stretch")]
    start = time.time()
    try:
        outcome = check.run(stretch)
    except BudgetExceededError as exc:
        return [CheckResult(check.check_id, STATUS_SKIPPED_BUDGET, str(exc), time.time() - start)]
    except BruhatError as exc:
        return [CheckResult(check.check_id, STATUS_FAIL, f"{type(exc).__name__}: {exc}", time.time() - start)]
    elapsed = time.time() - start
    if isinstance(outcome, Ledger):
        return [CheckResult(item.item_id, item.status, item.detail, elapsed) for item in outcome.items]
    ok, detail = outcome
    return [CheckResult(check.check_id, STATUS_PASS if ok else STATUS_FAIL, detail, elapsed)]


def run_suite(name: str, workers: int = DEFAULT_WORKERS, stretch: bool = False,
              console: Optional[Console] = None) -> SuiteResult:
    """Ejecuta las comprobaciones de una suite; con console muestra la barra de progreso."""
    if name not in SUITES:
        raise PreconditionError(f"Suite desconocida: {name}. Suites disponibles: {', '.join(suite_names())}")
    checks = SUITES[name]
    result = SuiteResult(name)
    start = time.time()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = [executor.submit(_execute, check, stretch) for check in checks]
        if console is None:
            for future in futures:
                result.checks.extend(future.result())
        else:
            with Progress(
                TextColumn("[bold blue]{task.description}"),
                BarColumn(),
                TextColumn("[bold green]{task.completed}/{task.total}"),
                TimeElapsedColumn(),
                console=console,
            ) as progress:
                task = progress.add_task(f"[bold green]Suite {name}...", total=len(checks))
                for future in futures:
                    result.checks.extend(future.result())
                    progress.update(task, advance=1)
    result.elapsed = time.time() - start
    return result
