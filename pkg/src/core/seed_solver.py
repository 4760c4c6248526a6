#!/usr/bin/env python3
"""
🌱 Derivación de tablas de la celda penúltima a partir de una semilla parametrizada, con CP-SAT.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from ortools.sat.python import cp_model

from src.core.cells import Cell, CellAtlas, PropagationResult, propagate_from_seed, recursion_relations
from src.core.coxeter import GroupElement
from src.core.laurent import LaurentPoly, LinearExpr
from src.utils.config import DEFAULT_SEED_COEFFICIENT_BOUND
from src.utils.errors import DerivationError, PreconditionError

MAX_REPORTED_SOLUTIONS = 32

E8_SEED_CELL: Cell = ("1", "8")

# Celda H unitaria de la semilla en cada tipo E
SEED_CELLS: Dict[str, Cell] = {"E6": ("1", "6"), "E7": ("1", "7"), "E8": E8_SEED_CELL}


class SeedSolutionCollector(cp_model.CpSolverSolutionCallback):
    """Guarda cada solución como diccionario nombre → valor."""

    def __init__(self, variables: Dict[str, cp_model.IntVar], limit: int):
        cp_model.CpSolverSolutionCallback.__init__(self)
        self.__variables = variables
        self.__limit = limit
        self.solutions: List[Dict[str, int]] = []

    def on_solution_callback(self) -> None:
        self.solutions.append({name: self.value(var) for name, var in self.__variables.items()})
        if len(self.solutions) >= self.__limit:
            self.stop_search()


@dataclass
class SeedDerivation:
    cell: Cell
    element: GroupElement
    window: Tuple[int, int]
    seed: LaurentPoly
    propagation: PropagationResult
    solutions: List[LaurentPoly] = field(default_factory=list)
    constraint_count: int = 0
    truncated: bool = False

    @property
    def determined(self) -> bool:
        return len(self.solutions) == 1 and not self.propagation.undetermined

    def values_for(self, solution: LaurentPoly) -> Dict[GroupElement, LaurentPoly]:
        index = self.solutions.index(solution)
        assignment = self._assignments[index]
        return {y: p.evaluate(assignment) for y, p in self.propagation.values.items()}

    _assignments: List[Dict[str, int]] = field(default_factory=list, repr=False)


def parametrised_seed(length: int, low: int) -> Tuple[LaurentPoly, List[str]]:
    """v^ℓ + Σ c_e v^e con e ≡ ℓ (mod 2) y low ≤ e ≤ ℓ-2."""
    terms: Dict[int, object] = {length: 1}
    names = []
    for exponent in range(length - 2, low - 1, -2):
        name = f"c{exponent}"
        names.append(name)
        terms[exponent] = LinearExpr.variable(name)
    return LaurentPoly(terms), names


class _ModelBuilder:
    def __init__(self, names: List[str], bound: int, lower: int = 0):
        self.model = cp_model.CpModel()
        self.variables = {name: self.model.new_int_var(lower, bound, name) for name in names}
        self.count = 0
        self.infeasible = False

    def _expr(self, value):
        if isinstance(value, LinearExpr):
            return sum((c * self.variables[n] for n, c in value.coeffs.items()), value.const)
        return int(value)

    def equal(self, value, target: int) -> None:
        if isinstance(value, LinearExpr) and not value.is_constant():
            self.model.add(self._expr(value) == target)
            self.count += 1
        elif (value.const if isinstance(value, LinearExpr) else int(value)) != target:
            self.infeasible = True

    def at_least(self, value, target: int) -> None:
        if isinstance(value, LinearExpr) and not value.is_constant():
            self.model.add(self._expr(value) >= target)
            self.count += 1
        elif (value.const if isinstance(value, LinearExpr) else int(value)) < target:
            self.infeasible = True

    def nonnegative(self, poly: LaurentPoly) -> None:
        for _, c in poly.items():
            self.at_least(c, 0)


def _as_expr(value) -> LinearExpr:
    return value if isinstance(value, LinearExpr) else LinearExpr(const=int(value))


def derive_seed(atlas: CellAtlas, cell: Cell, window: Optional[Tuple[int, int]] = None,
                bound: int = DEFAULT_SEED_COEFFICIENT_BOUND,
                limit: int = MAX_REPORTED_SOLUTIONS) -> SeedDerivation:
    """Parametriza p_{e,y} en una celda H unitaria, propaga y enumera las semillas admisibles."""
    members = atlas.cells.get(cell)
    if not members or len(members) != 1:
        raise PreconditionError(f"La semilla debe ser una celda H unitaria; {cell} no lo es")
    (element,) = members
    low, high = window or (atlas.a_value, element.length)
    if high != element.length or low < atlas.a_value:
        raise PreconditionError(f"Ventana [{low}, {high}] incompatible con ℓ = {element.length}")
    seed, names = parametrised_seed(element.length, low)
    relations = recursion_relations(atlas)
    propagation = propagate_from_seed(atlas, {element: seed}, relations, symbolic=True)

    builder = _ModelBuilder(names, bound)
    for expr, _ in propagation.constraints:
        builder.equal(expr, 0)

    values = propagation.values
    a = atlas.a_value
    for y, p in values.items():
        builder.nonnegative(p)
        builder.equal(p.coefficient(y.length), 1)
        for e, c in p.items():
            if e > y.length or e < a or (e - y.length) % 2:
                builder.equal(c, 0)
        if not atlas.is_diagonal(y):
            builder.equal(p.coefficient(a), 0)

    for label in atlas.duflo_candidates:
        diagonal = atlas.cells.get((label, label), ())
        if diagonal and all(y in values for y in diagonal):
            total = sum((_as_expr(values[y].coefficient(a)) for y in diagonal), LinearExpr())
            builder.equal(total, 1)

    for relation in relations:
        if not relation.diagonal or not all(t in values for t in (relation.subject,) + relation.terms()):
            continue
        p = values[relation.subject]
        q = relation.rhs(values) - p.shift(1)
        builder.nonnegative(q)
        builder.nonnegative(p - q.shift(1))
        builder.at_least(_as_expr(p.value_at_one()) - _as_expr(q.value_at_one()), 0)

    derivation = SeedDerivation(cell, element, (low, high), seed, propagation, constraint_count=builder.count)
    if builder.infeasible:
        return derivation

    collector = SeedSolutionCollector(builder.variables, limit)
    solver = cp_model.CpSolver()
    solver.parameters.enumerate_all_solutions = True
    solver.solve(builder.model, collector)
    derivation._assignments = collector.solutions
    derivation.solutions = [seed.evaluate(s) for s in collector.solutions]
    derivation.truncated = len(collector.solutions) >= limit
    return derivation


def e8_seed_solver(atlas: CellAtlas, bound: int = DEFAULT_SEED_COEFFICIENT_BOUND) -> LaurentPoly:
    """Única semilla p_{e,w18} de E8 compatible con todas las restricciones."""
    if atlas.system.tag != "E8":
        raise PreconditionError(f"e8_seed_solver necesita E8, no {atlas.system.tag}")
    derivation = derive_seed(atlas, E8_SEED_CELL, bound=bound)
    if len(derivation.solutions) != 1:
        raise DerivationError(
            f"Se esperaba una única semilla y se obtuvieron {len(derivation.solutions)}"
        )
    seed = derivation.solutions[0]
    symbolic = e8_seed_derivation(bound)
    problems = symbolic.problems() + e8_seed_checks(seed, symbolic)
    if problems:
        raise DerivationError("; ".join(problems))
    return seed


def alternating_seed_sum(seed: LaurentPoly, top: int, terms: int = 7):
    """a₁ - a₂ + ... ± a_terms con a_i = coeficiente de v^(top-2i)."""
    total = 0
    for i in range(1, terms + 1):
        c = seed.coefficient(top - 2 * i)
        total = total + c if i % 2 else total - c
    return total


def e8_intermediate_identities(atlas: CellAtlas, values: Mapping[GroupElement, LaurentPoly]) -> List[str]:
    """Comprueba p₈₈ = (v⁶-1+v⁻⁶)p₁₈ y (v+v⁻¹)p₇₈ = (v⁶+v⁴-1+v⁻⁴+v⁻⁶)p₁₈."""
    p18 = values[atlas.member(E8_SEED_CELL, "w")]
    p78 = values[atlas.member(("7", "8"), "w")]
    p88 = values[atlas.member(("8", "8"), "w")]
    problems = []
    if p88 != LaurentPoly({6: 1, 0: -1, -6: 1}) * p18:
        problems.append("p88 ≠ (v^6 - 1 + v^-6)·p18")
    if LaurentPoly.v_plus_vinv * p78 != LaurentPoly({6: 1, 4: 1, 0: -1, -4: 1, -6: 1}) * p18:
        problems.append("(v+v^-1)·p78 ≠ (v^6+v^4-1+v^-4+v^-6)·p18")
    return problems


# Derivación simbólica de p₁₈ en E8, sin tabla

E8_SEED_TOP = 113
E8_SEED_BOTTOM = 97
E8_SEED_TERMS = 7
# p₈₈ - v·p_{8,w₈₈} = N/(v⁶(v²+1))·p₁₈ - v¹²¹
E8_NUMERATOR = LaurentPoly({16: 1, 14: 1, 10: -1, 8: -1, 6: -1, 2: 1, 0: 1})
E8_CANCELLED_TOP = 121


def _form(const: int = 0, **coeffs: int) -> LinearExpr:
    return LinearExpr(coeffs, const)


# Exponente en N·q - v¹²¹, condición sobre los b_i y condición equivalente sobre los a_i
E8_CONDITIONS: List[Tuple[int, LinearExpr, LinearExpr]] = [
    (115, _form(-1, b2=1, b3=1), _form(-1, a3=1)),
    (113, _form(-1, b1=-1, b3=1, b4=1), _form(0, a4=1, a1=-1)),
    (111, _form(-1, b1=-1, b2=-1, b4=1, b5=1), _form(-1, a5=1, a2=-1)),
    (109, _form(0, b1=-1, b2=-1, b3=-1, b5=1, b6=1), _form(1, a6=1, a1=-1, a3=-1)),
    (107, _form(2, b2=-1, b3=-1, b4=-1, b6=1), _form(0, a1=1, a7=1, a2=-1, a4=-1)),
    (105, _form(2, b1=1, b3=-1, b4=-1, b5=-1), _form(2, a2=1, a3=-1, a5=-1)),
    (103, _form(0, b1=1, b2=1, b4=-1, b5=-1, b6=-1), _form(1, a2=1, a5=-1, a7=-1)),
    (101, _form(-1, b2=1, b3=1, b5=-1, b6=-1), _form(-1, a3=1, a6=-1)),
    (99, _form(-1, b3=1, b4=1, b6=-1), _form(0, a4=1, a7=-1)),
    (97, _form(-1, b4=1, b5=1), _form(-1, a5=1)),
]

E8_EXPECTED_COEFFICIENTS = {"a1": 0, "a2": 0, "a3": 1, "a4": 0, "a5": 1, "a6": 0, "a7": 0}


def _substitute(expr: LinearExpr, mapping: Mapping[str, LinearExpr]) -> LinearExpr:
    return sum((_as_expr(mapping[name]) * c for name, c in expr.coeffs.items()), LinearExpr(const=expr.const))


def _equivalent(left: LinearExpr, right: LinearExpr, relation: LinearExpr) -> bool:
    """left - right es múltiplo entero de la relación."""
    diff = left - right
    if not diff:
        return True
    if relation.is_constant():
        return False
    pivot = relation.variables()[0]
    factor, rest = divmod(diff.coeffs.get(pivot, 0), relation.coeffs[pivot])
    return rest == 0 and diff == relation * factor


@dataclass
class InequalityCheck:
    """Una condición de no negatividad de N·q - v¹²¹, vista en los b_i y en los a_i."""

    exponent: int
    b_form: LinearExpr
    a_form: LinearExpr
    derived: LinearExpr = field(default_factory=LinearExpr)
    equivalent: bool = False
    value: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.derived == self.b_form and self.equivalent and self.value is not None and self.value >= 0

    @property
    def tight(self) -> bool:
        return self.value == 0

    def describe(self) -> str:
        return f"[v^{self.exponent}] {self.b_form} ≥ 0 ⇔ {self.a_form} ≥ 0"

    def to_dict(self) -> Dict[str, object]:
        return {
            "exponent": self.exponent,
            "b_form": repr(self.b_form),
            "a_form": repr(self.a_form),
            "derived": repr(self.derived),
            "equivalent": self.equivalent,
            "value": self.value,
            "holds": self.holds,
        }


@dataclass
class E8SeedDerivation:
    seed: LaurentPoly
    relations: List[LinearExpr]
    b_of_a: Dict[str, LinearExpr]
    a_of_b: Dict[str, LinearExpr]
    checks: List[InequalityCheck]
    extra: List[str] = field(default_factory=list)
    solutions: List[Dict[str, int]] = field(default_factory=list)
    truncated: bool = False

    @property
    def determined(self) -> bool:
        return len(self.solutions) == 1 and not self.truncated

    @property
    def relation(self) -> LinearExpr:
        return self.relations[0] if self.relations else LinearExpr()

    def polynomial(self) -> Optional[LaurentPoly]:
        return self.seed.evaluate(self.solutions[0]) if self.determined else None

    def check(self, exponent: int) -> InequalityCheck:
        for check in self.checks:
            if check.exponent == exponent:
                return check
        raise KeyError(exponent)

    def problems(self) -> List[str]:
        problems = []
        if len(self.relations) != 1:
            problems.append(f"Se esperaba una relación de divisibilidad y hay {len(self.relations)}")
        for check in self.checks:
            if not check.holds:
                problems.append(f"{check.describe()}: derivada {check.derived}, valor {check.value}")
        problems += self.extra
        if not self.determined:
            problems.append(f"{len(self.solutions)} soluciones para (a₁, …, a₇)")
        elif self.solutions[0] != E8_EXPECTED_COEFFICIENTS:
            problems.append(f"Solución inesperada {self.solutions[0]}")
        return problems


def e8_seed_derivation(bound: int = DEFAULT_SEED_COEFFICIENT_BOUND,
                       limit: int = MAX_REPORTED_SOLUTIONS) -> E8SeedDerivation:
    """
    p₁₈ = v¹¹³ + a₁v¹¹¹ + … + a₇v⁹⁹ + v⁹⁷ con a_i ≥ 0.

    La divisibilidad por v⁶(v²+1) fija la relación alterna entre los a_i; el cociente
    v¹⁰⁵ + b₁v¹⁰³ + … + b₆v⁹³ + v⁹¹ reparametriza la semilla y la no negatividad de
    N·q - v¹²¹ da las condiciones de E8_CONDITIONS. CP-SAT enumera las soluciones.
    """
    a_names = [f"a{i}" for i in range(1, E8_SEED_TERMS + 1)]
    b_names = [f"b{i}" for i in range(1, E8_SEED_TERMS)]
    seed = LaurentPoly.monomial(E8_SEED_TOP) + LaurentPoly.monomial(E8_SEED_BOTTOM) + LaurentPoly(
        {E8_SEED_TOP - 2 * i: LinearExpr.variable(name) for i, name in enumerate(a_names, 1)}
    )

    # v⁶(v²+1) = v⁷(v+v⁻¹)
    quotient, remainder = seed.shift(-7).divmod_v_plus_vinv()
    relations = [_as_expr(c) for _, c in remainder.items() if c]
    q_top = E8_SEED_TOP - 8
    b_of_a = {name: _as_expr(quotient.coefficient(q_top - 2 * i)) for i, name in enumerate(b_names, 1)}

    q = LaurentPoly.monomial(q_top) + LaurentPoly.monomial(E8_SEED_BOTTOM - 6) + LaurentPoly(
        {q_top - 2 * i: LinearExpr.variable(name) for i, name in enumerate(b_names, 1)}
    )
    lifted = q * LaurentPoly({8: 1, 6: 1})
    a_of_b = {name: _as_expr(lifted.coefficient(E8_SEED_TOP - 2 * i)) for i, name in enumerate(a_names, 1)}
    extra = []
    for exponent in (E8_SEED_TOP, E8_SEED_BOTTOM):
        if _as_expr(lifted.coefficient(exponent)) != LinearExpr(const=1):
            extra.append(f"El cociente no devuelve v^{exponent} con coeficiente 1")

    relation = relations[0] if relations else LinearExpr()
    residual = E8_NUMERATOR * q - LaurentPoly.monomial(E8_CANCELLED_TOP)
    tabled = {exponent for exponent, _, _ in E8_CONDITIONS}
    a_variables = [LinearExpr.variable(name) for name in a_names]
    builder = _ModelBuilder(b_names, bound, lower=-bound)
    for exponent, c in residual.items():
        expr = _as_expr(c)
        builder.at_least(expr, 0)
        if exponent in tabled or expr.is_constant():
            continue
        in_a = _substitute(expr, b_of_a)
        if not any(_equivalent(in_a, a, relation) for a in a_variables):
            extra.append(f"[v^{exponent}] {expr} ≥ 0 no figura entre las condiciones")
    for name in a_names:
        builder.at_least(a_of_b[name], 0)
        builder.at_least(_form(bound) - a_of_b[name], 0)

    checks = []
    for exponent, b_form, a_form in E8_CONDITIONS:
        derived = _as_expr(residual.coefficient(exponent))
        equivalent = _equivalent(_substitute(b_form, b_of_a), a_form, relation)
        checks.append(InequalityCheck(exponent, b_form, a_form, derived, equivalent))

    derivation = E8SeedDerivation(seed, relations, b_of_a, a_of_b, checks, extra)
    if builder.infeasible:
        return derivation

    collector = SeedSolutionCollector(builder.variables, limit)
    solver = cp_model.CpSolver()
    solver.parameters.enumerate_all_solutions = True
    solver.solve(builder.model, collector)
    derivation.solutions = [{name: a_of_b[name].value(s) for name in a_names} for s in collector.solutions]
    derivation.truncated = len(collector.solutions) >= limit
    if len(collector.solutions) == 1:
        for check in checks:
            check.value = check.b_form.value(collector.solutions[0])
    return derivation


def e8_seed_checks(seed: LaurentPoly, derivation: E8SeedDerivation) -> List[str]:
    """Contrasta una semilla numérica con la relación de divisibilidad y cada condición."""
    problems = []
    expected = {E8_SEED_TOP - 2 * i for i in range(0, E8_SEED_TERMS + 2)}
    if seed.is_symbolic() or set(seed.exponents()) - expected:
        return [f"{seed} no tiene la forma v¹¹³ + a₁v¹¹¹ + … + v⁹⁷"]
    if seed.coefficient(E8_SEED_TOP) != 1 or seed.coefficient(E8_SEED_BOTTOM) != 1:
        problems.append(f"{seed} no empieza en v^{E8_SEED_TOP} ni acaba en v^{E8_SEED_BOTTOM} con coeficiente 1")
    a = {f"a{i}": seed.coefficient(E8_SEED_TOP - 2 * i) for i in range(1, E8_SEED_TERMS + 1)}
    if derivation.relation.value(a) != 0:
        problems.append(f"{seed} no es divisible por v⁶(v²+1)")
    b = {name: expr.value(a) for name, expr in derivation.b_of_a.items()}
    for check in derivation.checks:
        value = check.b_form.value(b)
        if value < 0:
            problems.append(f"{check.describe()} falla en la semilla: {value}")
    if derivation.determined and seed != derivation.polynomial():
        problems.append(f"{seed} ≠ {derivation.polynomial()}")
    return problems
