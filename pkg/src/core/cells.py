#!/usr/bin/env python3
"""
🌱 Celda pequeña J₁, celda penúltima J = w0·J₁ y los polinomios p_{e,w} para w ∈ J.

Cada y ∈ J vive en la celda H (i, j) con LA(y) = {i} y RA(y) = {j}. Para s = i:
    v·p_{e,y} + p_{s,y} = p_{e,sy} + Σ_{u: uy<y, uy∈J, RA(uy)=RA(y)} p_{e,uy}
con p_{e,w0} = v^{ℓ(w0)}. Fuera de la diagonal p_{s,y} = v⁻¹·p_{e,y}.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Tuple

from src.core.coxeter import LEFT, RIGHT, CoxeterSystem, GroupElement, ascents, has_unique_reduced_word
from src.core.laurent import LaurentPoly, LinearExpr
from src.utils.errors import DerivationError, InvalidIndexError, PreconditionError
from src.utils.helpers import label_sort_key

Cell = Tuple[str, str]


@dataclass
class CellAtlas:
    """Datos combinatorios de J sin cálculo genérico de celdas."""

    system: CoxeterSystem
    j1: List[GroupElement]
    elements: List[GroupElement]
    cells: Dict[Cell, Tuple[GroupElement, ...]]
    cell_of: Dict[GroupElement, Cell]
    a_value: int
    duflo: FrozenSet[GroupElement]
    duflo_candidates: Dict[str, Tuple[GroupElement, ...]]
    mu_edges: List[Tuple[GroupElement, GroupElement]]
    simple_left_moves: Dict[GroupElement, List[Tuple[str, GroupElement]]]

    def contains(self, w: GroupElement) -> bool:
        """w ∈ J si y solo si w0·w ≠ e tiene una única expresión reducida."""
        x = self.system.w0 * w
        return not x.is_identity() and has_unique_reduced_word(x)

    def cell_list(self) -> List[Cell]:
        return sorted(self.cells, key=lambda c: (label_sort_key(c[0]), label_sort_key(c[1])))

    def member(self, cell: Cell, name: str) -> GroupElement:
        members = self.cells[cell]
        if len(members) == 1:
            return members[0]
        if len(members) == 2 and name in ("u", "w"):
            return members[0 if name == "u" else 1]
        raise InvalidIndexError(f"La celda {cell} no tiene miembro {name!r}")

    def member_name(self, y: GroupElement) -> str:
        members = self.cells[self.cell_of[y]]
        if len(members) == 1:
            return "w"
        if len(members) == 2:
            return "u" if members[0] == y else "w"
        return f"w{members.index(y) + 1}"

    def is_diagonal(self, y: GroupElement) -> bool:
        i, j = self.cell_of[y]
        return i == j


def _cell_label(y: GroupElement) -> Cell:
    (i,) = ascents(y, LEFT)
    (j,) = ascents(y, RIGHT)
    return i, j


def small_cell(system: CoxeterSystem) -> List[GroupElement]:
    """J₁ por BFS: y = x·r con r ascenso de x y RD(y) = {r}."""
    found = [system.identity.mul_right(s) for s in range(system.rank)]
    seen = {x.key for x in found}
    queue = deque(found)
    while queue:
        x = queue.popleft()
        for r in range(system.rank):
            if x.has_right_descent(r):
                continue
            y = x.mul_right(r)
            if y.key not in seen and y.right_descents() == frozenset((r,)):
                seen.add(y.key)
                found.append(y)
                queue.append(y)
    return sorted(found, key=GroupElement.sort_key)


def build_atlas(system: CoxeterSystem) -> CellAtlas:
    j1 = small_cell(system)
    w0 = system.w0
    elements = sorted((w0 * x for x in j1), key=GroupElement.sort_key)
    cell_of = {y: _cell_label(y) for y in elements}
    cells: Dict[Cell, List[GroupElement]] = {}
    for y in elements:
        cells.setdefault(cell_of[y], []).append(y)

    coxeter_number = 2 * system.num_positive // system.rank
    a_value = system.num_positive - coxeter_number + 1

    duflo = set()
    candidates: Dict[str, Tuple[GroupElement, ...]] = {}
    for label in system.labels:
        involutions = tuple(y for y in cells.get((label, label), []) if y == y.inverse())
        candidates[label] = involutions
        if len(involutions) == 1:
            duflo.add(involutions[0])

    reflection_keys = {t.key for t in system.reflections}
    member_set = set(elements)
    mu_edges = []
    for idx, x in enumerate(elements):
        x_inv = x.inverse()
        for y in elements[idx + 1:]:
            if y.length > x.length and (x_inv * y).key in reflection_keys:
                mu_edges.append((x, y))

    moves: Dict[GroupElement, List[Tuple[str, GroupElement]]] = {}
    for y in elements:
        moves[y] = []
        for u in sorted(y.left_descents()):
            uy = y.mul_left(u)
            if uy in member_set and cell_of[uy][1] == cell_of[y][1]:
                moves[y].append((system.labels[u], uy))

    return CellAtlas(
        system=system,
        j1=j1,
        elements=elements,
        cells={c: tuple(m) for c, m in cells.items()},
        cell_of=cell_of,
        a_value=a_value,
        duflo=frozenset(duflo),
        duflo_candidates=candidates,
        mu_edges=mu_edges,
        simple_left_moves=moves,
    )


@dataclass(frozen=True)
class Relation:
    """Relación en y ∈ ⁱHʲ; top = s·y (None si es w0) y neighbours = los uy del mismo lado."""

    subject: GroupElement
    cell: Cell
    top: Optional[GroupElement]
    neighbours: Tuple[GroupElement, ...]

    @property
    def diagonal(self) -> bool:
        return self.cell[0] == self.cell[1]

    def rhs(self, values: Mapping[GroupElement, LaurentPoly]) -> LaurentPoly:
        system = self.subject.system
        total = LaurentPoly.monomial(system.w0.length) if self.top is None else values[self.top]
        for y in self.neighbours:
            total = total + values[y]
        return total

    def terms(self) -> Tuple[GroupElement, ...]:
        return ((self.top,) if self.top is not None else ()) + self.neighbours

    def describe(self) -> str:
        system = self.subject.system
        top = "v^" + str(system.w0.length) if self.top is None else f"p[{self.top.text()}]"
        rest = "".join(f" + p[{y.text()}]" for y in self.neighbours)
        lhs = "v·p + p_s" if self.diagonal else "(v+v^-1)·p"
        return f"{lhs}[{self.subject.text()}] = {top}{rest}"


def recursion_relations(atlas: CellAtlas) -> List[Relation]:
    system = atlas.system
    relations = []
    for y in atlas.elements:
        i, j = atlas.cell_of[y]
        sy = y.mul_left(system.label_index[i])
        if sy == system.w0:
            top = None
        elif sy in atlas.cell_of:
            top = sy
        else:
            raise DerivationError(f"s·y = {sy.text()} no está en J ∪ {{w0}} para y = {y.text()}")
        neighbours = tuple(uy for _, uy in atlas.simple_left_moves[y])
        relations.append(Relation(y, (i, j), top, neighbours))
    return relations


class _Equalities:
    """Acumula igualdades: en modo numérico una discrepancia es un error, en modo simbólico una restricción."""

    def __init__(self, symbolic: bool):
        self.symbolic = symbolic
        self.constraints: List[Tuple[LinearExpr, str]] = []

    def require_zero(self, poly: LaurentPoly, context: str) -> None:
        for _, c in poly.items():
            if isinstance(c, LinearExpr) and not c.is_constant():
                if not self.symbolic:
                    raise DerivationError(f"Coeficiente simbólico inesperado en {context}")
                self.constraints.append((c, context))
            elif c:
                raise DerivationError(f"Contradicción en {context}")


@dataclass
class PropagationResult:
    values: Dict[GroupElement, LaurentPoly]
    undetermined: List[GroupElement]
    violations: List[str] = field(default_factory=list)
    constraints: List[Tuple[LinearExpr, str]] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.undetermined


def propagate_from_seed(atlas: CellAtlas, seeds: Mapping[GroupElement, LaurentPoly],
                        relations: Optional[List[Relation]] = None, symbolic: bool = False) -> PropagationResult:
    """Resuelve las relaciones no diagonales por eliminación a partir de las semillas.

    Usa la simetría p_{e,y⁻¹} = p_{e,y} y las relaciones con una sola incógnita;
    al final comprueba todas las relaciones e invariantes sobre lo determinado.
    """
    relations = relations if relations is not None else recursion_relations(atlas)
    equalities = _Equalities(symbolic)
    values: Dict[GroupElement, LaurentPoly] = {}
    for y, poly in seeds.items():
        if y not in atlas.cell_of:
            raise PreconditionError(f"La semilla {y.text()} no está en J")
        values[y] = poly

    inverse = {y: y.inverse() for y in atlas.elements}
    changed = True
    while changed:
        changed = False
        for y in atlas.elements:
            if y in values:
                partner = inverse[y]
                if partner not in values:
                    values[partner] = values[y]
                    changed = True
                elif partner != y:
                    equalities.require_zero(values[partner] - values[y], f"simetría en {y.text()}")
        for relation in relations:
            if relation.diagonal:
                continue
            unknown = [t for t in (relation.subject,) + relation.terms() if t not in values]
            if len(unknown) != 1:
                continue
            target = unknown[0]
            if target == relation.subject:
                quotient, remainder = relation.rhs(values).divmod_v_plus_vinv()
                equalities.require_zero(remainder, relation.describe())
                values[target] = quotient
            else:
                partial = LaurentPoly.v_plus_vinv * values[relation.subject]
                for term in relation.terms():
                    if term != target:
                        partial = partial - values[term]
                if relation.top is None:
                    partial = partial - LaurentPoly.monomial(atlas.system.w0.length)
                values[target] = partial
            changed = True

    for relation in relations:
        if relation.diagonal:
            continue
        if all(t in values for t in (relation.subject,) + relation.terms()):
            equalities.require_zero(
                LaurentPoly.v_plus_vinv * values[relation.subject] - relation.rhs(values), relation.describe()
            )

    undetermined = [y for y in atlas.elements if y not in values]
    result = PropagationResult(values, undetermined, constraints=equalities.constraints)
    if not symbolic:
        result.violations = check_assignment(atlas, values, relations)
    return result


def _diagonal_problems(relation: Relation, values: Mapping[GroupElement, LaurentPoly]) -> List[str]:
    p = values[relation.subject]
    q = relation.rhs(values) - p.shift(1)
    problems = []
    if not q.has_nonnegative_coefficients():
        problems.append(f"p_s negativo en {relation.describe()}")
    if not (p - q.shift(1)).has_nonnegative_coefficients():
        problems.append(f"p_e - v·p_s negativo en {relation.describe()}")
    if q.value_at_one() > p.value_at_one():
        problems.append(f"p_s(1) > p_e(1) en {relation.describe()}")
    return problems


def check_assignment(atlas: CellAtlas, values: Mapping[GroupElement, LaurentPoly],
                     relations: Optional[List[Relation]] = None) -> List[str]:
    """Todas las relaciones e invariantes de p_{e,w} (w ∈ J) sobre las entradas conocidas."""
    relations = relations if relations is not None else recursion_relations(atlas)
    problems: List[str] = []
    a = atlas.a_value
    for relation in relations:
        if not all(t in values for t in (relation.subject,) + relation.terms()):
            continue
        if relation.diagonal:
            problems.extend(_diagonal_problems(relation, values))
        elif LaurentPoly.v_plus_vinv * values[relation.subject] != relation.rhs(values):
            problems.append(f"No se cumple {relation.describe()}")
    for y, p in values.items():
        name = y.text()
        if p.coefficient(y.length) != 1:
            problems.append(f"p[{name}] no tiene término director v^{y.length}")
        if p.min_degree() is None or p.min_degree() < a or p.max_degree() > y.length:
            problems.append(f"p[{name}] = {p} se sale de [{a}, {y.length}]")
        if any((e - y.length) % 2 for e in p.exponents()):
            problems.append(f"p[{name}] = {p} tiene paridad incorrecta")
        if not p.has_nonnegative_coefficients():
            problems.append(f"p[{name}] = {p} tiene coeficientes negativos")
        partner = y.inverse()
        if partner in values and values[partner] != p:
            problems.append(f"p[{name}] ≠ p[{partner.text()}]")
    for label, candidates in atlas.duflo_candidates.items():
        members = atlas.cells.get((label, label), ())
        if not all(y in values for y in members):
            continue
        hits = [y for y in members if values[y].coefficient(a) != 0]
        if len(hits) != 1 or values[hits[0]].coefficient(a) != 1 or hits[0] not in candidates:
            problems.append(f"La celda ({label},{label}) no tiene exactamente un elemento de Duflo con v^{a}")
    for y, p in values.items():
        if not atlas.is_diagonal(y) and p.coefficient(a) != 0:
            problems.append(f"p[{y.text()}] alcanza v^{a} fuera de la diagonal")
    return problems


def resolve_duflo(atlas: CellAtlas, values: Mapping[GroupElement, LaurentPoly]) -> FrozenSet[GroupElement]:
    """Elementos de Duflo: el candidato de cada celda diagonal con coeficiente 1 en v^a."""
    found = set(atlas.duflo)
    for candidates in atlas.duflo_candidates.values():
        for y in candidates:
            if y in values and values[y].coefficient(atlas.a_value) == 1:
                found.add(y)
    return frozenset(found)


@dataclass
class PenultimatePolynomialSet:
    """Asignación w ↦ p_{e,w} sobre J con las sumas por celda p_{st}."""

    atlas: CellAtlas
    values: Dict[GroupElement, LaurentPoly]

    def cell_polys(self, cell: Cell) -> List[LaurentPoly]:
        return [self.values[y] for y in self.atlas.cells[cell]]

    def cell_sum(self, cell: Cell) -> LaurentPoly:
        return sum(self.cell_polys(cell), LaurentPoly.zero())

    def ladder(self, cell: Cell) -> List[Tuple[int, int]]:
        """Pares (d_i, c_i) con d_i creciente."""
        return [(e, int(c)) for e, c in self.cell_sum(cell).items()]

    def violations(self) -> List[str]:
        return check_assignment(self.atlas, self.values)


def assignment_from_table(atlas: CellAtlas, entries: Mapping[str, List[str]]) -> PenultimatePolynomialSet:
    """Asigna los polinomios de una tabla "i,j" → [miembros por longitud] a los elementos de J."""
    values: Dict[GroupElement, LaurentPoly] = {}
    for key, polys in entries.items():
        cell = tuple(key.split(","))
        members = atlas.cells.get(cell)
        if members is None or len(members) != len(polys):
            raise PreconditionError(f"La entrada {key} no corresponde a una celda H de {atlas.system.tag}")
        for y, text in zip(members, polys):
            values[y] = LaurentPoly.parse(text)
    missing = [y.text() for y in atlas.elements if y not in values]
    if missing:
        raise PreconditionError(f"Faltan entradas de la tabla para {', '.join(missing)}")
    return PenultimatePolynomialSet(atlas, values)


@dataclass
class TableVerification:
    type_tag: str
    entries: List[Tuple[Cell, str, LaurentPoly]]
    violations: List[str]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_table(atlas: CellAtlas, fixture: Mapping) -> TableVerification:
    """Comprueba una tabla transcrita: relaciones, simetría, paridad, positividad, a-valor y Duflo."""
    if fixture.get("type") != atlas.system.tag:
        raise PreconditionError(f"La tabla es de {fixture.get('type')}, no de {atlas.system.tag}")
    assignment = assignment_from_table(atlas, fixture["entries"])
    entries = [(atlas.cell_of[y], y.text(), assignment.values[y]) for y in atlas.elements]
    problems = assignment.violations()
    minimum = min(p.min_degree() for p in assignment.values.values())
    if minimum != atlas.a_value:
        problems.append(f"Grado mínimo {minimum} ≠ a = {atlas.a_value}")
    return TableVerification(atlas.system.tag, entries, problems)


# Fórmulas cerradas

def _b_lengths(n: int, i: int, j: int) -> List[int]:
    top = (n + 1) ** 2
    w_len = top - (abs(i - j) + 1)
    if (i == 0) != (j == 0):
        return [w_len]
    u_len = top - 3 if i == j == 0 else top - (i + j + 1)
    return [u_len, w_len]


def closed_form_B(n: int, i: int, j: int) -> List[LaurentPoly]:
    """p_{e,y} para los miembros (por longitud) de la celda (i, j) de B_{n+1}."""
    if n < 1 or not (0 <= i <= n and 0 <= j <= n):
        raise InvalidIndexError(f"Índices ({i},{j}) fuera de rango para B{n + 1}")
    lengths = _b_lengths(n, i, j)
    top = (n + 1) ** 2
    if i == j == 0:
        if n % 2 == 0:
            p_w = LaurentPoly.arithmetic(top - 1, top - 2 * n - 1, 4)
            p_u = LaurentPoly.arithmetic(top - 3, top - 2 * n + 1, 4)
        else:
            p_w = LaurentPoly.arithmetic(top - 1, top - 2 * n + 1, 4)
            p_u = LaurentPoly.arithmetic(top - 3, top - 2 * n - 1, 4)
        return [p_u, p_w]
    depth = min(n - i, n - j)
    return [LaurentPoly.arithmetic(length, length - 2 * depth) for length in lengths]


def _d_position(label: str) -> int:
    return 0 if label.startswith("0") else int(label)


def _d_distance(a: str, b: str) -> int:
    if a == b:
        return 0
    if a.startswith("0") and b.startswith("0"):
        return 2
    return abs(_d_position(a) - _d_position(b))


def d_cell_length(n: int, i: str, j: str) -> int:
    """ℓ(w_ij) = ℓ(w0) - ℓ(s_{i σ(j)}) en D_{n+2}."""
    sigma_j = {"0+": "0-", "0-": "0+"}.get(j, j) if n % 2 else j
    return n * n + 3 * n + 2 - (_d_distance(i, sigma_j) + 1)


def closed_form_D(n: int, i: str, j: str) -> List[LaurentPoly]:
    labels = {"0+", "0-"} | {str(k) for k in range(1, n + 1)}
    if n < 2 or i not in labels or j not in labels:
        raise InvalidIndexError(f"Etiquetas ({i},{j}) no válidas para D{n + 2}")
    top = n * n + 3 * n + 2
    length = d_cell_length(n, i, j)
    i_zero, j_zero = i.startswith("0"), j.startswith("0")
    if i_zero and j_zero:
        same = i == j
        even = n % 2 == 0
        if even == same:
            return [LaurentPoly.arithmetic(top - 1, top - 2 * n - 1 if even else top - 2 * n + 1, 4)]
        return [LaurentPoly.arithmetic(top - 3, top - 2 * n + 1 if even else top - 2 * n - 1, 4)]
    if i_zero or j_zero:
        k = int(j if i_zero else i)
        return [LaurentPoly.arithmetic(length, length - 2 * (n - k))]
    low, high = sorted((int(i), int(j)))
    return [LaurentPoly.arithmetic(length, length - 2 * (n - high))
            + LaurentPoly.arithmetic(length - 2 * low, length - 2 * (n - high + low))]


def closed_form_G2(i: str, j: str) -> List[LaurentPoly]:
    if i not in ("1", "2") or j not in ("1", "2"):
        raise InvalidIndexError(f"Etiquetas ({i},{j}) no válidas para G2")
    lengths = (1, 3, 5) if i == j else (2, 4)
    return [LaurentPoly.monomial(length) for length in lengths]


def closed_form_cell(system: CoxeterSystem, cell: Cell) -> List[LaurentPoly]:
    """Fórmula cerrada de la celda en los tipos B, D y G2."""
    if system.family == "B":
        return closed_form_B(system.n, int(cell[0]), int(cell[1]))
    if system.family == "D":
        return closed_form_D(system.n, cell[0], cell[1])
    if system.tag == "G2":
        return closed_form_G2(*cell)
    raise PreconditionError(f"No hay fórmula cerrada para {system.tag}")


def closed_form_assignment(atlas: CellAtlas) -> PenultimatePolynomialSet:
    values = {}
    for cell, members in atlas.cells.items():
        for y, poly in zip(members, closed_form_cell(atlas.system, cell)):
            values[y] = poly
    return PenultimatePolynomialSet(atlas, values)


def octahedron_formula(n: int) -> int:
    return (2 * n * n + 4 * n + 3) * (n + 1) // 3


def octahedron_count_B(n: int) -> int:
    """Σ_{w∈J} p_{e,w}(1) en B_{n+1} a partir de las fórmulas cerradas."""
    return sum(p.value_at_one() for i in range(n + 1) for j in range(n + 1) for p in closed_form_B(n, i, j))


def octahedron_points(n: int) -> List[Dict[str, object]]:
    """Factores L_w⟨-k⟩ de Δ_e con w ∈ ⁱHʲ como puntos (i, j, k) con multiplicidad."""
    points = []
    for i in range(n + 1):
        for j in range(n + 1):
            polys = closed_form_B(n, i, j)
            names = ["u", "w"] if len(polys) == 2 else ["w"]
            for name, poly in zip(names, polys):
                for k, c in poly.items():
                    points.append({"i": i, "j": j, "k": k, "multiplicity": int(c), "marker": name})
    return points


def sz_relation_violations(table, atlas: CellAtlas, limit: int = 20) -> List[str]:
    """Identidades de multiplicación izquierda en J sobre una tabla KL completa.

    Para y ∈ J, z < sz, z ∉ {y, sy}:
      sy < y:  p_{sz,y} = v⁻¹·p_{z,y}
      sy > y:  p_{sz,y} = p_{z,sy} + Σ_{t: ty<y, ty∈J, misma celda izquierda} p_{z,ty} - v·p_{z,y}
    """
    group = table.group
    problems: List[str] = []
    for y in atlas.elements:
        yi = group.position(y)
        moves = [group.position(ty) for _, ty in atlas.simple_left_moves[y]]
        for s in range(atlas.system.rank):
            syi = group.left_table[yi][s]
            descent = group.lengths[syi] < group.lengths[yi]
            for zi in range(len(group)):
                szi = group.left_table[zi][s]
                if group.lengths[szi] < group.lengths[zi] or zi in (yi, syi):
                    continue
                lhs = table.p(szi, yi)
                if descent:
                    rhs = table.p(zi, yi).shift(-1)
                else:
                    rhs = table.p(zi, syi) - table.p(zi, yi).shift(1)
                    for ti in moves:
                        rhs = rhs + table.p(zi, ti)
                if lhs != rhs:
                    z = group.elements[zi]
                    problems.append(
                        f"s={atlas.system.labels[s]}, z={z.text() or 'e'}, y={y.text()}: {lhs} ≠ {rhs}"
                    )
                    if len(problems) >= limit:
                        return problems
    return problems
