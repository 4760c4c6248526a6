#!/usr/bin/env python3
"""
🌱 Álgebra de Hecke en la normalización de Soergel: polinomios de Kazhdan-Lusztig, μ y multiplicidades graduadas.

Convención: (H_s + v)(H_s - v⁻¹) = 0, C_s = H_s + v y C_w = Σ_x p_{x,w} H_x con p_{w,w} = 1.
Para w = s·w' con s ∈ LD(w):
    C_s·C_{w'} = Σ_x (p_{sx,w'} + v^{±1} p_{x,w'}) H_x
    C_w = C_s·C_{w'} - Σ_{z<w', sz<z} μ(z,w') C_z
"""

from typing import Callable, Dict, List, Optional

from src.core.bruhat import lower_interval
from src.core.coxeter import CoxeterSystem, GroupElement, IndexedGroup
from src.core.laurent import LaurentPoly
from src.utils.config import DEFAULT_INTERVAL_BUDGET, DEFAULT_KL_BUDGET
from src.utils.errors import BudgetExceededError, StretchInfeasibleError

Coeffs = List[int]


def _accumulate(column: Dict, key, coeffs: Coeffs, factor: int = 1, shift: int = 0) -> None:
    """column[key] += factor · v^shift · coeffs (listas densas indexadas por exponente ≥ 0)."""
    target = column.get(key)
    size = len(coeffs) + shift
    if target is None:
        target = column[key] = [0] * max(size, 0)
    elif len(target) < size:
        target.extend([0] * (size - len(target)))
    for e, c in enumerate(coeffs):
        if c:
            target[e + shift] += factor * c


def _clean(column: Dict) -> Dict:
    cleaned = {}
    for key, coeffs in column.items():
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs:
            cleaned[key] = coeffs
    return cleaned


def _to_poly(coeffs: Optional[Coeffs]) -> LaurentPoly:
    if not coeffs:
        return LaurentPoly.zero()
    return LaurentPoly({e: c for e, c in enumerate(coeffs) if c})


def _mu_of(coeffs: Optional[Coeffs]) -> int:
    return coeffs[1] if coeffs and len(coeffs) > 1 else 0


def _recursion_step(s: int, prev_key, prev_column: Dict, left_mul: Callable, is_left_descent: Callable,
                    column_of: Callable) -> Dict:
    """Columna de w = s·w' a partir de la columna de w'."""
    new: Dict = {}
    for x, coeffs in prev_column.items():
        sx = left_mul(x, s)
        _accumulate(new, sx, coeffs)
        if is_left_descent(x, s):
            # x ≠ w', luego p_{x,w'} ∈ vZ[v]
            _accumulate(new, x, coeffs, shift=-1)
        else:
            _accumulate(new, x, coeffs, shift=1)
    for z, coeffs in prev_column.items():
        if z == prev_key or not is_left_descent(z, s):
            continue
        mu = _mu_of(coeffs)
        if mu:
            for x, pxz in column_of(z).items():
                _accumulate(new, x, pxz, factor=-mu)
    return _clean(new)


class KLTable:
    """Tabla completa p_{x,w} sobre un grupo enumerado (columnas dispersas por w)."""

    def __init__(self, group: IndexedGroup, columns: List[Dict[int, Coeffs]]):
        self.group = group
        self.system: CoxeterSystem = group.system
        self._columns = columns

    def __len__(self):
        return len(self._columns)

    @property
    def columns(self) -> List[Dict[int, Coeffs]]:
        """Columnas densas crudas, usadas por la caché."""
        return self._columns

    def p(self, xi: int, wi: int) -> LaurentPoly:
        return _to_poly(self._columns[wi].get(xi))

    def polynomial(self, x: GroupElement, w: GroupElement) -> LaurentPoly:
        return self.p(self.group.position(x), self.group.position(w))

    def is_leq(self, xi: int, wi: int) -> bool:
        """x ≤ w si y solo si p_{x,w} ≠ 0."""
        return xi in self._columns[wi]

    def column(self, wi: int) -> Dict[int, LaurentPoly]:
        return {xi: _to_poly(c) for xi, c in self._columns[wi].items()}

    def mu_indices(self, xi: int, yi: int) -> int:
        return _mu_of(self._columns[yi].get(xi)) + _mu_of(self._columns[xi].get(yi))

    def mu(self, x: GroupElement, y: GroupElement) -> int:
        return self.mu_indices(self.group.position(x), self.group.position(y))


def kl_table(group: IndexedGroup, budget: int = DEFAULT_KL_BUDGET,
             progress_callback: Optional[Callable[[int], None]] = None) -> KLTable:
    """Calcula todos los p_{x,w} en orden de longitud creciente."""
    if len(group) > budget:
        raise BudgetExceededError(
            len(group), budget, "elementos (use `kl penultimate` para la celda penúltima)"
        )
    left, lengths = group.left_table, group.lengths
    columns: List[Dict[int, Coeffs]] = [dict() for _ in range(len(group))]
    columns[0] = {0: [1]}

    def left_mul(x: int, s: int) -> int:
        return left[x][s]

    def is_left_descent(x: int, s: int) -> bool:
        return lengths[left[x][s]] < lengths[x]

    for wi in range(1, len(group)):
        w = group.elements[wi]
        s = min(w.left_descents())
        prev = left[wi][s]
        columns[wi] = _recursion_step(s, prev, columns[prev], left_mul, is_left_descent, columns.__getitem__)
        if progress_callback:
            progress_callback(wi)
    return KLTable(group, columns)


class IntervalKL:
    """p_{x,w} para elementos sueltos, restringiendo la recursión al intervalo [e, w].

    Las columnas se memorizan por elemento; el motor puede compartirse entre consultas.
    """

    def __init__(self, system: CoxeterSystem, budget: int = DEFAULT_INTERVAL_BUDGET):
        self.system = system
        self.budget = budget
        self._columns: Dict[GroupElement, Dict[GroupElement, Coeffs]] = {system.identity: {system.identity: [1]}}
        self._checked: Dict[GroupElement, int] = {}

    def _guard(self, w: GroupElement) -> None:
        if w in self._checked:
            return
        try:
            size = len(lower_interval(w, self.budget))
        except BudgetExceededError as exc:
            raise StretchInfeasibleError(exc.required, self.budget, "elementos del intervalo [e, w]") from None
        self._checked[w] = size

    def interval_size(self, w: GroupElement) -> int:
        self._guard(w)
        return self._checked[w]

    def column(self, w: GroupElement) -> Dict[GroupElement, Coeffs]:
        if w not in self._columns:
            self._guard(w)
        return self._column(w)

    def _column(self, w: GroupElement) -> Dict[GroupElement, Coeffs]:
        if w not in self._columns:
            chain = []
            current = w
            while current not in self._columns:
                s = min(current.left_descents())
                chain.append((current, s))
                current = current.mul_left(s)
            for element, s in reversed(chain):
                prev = element.mul_left(s)
                self._columns[element] = _recursion_step(
                    s,
                    prev,
                    self._columns[prev],
                    lambda x, t: x.mul_left(t),
                    lambda x, t: x.has_left_descent(t),
                    self._column,
                )
        return self._columns[w]

    def polynomial(self, x: GroupElement, w: GroupElement) -> LaurentPoly:
        return _to_poly(self.column(w).get(x))

    def mu(self, x: GroupElement, y: GroupElement) -> int:
        if x.length < y.length:
            return _mu_of(self.column(y).get(x))
        return _mu_of(self.column(x).get(y))


def kl_polynomial(x: GroupElement, w: GroupElement, engine: Optional[IntervalKL] = None) -> LaurentPoly:
    return (engine or IntervalKL(w.system)).polynomial(x, w)


def mu(x: GroupElement, y: GroupElement, source=None) -> int:
    """Coeficiente de v en p_{x,y} + p_{y,x}; source es un KLTable o un IntervalKL."""
    if source is None:
        source = IntervalKL(x.system)
    return source.mu(x, y)


def mult_abs(w: GroupElement, u: GroupElement, degree: int, source=None) -> int:
    """[Δ_w : L_u] en grado absoluto D, con Δ_w encajado con su tope en grado -ℓ(w)."""
    if source is None:
        source = IntervalKL(w.system)
    poly = source.polynomial(w, u)
    return int(poly.coefficient(-degree - w.length))


def check_table_invariants(table: KLTable) -> List[str]:
    """Comprueba p_ww = 1, p ∈ vZ[v], paridad, positividad, p_{x,w0} y la simetría por inversos."""
    group = table.group
    lengths = group.lengths
    w0 = group.position(table.system.w0)
    top = lengths[w0]
    inverse = [group.position(w.inverse()) for w in group.elements]
    problems: List[str] = []
    for wi in range(len(group)):
        for xi, poly in table.column(wi).items():
            label = f"p[{group.elements[xi].text() or 'e'}, {group.elements[wi].text() or 'e'}]"
            if xi == wi:
                if poly != LaurentPoly.one():
                    problems.append(f"{label} = {poly} ≠ 1")
                continue
            if poly.min_degree() < 1:
                problems.append(f"{label} = {poly} no está en vZ[v]")
            if any((e - lengths[wi] + lengths[xi]) % 2 for e in poly.exponents()):
                problems.append(f"{label} = {poly} tiene paridad incorrecta")
            if not poly.has_nonnegative_coefficients():
                problems.append(f"{label} = {poly} tiene coeficientes negativos")
            if table.p(inverse[xi], inverse[wi]) != poly:
                problems.append(f"{label} no coincide con el de los inversos")
    for xi in range(len(group)):
        if table.p(xi, w0) != LaurentPoly.monomial(top - lengths[xi]):
            problems.append(f"p[{group.elements[xi].text() or 'e'}, w0] ≠ v^{top - lengths[xi]}")
    return problems


def bar_invariance_violations(table: KLTable) -> List[str]:
    """Aplica la involución barra a cada C_w en la base estándar y compara.

    barra(H_s) = H_s + (v - v⁻¹) y H_s·H_y = H_{sy} + [sy<y](v⁻¹ - v) H_y.
    """
    group = table.group
    left, lengths = group.left_table, group.lengths
    gap = LaurentPoly({1: 1, -1: -1})
    bars: List[Dict[int, LaurentPoly]] = [dict() for _ in range(len(group))]
    bars[0] = {0: LaurentPoly.one()}
    for wi in range(1, len(group)):
        s = min(group.elements[wi].left_descents())
        prev = bars[left[wi][s]]
        result: Dict[int, LaurentPoly] = {}
        for yi, coeff in prev.items():
            syi = left[yi][s]
            result[syi] = result.get(syi, LaurentPoly.zero()) + coeff
            if lengths[syi] > lengths[yi]:
                result[yi] = result.get(yi, LaurentPoly.zero()) + gap * coeff
        bars[wi] = {k: c for k, c in result.items() if not c.is_zero()}
    problems = []
    for wi in range(len(group)):
        image: Dict[int, LaurentPoly] = {}
        for xi, poly in table.column(wi).items():
            for yi, coeff in bars[xi].items():
                image[yi] = image.get(yi, LaurentPoly.zero()) + poly.bar() * coeff
        image = {k: c for k, c in image.items() if not c.is_zero()}
        if image != table.column(wi):
            problems.append(f"C_{group.elements[wi].text() or 'e'} no es invariante por la barra")
    return problems
