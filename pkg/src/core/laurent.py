#!/usr/bin/env python3
"""
🌱 Polinomios de Laurent dispersos en v y expresiones lineales para derivaciones simbólicas.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from src.utils.errors import DerivationError
from src.utils.helpers import format_poly_terms, parse_poly_terms


class LinearExpr:
    """Combinación lineal entera de incógnitas más una constante."""

    __slots__ = ("_coeffs", "_const")

    def __init__(self, coeffs: Optional[Mapping[str, int]] = None, const: int = 0):
        self._coeffs = {k: v for k, v in (coeffs or {}).items() if v != 0}
        self._const = const

    @classmethod
    def variable(cls, name: str) -> "LinearExpr":
        return cls({name: 1})

    @property
    def const(self) -> int:
        return self._const

    @property
    def coeffs(self) -> Dict[str, int]:
        return dict(self._coeffs)

    def variables(self) -> List[str]:
        return sorted(self._coeffs)

    def is_constant(self) -> bool:
        return not self._coeffs

    def value(self, assignment: Mapping[str, int]) -> int:
        return self._const + sum(c * assignment[name] for name, c in self._coeffs.items())

    def _coerce(self, other) -> "LinearExpr":
        if isinstance(other, LinearExpr):
            return other
        if isinstance(other, int):
            return LinearExpr(const=other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._coeffs)
        for name, c in other._coeffs.items():
            merged[name] = merged.get(name, 0) + c
        return LinearExpr(merged, self._const + other._const)

    __radd__ = __add__

    def __neg__(self):
        return LinearExpr({k: -v for k, v in self._coeffs.items()}, -self._const)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return LinearExpr({k: v * other for k, v in self._coeffs.items()}, self._const * other)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self._coeffs) or self._const != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._coeffs == other._coeffs and self._const == other._const

    def __hash__(self):
        return hash((frozenset(self._coeffs.items()), self._const))

    def __repr__(self):
        parts = [f"{c:+d}*{name}" for name, c in sorted(self._coeffs.items())]
        if self._const or not parts:
            parts.append(f"{self._const:+d}")
        text = " ".join(parts)
        return text[1:] if text.startswith("+") else text


Coefficient = Union[int, LinearExpr]


class LaurentPoly:
    """Polinomio de Laurent en v con coeficientes enteros (o LinearExpr en modo simbólico).

    No se almacenan coeficientes nulos; las instancias son inmutables.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Coefficient]] = None):
        self._terms: Dict[int, Coefficient] = {e: c for e, c in (terms or {}).items() if c}
        self._hash: Optional[int] = None

    # Constructores
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: Coefficient = 1) -> "LaurentPoly":
        return cls({exponent: coefficient})

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        return cls(parse_poly_terms(text))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        terms: Dict[int, int] = {}
        for exponent, coefficient in pairs:
            terms[int(exponent)] = terms.get(int(exponent), 0) + int(coefficient)
        return cls(terms)

    @classmethod
    def arithmetic(cls, top: int, bottom: int, step: int = 2) -> "LaurentPoly":
        """v^top + v^(top-step) + ... + v^bottom; vacío si bottom > top."""
        return cls({e: 1 for e in range(top, bottom - 1, -step)})

    v_plus_vinv: "LaurentPoly"

    # Consultas
    def coefficient(self, exponent: int) -> Coefficient:
        return self._terms.get(exponent, 0)

    def exponents(self) -> List[int]:
        return sorted(self._terms)

    def items(self) -> List[Tuple[int, Coefficient]]:
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def max_degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def is_symbolic(self) -> bool:
        return any(isinstance(c, LinearExpr) and not c.is_constant() for c in self._terms.values())

    def value_at_one(self) -> int:
        return sum(self._terms.values())

    def has_nonnegative_coefficients(self) -> bool:
        """Solo para coeficientes numéricos; un coeficiente simbólico no constante es un error."""
        values = []
        for e, c in self._terms.items():
            if isinstance(c, LinearExpr):
                if not c.is_constant():
                    raise DerivationError(f"Coeficiente simbólico {c!r} en v^{e}: evalúe antes de comprobar el signo")
                c = c.const
            values.append(c)
        return all(c >= 0 for c in values)

    def has_uniform_parity(self) -> bool:
        return len({e % 2 for e in self._terms}) <= 1

    def variables(self) -> List[str]:
        names = set()
        for c in self._terms.values():
            if isinstance(c, LinearExpr):
                names.update(c.variables())
        return sorted(names)

    # Aritmética
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, LinearExpr)):
            return LaurentPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self._terms)
        for e, c in other._terms.items():
            merged[e] = merged.get(e, 0) + c
        return LaurentPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, LinearExpr)):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        product: Dict[int, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiplica por v^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def truncate_below(self, exponent: int) -> "LaurentPoly":
        """Conserva solo los términos de exponente estrictamente menor que el dado."""
        return LaurentPoly({e: c for e, c in self._terms.items() if e < exponent})

    def divmod_v_plus_vinv(self) -> Tuple["LaurentPoly", "LaurentPoly"]:
        """División por v + v⁻¹ de arriba abajo; el resto vive en los dos exponentes más bajos."""
        if not self._terms:
            return LaurentPoly(), LaurentPoly()
        rest = dict(self._terms)
        low, high = min(rest), max(rest)
        quotient: Dict[int, Coefficient] = {}
        for e in range(high, low + 1, -1):
            c = rest.get(e, 0)
            if not c:
                continue
            quotient[e - 1] = c
            rest[e] = 0
            rest[e - 2] = rest.get(e - 2, 0) - c
        return LaurentPoly(quotient), LaurentPoly(rest)

    def exact_div_v_plus_vinv(self) -> "LaurentPoly":
        quotient, remainder = self.divmod_v_plus_vinv()
        if not remainder.is_zero():
            raise DerivationError(f"{self} no es divisible por v+v^-1 (resto {remainder})")
        return quotient

    def evaluate(self, assignment: Mapping[str, int]) -> "LaurentPoly":
        """Sustituye las incógnitas simbólicas por enteros."""
        return LaurentPoly(
            {e: c.value(assignment) if isinstance(c, LinearExpr) else c for e, c in self._terms.items()}
        )

    # Codificaciones
    def to_pairs(self) -> List[List[int]]:
        return [[e, int(c)] for e, c in sorted(self._terms.items())]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self):
        if self.is_symbolic():
            return " + ".join(f"({c!r})v^{e}" for e, c in sorted(self._terms.items(), reverse=True)) or "0"
        return format_poly_terms({e: int(c) for e, c in self._terms.items()})

    def __repr__(self):
        return f"LaurentPoly({self})"


LaurentPoly.v_plus_vinv = LaurentPoly({1: 1, -1: 1})
