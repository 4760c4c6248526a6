#!/usr/bin/env python3
"""
🌱 Jerarquía de excepciones del CLI.
"""

from src.utils.config import EXIT_BUDGET, EXIT_CHECK_FAILED, EXIT_USAGE


class BruhatError(Exception):
    """Error base de todos los motores."""

    exit_code = EXIT_CHECK_FAILED


class UnsupportedTypeError(BruhatError, ValueError):
    """Descriptor de tipo desconocido o fuera de rango."""

    exit_code = EXIT_USAGE

    def __init__(self, descriptor: str, supported: str):
        super().__init__(f"Tipo no admitido: {descriptor!r}. Tipos admitidos: {supported}")
        self.descriptor = descriptor


class WordError(BruhatError, ValueError):
    """Palabra mal formada o con etiquetas desconocidas."""

    exit_code = EXIT_USAGE

    def __init__(self, token: str, message: str = ""):
        super().__init__(message or f"Etiqueta desconocida en la palabra: {token!r}")
        self.token = token


class PolynomialSyntaxError(BruhatError, ValueError):
    exit_code = EXIT_USAGE


class InvalidIndexError(BruhatError, ValueError):
    """Índices fuera del rango de un constructor."""

    exit_code = EXIT_USAGE


class BudgetExceededError(BruhatError):
    """El cálculo supera el presupuesto configurado."""

    exit_code = EXIT_BUDGET

    def __init__(self, required: int, budget: int, what: str = "elementos"):
        super().__init__(f"Se necesitan {required} {what}, presupuesto {budget}")
        self.required = required
        self.budget = budget


class StretchInfeasibleError(BudgetExceededError):
    """El intervalo inferior no cabe en el presupuesto de intervalos."""


class PreconditionError(BruhatError):
    pass


class FixtureIntegrityError(BruhatError):
    pass


class CacheError(BruhatError):
    pass


class DerivationError(BruhatError):
    """Contradicción, o ninguna/múltiples soluciones en una derivación."""
