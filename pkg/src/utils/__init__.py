"""
Submódulo de utilidades: configuración, errores y funciones auxiliares.
"""
