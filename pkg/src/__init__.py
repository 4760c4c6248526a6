"""
🌱 Paquete principal del CLI de órdenes de Bruhat y zócalos.
"""

__version__ = "0.1.0"
