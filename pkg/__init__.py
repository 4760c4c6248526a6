"""
🌱 Paquete para el orden de Bruhat, la celda penúltima de Kazhdan-Lusztig y los zócalos de Δ_e/Δ_x.
"""

__version__ = "0.1.0"
