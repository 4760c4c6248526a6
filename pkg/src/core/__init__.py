"""
🌱 Submódulo de motores de cálculo: grupos, orden de Bruhat, polinomios KL, join-irreducibles y zócalos.
"""
