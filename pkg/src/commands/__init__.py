"""
🌱 Submódulo de comandos CLI.
"""
