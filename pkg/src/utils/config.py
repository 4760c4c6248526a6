#!/usr/bin/env python3
"""
🌱 Configuración global para el CLI de órdenes de Bruhat y zócalos.
"""

import os

# Presupuestos por defecto para los motores de cálculo
DEFAULT_GROUP_BUDGET = 10**6
DEFAULT_KL_BUDGET = 5000
DEFAULT_INTERVAL_BUDGET = 200_000
DEFAULT_DESCENT_BUDGET = 60_000

# Cota superior de las variables CP-SAT al parametrizar semillas
DEFAULT_SEED_COEFFICIENT_BOUND = 8

# Configuración por defecto para procesamiento
DEFAULT_WORKERS = 5

# Directorio de caché (se puede sobrescribir con la variable de entorno)
CACHE_DIR_ENV = "BRUHAT_CACHE_DIR"
DEFAULT_CACHE_DIR = os.path.join(os.path.expanduser("~"), ".cache", "bruhat-socle")
CACHE_FORMAT_VERSION = 1

# Códigos de salida del proceso
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# Orden congelado de etiquetas: "0-" < "0+" < "0" < "1" < ... < "9"
LABEL_ORDER = ("0-", "0+", "0", "1", "2", "3", "4", "5", "6", "7", "8", "9")

# Tipos admitidos, por familia y rangos válidos
SUPPORTED_RANKS = {
    "A": range(1, 8),
    "B": range(2, 8),
    "D": range(4, 8),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}

# Cotas de Ext¹ en el caso (c) por tipo
EXT1_TYPE_CAPS = {"A": 1, "B": 1, "D": 2, "F": 2, "G": 1, "E6": 3, "E7": 4, "E8": 6}

# Ficheros de datos transcritos
FIXTURES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")
FIXTURE_MANIFEST = "MANIFEST.sha256"
FIXTURE_FORMAT_VERSION = 1
KL_TABLE_FIXTURES = {
    "E6": "kl_e6.json",
    "E7": "kl_e7.json",
    "E8": "kl_e8.json",
    "F4": "kl_f4.json",
    "G2": "kl_g2.json",
}
FIGURE_FIXTURES = {"E6": "figures_e6.json", "F4": "figures_f4.json"}
SOCLE_FIXTURES = {"F4": "socle_f4.json"}
EXAMPLES_FIXTURE = "examples.json"

# Ruta por defecto de los informes de suites
DEFAULT_REPORT_PATH = "reports/informe_suite.md"

# Estados de las comprobaciones de las suites
STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIPPED_BUDGET = "skipped-budget"
STATUS_NOT_ATTEMPTED = "not-attempted-stretch"
# Afirmación publicada que el cálculo contradice; no cuenta como fallo
STATUS_DISCREPANCY = "documented-discrepancy"

# Muestras aleatorias de E6 para ⋁JM(w) = w
DEFAULT_RANDOM_SAMPLES = 10_000
DEFAULT_RANDOM_SEED = 20240601
