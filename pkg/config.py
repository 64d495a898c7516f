import logging
import os
from pathlib import Path

# Etiqueta de esquema para toda salida legible por máquina
SCHEMA_VERSION = "walkspec/1"

# Límites de escala "de escritorio"
MAX_GRAPH_ORDER = 64
MAX_CANONICAL_ORDER = 12
MAX_ENUMERATION_ORDER = 7
MAX_SWEEP_ORDER = 6
LONG_SWEEP_ORDER = 7
MATE_BOUND_MAX_K = 62

CERTIFICATE_SCHEMA_PATH = Path(__file__).parent / "data" / "schemas" / "certificate.schema.json"
RECORD_SCHEMA_PATH = Path(__file__).parent / "data" / "schemas" / "record.schema.json"

WORKERS_ENV_VAR = "WALKSPEC_WORKERS"
LOG_LEVEL_ENV_VAR = "WALKSPEC_LOG_LEVEL"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

log = logging.getLogger(__name__)


def load_worker_count():
    """
    Lee WALKSPEC_WORKERS. Si no existe o no es un entero positivo,
    usa el número de CPUs disponibles.
    """
    default = os.cpu_count() or 1
    raw = os.environ.get(WORKERS_ENV_VAR, "").strip()
    if not raw:
        return default
    try:
        workers = int(raw)
    except ValueError:
        log.warning("⚠️ %s=%r no es un entero. Usando %d workers.", WORKERS_ENV_VAR, raw, default)
        return default
    if workers < 1:
        log.warning("⚠️ %s=%d debe ser >= 1. Usando %d workers.", WORKERS_ENV_VAR, workers, default)
        return default
    return workers


def setup_logging(verbosity=0):
    """
    Configura el logger raíz una sola vez.
    verbosity: -1 silencioso, 0 por defecto (o WALKSPEC_LOG_LEVEL), 1 INFO, 2+ DEBUG.
    """
    if verbosity < 0:
        level = logging.ERROR
    elif verbosity == 0:
        name = os.environ.get(LOG_LEVEL_ENV_VAR, "WARNING").strip().upper()
        level = logging.getLevelName(name)
        if not isinstance(level, int):
            level = logging.WARNING
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG

    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
    return level
