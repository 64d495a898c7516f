import logging

from data.graph6_handler import read_graph6_lines
from data.report_writer import analysis_record, error_record, write_records
from processing.family_classifier import classify_family
from processing.walk_matrix import walk_matrix
from utils.constants import EXIT_OK, EXIT_PARSE_ERROR
from utils.exceptions import Graph6ParseError

log = logging.getLogger(__name__)


def analyze_graph(line_no, g):
    info = walk_matrix(g)
    return analysis_record(line_no, g, info, classify_family(info))


def analyze_lines(lines, errors=None):
    """
    Un registro por línea no vacía, en el orden de entrada. Las líneas mal
    formadas producen un registro de error y el flujo continúa; si se pasa
    una lista en errors, se le añaden los números de línea fallidos.
    """
    for line_no, item in read_graph6_lines(lines):
        if isinstance(item, Graph6ParseError):
            if errors is not None:
                errors.append(line_no)
            yield error_record(line_no, item)
        else:
            yield analyze_graph(line_no, item)


def run_analyze(lines, fmt, stream):
    """
    Ejecuta analyze: clasifica cada grafo de la entrada graph6.
    Devuelve el código de salida (2 si alguna línea no se pudo leer).
    """
    errors = []
    write_records(analyze_lines(lines, errors), fmt, stream)
    if errors:
        log.warning("⚠️ %d malformed lines: %s", len(errors), ", ".join(map(str, errors)))
        return EXIT_PARSE_ERROR
    return EXIT_OK


if __name__ == "__main__":
    import sys
    from main import main
    sys.exit(main(["analyze", *sys.argv[1:]]))
