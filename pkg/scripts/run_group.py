import logging

from data.graph6_handler import read_graph6_lines
from data.report_writer import error_record, group_record, write_records
from processing.graph_enumerator import isomorphism_class_representatives
from processing.mate_groups import group_by_generalized_spectrum
from utils.constants import EXIT_OK, EXIT_PARSE_ERROR
from utils.exceptions import Graph6ParseError

log = logging.getLogger(__name__)


def run_group(fmt, stream, order=None, lines=None, families_only=False):
    """
    Ejecuta group: agrupa por espectro generalizado todas las clases de un
    orden, o los grafos de una entrada graph6.
    """
    if order is not None:
        corpus = isomorphism_class_representatives(order)
    else:
        corpus, errors = [], []
        for line_no, item in read_graph6_lines(lines):
            if isinstance(item, Graph6ParseError):
                errors.append(error_record(line_no, item))
            else:
                corpus.append(item)
        if errors:
            write_records(errors, fmt, stream)
            return EXIT_PARSE_ERROR

    groups = group_by_generalized_spectrum(corpus)
    if families_only:
        groups = [g for g in groups if g.is_family]
    write_records((group_record(g) for g in groups), fmt, stream)
    return EXIT_OK


if __name__ == "__main__":
    import sys
    from main import main
    sys.exit(main(["group", *sys.argv[1:]]))
