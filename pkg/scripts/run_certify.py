import logging

from data.graph6_handler import parse_graph6
from data.json_handler import certificate_to_document, save_certificate
from data.report_writer import error_record, write_records
from processing.cospectral_certifier import verify_pair
from utils.constants import (
    EXIT_INVARIANT_VIOLATION,
    EXIT_ISOMORPHIC,
    EXIT_NOT_COSPECTRAL,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    EXIT_UNCERTIFIABLE,
)
from utils.exceptions import Graph6ParseError, NotCospectralError, SingularWalkMatrixError

log = logging.getLogger(__name__)


def certificate_exit_code(cert):
    """0 para un par de mates, 4 si Q es una permutación, 5 si el certificado no es válido."""
    if not cert.is_valid:
        return EXIT_INVARIANT_VIOLATION
    if cert.is_permutation:
        return EXIT_ISOMORPHIC
    return EXIT_OK


def run_certify(text_g, text_h, fmt, stream, output_path=None):
    """
    Ejecuta certify sobre dos grafos en graph6 y escribe el certificado.
    Devuelve el código de salida.
    """
    graphs = []
    for position, text in enumerate((text_g, text_h), start=1):
        try:
            graphs.append(parse_graph6(text))
        except Graph6ParseError as e:
            write_records([error_record(position, e)], fmt, stream)
            return EXIT_PARSE_ERROR
    g, h = graphs

    try:
        cert = verify_pair(g, h)
    except NotCospectralError as e:
        log.info("not cospectral: %s", e)
        write_records([error_record(None, e, reason="not-cospectral")], fmt, stream)
        return EXIT_NOT_COSPECTRAL
    except SingularWalkMatrixError as e:
        log.info("cannot certify: %s", e)
        write_records([error_record(None, e, reason="singular-walk-matrix")], fmt, stream)
        return EXIT_UNCERTIFIABLE

    write_records([certificate_to_document(cert)], fmt, stream)
    if output_path:
        save_certificate(cert, output_path)
        log.info("certificate saved to %s", output_path)
    return certificate_exit_code(cert)


if __name__ == "__main__":
    import sys
    from main import main
    sys.exit(main(["certify", *sys.argv[1:]]))
