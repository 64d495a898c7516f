import argparse
import logging
import sys

from config import MAX_ENUMERATION_ORDER, setup_logging
from scripts.run_analyze import run_analyze
from scripts.run_certify import run_certify
from scripts.run_group import run_group
from scripts.run_sweep import run_merge, run_sweep
from utils.constants import EXIT_PARSE_ERROR, EXIT_USAGE, FAIL_MARK, OUTPUT_FORMATS
from utils.exceptions import CertificateFormatError, Graph6ParseError, MixedOrderError, UnsupportedOrderError

log = logging.getLogger(__name__)


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser que sale con el código de uso propio (1) en lugar del 2 de argparse."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_shard(text):
    """'I/T' -> (I, T) con 0 <= I < T."""
    try:
        index, total = (int(x) for x in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shard must look like I/T, got {text!r}")
    if total < 1 or not 0 <= index < total:
        raise argparse.ArgumentTypeError(f"shard index must satisfy 0 <= I < T, got {text!r}")
    return index, total


def _open_input(path):
    """Entrada graph6 en binario; cada línea se decodifica byte a byte al leerla."""
    if path in (None, "-"):
        return getattr(sys.stdin, "buffer", sys.stdin)
    return open(path, "rb")


def _close_input(stream):
    if stream is not sys.stdin and stream is not getattr(sys.stdin, "buffer", None):
        stream.close()


def analyze_handler(args):
    """
    Maneja analyze: un informe por grafo de la entrada graph6.
    """
    stream = _open_input(args.input)
    try:
        return run_analyze(stream, args.format, sys.stdout)
    finally:
        _close_input(stream)


def certify_handler(args):
    """
    Maneja certify: reconstruye Q para el par y emite el certificado.
    """
    return run_certify(args.graph_a, args.graph_b, args.format, sys.stdout, output_path=args.output)


def sweep_handler(args):
    """
    Maneja sweep: recorrido exhaustivo de un orden, un shard suyo, o la fusión de shards.
    """
    progress = args.verbose >= 0
    if args.merge:
        try:
            return run_merge(args.merge, args.format, sys.stdout, progress=progress)
        except (CertificateFormatError, Graph6ParseError) as e:
            print(f"{FAIL_MARK} Error leyendo shards: {e}", file=sys.stderr)
            return EXIT_PARSE_ERROR
    if args.order is None:
        print(f"{FAIL_MARK} Error: sweep needs --order or --merge.", file=sys.stderr)
        return EXIT_USAGE
    try:
        return run_sweep(
            args.order,
            shard=args.shard,
            allow_long=args.allow_long,
            fmt=args.format,
            stream=sys.stdout,
            progress=progress,
        )
    except UnsupportedOrderError as e:
        print(f"{FAIL_MARK} Error: {e}", file=sys.stderr)
        return EXIT_USAGE


def group_handler(args):
    """
    Maneja group: familias de mates de un orden completo o de un archivo graph6.
    """
    if args.order is not None:
        if args.input is not None:
            print(f"{FAIL_MARK} Error: group takes --order or an input file, not both.", file=sys.stderr)
            return EXIT_USAGE
        if not 1 <= args.order <= MAX_ENUMERATION_ORDER:
            print(f"{FAIL_MARK} Error: group --order supports 1 <= n <= {MAX_ENUMERATION_ORDER}.", file=sys.stderr)
            return EXIT_USAGE
        return run_group(args.format, sys.stdout, order=args.order, families_only=args.families_only)
    stream = _open_input(args.input)
    try:
        return run_group(args.format, sys.stdout, lines=stream, families_only=args.families_only)
    except (MixedOrderError, UnsupportedOrderError) as e:
        print(f"{FAIL_MARK} Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        _close_input(stream)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default="human", help="output format")
    common.add_argument("-v", "--verbose", action="count", default=0, help="more log output (repeatable)")
    common.add_argument("-q", "--quiet", dest="verbose", action="store_const", const=-1, help="errors only")

    parser = UsageErrorParser(
        prog="walkspec",
        description="Walk-matrix arithmetic, the 2^k - 1 mate bound and generalized cospectral certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=UsageErrorParser)

    p = sub.add_parser("analyze", parents=[common], help="classify graphs from graph6 input")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, '-' for stdin")
    p.set_defaults(handler=analyze_handler)

    p = sub.add_parser("certify", parents=[common], help="certify a generalized cospectral pair")
    p.add_argument("graph_a", help="graph6 string of G")
    p.add_argument("graph_b", help="graph6 string of H")
    p.add_argument("-o", "--output", help="also save the certificate document to this path")
    p.set_defaults(handler=certify_handler)

    p = sub.add_parser("sweep", parents=[common], help="exhaustive check of the mate bound")
    p.add_argument("--order", type=int, help="graph order n")
    p.add_argument("--shard", type=parse_shard, default=(0, 1), help="run shard I of T, written as I/T")
    p.add_argument("--allow-long", action="store_true", help="permit the long n = 7 run")
    p.add_argument("--merge", nargs="+", metavar="FILE", help="finalize shard records written with --shard")
    p.set_defaults(handler=sweep_handler)

    p = sub.add_parser("group", parents=[common], help="group graphs by generalized spectrum")
    p.add_argument("--order", type=int, help="all isomorphism classes of this order")
    p.add_argument("input", nargs="?", help="graph6 file, '-' or omitted for stdin")
    p.add_argument("--families-only", action="store_true", help="only groups with two or more members")
    p.set_defaults(handler=group_handler)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose)
    try:
        return args.handler(args)
    except FileNotFoundError as e:
        print(f"{FAIL_MARK} Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
