import json
import logging
import multiprocessing
from functools import reduce

from tqdm import tqdm

from config import load_worker_count
from data.json_handler import load_shard_result, shard_to_record
from data.report_writer import sweep_record, write_records
from processing.mate_groups import ShardResult, check_sweep_order, finalize_sweep, merge_shard_results, run_sweep_shard
from utils.constants import EXIT_INVARIANT_VIOLATION, EXIT_OK

log = logging.getLogger(__name__)

# Sub-shards por worker para repartir mejor la carga
_SPLIT_PER_WORKER = 4


def _sub_shards(shard_index, shard_total, pieces):
    """Divide el shard I/T en piezas contiguas que cubren exactamente el mismo rango de códigos."""
    return [(shard_index * pieces + j, shard_total * pieces) for j in range(pieces)]


def _run_piece(args):
    n, index, total, allow_long = args
    return run_sweep_shard(n, index, total, allow_long=allow_long)


def collect_shard(n, shard_index=0, shard_total=1, allow_long=False, workers=None, progress=False):
    """
    Recorre el shard con un pool de procesos y fusiona los resultados parciales.
    El resultado no depende del número de workers.
    """
    check_sweep_order(n, allow_long)
    workers = workers or load_worker_count()
    pieces = _sub_shards(shard_index, shard_total, workers * _SPLIT_PER_WORKER)
    tasks = [(n, i, t, allow_long) for i, t in pieces]

    if workers == 1:
        parts = [_run_piece(task) for task in tqdm(tasks, desc=f"order {n}", disable=not progress)]
    else:
        with multiprocessing.Pool(processes=workers) as pool:
            parts = list(tqdm(pool.imap(_run_piece, tasks), total=len(tasks), desc=f"order {n}", disable=not progress))

    merged = reduce(merge_shard_results, parts)
    # el resultado se identifica por el shard pedido, no por las piezas internas
    return ShardResult(merged.order, merged.classes, frozenset({(shard_index, shard_total)}))


def run_sweep(n, shard=(0, 1), allow_long=False, fmt="human", stream=None, workers=None, progress=False):
    """
    Ejecuta sweep. Sin shard se verifica la cota completa; con shard I/T se
    escribe el registro parcial que después combina --merge.
    """
    shard_index, shard_total = shard
    result = collect_shard(n, shard_index, shard_total, allow_long, workers, progress)
    if shard_total > 1:
        stream.write(json.dumps(shard_to_record(result)) + "\n")
        log.info("shard %d/%d of order %d: %d classes", shard_index, shard_total, n, len(result.classes))
        return EXIT_OK
    return _report(finalize_sweep(result, progress=progress), fmt, stream)


def run_merge(paths, fmt="human", stream=None, progress=False):
    """Combina registros de shards y verifica la cota sobre la unión."""
    merged = reduce(merge_shard_results, (load_shard_result(p) for p in paths))
    totals = {t for _, t in merged.shards}
    if len(totals) == 1:
        total = totals.pop()
        missing = sorted(set(range(total)) - {i for i, _ in merged.shards})
        if missing:
            log.warning("⚠️ order %d: shards %s of %d missing", merged.order, missing, total)
    return _report(finalize_sweep(merged, progress=progress), fmt, stream)


def _report(report, fmt, stream):
    write_records([sweep_record(report)], fmt, stream)
    return EXIT_OK if report.ok else EXIT_INVARIANT_VIOLATION


if __name__ == "__main__":
    import sys
    from main import main
    sys.exit(main(["sweep", *sys.argv[1:]]))
