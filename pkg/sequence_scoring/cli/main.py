# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""``sequence-scoring`` command line.

Batch subcommands read one instance per line and write one result per
line, in input order. Exit status: 0 success, 1 verification mismatch,
2 input error (the worst line wins).
"""

import argparse
import functools
import logging
import multiprocessing
import sys

from gettext import gettext as _

from ..exceptions import UserError
from ..models.insertion import insert_best, insertion_value
from ..models.instance_generator import (
    gen_3partition_instance,
    gen_3partition_yes_items,
    gen_kpartition_instance,
    gen_random,
    make_rng,
    tightness_family,
)
from ..models.oracle import exact_sss, naive_iss
from ..models.sequence import (
    Sequence,
    max_prefix_score,
    max_scoring_subsequence,
    partition_into_intervals,
)
from ..models.sorting import (
    approx_sorting,
    largest_element,
    last_interval_lower_bound,
)
from ..report.report_text import write_bench_csv, write_lines
from ..report.report_xlsx import BenchReportXlsx, SortReportXlsx
from ..tools import instance_file
from ..tools.config import config
from . import bench

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT_ERROR = 2

LOG_FORMAT = "%(asctime)s %(process)d %(levelname)s %(name)s: %(message)s"


def setup_logging(level):
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise UserError(_("Unknown log level '%(level)s'.") % {"level": level})
    logging.basicConfig(
        stream=sys.stderr, level=numeric, format=LOG_FORMAT, force=True
    )


# Per-line jobs. Module level so that worker processes can unpickle them.


def job_mss(record, options):
    A = Sequence(record.seq)
    ref, value = max_scoring_subsequence(A)
    partition = partition_into_intervals(A)
    return {
        "value": value,
        "span": str(ref),
        "intervals": len(partition),
        "boundaries": [[interval.start, interval.end] for interval in partition],
    }


def job_insert(record, options):
    A = Sequence(record.seq)
    x = record.x
    mode = options["mode"]
    result = {}
    status = EXIT_OK
    if mode in ("fast", "both"):
        outcome = insert_best(A, x)
        result.update(index=outcome.index, value=outcome.value)
    if mode in ("naive", "both"):
        report = naive_iss(A, x)
        if mode == "naive":
            result.update(index=report.witnesses[0], value=report.best_value)
        else:
            result["naive_value"] = report.best_value
        result["witnesses"] = list(report.witnesses)
    if mode == "both":
        agreement = (
            outcome.value == report.best_value
            and insertion_value(A, x, outcome.index) == outcome.value
        )
        result["agreement"] = agreement
        if not agreement:
            _logger.error(
                "Line %s: fast insertion gives %s at %s, naive gives %s",
                record.line,
                outcome.value,
                outcome.index,
                report.best_value,
            )
            status = EXIT_MISMATCH
    return result, status


def _ratio(value, opt):
    if opt == 0:
        return 1.0
    return value / opt


def job_sort(record, options):
    A = Sequence(record.seq)
    mode = options["mode"]
    result = {"n": len(A)}
    status = EXIT_OK
    if mode in ("approx", "both"):
        outcome = approx_sorting(A)
        result.update(
            value=outcome.value,
            L=outcome.parameter_L,
            lower_bound=outcome.lower_bound,
            last_interval_bound=last_interval_lower_bound(outcome.permutation),
        )
    if mode in ("exact", "both"):
        report = exact_sss(A, limit=options["limit"])
        result["opt"] = report.best_value
    if mode == "both":
        ratio = _ratio(outcome.value, report.best_value)
        M = largest_element(A)
        bound_ok = (
            outcome.value <= 2 * report.best_value
            and outcome.value <= report.best_value + M
            and outcome.lower_bound <= report.best_value
        )
        result.update(ratio=ratio, bound_ok=bound_ok)
        if not bound_ok:
            _logger.error(
                "Line %s: approximation %s against optimum %s breaks its guarantee",
                record.line,
                outcome.value,
                report.best_value,
            )
            status = EXIT_MISMATCH
    if mode == "exact":
        result["permutation"] = report.witnesses[0].to_list()
    else:
        result["permutation"] = outcome.permutation.to_list()
    return result, status


def job_verify(record, options):
    """Both modes of insertion (when the line carries x) and of sorting
    (when the instance is small enough for the exact oracle)."""
    result = {}
    status = EXIT_OK
    if record.x is not None:
        insert_result, insert_status = job_insert(record, dict(options, mode="both"))
        result["insert"] = "ok" if insert_status == EXIT_OK else "mismatch"
        status = max(status, insert_status)
    if len(record.seq) <= options["limit"]:
        sort_result, sort_status = job_sort(record, dict(options, mode="both"))
        result["sort"] = "ok" if sort_status == EXIT_OK else "mismatch"
        result["ratio"] = sort_result["ratio"]
        status = max(status, sort_status)
    else:
        outcome = approx_sorting(record.seq)
        checked = outcome.lower_bound <= outcome.value <= (
            outcome.parameter_L + largest_element(record.seq)
        )
        result["sort"] = "ok" if checked else "mismatch"
        if not checked:
            status = EXIT_MISMATCH
    return result, status


def run_job(job, options, record):
    """Result dict of ``job`` on ``record``; input errors become error lines."""
    if record.error is not None:
        return {
            "line": record.line,
            "status": EXIT_INPUT_ERROR,
            "error": record.error.message,
        }
    try:
        outcome = job(record, options)
    except UserError as e:
        _logger.warning("Line %s: %s", record.line, e.message)
        return {"line": record.line, "status": EXIT_INPUT_ERROR, "error": e.message}
    result, status = outcome if isinstance(outcome, tuple) else (outcome, EXIT_OK)
    return {"line": record.line, "status": status, **result}


def _init_worker(options):
    config.options = dict(options)


def run_batch(job, options, records, workers=1):
    task = functools.partial(run_job, job, options)
    if workers <= 1 or len(records) < 2:
        return [task(record) for record in records]
    _logger.info("Processing %s instances with %s workers", len(records), workers)
    with multiprocessing.Pool(
        workers, initializer=_init_worker, initargs=(dict(config.options),)
    ) as pool:
        return pool.map(task, records)


def _open_input(path, stdin):
    if path in (None, "-"):
        return stdin
    try:
        return open(path, encoding="utf-8")
    except OSError as e:
        raise UserError(
            _("Cannot read '%(path)s': %(error)s") % {"path": path, "error": e.strerror}
        ) from e


def _read_records(args, stdin, require_x=False):
    stream = _open_input(args.input, stdin)
    try:
        return instance_file.read_records(stream, args.format, require_x=require_x)
    finally:
        if stream is not stdin:
            stream.close()


def _finish_batch(args, results, stdout):
    write_lines(stdout, results, as_json=args.json)
    status = max((result["status"] for result in results), default=EXIT_OK)
    _logger.info("%s instances, exit status %s", len(results), status)
    return status


def cmd_mss(args, stdin, stdout):
    records = _read_records(args, stdin)
    results = run_batch(job_mss, {}, records, args.workers)
    return _finish_batch(args, results, stdout)


def cmd_insert(args, stdin, stdout):
    records = _read_records(args, stdin, require_x=True)
    options = {"mode": args.mode}
    results = run_batch(job_insert, options, records, args.workers)
    return _finish_batch(args, results, stdout)


def cmd_sort(args, stdin, stdout):
    records = _read_records(args, stdin)
    options = {"mode": args.mode, "limit": config["exact_sss_limit"]}
    results = run_batch(job_sort, options, records, args.workers)
    if args.xlsx:
        SortReportXlsx().write(args.xlsx, {"results": results})
    return _finish_batch(args, results, stdout)


def cmd_verify(args, stdin, stdout):
    records = _read_records(args, stdin)
    options = {"limit": config["exact_sss_limit"]}
    results = run_batch(job_verify, options, records, args.workers)
    return _finish_batch(args, results, stdout)


def _parse_items(text):
    try:
        return [int(a) for a in str(text).replace(",", " ").split()]
    except ValueError as e:
        raise UserError(
            _("Items must be integers separated by commas, got '%(text)s'.")
            % {"text": text}
        ) from e


def _require(args, *names):
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        raise UserError(
            _("Generator '%(kind)s' needs %(names)s.")
            % {"kind": args.kind, "names": ", ".join(f"--{n}" for n in missing)}
        )


def cmd_gen(args, stdin, stdout):
    rng = make_rng(config["seed"])
    instances = []
    if args.kind == "random":
        _require(args, "n")
        for _count in range(args.count):
            A = gen_random(args.n, args.lo, args.hi, rng)
            x = None
            if args.with_x:
                x = int(rng.integers(args.lo, args.hi, endpoint=True))
            instances.append((A, x))
    elif args.kind == "threepartition":
        _require(args, "s")
        for _count in range(args.count):
            if args.items is not None:
                items = _parse_items(args.items)
            else:
                _require(args, "k")
                items = gen_3partition_yes_items(args.k, args.s, rng)
            instances.append((gen_3partition_instance(items, args.s), None))
    elif args.kind == "tightness":
        _require(args, "x", "y")
        instances.append((tightness_family(args.x, args.y), None))
    elif args.kind == "kpartition":
        _require(args, "items", "m")
        A = gen_kpartition_instance(_parse_items(args.items), args.m)
        instances.append((A, None))
    instance_file.write_records(
        stdout, instances, fmt="jsonl" if args.json else "plain"
    )
    _logger.info("Generated %s %s instances", len(instances), args.kind)
    return EXIT_OK


def cmd_bench(args, stdin, stdout):
    sizes = bench.parse_sizes(config["bench_sizes"])
    algos = bench.ALGOS if args.algo == "both" else (args.algo,)
    records, mismatches = bench.run_bench(
        sizes, config["bench_reps"], config["seed"], algos=algos
    )
    write_bench_csv(stdout, records)
    summary = bench.summarize(records)
    if args.xlsx:
        BenchReportXlsx().write(args.xlsx, {"records": records, "summary": summary})
    return EXIT_MISMATCH if mismatches else EXIT_OK


def cmd_trace(args, stdin, stdout):
    stream = _open_input(args.input, stdin)
    try:
        events = instance_file.read_trace(stream, args.format)
    finally:
        if stream is not stdin:
            stream.close()
    A = Sequence(event.delta for event in events)
    ref, burst = max_scoring_subsequence(A)
    outcome = approx_sorting(A)
    result = {
        "events": len(A),
        "peak_from_empty": max_prefix_score(A),
        "burst": burst,
        "span": str(ref),
        "last_interval_bound": last_interval_lower_bound(A),
        "reorder_value": outcome.value,
        "reorder_lower_bound": outcome.lower_bound,
        "reorder_opt": None,
        "labels": [event.label for event in events],
    }
    if len(A) <= config["exact_sss_limit"]:
        result["reorder_opt"] = exact_sss(A).best_value
    else:
        _logger.info(
            "Trace of %s events: exact reordering skipped (limit %s)",
            len(A),
            config["exact_sss_limit"],
        )
    write_lines(stdout, [result], as_json=args.json)
    return EXIT_OK


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(_("expected a positive integer"))
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help=_("INI configuration file"))
    common.add_argument("--log-level", help=_("debug, info, warning or error"))
    common.add_argument("--seed", type=int, help=_("seed of the PCG64 generator"))
    common.add_argument("--json", action="store_true", help=_("JSON lines output"))

    batch = argparse.ArgumentParser(add_help=False)
    batch.add_argument("--input", default="-", help=_("instance file, '-' for stdin"))
    batch.add_argument(
        "--format",
        choices=instance_file.FORMATS,
        default="auto",
        help=_("input format"),
    )
    batch.add_argument("--workers", type=_positive_int, help=_("worker processes"))

    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument(
        "--limit", type=int, help=_("largest instance handed to the exact oracle")
    )

    parser = argparse.ArgumentParser(
        prog="sequence-scoring",
        description=_("Maximum scoring subsequences: insertion and sorting."),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    mss = subparsers.add_parser(
        "mss", parents=[common, batch], help=_("value of each sequence")
    )
    mss.set_defaults(func=cmd_mss)

    insert = subparsers.add_parser(
        "insert", parents=[common, batch], help=_("best insertion of x")
    )
    insert.add_argument("--mode", choices=("fast", "naive", "both"), default="fast")
    insert.set_defaults(func=cmd_insert)

    sort = subparsers.add_parser(
        "sort", parents=[common, batch, oracle], help=_("low-value permutation")
    )
    sort.add_argument("--mode", choices=("approx", "exact", "both"), default="approx")
    sort.add_argument("--xlsx", help=_("also write a workbook to this path"))
    sort.set_defaults(func=cmd_sort)

    verify = subparsers.add_parser(
        "verify", parents=[common, batch, oracle], help=_("check against the oracles")
    )
    verify.set_defaults(func=cmd_verify)

    gen = subparsers.add_parser("gen", parents=[common], help=_("generate instances"))
    gen.add_argument(
        "kind", choices=("random", "threepartition", "tightness", "kpartition")
    )
    gen.add_argument("--n", type=int)
    gen.add_argument("--lo", type=int, default=-100)
    gen.add_argument("--hi", type=int, default=100)
    gen.add_argument("--count", type=_positive_int, default=1)
    gen.add_argument("--with-x", action="store_true", help=_("add a random x"))
    gen.add_argument("--items", help=_("comma separated items"))
    gen.add_argument("--s", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--x", type=int)
    gen.add_argument("--y", type=int)
    gen.set_defaults(func=cmd_gen)

    bench_parser = subparsers.add_parser(
        "bench", parents=[common], help=_("time fast against naive insertion")
    )
    bench_parser.add_argument("--sizes", help=_("comma separated sizes"))
    bench_parser.add_argument("--reps", type=_positive_int)
    bench_parser.add_argument(
        "--algo", choices=("fast", "naive", "both"), default="both"
    )
    bench_parser.add_argument("--xlsx", help=_("also write a workbook to this path"))
    bench_parser.set_defaults(func=cmd_bench)

    trace = subparsers.add_parser(
        "trace", parents=[common, oracle], help=_("buffer occupancy of a trace")
    )
    trace.add_argument("--input", default="-", help=_("trace file, '-' for stdin"))
    trace.add_argument(
        "--format",
        choices=instance_file.FORMATS,
        default="auto",
        help=_("input format"),
    )
    trace.set_defaults(func=cmd_trace)
    return parser


OVERRIDES = {
    "limit": "exact_sss_limit",
    "sizes": "bench_sizes",
    "reps": "bench_reps",
    "seed": "seed",
    "workers": "workers",
    "log_level": "log_level",
}


def _apply_overrides(args):
    for dest, key in OVERRIDES.items():
        value = getattr(args, dest, None)
        if value is not None:
            config[key] = value
    if hasattr(args, "workers"):
        args.workers = config["workers"]


def main(argv=None, stdin=None, stdout=None):
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        config.load(args.config)
        _apply_overrides(args)
        setup_logging(config["log_level"])
        return args.func(args, stdin, stdout)
    except UserError as e:
        _logger.error("%s", e.message)
        return e.exit_code
    except Exception:
        _logger.exception("Error while running '%s'", args.command)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
