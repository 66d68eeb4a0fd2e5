# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Timing of the linear insertion against the position-by-position one."""

import logging
import statistics
import time
from dataclasses import dataclass

from gettext import gettext as _

from ..exceptions import UserError
from ..models.insertion import insert_best
from ..models.instance_generator import gen_random, make_rng
from ..models.oracle import naive_iss

_logger = logging.getLogger(__name__)

ALGOS = ("fast", "naive")


@dataclass(frozen=True)
class BenchRecord:
    n: int
    algo: str
    rep: int
    wall_time_ns: int
    checksum: int

    @property
    def micros(self):
        return self.wall_time_ns / 1000


def _fast(A, x):
    return insert_best(A, x).value


def _naive(A, x):
    return naive_iss(A, x).best_value


RUNNERS = {"fast": _fast, "naive": _naive}


def parse_sizes(text):
    try:
        sizes = [int(s) for s in str(text).split(",") if s.strip()]
    except ValueError as e:
        raise UserError(
            _("Sizes must be a comma separated list of integers, got '%(text)s'.")
            % {"text": text}
        ) from e
    if not sizes or any(n <= 0 for n in sizes):
        raise UserError(_("Sizes must be positive, got '%(text)s'.") % {"text": text})
    return sizes


def run_bench(sizes, reps, seed, algos=ALGOS, lo=-100, hi=100):
    """Time every algorithm of ``algos`` on ``reps`` random instances per size.

    :return: the records, and the ``(n, rep)`` pairs on which the algorithms
        disagreed.
    """
    if reps < 1:
        raise UserError(_("reps must be at least 1, got %(reps)s.") % {"reps": reps})
    rng = make_rng(seed)
    records, mismatches = [], []
    for n in sizes:
        for rep in range(reps):
            A = gen_random(n, lo, hi, rng)
            x = int(rng.integers(lo, hi, endpoint=True))
            checksums = set()
            for algo in algos:
                start = time.perf_counter_ns()
                checksum = RUNNERS[algo](A, x)
                elapsed = max(1, time.perf_counter_ns() - start)
                checksums.add(checksum)
                records.append(BenchRecord(n, algo, rep, elapsed, checksum))
            if len(checksums) > 1:
                _logger.error("Checksum mismatch at n=%s rep=%s x=%s", n, rep, x)
                mismatches.append((n, rep))
        _logger.info("Size %s done", n)
    return records, mismatches


def summarize(records):
    """Median time per ``(n, algo)``; ``growth`` is the ratio to the median
    at the previous size for the same algorithm."""
    groups = {}
    for record in records:
        groups.setdefault((record.algo, record.n), []).append(record.micros)
    summary = []
    previous = {}
    for (algo, n), times in sorted(groups.items()):
        median = statistics.median(times)
        growth = median / previous[algo] if algo in previous else None
        previous[algo] = median
        summary.append(
            {"n": n, "algo": algo, "median_micros": median, "growth": growth}
        )
        _logger.info("%s n=%s median=%.1fus growth=%s", algo, n, median, growth)
    return summary
