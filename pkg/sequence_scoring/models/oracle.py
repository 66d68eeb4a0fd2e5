# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Brute-force references for the fast algorithms.

Only ``score`` and ``apply_insertion`` are shared with the code under
test; everything else is recomputed here from the definitions.
"""

import collections
import functools
import logging
from dataclasses import dataclass

from gettext import gettext as _

from ..exceptions import OracleLimitError
from ..tools.config import config
from .insertion import apply_insertion
from .sequence import Sequence

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleReport:
    best_value: int
    witnesses: tuple
    instances_checked: int


def _value(elems):
    best = cur = 0
    for a in elems:
        cur = max(0, cur + a)
        best = max(best, cur)
    return best


def brute_mss(A):
    """Largest ``P[j] - P[i]`` over all ``0 <= i <= j <= n``, O(n^2)."""
    A = Sequence.coerce(A)
    prefix = [0]
    for a in A:
        prefix.append(prefix[-1] + a)
    return max(
        prefix[j] - prefix[i]
        for j in range(len(prefix))
        for i in range(j + 1)
    )


def naive_iss(A, x):
    """Every insertion position tried in turn; all optimal ones returned."""
    A = Sequence.coerce(A)
    values = [_value(apply_insertion(A, x, p)) for p in range(len(A) + 1)]
    best = min(values)
    witnesses = tuple(p for p, value in enumerate(values) if value == best)
    return OracleReport(best, witnesses, len(values))


def distinct_permutations(elems):
    """Each distinct ordering of the multiset ``elems`` exactly once."""
    counts = collections.Counter(elems)
    values = sorted(counts)
    size = len(elems)
    current = []

    def walk():
        if len(current) == size:
            yield tuple(current)
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                current.append(v)
                yield from walk()
                current.pop()
                counts[v] += 1

    return walk()


def _check_limit(A, limit):
    if limit is None:
        limit = config["exact_sss_limit"]
    if len(A) > limit:
        raise OracleLimitError(
            _(
                "Exact sorting is limited to %(limit)s elements, "
                "the instance has %(n)s."
            )
            % {"limit": limit, "n": len(A)},
            limit,
        )


def exact_sss(A, limit=None, memoize=True):
    """Smallest value over all permutations of ``A``, with one witness.

    ``memoize`` searches over (remaining multiset, running score of the
    current interval) states instead of enumerating permutations; both give
    the same value.
    """
    A = Sequence.coerce(A)
    _check_limit(A, limit)
    if not memoize:
        best, witness, checked = None, (), 0
        for perm in distinct_permutations(A.elems):
            checked += 1
            value = _value(perm)
            if best is None or value < best:
                best, witness = value, perm
        return OracleReport(best, (Sequence(witness),), checked)

    values = tuple(sorted(set(A.elems)))
    counter = collections.Counter(A.elems)
    start = tuple(counter[v] for v in values)

    @functools.lru_cache(maxsize=None)
    def solve(counts, running):
        best, pick = 0, None
        for idx, available in enumerate(counts):
            if not available:
                continue
            nxt = max(0, running + values[idx])
            rest = counts[:idx] + (available - 1,) + counts[idx + 1 :]
            value = max(nxt, solve(rest, nxt)[0])
            if pick is None or value < best:
                best, pick = value, idx
        return best, pick

    best = solve(start, 0)[0]
    witness = []
    counts, running = start, 0
    while any(counts):
        idx = solve(counts, running)[1]
        witness.append(values[idx])
        running = max(0, running + values[idx])
        counts = counts[:idx] + (counts[idx] - 1,) + counts[idx + 1 :]
    checked = solve.cache_info().currsize
    _logger.debug("Exact sorting of %s elements: %s states", len(A), checked)
    return OracleReport(best, (Sequence(witness),), checked)
