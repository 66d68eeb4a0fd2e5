# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).

import logging
import operator
from dataclasses import dataclass

from gettext import gettext as _

from ..exceptions import ScoreOverflowError, ValidationError
from ..tools.config import config

_logger = logging.getLogger(__name__)


class Sequence:
    """Immutable sequence of exact signed integers.

    Building one checks that every element is an integer and that no sum
    over its elements can leave the configured signed range, so the
    algorithms below never have to check again.
    """

    __slots__ = ("elems",)

    def __init__(self, elems=()):
        values = []
        for pos, elem in enumerate(elems, start=1):
            if isinstance(elem, bool):
                raise ValidationError(
                    _("Element %(pos)s is a boolean, not an integer.") % {"pos": pos}
                )
            try:
                values.append(operator.index(elem))
            except TypeError as e:
                raise ValidationError(
                    _("Element %(pos)s (%(elem)r) is not an integer.")
                    % {"pos": pos, "elem": elem}
                ) from e
        self.elems = tuple(values)
        check_range(self.elems)

    @classmethod
    def coerce(cls, elems):
        if isinstance(elems, cls):
            return elems
        return cls(elems)

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, key):
        if isinstance(key, slice):
            return Sequence(self.elems[key])
        return self.elems[key]

    def __eq__(self, other):
        if isinstance(other, Sequence):
            return self.elems == other.elems
        if isinstance(other, (list, tuple)):
            return self.elems == tuple(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.elems)

    def __repr__(self):
        return f"Sequence({list(self.elems)!r})"

    def to_list(self):
        return list(self.elems)


def check_range(elems, extra=0):
    """Raise if ``sum |a|`` (plus ``|extra|``) exceeds the signed bound: no
    sum over the elements, with ``extra`` spliced in, can go further."""
    bound = config.scalar_bound()
    reach = sum(abs(a) for a in elems) + abs(extra)
    if reach > bound:
        raise ScoreOverflowError(
            _(
                "Sums over %(n)s elements may reach %(reach)s, beyond "
                "the %(bits)s-bit range."
            )
            % {"n": len(elems), "reach": reach, "bits": config["scalar_bits"]}
        )


@dataclass(frozen=True)
class SubseqRef:
    """Half-open reference ``A_i^j = <a_{i+1}, ..., a_j>`` (0-based ``[i, j)``)."""

    i: int
    j: int

    @property
    def empty(self):
        return self.i == self.j

    def __len__(self):
        return self.j - self.i

    def __str__(self):
        return f"[{self.i},{self.j})"


@dataclass(frozen=True)
class Interval:
    bounds: SubseqRef
    total: int
    best: int
    best_prefix_end: int

    @property
    def start(self):
        return self.bounds.i

    @property
    def end(self):
        return self.bounds.j


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple

    @property
    def neg_scores(self):
        return [interval.total for interval in self.intervals]

    @property
    def value(self):
        return max((interval.best for interval in self.intervals), default=0)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, index):
        return self.intervals[index]


def _check_ref(A, ref):
    if not 0 <= ref.i <= ref.j <= len(A):
        raise ValidationError(
            _("Subsequence %(ref)s is out of range for a sequence of length %(n)s.")
            % {"ref": ref, "n": len(A)}
        )


def score(A, ref):
    """Sum of the elements of ``A_i^j``; 0 for the empty subsequence."""
    A = Sequence.coerce(A)
    _check_ref(A, ref)
    return sum(A.elems[ref.i : ref.j])


def kadane(elems):
    """Value f of any iterable of integers, in one pass."""
    best = cur = 0
    for a in elems:
        cur += a
        if cur < 0:
            cur = 0
        elif cur > best:
            best = cur
    return best


def max_prefix_score(elems):
    """Largest prefix sum, the empty prefix included (so never negative)."""
    best = cur = 0
    for a in elems:
        cur += a
        if cur > best:
            best = cur
    return best


def max_scoring_subsequence(A):
    """Kadane's algorithm: a maximum scoring subsequence and f(A).

    The running score restarts after every negative total, i.e. at each
    interval boundary.
    """
    A = Sequence.coerce(A)
    best, best_ref = 0, SubseqRef(0, 0)
    cur, start = 0, 0
    for pos, a in enumerate(A.elems):
        cur += a
        if cur < 0:
            cur, start = 0, pos + 1
        elif cur > best:
            best, best_ref = cur, SubseqRef(start, pos + 1)
    return best_ref, best


def minimal_mss(A):
    """Leftmost maximum scoring subsequence with no zero-score prefix or
    suffix.

    Pairs every end ``j`` with the latest minimum prefix sum before it and
    keeps the first ``j`` reaching the maximum.
    """
    A = Sequence.coerce(A)
    best, best_ref = 0, SubseqRef(0, 0)
    prefix = 0
    low, low_at = 0, 0
    for pos, a in enumerate(A.elems, start=1):
        prefix += a
        if prefix - low > best:
            best, best_ref = prefix - low, SubseqRef(low_at, pos)
        if prefix <= low:
            low, low_at = prefix, pos
    return best_ref, best


def partition_into_intervals(A):
    A = Sequence.coerce(A)
    n = len(A)
    intervals = []
    start, running, best, best_end = 0, 0, 0, 0
    for pos, a in enumerate(A.elems, start=1):
        running += a
        if running > best:
            best, best_end = running, pos
        if running < 0:
            intervals.append(
                Interval(SubseqRef(start, pos), running, best, best_end)
            )
            start, running, best, best_end = pos, 0, 0, pos
    if start < n:
        intervals.append(Interval(SubseqRef(start, n), running, best, best_end))
    _logger.debug("Partitioned %s elements into %s intervals", n, len(intervals))
    return IntervalPartition(tuple(intervals))
