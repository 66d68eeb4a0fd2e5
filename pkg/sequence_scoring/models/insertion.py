# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Best position to insert one value into a sequence.

For ``x < 0`` the value goes inside the leftmost minimal maximum scoring
subsequence, at the split that balances its two halves. For ``x > 0`` only
the position just before the last element of each interval is a candidate;
a two-phase scan over the intervals picks the one whose extended interval
has the lowest value. Both run in linear time and space.
"""

import collections
import itertools
import logging
from dataclasses import dataclass, field

from gettext import gettext as _

from ..exceptions import ValidationError
from .sequence import (
    Sequence,
    check_range,
    kadane,
    minimal_mss,
    partition_into_intervals,
)

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InsertionOutcome:
    index: int
    value: int


@dataclass
class PhaseArrays:
    """Scratch state of the positive case, indexed by interval (0-based).

    ``sn[k]`` is the sum of the interval scores from ``k`` to the end, so the
    scores of intervals ``k..k'-1`` add up to ``sn[k] - sn[k']``.
    ``intscr[k]`` is the value of interval ``k``, ``xscr[k]`` the score of its
    prefix ending at ``x`` when ``x`` goes just before its last element, and
    ``extscr[k]`` the best prefix score of its extended interval found so far.
    ``intq`` holds the candidate intervals; its last entry is the rear.
    """

    x: int
    starts: list
    ends: list
    sn: list
    intscr: list
    xscr: list
    extscr: list = field(default_factory=list)
    intq: list = field(default_factory=list)

    @property
    def size(self):
        return len(self.intscr)

    @property
    def rear(self):
        return self.intq[-1]

    @property
    def q(self):
        return len(self.intq)

    def dist(self, k_from, k_to):
        """Offset between the curve of the extended interval of ``k_from`` and
        interval ``k_to``; negative when ``k_to`` is not absorbed."""
        return self.x + self.sn[k_from] - self.sn[k_to]


def _spliced(A, x, p):
    return itertools.chain(A.elems[:p], (x,), A.elems[p:])


def _check_position(A, p):
    if not 0 <= p <= len(A):
        raise ValidationError(
            _("Insertion index %(p)s is out of range [0, %(n)s].")
            % {"p": p, "n": len(A)}
        )


def apply_insertion(A, x, p):
    A = Sequence.coerce(A)
    _check_position(A, p)
    return Sequence(_spliced(A, x, p))


def insertion_value(A, x, p):
    """f of ``A`` with ``x`` inserted at ``p``, without building the sequence."""
    A = Sequence.coerce(A)
    _check_position(A, p)
    return kadane(_spliced(A, x, p))


def insert_best(A, x, leftmost=True):
    A = Sequence.coerce(A)
    check_range(A.elems, extra=x)
    if x < 0:
        return insert_best_negative(A, x)
    if x > 0:
        return insert_best_positive(A, x, leftmost=leftmost)
    # any index is optimal
    return InsertionOutcome(0, kadane(A.elems))


def insert_best_negative(A, x):
    if x >= 0:
        raise ValidationError(
            _("The negative case expects x < 0, got %(x)s.") % {"x": x}
        )
    A = Sequence.coerce(A)
    check_range(A.elems, extra=x)
    ref, best = minimal_mss(A)
    i, j = ref.i, ref.j
    if not len(A) or j <= i + 1 or best == 0:
        return InsertionOutcome(0, insertion_value(A, x, 0))

    # left[p - i] = f(A_i^p), filled left to right
    left = [0] * (j - i + 1)
    cur = top = 0
    for p in range(i + 1, j + 1):
        cur = max(0, cur + A.elems[p - 1])
        top = max(top, cur)
        left[p - i] = top

    # right-to-left over f(A_p^j), keeping the leftmost best split
    position, balance = None, None
    cur = top = 0
    for p in range(j - 1, i, -1):
        cur = max(0, cur + A.elems[p])
        top = max(top, cur)
        worst = max(left[p - i], top)
        if balance is None or worst <= balance:
            position, balance = p, worst
    _logger.debug(
        "Negative insertion of %s inside %s: split at %s (halves <= %s)",
        x,
        ref,
        position,
        balance,
    )
    return InsertionOutcome(position, insertion_value(A, x, position))


def first_phase(A, x):
    """Interval partition of ``A`` followed by a null element, with the
    arrays the second phase runs on."""
    padded = Sequence(A.elems + (0,))
    partition = partition_into_intervals(padded)
    starts = [interval.start for interval in partition]
    ends = [interval.end for interval in partition]
    intscr = [interval.best for interval in partition]
    xscr = [
        x + interval.total - padded.elems[interval.end - 1] for interval in partition
    ]
    sn = list(itertools.accumulate(reversed(partition.neg_scores)))[::-1] + [0]
    return PhaseArrays(x, starts, ends, sn, intscr, xscr)


def second_phase(arrays, observer=None):
    """Scan the intervals left to right keeping, in ``intq``, the extended
    intervals whose values strictly decrease from front to rear. Returns the
    interval at the rear, whose extended interval has the lowest value.

    ``observer(k, arrays)`` is called at the top of every iteration.
    """
    x, intscr, xscr = arrays.x, arrays.intscr, arrays.xscr
    extscr = arrays.extscr = [None] * arrays.size
    intq = arrays.intq = [0]
    extscr[0] = max(intscr[0], xscr[0])
    for k in range(1, arrays.size):
        if observer is not None:
            observer(k, arrays)
        rear = intq[-1]
        dist = x + arrays.sn[rear] - arrays.sn[k]
        while dist >= 0 and dist + intscr[k] > extscr[rear]:
            extscr[rear] = dist + intscr[k]
            if len(intq) > 1 and extscr[rear] >= extscr[intq[-2]]:
                # the curves stay at a constant distance from here on, so the
                # rear can never beat its predecessor again
                intq.pop()
                rear = intq[-1]
                dist = x + arrays.sn[rear] - arrays.sn[k]
                _logger.debug("Interval %s dropped from the queue at %s", rear, k)
        extscr[k] = max(intscr[k], xscr[k])
        if extscr[k] < extscr[intq[-1]]:
            intq.append(k)
    return intq[-1]


def extended_interval_values(A, x):
    """f(x.I_k) for every interval k of ``A`` (null element appended), x > 0.

    Interval ``m > k`` belongs to the extended interval of ``k`` as long as
    ``x + sn[k] - sn[m] >= 0``; the last such ``m`` only moves right as ``k``
    grows, so the largest ``intscr[m] - sn[m]`` over the window comes from a
    monotone deque.
    """
    if x <= 0:
        raise ValidationError(
            _("The positive case expects x > 0, got %(x)s.") % {"x": x}
        )
    A = Sequence.coerce(A)
    arrays = first_phase(A, x)
    sn, intscr, xscr = arrays.sn, arrays.intscr, arrays.xscr
    size = arrays.size
    weight = [intscr[m] - sn[m] for m in range(size)]
    window = collections.deque()
    values = []
    last = 0
    for k in range(size):
        last = max(last, k)
        while last + 1 < size and x + sn[k] - sn[last + 1] >= 0:
            last += 1
            while window and weight[window[-1]] <= weight[last]:
                window.pop()
            window.append(last)
        while window and window[0] <= k:
            window.popleft()
        value = max(intscr[k], xscr[k])
        if window:
            value = max(value, x + sn[k] + weight[window[0]])
        values.append(value)
    return arrays, values


def insert_best_positive(A, x, observer=None, leftmost=True):
    """Best insertion of ``x > 0`` at the smallest candidate position that
    reaches the optimum.

    ``leftmost=False`` returns the interval the queue scan settles on
    instead; both have the same value.
    """
    if x <= 0:
        raise ValidationError(
            _("The positive case expects x > 0, got %(x)s.") % {"x": x}
        )
    A = Sequence.coerce(A)
    check_range(A.elems, extra=x)
    arrays = first_phase(A, x)
    base = max(arrays.intscr)
    best = second_phase(arrays, observer=observer)
    value = max(base, arrays.extscr[best])
    if leftmost:
        _arrays, values = extended_interval_values(A, x)
        best = next(k for k, v in enumerate(values) if max(base, v) == value)
    _logger.debug(
        "Positive insertion of %s: interval %s of %s, value %s",
        x,
        best,
        arrays.size,
        value,
    )
    return InsertionOutcome(arrays.ends[best] - 1, value)
