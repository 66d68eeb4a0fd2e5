# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Permuting a sequence so that its value gets as small as possible.

Finding the best permutation is strongly NP-hard. ``approx_sorting``
computes a lower bound ``L`` on the optimum and lays the elements out
block by block so that no interval peaks above ``L + M``, ``M`` being the
largest element; the result is within twice the optimum.
"""

import logging
from dataclasses import dataclass, field

from gettext import gettext as _

from ..exceptions import ValidationError
from .sequence import Sequence, kadane, partition_into_intervals

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LowerBoundTrace:
    """How the parameter handed to ``parametrized_sorting`` was chosen.

    ``P`` lists, in decreasing order, the distinct values ``-a`` for the
    elements ``a < -L0`` together with ``L0``; ``b_values[i]`` is
    ``b_of(A, P[i])``. ``chosen_i`` is the segment ``[P[i], P[i - 1])`` holding
    ``final_L``, the smallest ``L >= L0`` with ``L >= b_of(A, L)``.
    """

    L0: int
    M: int
    P: tuple
    chosen_i: int
    b_values: tuple
    final_L: int


@dataclass(frozen=True)
class SortOutcome:
    permutation: Sequence
    value: int
    parameter_L: int
    lower_bound: int
    trace: LowerBoundTrace = field(default=None, compare=False)


def largest_element(A):
    """``M``: the largest element, or 0 when there is no nonnegative one."""
    return max(0, max(A, default=0))


def parametrized_sorting(A, L):
    """Permutation of ``A`` whose intervals all peak at most at ``L + M``,
    the last one excepted.

    Blocks alternate: nonnegative elements, largest first, until the running
    score reaches ``L``; then negative elements, most negative first, until
    it drops below ``L``. What is left once either side runs out goes last.
    """
    A = Sequence.coerce(A)
    M = largest_element(A)
    if L < M:
        raise ValidationError(
            _("The parameter L=%(L)s must be at least the largest element M=%(M)s.")
            % {"L": L, "M": M}
        )
    positives = sorted((a for a in A if a >= 0), reverse=True)
    negatives = sorted(a for a in A if a < 0)
    pos_left, neg_left = sum(positives), sum(negatives)
    pi = ni = 0
    out = []
    running = 0
    while pi < len(positives) and ni < len(negatives):
        if running + pos_left >= L:
            while running < L:
                out.append(positives[pi])
                running += positives[pi]
                pos_left -= positives[pi]
                pi += 1
        else:
            out.extend(positives[pi:])
            running += pos_left
            pos_left, pi = 0, len(positives)
        if running + neg_left < L:
            while running >= L:
                out.append(negatives[ni])
                running += negatives[ni]
                neg_left -= negatives[ni]
                ni += 1
        else:
            out.extend(negatives[ni:])
            running += neg_left
            neg_left, ni = 0, len(negatives)
        running = max(0, running)
    out.extend(negatives[ni:])
    out.extend(positives[pi:])
    return Sequence(out)


def b_of(A, x):
    """``score(A)`` plus, for every element ``a < -x``, its excess ``-a - x``.

    Whenever ``x >= b_of(A, x)`` the result is a lower bound on the value of
    every permutation of ``A``.
    """
    A = Sequence.coerce(A)
    return sum(A) + sum(-a - x for a in A if a < -x)


def lower_bound_trace(A):
    """Smallest integer ``L >= L0`` with ``L >= b_of(A, L)``.

    ``b_of`` is nonincreasing in ``L``, so the admissible parameters form an
    upward closed set and the optimum belongs to it: its smallest element is
    a lower bound on the optimum. ``P`` cuts the range into segments
    ``[P[i], P[i - 1])`` on which ``b`` is ``total + excess - count * L``;
    inside a segment the smallest admissible ``L`` is
    ``ceil((total + excess) / (1 + count))``, raised to ``P[i]``.
    """
    A = Sequence.coerce(A)
    M = largest_element(A)
    total = sum(A)
    L0 = max(M, total)
    P = sorted({-a for a in A if a < -L0} | {L0}, reverse=True)
    # elements enter B_p in order of decreasing -a as p decreases
    heavy = sorted(a for a in A if a < -L0)
    ptr = excess = count = 0
    b_values = []
    chosen_i, final_L = 0, P[0]
    admissible = True
    for i, p in enumerate(P):
        while ptr < len(heavy) and -heavy[ptr] > p:
            excess -= heavy[ptr]
            count += 1
            ptr += 1
        b_values.append(total + excess - count * p)
        if not admissible:
            continue
        candidate = max(p, -(-(total + excess) // (1 + count)))
        if i == 0 or candidate < P[i - 1]:
            chosen_i, final_L = i, candidate
        else:
            admissible = False
    _logger.debug("L0=%s M=%s P=%s chosen=%s L=%s", L0, M, P, chosen_i, final_L)
    return LowerBoundTrace(L0, M, tuple(P), chosen_i, tuple(b_values), final_L)


def approx_sorting(A):
    """2-approximation for the best permutation (3/2 on restricted
    instances). Runs in O(n log n)."""
    A = Sequence.coerce(A)
    trace = lower_bound_trace(A)
    permutation = parametrized_sorting(A, trace.final_L)
    return SortOutcome(
        permutation=permutation,
        value=kadane(permutation),
        parameter_L=trace.final_L,
        lower_bound=trace.final_L,
        trace=trace,
    )


def last_interval_lower_bound(A):
    """Score of the last interval of ``A``: ``score(A)`` minus the (negative)
    scores of the other intervals. A lower bound on ``f(A)`` at least as good
    as ``score(A)``; 0 for the empty sequence."""
    partition = partition_into_intervals(A)
    if not len(partition):
        return 0
    return partition[-1].total
