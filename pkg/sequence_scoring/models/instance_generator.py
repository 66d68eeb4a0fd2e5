# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl.html).
"""Instance generators: random sequences, 3-Partition and k-partition
encodings, and the family on which the factor 2 is reached.

Randomness always comes from a NumPy ``Generator`` on the ``PCG64`` bit
generator, seeded with a single integer, so corpora are reproducible on
every platform.
"""

import logging

import numpy as np
from gettext import gettext as _

from ..exceptions import UserError, ValidationError
from .sequence import Sequence

_logger = logging.getLogger(__name__)


def make_rng(seed):
    return np.random.Generator(np.random.PCG64(seed))


def gen_random(n, lo, hi, rng):
    """``n`` integers drawn uniformly from ``[lo, hi]``."""
    if n < 0:
        raise UserError(_("Size n must be nonnegative, got %(n)s.") % {"n": n})
    if lo > hi:
        raise UserError(
            _("Empty range: lo=%(lo)s is above hi=%(hi)s.") % {"lo": lo, "hi": hi}
        )
    draws = rng.integers(lo, hi, size=n, endpoint=True, dtype=np.int64)
    return Sequence(int(a) for a in draws)


def check_3partition_items(items, s):
    """Raise naming the first 3-Partition condition ``items`` and ``s`` break."""
    if not items or len(items) % 3:
        raise ValidationError(
            _("3-Partition needs 3k items with k >= 1, got %(n)s items.")
            % {"n": len(items)}
        )
    for pos, a in enumerate(items, start=1):
        if not (4 * a > s and 2 * a < s):
            raise ValidationError(
                _("Item %(pos)s (%(a)s) is not strictly between s/4 and s/2 (s=%(s)s).")
                % {"pos": pos, "a": a, "s": s}
            )
    k = len(items) // 3
    if sum(items) != k * s:
        raise ValidationError(
            _("Items sum to %(total)s instead of k*s = %(expected)s.")
            % {"total": sum(items), "expected": k * s}
        )
    return k


def gen_3partition_instance(items, s):
    """The items followed by ``k - 1`` copies of ``-s``: a restricted
    instance whose best permutation has value ``s`` exactly when the items
    split into ``k`` triples summing to ``s``."""
    items = [int(a) for a in items]
    k = check_3partition_items(items, s)
    return Sequence(items + [-s] * (k - 1))


def gen_3partition_yes_items(k, s, rng):
    """``3k`` shuffled items forming ``k`` triples that each sum to ``s``."""
    if k < 1:
        raise UserError(_("k must be at least 1, got %(k)s.") % {"k": k})
    lo, hi = s // 4 + 1, (s - 1) // 2
    first_lo, first_hi = max(lo, s - 2 * hi), min(hi, s - 2 * lo)
    if first_lo > first_hi:
        raise UserError(
            _("No three integers strictly between s/4 and s/2 sum to s=%(s)s.")
            % {"s": s}
        )
    items = []
    for _triple in range(k):
        a = int(rng.integers(first_lo, first_hi, endpoint=True))
        b = int(rng.integers(max(lo, s - a - hi), min(hi, s - a - lo), endpoint=True))
        items.extend((a, b, s - a - b))
    rng.shuffle(items)
    return [int(a) for a in items]


def is_restricted_instance(A):
    """Whether ``A`` has the shape of a 3-Partition encoding: ``4k - 1``
    elements, ``k - 1`` of them equal to ``-s``, the others strictly between
    ``s/4`` and ``s/2``, and total ``s``."""
    A = Sequence.coerce(A)
    negatives = [a for a in A if a < 0]
    positives = [a for a in A if a >= 0]
    if len(A) % 4 != 3 or len(set(negatives)) > 1:
        return False
    k = (len(A) + 1) // 4
    s = sum(A)
    if len(negatives) != k - 1 or (negatives and negatives[0] != -s):
        return False
    return all(4 * a > s and 2 * a < s for a in positives)


def gen_kpartition_instance(items, m):
    """The items followed by ``m - 1`` separators ``-(sum + 1)``.

    Separators are heavier than all items together, so every permutation's
    value is the largest block sum of some split of the items into at most
    ``m`` blocks.
    """
    items = [int(a) for a in items]
    if m < 1:
        raise ValidationError(_("m must be at least 1, got %(m)s.") % {"m": m})
    if any(a <= 0 for a in items):
        raise ValidationError(_("k-partition items must be positive integers."))
    return Sequence(items + [-(sum(items) + 1)] * (m - 1))


def tightness_family(x, y):
    """``<y, -x, y, -x, x>``: optimum ``x``, while the parametrized sorting
    with ``L = x`` only reaches a value between ``2y`` and ``x + y``."""
    if not (x > 0 and x < 2 * y and y < x):
        raise ValidationError(
            _("Expected x > 0 and x/2 < y < x, got x=%(x)s, y=%(y)s.")
            % {"x": x, "y": y}
        )
    return Sequence([y, -x, y, -x, x])
