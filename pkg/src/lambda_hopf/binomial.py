"""Binomial coefficients ``binom(x, k)`` on all of Z x Z.

For ``k >= 0`` the value is the coefficient of ``z^k`` in ``(1+z)^x``, which
makes sense for negative ``x`` too.  Negative ``k`` needs a convention; two are
provided:

``binom``
    Symmetric extension: ``binom(x, k) = binom(x, x-k)`` when ``k < 0 <= x-k``,
    and 0 when both ``k`` and ``x-k`` are negative.  This is the rule the
    antipode formula needs (it evaluates ``binom(n-3, v-3)`` with ``v < 3``).

``binom_classical``
    Zero whenever ``k < 0``.  Telescoping sums such as
    ``sum_{d=0}^{j} (-1)^d binom(a, d) = (-1)^j binom(a-1, j)`` hold for
    ``j < 0`` only under this rule, so recurrence-style identities use it.

The two agree whenever ``x >= 0`` or ``k >= 0``.
"""

from __future__ import annotations

import csv
import io
import math
from functools import lru_cache


def _upper(x: int, k: int) -> int:
    # k >= 0, any integer x
    if x >= 0:
        return math.comb(x, k)
    # (1+z)^x with x < 0: (-1)^k binom(k-x-1, k)
    v = math.comb(k - x - 1, k)
    return -v if k & 1 else v


@lru_cache(maxsize=None)
def binom(x: int, k: int) -> int:
    """Generalised binomial coefficient, symmetric extension for ``k < 0``.

    >>> binom(5, 2), binom(-1, 2), binom(-3, -3), binom(-2, -3)
    (10, 1, 1, -2)
    """
    if k >= 0:
        return _upper(x, k)
    if x - k >= 0:
        return _upper(x, x - k)
    return 0


@lru_cache(maxsize=None)
def binom_classical(x: int, k: int) -> int:
    """Generalised binomial coefficient that vanishes for every ``k < 0``."""
    if k < 0:
        return 0
    return _upper(x, k)


def binom_table(x_max: int, k_max: int, rule=binom) -> list[list[int]]:
    """Rows for ``x`` in ``[-x_max, x_max]``, columns ``k`` in ``[-k_max, k_max]``."""
    return [[rule(x, k) for k in range(-k_max, k_max + 1)] for x in range(-x_max, x_max + 1)]


def binom_table_csv(x_max: int, k_max: int, rule=binom) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x\\k", *range(-k_max, k_max + 1)])
    for x, row in zip(range(-x_max, x_max + 1), binom_table(x_max, k_max, rule)):
        writer.writerow([x, *row])
    return buf.getvalue()
