"""Goodman-Savage numbers h(n, m), i.e. Stirling numbers of the second kind.

Three independent routes are provided: the alternating binomial sum, the
triangle recurrence ``h(n+1, m) = m*h(n, m) + h(n, m-1)``, and brute-force
enumeration of set partitions as restricted growth strings.  Everything is
indexed by the canonical pair (n, m) with 1 <= m <= n; values outside the
triangle are 0.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

__all__ = [
    "ENUMERATION_CAP",
    "OracleLimitError",
    "TriangularTable",
    "stirling2_closed",
    "stirling2_recurrence",
    "stirling2_enumerate",
    "restricted_growth_strings",
    "gs_table",
    "bell",
]

ENUMERATION_CAP = 12


class OracleLimitError(ValueError):
    pass


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


@dataclass(frozen=True)
class TriangularTable:
    """Lower-triangular table; ``rows[n-1][m-1]`` holds entry (n, m)."""

    rows: tuple

    @property
    def max_n(self):
        return len(self.rows)

    def row(self, n):
        if not 1 <= n <= self.max_n:
            raise IndexError(f"row {n} outside 1..{self.max_n}")
        return self.rows[n - 1]

    def __getitem__(self, key):
        n, m = key
        if not (1 <= m <= n <= self.max_n):
            raise IndexError(f"({n}, {m}) is outside the table")
        return self.rows[n - 1][m - 1]

    def get(self, n, m, default=0):
        """Like indexing, but out-of-triangle positions give ``default``."""
        if 1 <= m <= n <= self.max_n:
            return self.rows[n - 1][m - 1]
        return default

    def entries(self):
        for n, row in enumerate(self.rows, start=1):
            for m, value in enumerate(row, start=1):
                yield (n, m), value

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)


def stirling2_alternating_sum(n, m):
    """The integer ``sum_k (-1)^(m-k) C(m, k) k^n``, which equals m! * h(n, m)."""
    return sum((-1) ** (m - k) * comb(m, k) * k**n for k in range(m + 1))


def stirling2_closed(n, m):
    _check_n(n)
    if m < 1 or m > n:
        return 0
    total = stirling2_alternating_sum(n, m)
    q, r = divmod(total, factorial(m))
    # the division must be exact; anything else is an arithmetic bug
    assert r == 0, (n, m, total)
    return q


@lru_cache(maxsize=None)
def _gs_rows(max_n):
    rows = [(1,)]
    for n in range(1, max_n):
        prev = rows[-1]
        new = []
        for m in range(1, n + 2):
            keep = prev[m - 1] if m <= n else 0
            fresh = prev[m - 2] if m >= 2 else 0
            new.append(m * keep + fresh)
        rows.append(tuple(new))
    return tuple(rows)


def stirling2_recurrence(n, m):
    _check_n(n)
    if m < 1 or m > n:
        return 0
    return _gs_rows(n)[n - 1][m - 1]


def restricted_growth_strings(n):
    """Yield every restricted growth string of length n in lexicographic order.

    A string ``a`` is restricted growth when ``a[0] == 0`` and each
    ``a[i] <= 1 + max(a[:i])``; these are in bijection with set partitions
    of {1..n} (position i goes to block ``a[i]``).
    """
    _check_n(n)
    a = [0] * n
    # prefix_max[i] = max(a[:i+1])
    prefix_max = [0] * n
    while True:
        yield tuple(a)
        i = n - 1
        while i > 0 and a[i] > prefix_max[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        prefix_max[i] = max(prefix_max[i - 1], a[i])
        for k in range(i + 1, n):
            a[k] = 0
            prefix_max[k] = prefix_max[i]


@lru_cache(maxsize=None)
def _block_count_histogram(n):
    return Counter(max(s) + 1 for s in restricted_growth_strings(n))


def stirling2_enumerate(n, m):
    _check_n(n)
    if n > ENUMERATION_CAP:
        raise OracleLimitError(
            f"oracle limit: enumeration is capped at n <= {ENUMERATION_CAP}, got n={n}"
        )
    return _block_count_histogram(n).get(m, 0)


def gs_table(max_n):
    _check_n(max_n)
    return TriangularTable(_gs_rows(max_n))


def bell(n):
    _check_n(n)
    return sum(_gs_rows(n)[n - 1])
