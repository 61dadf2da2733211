"""Goodman-Fine complexity values and the Svenonius form-count check.

``v_total(n)`` is the maximum primary complexity of an n-place predicate,
``sum_k (2k-1) * h(n, k)``.  The per-arity contributions ``(2k-1) * h(n, k)``
make up the Goodman-Fine table.
"""

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .stirling import (
    TriangularTable,
    _check_n,
    bell,
    gs_table,
    restricted_growth_strings,
    stirling2_recurrence,
)

__all__ = [
    "ComplexityBreakdown",
    "Verdict",
    "diagonal_weights",
    "v_total",
    "v_total_double_sum",
    "v_k",
    "v_k_alternating",
    "breakdown",
    "gf_table",
    "matrix_identity_holds",
    "expand_schema",
    "svenonius_forms",
    "svenonius_precheck",
    "form_patterns",
    "FORM_LETTERS",
]


def weight(k):
    return 2 * k - 1


def diagonal_weights(max_n):
    """[1, 3, 5, ..., 2*max_n - 1]."""
    _check_n(max_n)
    return [weight(k) for k in range(1, max_n + 1)]


def _alternating_inner(n, k):
    # sum_r (-1)^r (k-r)^n / ((k-r)! r!), which is h(n, k) as an exact rational
    return sum(
        Fraction((-1) ** r * (k - r) ** n, factorial(k - r) * factorial(r))
        for r in range(k + 1)
    )


def v_k(n, k):
    """Contribution of k-place irreflexive predicates to v_total(n)."""
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k!r}")
    return weight(k) * stirling2_recurrence(n, k)


def v_k_alternating(n, k):
    """Same value as :func:`v_k`, evaluated straight from the alternating sum."""
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k!r}")
    value = weight(k) * _alternating_inner(n, k)
    assert value.denominator == 1, (n, k, value)
    return value.numerator


def v_total(n):
    _check_n(n)
    return sum(weight(k) * stirling2_recurrence(n, k) for k in range(1, n + 1))


def v_total_double_sum(n):
    """Double sum over k and r in exact rationals, no Stirling table involved."""
    _check_n(n)
    total = sum(weight(k) * _alternating_inner(n, k) for k in range(1, n + 1))
    assert total.denominator == 1, (n, total)
    return total.numerator


@dataclass(frozen=True)
class ComplexityBreakdown:
    n: int
    terms: tuple  # ((k, contribution), ...)
    total: int

    @property
    def contributions(self):
        return [c for _, c in self.terms]

    def to_dict(self):
        return {
            "n": self.n,
            "terms": [{"k": k, "value": str(c)} for k, c in self.terms],
            "total": str(self.total),
        }


def breakdown(n):
    _check_n(n)
    terms = tuple((k, v_k(n, k)) for k in range(1, n + 1))
    return ComplexityBreakdown(n, terms, sum(c for _, c in terms))


def gf_table(max_n):
    _check_n(max_n)
    gs = gs_table(max_n)
    return TriangularTable(
        tuple(
            tuple(weight(m) * h for m, h in enumerate(row, start=1)) for row in gs
        )
    )


def matrix_identity_holds(max_n, gs=None, gf=None):
    """Check ``GS * diag(1, 3, ..., 2n-1) == GF`` entry by entry.

    Returns ``(True, None)`` or ``(False, (n, k))`` for the first mismatch in
    row-major order.  ``gs``/``gf`` may be supplied to check other tables.
    """
    _check_n(max_n)
    gs = gs_table(max_n) if gs is None else gs
    gf = gf_table(max_n) if gf is None else gf
    weights = diagonal_weights(max_n)
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            # full row-by-column product; off-diagonal terms of the weight matrix are 0
            product = sum(
                gs.get(n, i) * (weights[i - 1] if i == k else 0)
                for i in range(1, max_n + 1)
            )
            if product != gf.get(n, k):
                return False, (n, k)
    return True, None


def expand_schema(n):
    """Expand an n-place predicate into irreflexive predicates of every arity.

    For each m in 2..n there are h(n, m) thoroughly irreflexive m-place
    predicates, plus a synthetic 1-place unit standing for the trailing +1.
    """
    from .basis import BasisSpec, PredicateSpec

    _check_n(n)
    if n < 2:
        raise ValueError("schema needs n >= 2; a 1-place predicate has value 1 directly")
    preds = [
        PredicateSpec(m, irreflexive=True, multiplicity=stirling2_recurrence(n, m))
        for m in range(n, 1, -1)
    ]
    preds.append(PredicateSpec(1, multiplicity=1, synthetic_unit=True))
    return BasisSpec.of(preds)


# --- Svenonius form counts -------------------------------------------------

FORM_LETTERS = "xyzwvu"


class Verdict(enum.Enum):
    NOT_DEFINABLE = "NotDefinable"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


def svenonius_forms(n):
    return bell(n)


def svenonius_precheck(n1, n2):
    """One-sided test: more forms in s1 than in s2 rules out definability.

    ``2**bell(n1) > 2**bell(n2)`` iff ``bell(n1) > bell(n2)``, so the exponents
    are compared directly.
    """
    if bell(n1) > bell(n2):
        return Verdict.NOT_DEFINABLE
    return Verdict.INCONCLUSIVE


def _pattern(rgs):
    sizes = Counter(rgs)
    # larger blocks get earlier letters; ties go to the block seen first
    order = sorted(sizes, key=lambda b: (-sizes[b], b))
    letter = {b: FORM_LETTERS[i] for i, b in enumerate(order)}
    return "".join(letter[b] for b in rgs)


def form_patterns(n):
    """Argument-identification forms of an n-place relation, as letter strings.

    Ordered by number of distinct letters, e.g. n=3 gives
    xxx, xxy, xyx, yxx, xyz.
    """
    _check_n(n)
    if n > len(FORM_LETTERS):
        raise ValueError(f"patterns are only spelled out for n <= {len(FORM_LETTERS)}")
    strings = sorted(restricted_growth_strings(n), key=lambda s: (max(s), s))
    return [_pattern(s) for s in strings]

