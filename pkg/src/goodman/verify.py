"""Cross-checks of every identity the library relies on, for ``goodman verify``.

Each check returns ``None`` when it holds up to ``max_n`` or a witness
describing the first counterexample.  A Goodman-Savage table may be passed in
to check a table other than the one the library builds (fault injection).
"""

from dataclasses import dataclass

from .basis import basis_value, format_basis, parse_basis
from .complexity import (
    Verdict,
    expand_schema,
    form_patterns,
    gf_table,
    matrix_identity_holds,
    svenonius_forms,
    svenonius_precheck,
    v_k,
    v_k_alternating,
    v_total,
    v_total_double_sum,
)
from .reduction import (
    coeff_A,
    coeff_C,
    full_chain,
    prop5_decompose,
    prop6_decompose,
    prop6_remainder_by_unrolling,
    reduce_to_level,
)
from .stirling import (
    ENUMERATION_CAP,
    bell,
    gs_table,
    stirling2_closed,
    stirling2_enumerate,
)


@dataclass
class CheckResult:
    name: str
    witness: object = None

    @property
    def passed(self):
        return self.witness is None

    def line(self):
        if self.passed:
            return f"PASS  {self.name}"
        return f"FAIL  {self.name}: {self.witness}"


def _table_matches_closed_form(gs, max_n):
    for (n, m), h in gs.entries():
        if h != stirling2_closed(n, m):
            return f"h({n},{m}) = {h}, closed form gives {stirling2_closed(n, m)}"


def _table_matches_enumeration(gs, max_n):
    for n in range(1, min(max_n, ENUMERATION_CAP) + 1):
        for m in range(1, n + 1):
            if gs[n, m] != stirling2_enumerate(n, m):
                return f"h({n},{m}) = {gs[n, m]}, enumeration gives {stirling2_enumerate(n, m)}"


def _recurrence(gs, max_n):
    # (j+1) h(n, j+1) = h(n+1, j+1) - h(n, j)
    for n in range(1, max_n):
        for m in range(1, n + 1):
            if m * gs.get(n, m) != gs.get(n + 1, m) - gs.get(n, m - 1):
                return f"(n, m) = ({n}, {m})"


def _edges(gs, max_n):
    for n in range(1, max_n + 1):
        if gs[n, 1] != 1:
            return f"h({n},1) = {gs[n, 1]}"
        if gs[n, n] != 1:
            return f"h({n},{n}) = {gs[n, n]}"


def _row_sums(gs, max_n):
    for n in range(1, max_n + 1):
        closed = sum(stirling2_closed(n, m) for m in range(1, n + 1))
        if sum(gs.row(n)) != closed:
            return f"row {n} sums to {sum(gs.row(n))}, Bell({n}) = {closed}"


def _value_routes(gs, max_n):
    for n in range(1, max_n + 1):
        routes = {
            "double sum": v_total_double_sum(n),
            "sum of v_k": sum(v_k_alternating(n, k) for k in range(1, n + 1)),
            "weighted Stirling sum": sum((2 * j + 1) * gs[n, j + 1] for j in range(n)),
            "chain K": full_chain(n).K,
            "3^(n-1) + R": prop6_decompose(n).total,
        }
        if n >= 2:
            routes["3 v(n-1) + remainder"] = prop5_decompose(n).total
        if len(set(routes.values())) != 1:
            return f"n = {n}: {routes}"


def _v_k_forms(gs, max_n):
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            if v_k(n, k) != v_k_alternating(n, k):
                return f"v_k({n},{k}): product {v_k(n, k)} vs sum {v_k_alternating(n, k)}"
        if v_k(n, n) != 2 * n - 1:
            return f"v_k({n},{n}) = {v_k(n, n)}"


def _appendix_identity(gs, max_n):
    ok, where = matrix_identity_holds(max_n, gs=gs, gf=gf_table(max_n))
    if not ok:
        return f"(n, k) = {where}"


def _reduction_chain(gs, max_n):
    for n in range(2, max_n + 1):
        A = reduce_to_level(n, n - 1).coefficients
        if list(A) != [coeff_A(j) for j in range(1, n)]:
            return f"n = {n}: level n-1 coefficients {A}"
        target = v_total(n)
        for cv in full_chain(n).vectors:
            if cv.evaluate() != target:
                return f"n = {n}, level {cv.level}: {cv.evaluate()} != {target}"


def _closed_forms(gs, max_n):
    for j in range(1, 65):
        if coeff_C(j) != coeff_A(j) - 3 * (2 * j - 1):
            return f"j = {j}"


def _prop6_unrolling(gs, max_n):
    for n in range(1, max_n + 1):
        if prop6_decompose(n).remainder_R != prop6_remainder_by_unrolling(n):
            return f"n = {n}"


def _schema(gs, max_n):
    for n in range(2, max_n + 1):
        b = expand_schema(n)
        if basis_value(b) != v_total(n):
            return f"n = {n}: schema value {basis_value(b)} != {v_total(n)}"
        if basis_value(parse_basis(format_basis(b))) != v_total(n):
            return f"n = {n}: formatted schema does not re-evaluate"


def _svenonius(gs, max_n):
    for n in range(1, max_n + 1):
        if svenonius_forms(n) != sum(gs.row(n)):
            return f"forms({n}) = {svenonius_forms(n)}, row sum {sum(gs.row(n))}"
        if n <= 6 and len(set(form_patterns(n))) != bell(n):
            return f"n = {n}: {len(set(form_patterns(n)))} distinct patterns"
    for n1 in range(1, max_n + 1):
        for n2 in range(1, max_n + 1):
            expected = Verdict.NOT_DEFINABLE if n1 > n2 else Verdict.INCONCLUSIVE
            if svenonius_precheck(n1, n2) is not expected:
                return f"precheck({n1}, {n2})"


CHECKS = [
    ("table = closed form", _table_matches_closed_form),
    ("table = partition enumeration", _table_matches_enumeration),
    ("triangle recurrence", _recurrence),
    ("first column and diagonal are 1", _edges),
    ("row sums are Bell numbers", _row_sums),
    ("v_total routes agree", _value_routes),
    ("v_k product = alternating sum, v_k(n,n) = 2n-1", _v_k_forms),
    ("GS * diag(2k-1) = GF", _appendix_identity),
    ("reduction chain preserves value", _reduction_chain),
    ("C_j = A_j - 3(2j-1)", _closed_forms),
    ("R = unrolled remainder", _prop6_unrolling),
    ("schema value = v_total", _schema),
    ("Svenonius form counts", _svenonius),
]


def run_checks(max_n, gs=None):
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    gs = gs_table(max_n) if gs is None else gs
    return [CheckResult(name, check(gs, max_n)) for name, check in CHECKS]
