"""Rewriting v_total(n) over Goodman-Savage numbers of lower rows.

A :class:`CoefficientVector` at level m with coefficients B_1..B_m stands for
``sum_j B_j * h(m, j)``.  Since ``h(m, j) = j*h(m-1, j) + h(m-1, j-1)``, the
same value is carried one level down by ``B'_j = j*B_j + B_{j+1}``
(:func:`push_down`).  Starting from the weights 1, 3, ..., 2n-1 at level n
and pushing repeatedly yields the whole chain down to a single integer K at
level 1, where ``v_total(n) = K * v[1-pl]``.
"""

from dataclasses import dataclass

from .complexity import diagonal_weights, v_total
from .stirling import _check_n, stirling2_recurrence

__all__ = [
    "CoefficientVector",
    "ReductionChain",
    "Prop5Decomposition",
    "Prop6Decomposition",
    "coeff_A",
    "coeff_C",
    "push_down",
    "reduce_to_level",
    "full_chain",
    "prop5_decompose",
    "prop6_decompose",
    "prop6_remainder_by_unrolling",
]


@dataclass(frozen=True)
class CoefficientVector:
    level: int
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if self.level < 1:
            raise ValueError(f"level must be >= 1, got {self.level}")
        if len(self.coefficients) != self.level:
            raise ValueError(
                f"level {self.level} needs {self.level} coefficients, "
                f"got {len(self.coefficients)}"
            )

    def evaluate(self):
        m = self.level
        return sum(b * stirling2_recurrence(m, j) for j, b in enumerate(self.coefficients, 1))

    def to_dict(self):
        return {
            "level": self.level,
            "coefficients": [str(b) for b in self.coefficients],
            "value": str(self.evaluate()),
        }


@dataclass(frozen=True)
class ReductionChain:
    n: int
    vectors: tuple  # levels n-1, n-2, ..., 1

    @property
    def K(self):
        if not self.vectors:
            # n == 1: nothing to reduce, v[1-pl] = 1
            return 1
        return self.vectors[-1].coefficients[0]


def coeff_A(j):
    """Coefficient of h(n-1, j) in the one-step reduction: 2j^2 + j + 1."""
    return 2 * j * j + j + 1


def coeff_C(j):
    """Coefficient of h(n-1, j) left over after taking 3*v_total(n-1): 2j^2 - 5j + 4.

    Equals ``coeff_A(j) - 3*(2j - 1)``.
    """
    return 2 * j * j - 5 * j + 4


def push_down(cv):
    m = cv.level
    if m < 2:
        raise ValueError("cannot push below level 1")
    b = cv.coefficients + (0,)  # B_{m+1} = 0 since h(m-1, m) = 0
    return CoefficientVector(m - 1, tuple(j * b[j - 1] + b[j] for j in range(1, m)))


def _weights_vector(n):
    return CoefficientVector(n, diagonal_weights(n))


def reduce_to_level(n, m):
    _check_n(n)
    if not isinstance(m, int) or not 1 <= m <= n - 1:
        raise ValueError(f"level must lie in 1..{n - 1}, got {m!r}")
    cv = _weights_vector(n)
    while cv.level > m:
        cv = push_down(cv)
    return cv


def full_chain(n):
    _check_n(n)
    cv = _weights_vector(n)
    vectors = []
    while cv.level > 1:
        cv = push_down(cv)
        vectors.append(cv)
    return ReductionChain(n, tuple(vectors))


@dataclass(frozen=True)
class Prop5Decomposition:
    n: int
    lower: int  # v_total(n-1)
    remainder_coeffs: CoefficientVector
    total: int
    factor: int = 3

    @property
    def remainder(self):
        return self.remainder_coeffs.evaluate()


def prop5_decompose(n):
    """Split v_total(n) as ``3*v_total(n-1) + sum_j C_j h(n-1, j)``."""
    _check_n(n)
    if n < 2:
        raise ValueError("needs n >= 2")
    coeffs = CoefficientVector(n - 1, [coeff_C(j) for j in range(1, n)])
    lower = v_total(n - 1)
    return Prop5Decomposition(n, lower, coeffs, 3 * lower + coeffs.evaluate())


@dataclass(frozen=True)
class Prop6Decomposition:
    n: int
    power: int
    remainder_R: int
    total: int
    terms: tuple  # ((i, 3**(n-1-i), S_i), ...) for i = 1..n-1


def _level_sum(i):
    # S_i = sum_{j<=i} C_j h(i, j)
    return sum(coeff_C(j) * stirling2_recurrence(i, j) for j in range(1, i + 1))


def prop6_decompose(n):
    """Split v_total(n) as ``3**(n-1) * v[1-pl] + R`` in closed form."""
    _check_n(n)
    terms = tuple((i, 3 ** (n - 1 - i), _level_sum(i)) for i in range(1, n))
    R = sum(p * s for _, p, s in terms)
    power = 3 ** (n - 1)
    return Prop6Decomposition(n, power, R, power + R, terms)


def prop6_remainder_by_unrolling(n):
    """R obtained by applying the 3*v(n-1) + remainder split recursively."""
    _check_n(n)
    scale, R = 1, 0
    for level in range(n, 1, -1):
        d = prop5_decompose(level)
        R += scale * d.remainder
        scale *= d.factor
    return R
