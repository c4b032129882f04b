"""Entry generators for the Hausdorff / generalized Cesaro family and the
interrupter operators attached to the order-one and order-two matrices.

Every generator is a plain function of ``(alpha, i, j)`` (or ``(alpha, n)``
for diagonals and weights).  ``alpha`` may be a Fraction or the symbolic
:data:`gencesaro.exact.ALPHA`, in which case entries come back as rational
functions of alpha.  Infinite operators are never stored; only
:func:`finite_section` materializes anything.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from .exact import as_scalar, is_symbolic
from .matrix import ExactMatrix

__all__ = [
    "KINDS", "MomentSequence", "OperatorSpec",
    "b_entry", "b_shift_decomposition", "b_upper_bound_violation",
    "c1_entry", "c1_interrupters", "c2_P_diag", "c2_Q_entry", "c2_Q_matrix",
    "cesaro_entry", "cesaro_entry_general", "cesaro_moment", "cesaro_moments",
    "check_alpha", "finite_section", "forward_difference",
    "forward_difference_recursive", "generalized_binomial", "hausdorff_entry",
    "m_entry", "mpm_closed_form", "pB_closed_form", "w1_weight", "w2_weight",
]


def check_alpha(alpha):
    """Coerce alpha and enforce alpha > -1 for numeric values."""
    alpha = as_scalar(alpha)
    if not is_symbolic(alpha) and alpha <= -1:
        raise ValueError(f"alpha must exceed -1, got {alpha}")
    return alpha


@dataclass(frozen=True)
class MomentSequence:
    """Index -> moment map with a note on where it came from."""

    fn: Callable[[int], object]
    source: str = "user-supplied"

    def __call__(self, j):
        return self.fn(j)


def cesaro_moments(alpha, beta):
    alpha = check_alpha(alpha)
    return MomentSequence(lambda j: cesaro_moment(alpha, beta, j), f"cesaro(alpha={alpha}, beta={beta})")


@lru_cache(maxsize=None)
def _binom(n, t):
    return comb(n, t)


def forward_difference(mu, n, k):
    """n-th forward difference of ``mu`` at ``k`` (with the sign convention
    that the first difference is mu_k - mu_{k+1})."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    acc = Fraction(0)
    for t in range(n + 1):
        term = _binom(n, t) * mu(k + t)
        acc = acc - term if t % 2 else acc + term
    return acc


def forward_difference_recursive(mu, n, k):
    if n == 0:
        return mu(k)
    return forward_difference_recursive(mu, n - 1, k) - forward_difference_recursive(mu, n - 1, k + 1)


def generalized_binomial(alpha, i, j):
    """binom(i + alpha, i - j) as the finite product prod_{t=1}^{i-j} (j+alpha+t)/t."""
    if j < 0 or j > i:
        raise ValueError(f"need 0 <= j <= i, got i={i}, j={j}")
    alpha = as_scalar(alpha)
    acc = Fraction(1)
    for t in range(1, i - j + 1):
        acc = acc * (j + alpha + t) / t
    return acc


def cesaro_moment(alpha, beta, j):
    """beta! / prod_{t=1}^{beta} (j + alpha + t): the j-th moment of
    t^alpha against beta (1-t)^(beta-1) dt."""
    if beta < 1:
        raise ValueError(f"beta must be a positive integer, got {beta}")
    alpha = check_alpha(alpha)
    den = Fraction(1)
    for t in range(1, beta + 1):
        den = den * (j + alpha + t)
    return factorial(beta) / den


def hausdorff_entry(alpha, mu, i, j):
    if j > i:
        return Fraction(0)
    alpha = check_alpha(alpha)
    return generalized_binomial(alpha, i, j) * forward_difference(mu, i - j, j)


def cesaro_entry_general(alpha, beta, i, j):
    """Gamma-ratio form of the (C^(alpha), beta) entry for integer beta,
    reduced to rational products:

        beta * binom(i+alpha, i-j) * (i-j+beta-1)! / prod_{s=j+1}^{i+beta} (alpha+s)
    """
    if beta < 1:
        raise ValueError(f"beta must be a positive integer, got {beta}")
    if j > i:
        return Fraction(0)
    alpha = check_alpha(alpha)
    den = Fraction(1)
    for s in range(j + 1, i + beta + 1):
        den = den * (alpha + s)
    return beta * generalized_binomial(alpha, i, j) * factorial(i - j + beta - 1) / den


def cesaro_entry(alpha, beta, i, j):
    if beta < 1:
        raise ValueError(f"beta must be a positive integer, got {beta}")
    if j > i:
        return Fraction(0)
    alpha = check_alpha(alpha)
    if beta == 1:
        return 1 / (i + 1 + alpha)
    if beta == 2:
        return 2 * (i + 1 - j) / ((i + 1 + alpha) * (i + 2 + alpha))
    return cesaro_entry_general(alpha, beta, i, j)


def c1_entry(alpha, i, j):
    return cesaro_entry(alpha, 1, i, j)


def m_entry(alpha, i, j):
    """Entry of M = (C^(alpha), 2)."""
    return cesaro_entry(alpha, 2, i, j)


def c1_interrupters(alpha):
    """Diagonals (Q, P) with C Q C* = C* P C for C = (C^(alpha), 1)."""
    alpha = check_alpha(alpha)

    def q_diag(n):
        return 1 + alpha if n == 0 else Fraction(1)

    def p_diag(n):
        return (n + 1 + alpha) / (n + 2 + alpha)

    return q_diag, p_diag


def c2_P_diag(alpha, n):
    alpha = check_alpha(alpha)
    return (n + 1 + alpha) * (n + 2 + alpha) / ((n + 3 + alpha) * (n + 4 + alpha))


def c2_Q_entry(alpha, i, j):
    alpha = check_alpha(alpha)
    if i > 1 or j > 1:
        return Fraction(int(i == j))
    if i == j == 0:
        return (3 + 2 * alpha) * (1 + alpha) * (2 + alpha) / 6
    if i == j == 1:
        return (3 - alpha + 2 * alpha ** 2) * (2 + alpha) / 6
    return -alpha * (1 + alpha) * (2 + alpha) / 3


def c2_Q_matrix(alpha, n):
    if n < 1:
        raise ValueError("section size must be positive")
    alpha = check_alpha(alpha)
    return ExactMatrix.from_function(n, n, lambda i, j: c2_Q_entry(alpha, i, j))


def b_entry(alpha, i, j):
    alpha = check_alpha(alpha)
    if j > i - 2:
        return 2 * (j + 1 - 3 * i - 2 * alpha) / ((j + 3 + alpha) * (j + 4 + alpha))
    if j == i - 2:
        return (j + 1 + alpha) * (j + 2 + alpha) / ((j + 3 + alpha) * (j + 4 + alpha))
    return Fraction(0)


def w1_weight(alpha, n):
    return 4 * (n + 1 + alpha) / ((n + 3 + alpha) * (n + 4 + alpha))


def w2_weight(alpha, n):
    return (n + 1 + alpha) * (n + 2 + alpha) / ((n + 3 + alpha) * (n + 4 + alpha))


def b_shift_decomposition(alpha, i, j):
    """(i, j) entry of T - W1 + U W2, where T is the upper-triangular part of
    B, W1 and W2 are weighted shifts and U is the unilateral shift."""
    alpha = check_alpha(alpha)
    if j >= i:
        return b_entry(alpha, i, j)
    if i == j + 1:
        return -w1_weight(alpha, j)
    if i == j + 2:
        return w2_weight(alpha, j)
    return Fraction(0)


def b_upper_bound_violation(alpha, n):
    """First (i, j) with i <= j < n whose B entry leaves
    [-4/(j+4+alpha), 2/(j+4+alpha)], or None."""
    alpha = check_alpha(alpha)
    for j in range(n):
        lo, hi = -4 / (j + 4 + alpha), 2 / (j + 4 + alpha)
        for i in range(j + 1):
            b = b_entry(alpha, i, j)
            if not lo <= b <= hi:
                return i, j, b
    return None


def mpm_closed_form(alpha, i, j):
    """(i, j) entry of M* P M; the i > j half is filled in by symmetry."""
    alpha = check_alpha(alpha)
    if i > j:
        i, j = j, i
    return 2 * (3 * j + 3 - i + 2 * alpha) / (3 * (j + 1 + alpha) * (j + 2 + alpha))


def pB_closed_form(alpha, i, j):
    """(i, j) entry of the posinormal interrupter B* B."""
    alpha = check_alpha(alpha)
    a = alpha
    if i == j:
        num = (i ** 4 + 2 * (5 + 2 * a) * i ** 3 + (35 + 26 * a + 6 * a ** 2) * i ** 2
               + (50 + 50 * a + 34 * a ** 2 + 4 * a ** 3) * i
               + a ** 4 + 6 * a ** 3 + 45 * a ** 2 + 28 * a + 24)
        return num / ((i + 3 + a) ** 2 * (i + 4 + a) ** 2)
    num = -2 * a * (11 + (5 - a) * (i + j) + 2 * i * j - 5 * a + 2 * a ** 2)
    return num / ((i + 3 + a) * (i + 4 + a) * (j + 3 + a) * (j + 4 + a))


KINDS = ("hausdorff", "cesaro", "c1", "c2", "b_matrix", "c2_P", "c2_Q", "c1_P", "c1_Q", "pB")


@dataclass(frozen=True)
class OperatorSpec:
    """Which operator to materialize, at which alpha.

    ``beta`` is used by ``cesaro`` and (when no moments are given) by
    ``hausdorff``; ``moments`` overrides the Cesaro moments for ``hausdorff``.
    """

    kind: str
    alpha: object = Fraction(0)
    beta: int = 2
    moments: Optional[MomentSequence] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}; expected one of {KINDS}")
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        if self.beta < 1:
            raise ValueError("beta must be a positive integer")

    def entry(self, i, j):
        a, k = self.alpha, self.kind
        if k == "hausdorff":
            mu = self.moments or cesaro_moments(a, self.beta)
            return hausdorff_entry(a, mu, i, j)
        if k == "cesaro":
            return cesaro_entry(a, self.beta, i, j)
        if k == "c1":
            return c1_entry(a, i, j)
        if k == "c2":
            return m_entry(a, i, j)
        if k == "b_matrix":
            return b_entry(a, i, j)
        if k == "c2_Q":
            return c2_Q_entry(a, i, j)
        if k == "pB":
            return pB_closed_form(a, i, j)
        if i != j:
            return Fraction(0)
        if k == "c2_P":
            return c2_P_diag(a, i)
        q_diag, p_diag = c1_interrupters(a)
        return p_diag(i) if k == "c1_P" else q_diag(i)


def finite_section(spec, n):
    """The n x n upper-left corner of the operator described by ``spec``."""
    if n < 1:
        raise ValueError("section size must be at least 1")
    return ExactMatrix.from_function(n, n, spec.entry)
