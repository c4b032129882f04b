"""Exact definiteness certificates for finite sections.

Determinants use fraction-free (Bareiss) elimination, so the same code runs
over Fractions and over polynomials in alpha.  Leading principal minors give
positive definiteness by Sylvester's criterion; when a minor is exactly zero
the semidefinite question is settled by symmetric elimination instead.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import (
    ALPHA, Poly, RatFun, alpha_poly, as_scalar, format_rational, is_symbolic, poly_gcd,
)
from .matrix import ExactMatrix
from .operators import c2_P_diag, c2_Q_matrix, check_alpha, pB_closed_form

__all__ = [
    "INDEFINITE", "REFERENCE_DET_S", "POSITIVE_DEFINITE", "POSITIVE_SEMIDEFINITE",
    "DetPolynomial", "PositivityReport", "Theorem12Certificate",
    "bareiss_det", "certify_conjecture_route", "certify_theorem12",
    "det_S_polynomial", "det_Z", "det_corner_Q", "i_minus_pB_section",
    "is_psd", "ldlt_minors", "leading_minors", "reference_det_S", "sturm_chain",
    "sturm_root_count",
]

POSITIVE_DEFINITE = "positive-definite"
POSITIVE_SEMIDEFINITE = "positive-semidefinite"
INDEFINITE = "indefinite"

# Numerators of det(S_0)..det(S_3) as published: (prefactor, coefficients from
# the constant term up).
REFERENCE_DET_S = {
    0: (1, (120, 140, 28, 8)),
    1: (16, (2100, 4340, 2901, 1004, 234, 38, 3)),
    2: (16, (1134000, 3175200, 3319710, 1884493, 686703, 178049, 34359, 4742, 408, 16)),
    3: (16, (1047816000, 3582532800, 4875510240, 3747078072, 1885128129, 675769080,
             182338742, 38146384, 6184561, 750976, 63688, 3328, 80)),
}
REFERENCE_DET_S_DENOMINATORS = {
    0: ((3, 2), (4, 2)),
    1: ((3, 2), (4, 4), (5, 2)),
    2: ((3, 2), (4, 4), (5, 4), (6, 2)),
    3: ((3, 2), (4, 4), (5, 4), (6, 4), (7, 2)),
}


def _exact_div(x, d):
    if isinstance(x, Poly):
        return x.exquo(d)
    return x / d


def _zero_like(x):
    return x * 0


def bareiss_det(m):
    """Determinant by fraction-free elimination with row swaps on zero pivots."""
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    a = m.to_lists()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return _zero_like(a[0][0])
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * piv - aik * a[k][j], prev)
        prev = piv
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def leading_minors(m):
    """All leading principal minors, read off the Bareiss pivots.

    A zero pivot stops the pivot-free elimination; the remaining minors are
    then computed one by one.
    """
    n = m.rows
    a = m.to_lists()
    prev = 1
    minors = []
    for k in range(n):
        piv = a[k][k]
        minors.append(piv)
        if piv == 0:
            minors.extend(bareiss_det(m.leading(s)) for s in range(k + 2, n + 1))
            return minors
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = _exact_div(a[i][j] * piv - aik * a[k][j], prev)
        prev = piv
    return minors


def is_psd(m):
    """Exact PSD test by symmetric elimination on positive diagonal pivots."""
    a = m.to_lists()
    idx = list(range(m.rows))
    while idx:
        if any(a[i][i] < 0 for i in idx):
            return False
        p = next((i for i in idx if a[i][i] > 0), None)
        if p is None:
            # zero diagonal: PSD only if the remaining block is zero
            return all(a[i][j] == 0 for i in idx for j in idx)
        idx.remove(p)
        d = a[p][p]
        for i in idx:
            f = a[i][p] / d
            if f == 0:
                continue
            for j in idx:
                a[i][j] = a[i][j] - f * a[p][j]
    return True


@dataclass
class PositivityReport:
    sizes: list
    minors: list
    classification: str
    first_violation: Optional[tuple] = None
    alpha: object = None

    @property
    def positive_definite(self):
        return self.classification == POSITIVE_DEFINITE

    @property
    def nonnegative(self):
        return self.classification in (POSITIVE_DEFINITE, POSITIVE_SEMIDEFINITE)

    def to_dict(self):
        d = {"sizes": self.sizes, "minors": [format_rational(x) for x in self.minors],
             "classification": self.classification}
        if self.alpha is not None:
            d["alpha"] = format_rational(self.alpha)
        if self.first_violation is not None:
            size, value = self.first_violation
            d["first_violation"] = {"size": size, "minor": format_rational(value)}
        return d


def ldlt_minors(m, alpha=None):
    if not m.is_symmetric():
        raise ValueError("positivity report needs an exactly symmetric matrix")
    minors = leading_minors(m)
    sizes = list(range(1, m.rows + 1))
    if all(x > 0 for x in minors):
        return PositivityReport(sizes, minors, POSITIVE_DEFINITE, None, alpha)
    bad = next((k for k, x in enumerate(minors) if x < 0), None)
    if bad is None:
        bad = next(k for k, x in enumerate(minors) if x <= 0)
    violation = (bad + 1, minors[bad])
    cls = POSITIVE_SEMIDEFINITE if is_psd(m) else INDEFINITE
    return PositivityReport(sizes, minors, cls, violation, alpha)


def det_corner_Q(alpha=ALPHA):
    """Determinant of the 2 x 2 corner of the order-two Q interrupter."""
    return bareiss_det(c2_Q_matrix(alpha, 2))


def det_Z(index, alpha=ALPHA):
    """det of the (index+1)-th finite section of Q - I, index in {0, 1}."""
    if index not in (0, 1):
        raise ValueError("only the first two sections of Q - I are non-trivial")
    n = index + 1
    return bareiss_det(c2_Q_matrix(alpha, n) - ExactMatrix.identity(n))


@dataclass(frozen=True)
class DetPolynomial:
    """numerator(alpha) / prod (c + alpha)^e over the factor list."""

    n: int
    numerator: Poly
    denominator_factors: tuple

    @property
    def has_reference(self):
        return self.n in REFERENCE_DET_S

    def denominator(self):
        out = alpha_poly(1)
        for c, e in self.denominator_factors:
            out = out * alpha_poly(c, 1) ** e
        return out

    def as_ratfun(self):
        return RatFun(self.numerator, self.denominator())

    def __call__(self, alpha):
        alpha = as_scalar(alpha)
        return self.numerator(alpha) / self.denominator()(alpha)

    def display_split(self):
        """(prefactor, inner polynomial) with the reference prefactor when known."""
        pre = REFERENCE_DET_S[self.n][0] if self.n in REFERENCE_DET_S else 1
        return pre, self.numerator / pre

    def to_dict(self):
        pre, inner = self.display_split()
        return {
            "n": self.n,
            "numerator_coeffs": self.numerator.to_json(),
            "prefactor": pre,
            "display_coeffs": inner.to_json(),
            "denominator_factors": [[c, e] for c, e in self.denominator_factors],
            "status": "reference" if self.has_reference else "unverified extension",
        }


def reference_det_S(n):
    pre, coeffs = REFERENCE_DET_S[n]
    return DetPolynomial(n, alpha_poly(*coeffs) * pre, REFERENCE_DET_S_DENOMINATORS[n])


def i_minus_pB_section(alpha, size):
    return ExactMatrix.from_function(
        size, size, lambda i, j: int(i == j) - pB_closed_form(alpha, i, j))


def det_S_polynomial(n):
    """Symbolic det(S_n), S_n the (n+1) x (n+1) section of I - B*B.

    Row and column i are scaled by (i+3+alpha)(i+4+alpha) first, which turns
    every entry into a polynomial, so elimination stays in Q[alpha].
    """
    size = n + 1
    S = i_minus_pB_section(ALPHA, size)
    scale = [(i + 3 + ALPHA) * (i + 4 + ALPHA) for i in range(size)]

    def cleared(i, j):
        e = S[i, j] * scale[i] * scale[j]
        if e.den.degree != 0:
            raise ArithmeticError(f"entry ({i}, {j}) did not clear: {e}")
        return e.num / e.den.lc

    num = bareiss_det(ExactMatrix.from_function(size, size, cleared))
    factors = Counter()
    for i in range(size):
        factors[i + 3] += 2
        factors[i + 4] += 2
    return DetPolynomial(n, num, tuple(sorted(factors.items())))


def sturm_chain(p):
    p = p if isinstance(p, Poly) else p.num
    g = p.derivative()
    chain = [p]
    if not g.is_zero():
        chain.append(g)
        while chain[-1].degree > 0:
            r = -(chain[-2] % chain[-1])
            if r.is_zero():
                break
            chain.append(r)
    return chain


def _variations(values):
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _signs_at_infinity(chain):
    return [c.lc for c in chain]


def sturm_root_count(p, lo, hi=None, include_hi=True):
    """Distinct real roots of ``p`` in (lo, hi]; ``hi=None`` means +infinity.

    The chain is built from the square-free part so repeated roots count once.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    lo = as_scalar(lo)
    sqf = p.exquo(poly_gcd(p, p.derivative())) if p.degree > 0 else p
    chain = sturm_chain(sqf)
    v_lo = _variations([c(lo) for c in chain])
    if hi is None:
        v_hi = _variations(_signs_at_infinity(chain))
    else:
        hi = as_scalar(hi)
        if not lo < hi:
            raise ValueError("need lo < hi")
        v_hi = _variations([c(hi) for c in chain])
    count = v_lo - v_hi
    if hi is not None and not include_hi and p(hi) == 0:
        count -= 1
    return count


@dataclass
class Theorem12Certificate:
    alpha: Fraction
    n: int
    q_minus_i: PositivityReport
    i_minus_p: PositivityReport
    p_nonnegative: bool

    @property
    def hyponormal_certified(self):
        return self.q_minus_i.nonnegative and self.i_minus_p.nonnegative and self.p_nonnegative

    def to_dict(self):
        return {"alpha": format_rational(self.alpha), "n": self.n,
                "q_minus_i": self.q_minus_i.classification,
                "i_minus_p": self.i_minus_p.classification,
                "p_nonnegative": self.p_nonnegative,
                "hyponormal_certified": self.hyponormal_certified}


def certify_theorem12(alpha, n):
    """Try Q >= I >= P >= 0 for the order-two interrupter pair on an n x n
    section.  Q - I vanishes outside its 2 x 2 corner and P is diagonal."""
    alpha = check_alpha(alpha)
    if is_symbolic(alpha):
        raise TypeError("certification needs a numeric alpha")
    q_minus_i = ldlt_minors(c2_Q_matrix(alpha, n) - ExactMatrix.identity(n), alpha)
    p = [c2_P_diag(alpha, k) for k in range(n)]
    i_minus_p = ldlt_minors(ExactMatrix.diagonal(1 - x for x in p), alpha)
    return Theorem12Certificate(alpha, n, q_minus_i, i_minus_p, all(x >= 0 for x in p))


def certify_conjecture_route(alpha, n_max):
    """Leading minors of I - B*B up to size n_max.  Positive definiteness of
    every section is evidence, not proof, of I - B*B >= 0."""
    alpha = check_alpha(alpha)
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return ldlt_minors(i_minus_pB_section(alpha, n_max), alpha)
