"""Exact verification of the operator identities on finite sections.

Every infinite series that shows up (entries of M*PM, of BM, of C*PC) is
handled by a telescoping witness: a rational function s(k) with
summand(k) = s(k) - s(k+1) checked as an identity of rational functions in
k and s vanishing at infinity, so the series equals s(0) exactly.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import K, RatFun, is_symbolic
from .matrix import ExactMatrix, format_entry
from .operators import (
    b_entry, b_shift_decomposition, c1_entry, c1_interrupters, c2_Q_matrix,
    cesaro_entry, cesaro_moments, check_alpha, hausdorff_entry, m_entry,
    mpm_closed_form, pB_closed_form,
)

__all__ = [
    "IdentityReport", "TelescopeError", "TelescopeWitness",
    "bm_series_witness", "bm_entry_via_series", "c1_series_witness",
    "check_BB_identity", "check_BM_identity", "check_C1_identity",
    "check_MQM_identity", "check_b_decomposition", "check_hausdorff_consistency",
    "check_preimage", "check_preimages", "mpm_series_witness", "telescope_verify",
]

PARTIAL_SUM_PROBES = (0, 1, 5, 50)


class TelescopeError(ValueError):
    """Raised when a proposed antidifference does not telescope the summand."""


@dataclass(frozen=True)
class TelescopeWitness:
    summand: RatFun
    s: RatFun

    @property
    def initial_value(self):
        return self.s(0)

    value = initial_value

    def remainder(self, K_):
        """Tail sum over k > K_, which is s(K_ + 1)."""
        return self.s(K_ + 1)

    def partial_sum(self, K_):
        acc = Fraction(0)
        for k in range(K_ + 1):
            acc = acc + self.summand(k)
        return acc

    def check_partial_sums(self, probes=PARTIAL_SUM_PROBES):
        s0 = self.initial_value
        return all(self.partial_sum(K_) + self.remainder(K_) == s0 for K_ in probes)


def _as_k(x):
    return x if isinstance(x, RatFun) and x.var == K.var else K * 0 + x


def telescope_verify(summand, s):
    summand, s = _as_k(summand), _as_k(s)
    if s.num.degree >= s.den.degree and not s.num.is_zero():
        raise TelescopeError(f"antidifference {s} does not vanish as k -> oo")
    if summand != s - s.shift(1):
        raise TelescopeError(f"{summand} is not s(k) - s(k+1) for s = {s}")
    return TelescopeWitness(summand, s)


@dataclass
class IdentityReport:
    identity: str
    alpha: object
    n: int
    verdict: str
    first_mismatch: Optional[dict] = None

    @property
    def passed(self):
        return self.verdict == "exact-pass"

    def to_dict(self):
        d = {"identity": self.identity, "alpha": format_entry(self.alpha), "n": self.n,
             "verdict": self.verdict}
        if self.first_mismatch is not None:
            d["first_mismatch"] = self.first_mismatch
        return d


def _compare(name, alpha, n, pairs):
    """Build a report from an iterable of ((i, j), lhs, rhs)."""
    for (i, j), lhs, rhs in pairs:
        if lhs != rhs:
            mismatch = {"i": i, "j": j, "lhs": format_entry(lhs), "rhs": format_entry(rhs)}
            return IdentityReport(name, alpha, n, "fail", mismatch)
    return IdentityReport(name, alpha, n, "exact-pass")


def _section(alpha, n, fn):
    return ExactMatrix.from_function(n, n, lambda i, j: fn(alpha, i, j))


def mpm_series_witness(alpha, i, j):
    """Telescoping witness for the (i, j) entry of M*PM, j >= i.

    s(k) = (a k^2 + b k + c) / ((j+1+k+alpha)(j+2+k+alpha)(j+3+k+alpha)).
    """
    if i > j:
        raise ValueError("witness is stated for j >= i; use symmetry")
    a_ = alpha
    summand = 4 * (j + 1 - i + K) * (K + 1) / (
        (j + 1 + K + a_) * (j + 2 + K + a_) * (j + 3 + K + a_) * (j + 4 + K + a_))
    b = 2 * (3 * j + 5 - i + 2 * a_)
    c = Fraction(2, 3) * (3 * j + 3 - i + 2 * a_) * (j + 3 + a_)
    s = (4 * K ** 2 + b * K + c) / ((j + 1 + K + a_) * (j + 2 + K + a_) * (j + 3 + K + a_))
    return telescope_verify(summand, s)


def check_MQM_identity(alpha, n, series=True):
    """M Q M* against the closed form of M* P M on the n x n section.

    M Q M* only needs the n x n sections (M is lower triangular).  With
    ``series`` the closed form is also recovered from the telescoped series
    for every j >= i.
    """
    alpha = check_alpha(alpha)
    M = _section(alpha, n, m_entry)
    lhs = M @ c2_Q_matrix(alpha, n) @ M.T

    def pairs():
        for i in range(n):
            for j in range(n):
                closed = mpm_closed_form(alpha, i, j)
                yield (i, j), lhs[i, j], closed
                if series and j >= i:
                    w = mpm_series_witness(alpha, i, j)
                    yield (i, j), w.initial_value, closed
    return _compare("MQM*=M*PM", alpha, n, pairs())


def bm_series_witness(alpha, i, j):
    """Witness for the infinite part of the (i, j) entry of BM."""
    a_ = alpha
    den3 = lambda m: (m + 1 + K + a_) * (m + 2 + K + a_) * (m + 3 + K + a_)
    if j >= i:
        summand = 4 * (K + 1) * (j + 1 - 3 * i + K - 2 * a_) / (den3(j) * (j + 4 + K + a_))
        s = (4 * K ** 2 + (10 + 6 * j - 6 * i) * K + 2 * (j + 1 - i) * (j + 3 + a_)) / den3(j)
    else:
        summand = 4 * (i + 1 - j + K) * (K + 1 - 2 * i - 2 * a_) / (den3(i) * (i + 4 + K + a_))
        c = 6 + (4 - 2 * a_) * i - (2 - 2 * a_) * j + 2 * i * j - 2 * i ** 2 + 2 * a_
        s = (4 * K ** 2 + (10 + 2 * i - 2 * j) * K + c) / den3(i)
    return telescope_verify(summand, s)


def bm_entry_via_series(alpha, i, j, probe=None):
    """(BM)_{ij} as explicit leading terms plus a telescoped tail.

    For j < i the rows i-2 and i-1 of M contribute two finite terms; for
    i = 1 the row i-2 does not exist.  ``probe`` adds a partial-sum plus
    remainder cross-check at that cutoff.
    """
    a_ = alpha
    w = bm_series_witness(alpha, i, j)
    if probe is not None and w.partial_sum(probe) + w.remainder(probe) != w.initial_value:
        raise TelescopeError(f"partial sum + remainder mismatch at ({i}, {j}), K={probe}")
    total = w.initial_value
    if j < i:
        if i >= 2:
            total = total + (i - 1 + a_) * (i + a_) / ((i + 1 + a_) * (i + 2 + a_)) * (
                2 * (i - j - 1) / ((i - 1 + a_) * (i + a_)))
        total = total + (-4 * (i + a_)) / ((i + 2 + a_) * (i + 3 + a_)) * (
            2 * (i - j) / ((i + a_) * (i + 1 + a_)))
    return total


def check_BM_identity(alpha, n, probe=5):
    alpha = check_alpha(alpha)

    def pairs():
        for i in range(n):
            for j in range(n):
                yield (i, j), bm_entry_via_series(alpha, i, j, probe), m_entry(alpha, j, i)
    return _compare("BM=M*", alpha, n, pairs())


def _bb_diagonal_display(alpha, i):
    a_ = alpha
    d = (i + 3 + a_) ** 2 * (i + 4 + a_) ** 2
    acc = Fraction(0)
    for k in range(i + 2):
        acc = acc + 4 * (i + 1 - 3 * k - 2 * a_) ** 2 / d
    return acc + (i + 1 + a_) ** 2 * (i + 2 + a_) ** 2 / d


def check_BB_identity(alpha, n):
    """B*B by finite column sums (column j of B vanishes below row j+2)
    against the closed form of the interrupter."""
    alpha = check_alpha(alpha)
    B = ExactMatrix.from_function(n + 2, n, lambda i, j: b_entry(alpha, i, j))
    BB = B.T @ B

    def pairs():
        for i in range(n):
            for j in range(n):
                closed = pB_closed_form(alpha, i, j)
                yield (i, j), BB[i, j], closed
                if i == j:
                    yield (i, i), _bb_diagonal_display(alpha, i), closed
    return _compare("B*B=P", alpha, n, pairs())


def c1_series_witness(alpha, m):
    """sum_{r>=m} 1/((r+1+alpha)(r+2+alpha)) telescopes to 1/(m+1+alpha)."""
    summand = 1 / ((m + 1 + K + alpha) * (m + 2 + K + alpha))
    return telescope_verify(summand, 1 / (m + 1 + K + alpha))


def check_C1_identity(alpha, n):
    """C Q C* = C* P C for C = (C^(alpha), 1).

    Entry (i, j) of C* P C is sum_{r >= max(i,j)} c_ri p_r c_rj, whose
    summand is exactly the one in :func:`c1_series_witness`.
    """
    alpha = check_alpha(alpha)
    q_diag, p_diag = c1_interrupters(alpha)
    C = _section(alpha, n, c1_entry)
    lhs = C @ ExactMatrix.diagonal(q_diag(r) for r in range(n)) @ C.T

    def pairs():
        for i in range(n):
            for j in range(n):
                yield (i, j), lhs[i, j], c1_series_witness(alpha, max(i, j)).initial_value
    return _compare("CQC*=C*PC", alpha, n, pairs())


def check_preimage(alpha, n, rows):
    """M applied to (1/2)(n+1+alpha)(n+2+alpha)(e_n - 2e_{n+1} + e_{n+2})
    gives e_n on the first ``rows`` coordinates."""
    alpha = check_alpha(alpha)
    if rows < n + 3:
        raise ValueError("rows must be at least n + 3")
    scale = (n + 1 + alpha) * (n + 2 + alpha) / 2
    v = [Fraction(0)] * rows
    v[n], v[n + 1], v[n + 2] = scale, -2 * scale, scale
    image = _section(alpha, rows, m_entry).apply(v)
    return _compare("M-preimage", alpha, rows,
                    (((r, n), image[r], Fraction(int(r == n))) for r in range(rows)))


def check_preimages(alpha, rows):
    """check_preimage for every basis index that fits in ``rows``; the first
    failing index is reported."""
    alpha = check_alpha(alpha)
    for idx in range(rows - 2):
        rep = check_preimage(alpha, idx, rows)
        if not rep.passed:
            return rep
    return IdentityReport("M-preimage", alpha, rows, "exact-pass")


def check_hausdorff_consistency(alpha, beta, n):
    alpha = check_alpha(alpha)
    mu = cesaro_moments(alpha, beta)

    def pairs():
        for i in range(n):
            for j in range(n):
                yield (i, j), hausdorff_entry(alpha, mu, i, j), cesaro_entry(alpha, beta, i, j)
    return _compare(f"hausdorff=cesaro(beta={beta})", alpha, n, pairs())


def check_b_decomposition(alpha, n):
    alpha = check_alpha(alpha)
    return _compare("B=T-W1+UW2", alpha, n, (
        ((i, j), b_shift_decomposition(alpha, i, j), b_entry(alpha, i, j))
        for i in range(n) for j in range(n)))
