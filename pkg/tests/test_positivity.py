import random
from fractions import Fraction
from itertools import combinations

import pytest

from gencesaro.exact import ALPHA, alpha_poly
from gencesaro.matrix import ExactMatrix
from gencesaro.operators import b_entry, c2_Q_matrix
from gencesaro.positivity import (
    INDEFINITE, POSITIVE_DEFINITE, POSITIVE_SEMIDEFINITE, bareiss_det,
    certify_conjecture_route, certify_theorem12, det_S_polynomial, det_Z,
    det_corner_Q, i_minus_pB_section, is_psd, ldlt_minors, leading_minors,
    reference_det_S, sturm_root_count,
)

F = Fraction


def cofactor_det(rows):
    if not rows:
        return F(1)
    if len(rows) == 1:
        return rows[0][0]
    total = F(0)
    for c in range(len(rows)):
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        total += (-1) ** c * rows[0][c] * cofactor_det(minor)
    return total


def _rand_frac(rng):
    return F(rng.randint(-9, 9), rng.randint(1, 6))


def _rand_matrix(rng, n=4):
    return [[_rand_frac(rng) for _ in range(n)] for _ in range(n)]


def _rand_symmetric(rng, n=4):
    kind = rng.randrange(3)
    if kind == 0:
        a = _rand_matrix(rng, n)
        return [[a[min(i, j)][max(i, j)] for j in range(n)] for i in range(n)]
    # G^T G is PSD; full rank -> PD, rank-deficient -> boundary PSD
    k = n if kind == 1 else rng.randint(1, n - 1)
    g = [[_rand_frac(rng) for _ in range(n)] for _ in range(k)]
    return [[sum(g[r][i] * g[r][j] for r in range(k)) for j in range(n)] for i in range(n)]


def test_bareiss_examples():
    assert bareiss_det(ExactMatrix.identity(3)) == 1
    assert bareiss_det(ExactMatrix([[1, 2], [2, 1]])) == -3
    assert bareiss_det(c2_Q_matrix(1, 2)) == 6
    assert bareiss_det(ExactMatrix([[0, 1], [1, 0]])) == -1
    assert bareiss_det(ExactMatrix([[0, 1], [0, 2]])) == 0


def test_bareiss_against_cofactor_100_random():
    rng = random.Random(20261018)
    for _ in range(100):
        a = _rand_matrix(rng)
        if rng.random() < 0.2:
            a[2] = [2 * x for x in a[0]]
        if rng.random() < 0.2:
            a[0][0] = F(0)
        assert bareiss_det(ExactMatrix(a)) == cofactor_det(a)


def test_bareiss_over_polynomials():
    m = ExactMatrix([[alpha_poly(1, 1), alpha_poly(2)], [alpha_poly(0, 1), alpha_poly(3, 0, 1)]])
    assert bareiss_det(m) == alpha_poly(1, 1) * alpha_poly(3, 0, 1) - alpha_poly(0, 2)


def _brute_classification(a, rng):
    n = len(a)
    principal = [cofactor_det([[a[i][j] for j in s] for i in s])
                 for k in range(1, n + 1) for s in combinations(range(n), k)]
    vectors = [[_rand_frac(rng) for _ in range(n)] for _ in range(100)]
    forms = [sum(v[i] * a[i][j] * v[j] for i in range(n) for j in range(n)) for v in vectors]
    if all(m > 0 for m in principal):
        assert all(q > 0 for v, q in zip(vectors, forms) if any(v))
        return POSITIVE_DEFINITE
    if all(m >= 0 for m in principal):
        assert all(q >= 0 for q in forms)
        return POSITIVE_SEMIDEFINITE
    return INDEFINITE


def test_ldlt_against_brute_force_100_random():
    rng = random.Random(7)
    seen = set()
    for _ in range(100):
        a = _rand_symmetric(rng)
        rep = ldlt_minors(ExactMatrix(a))
        assert rep.classification == _brute_classification(a, rng)
        assert rep.minors == [cofactor_det([r[:k] for r in a[:k]]) for k in range(1, 5)]
        if rep.classification == INDEFINITE:
            assert rep.first_violation is not None
        seen.add(rep.classification)
    assert seen == {POSITIVE_DEFINITE, POSITIVE_SEMIDEFINITE, INDEFINITE}


def test_ldlt_examples():
    assert ldlt_minors(ExactMatrix.identity(5)).classification == POSITIVE_DEFINITE
    zero = c2_Q_matrix(0, 4) - ExactMatrix.identity(4)
    assert ldlt_minors(zero).classification == POSITIVE_SEMIDEFINITE
    rep = ldlt_minors(c2_Q_matrix(F(1, 2), 4) - ExactMatrix.identity(4))
    assert rep.classification == INDEFINITE
    assert rep.first_violation == (2, F(-1, 64))


def test_ldlt_zero_diagonal_with_coupling():
    # minors 0, -1 are caught; minors 0, 0 with a negative later diagonal too
    assert ldlt_minors(ExactMatrix([[0, 1], [1, 0]])).classification == INDEFINITE
    rep = ldlt_minors(ExactMatrix([[0, 0], [0, -1]]))
    assert rep.classification == INDEFINITE and rep.first_violation == (1, 0)
    assert not is_psd(ExactMatrix([[1, 2], [2, 1]]))


def test_ldlt_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        ldlt_minors(ExactMatrix([[1, 2], [3, 4]]))


def test_det_corner_Q():
    assert det_corner_Q(0) == 1
    assert det_corner_Q(1) == 6
    a = ALPHA
    assert det_corner_Q() == (1 + a) * (2 + a) ** 2 * (3 + a) / 12


def test_det_Z():
    a = ALPHA
    assert det_Z(0) == a * (13 + 9 * a + 2 * a ** 2) / 6
    assert det_Z(1) == a ** 2 * (a - 1) * (1 + a) / 12
    assert det_Z(0, 1) == 4 == c2_Q_matrix(1, 1)[0, 0] - 1
    assert det_Z(1, 0) == 0
    assert det_Z(1, F(1, 2)) == F(-1, 64)


@pytest.mark.parametrize("n", range(4))
def test_det_S_matches_reference(n):
    got, want = det_S_polynomial(n), reference_det_S(n)
    assert got.numerator.coeffs == want.numerator.coeffs
    assert got.denominator_factors == want.denominator_factors


def test_det_S_examples():
    d0 = det_S_polynomial(0)
    assert d0.numerator == alpha_poly(120, 140, 28, 8)
    assert d0.denominator_factors == ((3, 2), (4, 2))
    col0 = sum(b_entry(0, k, 0) ** 2 for k in range(3))
    assert d0(0) == 1 - col0 == F(5, 6)
    d1 = det_S_polynomial(1)
    assert d1(0) == F(16 * 2100, 9 * 256 * 25) == F(7, 12)
    assert d1(0) == bareiss_det(i_minus_pB_section(0, 2))


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("alpha", [F(0), F(1, 3), F(1)])
def test_det_S_against_numeric(n, alpha):
    assert det_S_polynomial(n)(alpha) == bareiss_det(i_minus_pB_section(alpha, n + 1))


def test_det_S_random_alpha_and_extension():
    rng = random.Random(3)
    d = det_S_polynomial(4)
    assert d.to_dict()["status"] == "unverified extension"
    for _ in range(3):
        a = F(rng.randint(-9, 40), rng.randint(10, 20))
        assert d(a) == bareiss_det(i_minus_pB_section(a, 5))


def test_sturm_examples():
    p = alpha_poly(0, -1, 1)
    assert sturm_root_count(p, 0, 1) == 1
    assert sturm_root_count(p, 0, 1, include_hi=False) == 0
    assert sturm_root_count(alpha_poly(-1, 2) * alpha_poly(-2, 1), 0, 1) == 1
    assert sturm_root_count(alpha_poly(120, 140, 28, 8), 0, 10 ** 6) == 0
    with pytest.raises(ValueError):
        sturm_root_count(alpha_poly(), 0, 1)


def test_sturm_repeated_and_infinite():
    p = alpha_poly(-1, 1) ** 3 * alpha_poly(-3, 1)
    assert sturm_root_count(p, 0, 10) == 2
    assert sturm_root_count(p, 2, None) == 1
    assert sturm_root_count(p, -100, None) == 2


@pytest.mark.parametrize("n", range(4))
def test_reference_numerators_have_no_positive_roots(n):
    num = reference_det_S(n).numerator
    assert all(c > 0 for c in num.coeffs)
    assert sturm_root_count(num, 0, 10 ** 6) == 0
    assert sturm_root_count(num, 0, None) == 0


def test_certify_theorem12_examples():
    assert certify_theorem12(0, 10).hyponormal_certified
    assert certify_theorem12(2, 30).hyponormal_certified
    cert = certify_theorem12(F(1, 2), 10)
    assert not cert.hyponormal_certified
    assert cert.q_minus_i.classification == INDEFINITE


@pytest.mark.parametrize("alpha,expected", [
    (F(0), True), (F(1), True), (F(3, 2), True), (F(10), True),
    (F(1, 10), False), (F(1, 2), False), (F(9, 10), False), (F(-1, 2), False),
])
def test_certify_theorem12_boundary(alpha, expected):
    assert certify_theorem12(alpha, 12).hyponormal_certified is expected


def test_conjecture_route_examples():
    assert certify_conjecture_route(0, 10).classification == POSITIVE_DEFINITE
    rep = certify_conjecture_route(F(1, 2), 4)
    assert rep.classification == POSITIVE_DEFINITE
    assert rep.minors == [reference_det_S(n)(F(1, 2)) for n in range(4)]


def test_conjecture_route_negative_alpha_finding():
    rep = certify_conjecture_route(F(-9, 10), 6)
    assert rep.classification == INDEFINITE
    assert rep.first_violation[0] == 2
