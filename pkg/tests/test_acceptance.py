"""Acceptance gate: nine criteria, each exact, each under its runtime budget.

The conftest hook prints one PASS/FAIL line per criterion after the run.
"""

import random
import time
from dataclasses import asdict
from fractions import Fraction

import pytest

from gencesaro.cli import FindingRecord
from gencesaro.exact import ALPHA, alpha_poly, format_rational
from gencesaro.identities import (
    bm_series_witness, check_BB_identity, check_BM_identity, check_C1_identity,
    check_MQM_identity, check_hausdorff_consistency, mpm_series_witness,
)
from gencesaro.matrix import ExactMatrix
from gencesaro.operators import b_entry, pB_closed_form
from gencesaro.positivity import (
    POSITIVE_DEFINITE, bareiss_det, certify_conjecture_route, certify_theorem12,
    det_S_polynomial, det_Z, det_corner_Q, ldlt_minors, reference_det_S,
)

from test_positivity import _brute_classification, _rand_matrix, _rand_symmetric, cofactor_det

F = Fraction
SAMPLE = [F(-1, 2), F(0), F(1, 3), F(1, 2), F(1), F(5, 2)]
PROBES = (0, 1, 5, 50)


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.1f}s, budget {self.seconds}s"


def test_criterion_1_determinant_reproduction():
    with Budget(10):
        for n in range(4):
            got, want = det_S_polynomial(n), reference_det_S(n)
            assert got.numerator.coeffs == want.numerator.coeffs
            assert got.denominator_factors == want.denominator_factors
        assert det_S_polynomial(0).numerator == alpha_poly(120, 140, 28, 8)
        assert det_S_polynomial(3).numerator.coeffs[0] == 16 * 1047816000


def test_criterion_2_mqm_identity():
    with Budget(60):
        for alpha in SAMPLE:
            rep = check_MQM_identity(alpha, 25)
            assert rep.verdict == "exact-pass", rep.to_dict()
        assert check_MQM_identity(ALPHA, 8).verdict == "exact-pass"


def test_criterion_3_bm_bb_and_witnesses():
    with Budget(60):
        for alpha in SAMPLE:
            assert check_BM_identity(alpha, 15).verdict == "exact-pass"
            assert check_BB_identity(alpha, 15).verdict == "exact-pass"
            for i in range(15):
                for j in range(i, 15):
                    assert mpm_series_witness(alpha, i, j).check_partial_sums(PROBES)
                    assert bm_series_witness(alpha, i, j).check_partial_sums(PROBES)
                    assert bm_series_witness(alpha, j, i).check_partial_sums(PROBES)


def test_criterion_4_corner_determinants():
    a = ALPHA
    with Budget(1):
        assert det_corner_Q() == (1 + a) * (2 + a) ** 2 * (3 + a) / 12
        assert det_Z(0) == a * (13 + 9 * a + 2 * a ** 2) / 6
        assert det_Z(1) == a ** 2 * (a - 1) * (1 + a) / 12


def test_criterion_5_hyponormality_region():
    grid = [F(0), F(1, 10), F(1, 2), F(9, 10), F(1), F(3, 2), F(10)]
    with Budget(10):
        certified = {a for a in grid if certify_theorem12(a, 30).hyponormal_certified}
    assert certified == {F(0), F(1), F(3, 2), F(10)}


def test_criterion_6_c1_identity():
    with Budget(10):
        for alpha in SAMPLE:
            assert check_C1_identity(alpha, 20).verdict == "exact-pass"


def test_criterion_7_hausdorff_consistency():
    with Budget(10):
        for beta in (1, 2, 3):
            for alpha in SAMPLE:
                assert check_hausdorff_consistency(alpha, beta, 10).verdict == "exact-pass"


def test_criterion_8_conjecture_evidence(capsys):
    findings = []
    with Budget(300):
        for k in range(1, 10):
            alpha = F(k, 10)
            rep = certify_conjecture_route(alpha, 25)
            for size, minor in zip(rep.sizes, rep.minors):
                if minor <= 0:
                    findings.append(asdict(FindingRecord(
                        format_rational(alpha), size, format_rational(minor),
                        "conjecture-counterexample-candidate")))
            assert rep.minors[:4] == [reference_det_S(n)(alpha) for n in range(4)]
            assert rep.classification == POSITIVE_DEFINITE, rep.to_dict()
    with capsys.disabled():
        for f in findings:
            print("FINDING", f)
    assert not findings


def test_criterion_9_oracle_suites():
    with Budget(60):
        rng = random.Random(9)
        for _ in range(100):
            a = _rand_matrix(rng)
            assert bareiss_det(ExactMatrix(a)) == cofactor_det(a)
        for _ in range(100):
            a = _rand_symmetric(rng)
            assert ldlt_minors(ExactMatrix(a)).classification == _brute_classification(a, rng)
        # B is zero below its second subdiagonal, so column products are finite sums
        for alpha in SAMPLE:
            for i in range(21):
                for j in range(21):
                    direct = sum(b_entry(alpha, r, i) * b_entry(alpha, r, j)
                                 for r in range(max(i, j) + 3))
                    assert pB_closed_form(alpha, i, j) == direct
