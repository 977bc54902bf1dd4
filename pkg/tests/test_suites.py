import math
import random
from fractions import Fraction

import pytest

from cyclohecke.reports import VerificationReport, summarize
from cyclohecke.suites import (
    SmashProduct,
    generic_contexts,
    main_theorem_coverage,
    pbw_dimension_report,
    sample_specialization,
    suite_hilb_fg06,
    suite_main_theorem,
    suite_pairing,
    suite_q1_gap,
)


class TestReports:
    def test_failure_requires_witness(self):
        with pytest.raises(ValueError):
            VerificationReport("x", {}, "fail", [])

    def test_canonical_json_excludes_duration(self):
        rep = VerificationReport("x", {"n": 1}, "pass", duration=1.23)
        assert "duration" not in rep.to_json()

    def test_summarize(self):
        reports = [
            VerificationReport("a", {}, "pass"),
            VerificationReport("b", {}, "skipped"),
        ]
        assert summarize(reports) == (1, 0, 1)


class TestSampler:
    def test_rejects_coincidences(self):
        rng = random.Random(0)
        for _ in range(50):
            q, Qs = sample_specialization(3, rng, 2)
            assert q != 1
            for i in range(2):
                for j in range(2):
                    if i != j:
                        for m in range(-6, 7):
                            assert Qs[i] != q ** m * Qs[j]

    def test_deterministic_given_seed(self):
        a = sample_specialization(2, random.Random(9), 2)
        b = sample_specialization(2, random.Random(9), 2)
        assert a == b


class TestMainTheoremSuite:
    def test_coverage_respects_budget(self):
        pairs = main_theorem_coverage(budget=400)
        for n, r in pairs:
            assert r ** n * math.factorial(n) <= 400
        for expected in [(4, 1), (3, 2), (2, 3), (0, 1)]:
            assert expected in pairs

    def test_default_suite_passes(self):
        reports = suite_main_theorem()
        assert reports and all(r.passed for r in reports)


class TestHilbSuite:
    def test_dimensions_at_listed_values(self):
        rep = suite_hilb_fg06(
            2, [("rational", Fraction(2)), ("rational", Fraction(-1))])
        assert rep.passed
        by_q = {r["q"]: r for r in rep.params["results"]}
        assert by_q["-1"]["dim_center"] == 2
        assert by_q["-1"]["dim_jm_center"] == 2

    def test_generic_equals_partition_count(self):
        rep = suite_hilb_fg06(3, [("rational", Fraction(5))])
        assert rep.passed
        assert rep.params["results"][0]["dim_center"] == 3

    def test_root_of_unity(self):
        rep = suite_hilb_fg06(3, [("zeta", 3, 1)])
        assert rep.passed

    def test_q_equal_one_rejected(self):
        with pytest.raises(ValueError):
            suite_hilb_fg06(2, [("rational", Fraction(1))])


class TestSmashProduct:
    def test_invariant_dims(self):
        assert SmashProduct(2, 2, [2, 5]).invariant_polynomial_dim() == 3
        assert SmashProduct(2, 3, [2, 5, 11]).invariant_polynomial_dim() == 6
        assert SmashProduct(1, 3, [2, 5, 11]).invariant_polynomial_dim() == 3

    def test_multiplication_is_associative(self):
        smash = SmashProduct(2, 2, [2, 5])
        rng = random.Random(1)
        words = smash.basis

        def mult_terms(terms, word):
            out = {}
            for w, c in terms.items():
                for w2, c2 in smash.multiply_words(w, word).items():
                    out[w2] = out.get(w2, Fraction(0)) + c * c2
            return {k: v for k, v in out.items() if v}

        for _ in range(50):
            x, y, z = (words[rng.randrange(len(words))] for _ in range(3))
            xy = smash.multiply_words(x, y)
            yz = smash.multiply_words(y, z)
            left = {}
            for w, c in xy.items():
                for w2, c2 in smash.multiply_words(w, z).items():
                    left[w2] = left.get(w2, Fraction(0)) + c * c2
            left = {k: v for k, v in left.items() if v}
            right = {}
            for w, c in yz.items():
                prod = smash.multiply_words(x, w)
                for w2, c2 in prod.items():
                    right[w2] = right.get(w2, Fraction(0)) + c * c2
            right = {k: v for k, v in right.items() if v}
            assert left == right

    def test_gap_2_2(self):
        rep = suite_q1_gap(2, 2, [Fraction(2), Fraction(5)])
        assert rep.passed
        assert rep.params["invariant_dim"] == 3
        assert rep.params["multipartitions"] == 5
        assert rep.params["gap"] is True
        assert rep.params["structure_compared"] is True

    def test_gap_2_3(self):
        rep = suite_q1_gap(2, 3, [Fraction(2), Fraction(5), Fraction(11)])
        assert rep.passed
        assert rep.params["invariant_dim"] == 6
        assert rep.params["multipartitions"] == 9

    def test_boundary_n1_reports_equality(self):
        rep = suite_q1_gap(1, 3, [Fraction(2), Fraction(5), Fraction(11)])
        assert rep.passed
        assert rep.params["invariant_dim"] == rep.params["multipartitions"]
        assert rep.params["gap"] is False

    def test_distinct_parameters_required(self):
        with pytest.raises(ValueError):
            suite_q1_gap(2, 2, [Fraction(2), Fraction(2)])


class TestPairingSuite:
    def test_small_run_passes(self):
        rep = suite_pairing(2, 1, trials=50, seed=0, samples=1)
        assert rep.passed
        assert rep.params["specialization"] == "generic (sampled)"

    def test_deterministic_given_seed(self):
        a = suite_pairing(2, 1, trials=20, seed=3, samples=1).to_json()
        b = suite_pairing(2, 1, trials=20, seed=3, samples=1).to_json()
        assert a == b


class TestDimensionReport:
    def test_matches_context(self, rational_ctx):
        ctx = rational_ctx(2, 2, Fraction(3), [Fraction(2), Fraction(5)])
        rep = pbw_dimension_report(2, 2, ctx)
        assert rep.passed
        assert rep.params["expected"] == 8
        assert rep.params["syt_square_sum"] == 8

    def test_generic_contexts_are_seeded(self):
        a = generic_contexts(2, 1, seed=4, samples=2)
        b = generic_contexts(2, 1, seed=4, samples=2)
        assert [(c.q_val, tuple(c.Q_vals)) for c in a] == \
            [(c.q_val, tuple(c.Q_vals)) for c in b]
