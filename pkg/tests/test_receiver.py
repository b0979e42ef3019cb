import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.stats import poisson

from pnrdisc.receiver import (
    Method,
    NoConclusiveResults,
    Outcome,
    ReceiverParams,
    classify,
    error_numerator,
    error_rate,
    inconclusive_rate,
    outcome_probabilities,
    rates,
    rates_direct,
)
from pnrdisc.quantum_core import DomainError

ALPHA_04 = math.sqrt(0.4)
# 40-digit mpmath evaluations
KENNEDY_M0 = 0.10094825899732770424
KENNEDY_M1 = 0.12039395528505283011
KENNEDY_M1_INC = 0.16151721439572432679
NO_DISPLACEMENT_M1_INC = 0.26812801841425572030


def enumerate_rates(alpha, params, p1=0.5, n_max=200):
    """Oracle: sum scipy Poisson pmfs over counts, bucketed by classify()."""
    p2 = 1 - p1
    buckets = {}
    for prior, sign in ((p1, -1), (p2, +1)):
        mu = (params.beta + sign * alpha) ** 2
        probs = {o: 0.0 for o in Outcome}
        for n in range(n_max):
            probs[classify(n, params)] += poisson.pmf(n, mu)
        buckets[sign] = (prior, probs)
    p_inc = sum(pr * probs[Outcome.INCONCLUSIVE] for pr, probs in buckets.values())
    wrong = (buckets[-1][0] * buckets[-1][1][Outcome.IDENTIFY_PLUS]
             + buckets[+1][0] * buckets[+1][1][Outcome.IDENTIFY_MINUS])
    return wrong / (1 - p_inc), p_inc


class TestClassify:
    @pytest.mark.parametrize("m", [0, 1, 5])
    def test_vacuum_identifies_minus(self, m):
        assert classify(0, ReceiverParams(1.0, m)) is Outcome.IDENTIFY_MINUS

    def test_window(self):
        assert classify(2, ReceiverParams(1.0, 3)) is Outcome.INCONCLUSIVE
        assert classify(3, ReceiverParams(1.0, 3)) is Outcome.INCONCLUSIVE
        assert classify(4, ReceiverParams(1.0, 3)) is Outcome.IDENTIFY_PLUS

    def test_no_window_when_m_zero(self):
        assert classify(1, ReceiverParams(1.0, 0)) is Outcome.IDENTIFY_PLUS

    def test_params_validation(self):
        with pytest.raises(DomainError):
            ReceiverParams(1.0, -1)
        with pytest.raises(DomainError):
            ReceiverParams(math.nan, 1)


class TestClosedForms:
    def test_kennedy_m0(self):
        p = ReceiverParams(ALPHA_04, 0)
        assert error_rate(ALPHA_04, p) == pytest.approx(KENNEDY_M0, abs=1e-12)
        assert error_rate(ALPHA_04, p) == pytest.approx(enumerate_rates(ALPHA_04, p)[0], abs=1e-12)

    def test_kennedy_m1(self):
        p = ReceiverParams(ALPHA_04, 1)
        assert error_rate(ALPHA_04, p) == pytest.approx(KENNEDY_M1, rel=1e-12)
        assert inconclusive_rate(ALPHA_04, p) == pytest.approx(KENNEDY_M1_INC, rel=1e-12)
        # at fixed beta = alpha a larger window hurts
        assert error_rate(ALPHA_04, p) > error_rate(ALPHA_04, ReceiverParams(ALPHA_04, 0))

    def test_no_displacement_inconclusive(self):
        p = ReceiverParams(0.0, 1)
        assert inconclusive_rate(ALPHA_04, p) == pytest.approx(NO_DISPLACEMENT_M1_INC, rel=1e-12)

    @given(st.floats(0.0, 2.0), st.integers(0, 8))
    def test_no_displacement_is_coin_flip(self, alpha, m):
        assert error_rate(alpha, ReceiverParams(0.0, m)) == pytest.approx(0.5, abs=1e-12)

    @given(st.floats(0.0, 2.0), st.floats(-3.0, 3.0))
    def test_m0_never_inconclusive(self, alpha, beta):
        assert inconclusive_rate(alpha, ReceiverParams(beta, 0)) == 0.0

    @given(st.floats(0.0, 2.0), st.floats(-3.0, 3.0), st.integers(0, 8))
    def test_monotone_in_m(self, alpha, beta, m):
        lo, hi = ReceiverParams(beta, m), ReceiverParams(beta, m + 1)
        assert inconclusive_rate(alpha, hi) >= inconclusive_rate(alpha, lo) - 1e-15
        assert error_numerator(alpha, hi) <= error_numerator(alpha, lo) + 1e-15

    @given(st.floats(0.0, 2.0), st.floats(-3.0, 3.0), st.integers(0, 8))
    def test_probabilities_in_range(self, alpha, beta, m):
        r = rates(alpha, ReceiverParams(beta, m))
        assert 0.0 <= r.p_error <= 1.0
        assert 0.0 <= r.p_inconclusive <= 1.0
        assert r.method is Method.CLOSED_FORM

    def test_matches_enumeration(self):
        for alpha_sq in (0.05, 0.4, 1.0):
            a = math.sqrt(alpha_sq)
            for beta in (0.0, 0.3, a, 1.7):
                for m in (0, 2, 5):
                    p = ReceiverParams(beta, m)
                    e, i = enumerate_rates(a, p)
                    assert error_rate(a, p) == pytest.approx(e, abs=1e-12)
                    assert inconclusive_rate(a, p) == pytest.approx(i, abs=1e-12)

    def test_vectorized_beta(self):
        betas = np.linspace(0, 2, 11)
        out = error_rate(ALPHA_04, ReceiverParams(betas, 2))
        expect = [error_rate(ALPHA_04, ReceiverParams(float(b), 2)) for b in betas]
        np.testing.assert_allclose(out, expect, rtol=0, atol=1e-15)


class TestDirectSum:
    def test_equal_prior_kennedy(self):
        r = rates_direct(ALPHA_04, ReceiverParams(ALPHA_04, 0))
        assert r.p_error == pytest.approx(KENNEDY_M0, abs=1e-12)
        assert r.p_inconclusive == 0.0
        assert r.method is Method.DIRECT_SUM

    @pytest.mark.parametrize("m", [0, 1, 4])
    def test_single_hypothesis_nulled(self, m):
        r = rates_direct(0.8, ReceiverParams(0.8, m), p1=1.0, p2=0.0)
        assert r.p_error == 0.0
        assert r.p_inconclusive == 0.0

    def test_symmetry_point(self):
        r = rates_direct(ALPHA_04, ReceiverParams(0.0, 2))
        assert r.p_error == pytest.approx(0.5, abs=1e-12)

    def test_general_priors_match_enumeration(self):
        for p1 in (0.1, 0.3, 0.85):
            for beta in (0.2, 0.9, 1.4):
                p = ReceiverParams(beta, 2)
                r = rates_direct(0.7, p, p1=p1)
                e, i = enumerate_rates(0.7, p, p1=p1)
                assert r.p_error == pytest.approx(e, abs=1e-12)
                assert r.p_inconclusive == pytest.approx(i, abs=1e-12)

    @given(st.floats(0.0, 3.0), st.integers(0, 8))
    def test_povm_completeness(self, mu, m):
        assert math.fsum(outcome_probabilities(mu, m)) == pytest.approx(1.0, abs=1e-12)

    def test_invalid_priors(self):
        with pytest.raises(DomainError):
            rates_direct(0.5, ReceiverParams(0.5, 1), p1=0.7, p2=0.7)


def test_no_conclusive_results_raises(monkeypatch):
    import pnrdisc.receiver as rx

    monkeypatch.setattr(rx, "inconclusive_rate", lambda alpha, params: 1.0)
    with pytest.raises(NoConclusiveResults):
        rx.error_rate(0.5, ReceiverParams(0.5, 3))
