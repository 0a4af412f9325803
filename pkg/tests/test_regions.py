import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from landen_ineq.errors import ParamError
from landen_ineq.regions import (
    Branch,
    Monotonicity,
    RegionVerdict,
    classify_bessel,
    classify_ineq9,
    classify_kummer,
    classify_steps,
    classify_thm21,
    classify_thm24,
    delta_n,
    omega_seq,
    omega_seq_gamma,
    seq_probe,
    thm24_branches,
)
from landen_ineq.specialfn import BesselParams, HyperTriple, KummerParams, is_admissible

T = HyperTriple


@pytest.mark.parametrize(
    "triple,branch,boundary",
    [
        ((1, 1, 1), Branch.INCREASING, False),
        ((0.5, 0.5, 1.5), Branch.DECREASING, True),  # 4ab = min{1,c} = 1
        ((0.5, 0.5, 1), Branch.INCREASING, True),
        ((0.1, 0.1, 0.1), Branch.OUTSIDE, False),
    ],
)
def test_classify_thm21_examples(triple, branch, boundary):
    v = classify_thm21(T(*triple))
    assert v.branch is branch
    assert v.boundary is boundary
    assert (v.fired_condition == "") == (branch is Branch.OUTSIDE)


def test_classify_thm24_examples():
    v = classify_thm24(T(2, 1, 2))
    assert v.branch is Branch.INCREASING and v.fired_condition == "2.4a: max{1,c} ≤ 2b ≤ a+1/2"
    v = classify_thm24(T(0.25, 0.5, 1.5))
    assert v.branch is Branch.DECREASING and v.fired_condition == "2.4b: a+1/2 ≤ 2b ≤ min{1,c}"
    assert classify_thm24(T(0.5, 1, 1.5)).branch is Branch.OUTSIDE
    # satisfied by the first and the second increasing sub-condition; the first is named
    v = classify_thm24(T(1, 0.5, 1))
    assert v.branch is Branch.INCREASING and v.boundary
    with pytest.raises(ParamError):
        classify_thm24(T(-1, 0.5, 1))


def _thm24_brute(a, b, c):
    """Independent restatement of the five sub-conditions."""
    inc = (max(1, c) <= 2 * b <= a + 0.5) or (c <= 2 * b <= a) or (3 * c <= 6 * b <= min(6 * a, 4 * a + 1))
    dec = (a + 0.5 <= 2 * b <= min(1, c)) or (max(6 * a, 4 * a + 1) <= 6 * b <= 3 * c)
    return inc, dec


@settings(max_examples=500)
@given(st.floats(0.01, 4), st.floats(0.01, 4), st.floats(0.01, 4))
def test_classify_thm24_matches_brute_force(a, b, c):
    inc, dec = _thm24_brute(a, b, c)
    branches = thm24_branches(T(a, b, c))
    # tolerance only widens the region, so the brute-force verdict is a subset
    if inc:
        assert Branch.INCREASING in branches
    if dec:
        assert Branch.DECREASING in branches
    # both at once only on a measure-zero boundary
    if inc and dec:
        assert classify_thm24(T(a, b, c)).boundary


def test_classify_bessel_examples():
    assert classify_bessel(BesselParams.from_kappa(1, 4)).branch is Branch.DECREASING
    assert classify_bessel(BesselParams.from_kappa(1, -4)).branch is Branch.OUTSIDE
    v = classify_bessel(BesselParams.from_kappa(-0.5, 0.5))
    assert v.branch is Branch.OUTSIDE
    assert any("lax" in note and "fails" in note for note in v.notes)


def test_classify_bessel_reports_both_bounds():
    # kappa = -0.5 with c large: strict bound max{0,...} fails, lax bound max{-1,...} holds
    v = classify_bessel(BesselParams.from_kappa(-0.5, 3.0))
    assert v.branch is Branch.OUTSIDE
    assert any("strict" in n and "fails" in n for n in v.notes)
    assert any("lax" in n and "holds" in n for n in v.notes)


def test_classify_kummer_examples():
    v = classify_kummer(KummerParams(0.25, 1))
    assert v.branch is Branch.DECREASING and v.boundary
    assert classify_kummer(KummerParams(1, 2)).branch is Branch.OUTSIDE
    assert classify_kummer(KummerParams(-1, 0.5)).branch is Branch.DECREASING


def test_classify_ineq9():
    assert classify_ineq9(1, 0.5).branch is Branch.INCREASING
    assert classify_ineq9(2, 1).branch is Branch.INCREASING
    assert classify_ineq9(0.1, 2).branch is Branch.OUTSIDE


def test_region_verdict_invariant():
    with pytest.raises(ValueError):
        RegionVerdict(Branch.OUTSIDE, "something", False)
    with pytest.raises(ValueError):
        RegionVerdict(Branch.INCREASING, "", False)


def test_delta_examples():
    for n in range(20):
        assert delta_n(T(0.5, 0.5, 1), n) == 0.0
    assert delta_n(T(1, 1, 1), 0) == 0.75
    assert delta_n(T(0.1, 0.1, 0.1), 1) == pytest.approx(-0.055, abs=1e-15)


def test_delta_sign_matches_alpha_ratio():
    # alpha_{n+1}/alpha_n >= 1  iff  Delta_n >= 0, for positive parameters
    for triple in [(0.3, 0.9, 1.4), (2.0, 0.7, 1.1), (0.1, 0.1, 0.1)]:
        a, b, c = triple
        for n in range(30):
            ratio = (n + a) * (n + b) * (n + 1) / ((n + c) * (n + 0.5) ** 2)
            assert (ratio >= 1) == (delta_n(T(*triple), n) >= 0)


def test_omega_examples():
    assert omega_seq(0) == 1.0
    assert omega_seq(1) == 4.0
    assert omega_seq(2) == pytest.approx(64 / 9, rel=1e-15)


def test_omega_two_formulas_agree():
    for n in range(51):
        assert omega_seq(n) == pytest.approx(omega_seq_gamma(n), rel=1e-12)


def test_omega_strictly_increasing():
    probe = seq_probe("omega", None, 1000)
    assert probe.classification is Monotonicity.INCREASING
    values = [omega_seq(n) for n in range(200)]
    assert all(u < v for u, v in zip(values, values[1:]))


def test_seq_probe_examples():
    assert seq_probe("alpha", T(1, 1, 1), 200).classification is Monotonicity.INCREASING
    assert seq_probe("beta", {"a": 0.3, "b": 0.8, "c": 1.6}, 200).classification is Monotonicity.CONSTANT
    assert seq_probe("gamma", {"a": 1, "b": 0.5}, 200).classification is Monotonicity.DECREASING
    probe = seq_probe("alpha", T(0.1, 0.1, 0.1), 200)
    assert probe.classification is Monotonicity.NON_MONOTONE
    # Delta_0, Delta_1 < 0 < Delta_2: alpha falls twice, then rises from n = 2
    assert probe.first_violation == 2


def test_seq_probe_errors():
    with pytest.raises(ParamError):
        seq_probe("alpha", {"a": 1, "b": 1}, 10)
    with pytest.raises(ParamError):
        seq_probe("alpha", {"a": 1, "b": 1, "c": -1}, 10)
    with pytest.raises(ParamError):
        seq_probe("zeta", {}, 10)
    with pytest.raises(ParamError):
        seq_probe("omega", None, 10_001)


def test_classify_steps():
    assert classify_steps([1, 1, 1]) == (Monotonicity.CONSTANT, None)
    assert classify_steps([1, 2, 2, 3]) == (Monotonicity.INCREASING, None)
    assert classify_steps([3, 2, 1]) == (Monotonicity.DECREASING, None)
    assert classify_steps([1, 2, 1.5, 3]) == (Monotonicity.NON_MONOTONE, 1)
    assert classify_steps([1, 1 + 1e-14, 1]) == (Monotonicity.CONSTANT, None)


admissible = st.floats(-4, 4).filter(lambda v: is_admissible(v) and abs(v - round(v)) > 1e-6)


@settings(max_examples=500, deadline=None)
@given(st.floats(-4, 4), st.floats(-4, 4), admissible)
def test_region_implies_delta_sign(a, b, c):
    t = T(a, b, c)
    v = classify_thm21(t)
    assume(v.branch is not Branch.OUTSIDE)
    sign = 1 if v.branch is Branch.INCREASING else -1
    assert all(sign * delta_n(t, n) >= -1e-12 * max(1, n * n) for n in range(1001))


@settings(max_examples=500, deadline=None)
@given(st.floats(0.01, 4), st.floats(0.01, 4), st.floats(0.01, 4))
def test_region_implies_alpha_monotone(a, b, c):
    # the ratio/Delta equivalence needs alpha_n > 0 and n + c > 0, hence positive parameters
    t = T(a, b, c)
    v = classify_thm21(t)
    assume(v.branch is not Branch.OUTSIDE)
    cls = seq_probe("alpha", t, 1000).classification
    if v.branch is Branch.INCREASING:
        assert cls in (Monotonicity.INCREASING, Monotonicity.CONSTANT)
    else:
        assert cls in (Monotonicity.DECREASING, Monotonicity.CONSTANT)


@settings(max_examples=500)
@given(st.floats(0.001, 100), st.floats(0.001, 100))
def test_condition_reduction(a, b):
    # AM-GM: 4ab >= a+b forces 4ab >= 1; GM-HM: 4ab <= 1 forces 4ab <= a+b
    if 4 * a * b >= a + b:
        assert 4 * a * b >= 1 * (1 - 1e-12)
    if 4 * a * b <= 1:
        assert 4 * a * b <= (a + b) * (1 + 1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.01, 4), st.floats(0.01, 4))
def test_gamma_hypothesis_gives_decreasing(a, b):
    assume(a >= b and 2 * a + 0.5 >= 3 * b)
    cls = seq_probe("gamma", {"a": a, "b": b}, 1000).classification
    assert cls in (Monotonicity.DECREASING, Monotonicity.CONSTANT)


@pytest.mark.parametrize("b", [0.2, 0.5, 1.3])
def test_beta_direction(b):
    assert seq_probe("beta", {"b": b, "c": 2 * b - 0.1}, 300).classification is Monotonicity.INCREASING
    assert seq_probe("beta", {"b": b, "c": 2 * b + 0.1}, 300).classification is Monotonicity.DECREASING


def test_thm24_branch_exclusive_off_boundary():
    # triples satisfying both branches must be flagged as boundary
    for a in [0.1 * k for k in range(1, 30)]:
        for b in [0.1 * k for k in range(1, 30)]:
            for c in [0.25 * k for k in range(1, 12)]:
                if len(thm24_branches(T(a, b, c))) == 2:
                    assert classify_thm24(T(a, b, c)).boundary
