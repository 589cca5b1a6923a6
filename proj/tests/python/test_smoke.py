import numpy as np
import pytest

import mber

REFERENCE = np.array([0.15, 0.21, 0.21, 0.03, 0.21, 0.03, 0.03, 0.13])


def test_dependence_params_golden():
    params = mber.dependence_params(REFERENCE)
    assert params[0] == 1.0
    assert params[0b111] == pytest.approx(0.15, abs=1e-12)
    for mask in (0b110, 0b101, 0b011):
        assert params[mask] == pytest.approx(0.36, abs=1e-12)
    for mask in (0b100, 0b010, 0b001):
        assert params[mask] == pytest.approx(0.60, abs=1e-12)


def test_measures_golden():
    measures = mber.dependence_measures(mber.dependence_params(REFERENCE))
    assert [row["subset"] for row in measures] == [[1, 2, 3], [1, 2], [1, 3], [2, 3]]
    by_subset = {tuple(row["subset"]): row["value"] for row in measures}
    assert by_subset[(1, 2, 3)] == pytest.approx(-0.066 / 0.216, abs=1e-12)
    for pair in ((1, 2), (1, 3), (2, 3)):
        assert by_subset[pair] == pytest.approx(0.0, abs=1e-12)


def test_table_round_trip():
    params = mber.dependence_params(REFERENCE)
    back = mber.table_from_params(params)
    np.testing.assert_allclose(back, REFERENCE, atol=1e-14)


def test_marginal_and_conditional():
    np.testing.assert_allclose(
        mber.marginal(REFERENCE, keep=[2, 3]), [0.36, 0.24, 0.24, 0.16], atol=1e-14
    )
    cond = mber.conditional(REFERENCE, target=[3], given=[1, 2], values=[0, 0])
    np.testing.assert_allclose(cond, [0.15 / 0.36, 0.21 / 0.36], atol=1e-14)


def test_intervals_and_bounds():
    lo, up = mber.trivariate_admissible_interval(0.6, 0.6, 0.6, 0.36, 0.36, 0.36)
    assert (lo, up) == (pytest.approx(0.12, abs=1e-14), pytest.approx(0.28, abs=1e-14))
    assert mber.frechet_bounds([0.9, 0.9, 0.9, 0.9]) == (
        pytest.approx(0.6),
        pytest.approx(0.9),
    )
    assert mber.bivariate_admissible_interval(0.4, 0.6) == (0.0, 0.4)
    assert mber.bivariate_admissible_region_contains(0.3, 0.5, 0.4)
    assert not mber.bivariate_admissible_region_contains(0.3, 0.2, 0.5)
    with pytest.raises(RuntimeError):
        mber.trivariate_admissible_interval(0.6, 0.6, 0.6, 0.2, 0.2, 0.2)
    with pytest.raises(ValueError):
        mber.trivariate_admissible_interval(0.6, 0.6, 0.6, 0.7, 0.36, 0.36)


def test_measure_inversion_goldens():
    assert mber.bivariate_param_from_measure(0.4543, 0.4851, 0.0240) == pytest.approx(
        0.2260, abs=5e-5
    )
    churn = mber.trivariate_from_measures(
        0.4543, 0.4851, 0.7961, 0.0240, -0.1916, -0.2994, -0.1252
    )
    assert churn[0] == pytest.approx(0.15347951202470039, abs=1e-15)
    assert churn.sum() == pytest.approx(1.0, abs=1e-12)


def test_subcopula_and_deviation():
    params = mber.dependence_params(REFERENCE)
    assert mber.subcopula(params, [0.6, 0.6, 1.0]) == pytest.approx(0.36, abs=1e-12)
    assert mber.subcopula(params, [0.0, 0.6, 1.0]) == 0.0
    assert mber.bivariate_deviation(0.5, 0.5, 0.3) == pytest.approx(0.05, abs=1e-15)


def test_simulate_deterministic():
    rows = mber.simulate(REFERENCE, 200, seed=7)
    again = mber.simulate(REFERENCE, 200, seed=7)
    other = mber.simulate(REFERENCE, 200, seed=7, stream=1)
    assert rows.shape == (200, 3)
    assert rows.dtype == np.uint8
    np.testing.assert_array_equal(rows, again)
    assert (rows != other).any()
    freq = mber.empirical_table(rows)
    assert freq.sum() == pytest.approx(1.0)


def test_fit_and_infer():
    data = mber.simulate(REFERENCE, 4000, seed=11)
    estimates = mber.fit(data)
    np.testing.assert_allclose(estimates["p"], REFERENCE, atol=0.05)
    assert estimates["dependence_params"][0] == 1.0

    report = mber.infer(data, nsim=1000, probint=0.95, seed=11)
    assert report["nsim"] == 1000
    assert len(report["probabilities"]) == 8
    assert len(report["dependence_params"]) == 7
    assert len(report["dependence_measures"]) == 4
    for row in report["probabilities"]:
        assert row["lower"] <= row["median"] <= row["upper"]
    assert report["dependence_params"][0]["subset"] == [1, 2, 3]


def test_rule_accuracy():
    data = mber.simulate(REFERENCE, 500, seed=3)
    value = mber.rule_accuracy(REFERENCE, data, target=3, given=[1, 2], nsim=500)
    again = mber.rule_accuracy(REFERENCE, data, target=3, given=[1, 2], nsim=500)
    assert value == again
    assert 0.0 < value < 1.0


def test_coverage_study_smoke():
    report = mber.coverage_study(REFERENCE, m=200, reps=5, nsim=1000)
    assert report["reps"] == 5
    for row in report["probabilities"]:
        assert 0.0 <= row["coverage"] <= 1.0
