import math
from fractions import Fraction

import pytest

import mstlab

ZETA3 = 1.2020569031595942


def test_counts_match_cayley_and_renyi():
    rows = mstlab.connected_graph_counts(6)
    assert rows[4][3] == 16
    assert rows[4][4] == 15
    assert sum(rows[5]) == 728


def test_exact_values():
    assert mstlab.exact_expected_mst(2)["total"] == Fraction(1, 2)
    assert mstlab.exact_expected_mst(4)["total"] == Fraction(31, 35)
    e = mstlab.exact_expected_mst(12)
    assert e["tree"] + e["unicyclic"] + e["complex"] - 1 == e["total"]
    assert mstlab.b_term(3, 3, 0) == Fraction(1, 4)


def test_component_count_matches_brute_force():
    for n in range(1, 6):
        assert mstlab.expected_component_count(n, Fraction(1, 3)) == \
            mstlab.brute_force_expected_components(n, Fraction(1, 3))


def test_constants():
    assert mstlab.c1() == pytest.approx(0.0384956, abs=1e-6)
    report = mstlab.constants()
    assert report["c2"]["value"] == pytest.approx(-1.7295, abs=3e-3)
    assert abs(report["c2_x_form"]["value"] - report["c2_y_form"]["value"]) < 1e-8


def test_scaling_functions():
    assert mstlab.big_F(2.0, 0.0) == pytest.approx(8 / 6)
    assert mstlab.big_F(2.0, 1.0) == pytest.approx(8 / 24)
    f = mstlab.f_of_lambda([-5.0, 0.0, 8.0])
    assert 0 < f[0] < f[1] < 1
    assert f[2] == pytest.approx(1.0, abs=5e-3)
    assert mstlab.gaussian_identity_residual(1.0) < 1e-10
    assert mstlab.psi(0.0) == 1.0


def test_simulation_is_reproducible():
    assert mstlab.mst_length(20, seed=7, rep=3) == mstlab.mst_length(20, seed=7, rep=3)
    est = mstlab.estimate_mean_mst(5, 20000, seed=3)
    exact = float(mstlab.exact_expected_mst(5)["total"])
    assert abs(est["mean"] - exact) < 4 * est["std_error"]
    gap = mstlab.coupled_exp_uniform_diff(100, 500, seed=5)
    assert gap["mean"] == pytest.approx(ZETA3 / 100, abs=max(4 * gap["std_error"], 2e-3))


def test_census_record():
    rec = mstlab.gnp_component_census(200, 0.0, 50, seed=2)
    assert rec["n"] == 200
    assert rec["components"]["mean"] == pytest.approx(
        rec["trees"]["mean"] + rec["unicyclic"]["mean"] + rec["complex"]["mean"])


def test_errors_cross_the_boundary():
    with pytest.raises(mstlab.DomainError):
        mstlab.b_term(3, 4, 0)
    with pytest.raises(mstlab.ResourceError):
        mstlab.exact_expected_mst(31)
    with pytest.raises(mstlab.Error):
        mstlab.estimate_mean_mst(5, 10, model="gamma")
    assert issubclass(mstlab.TruncationError, mstlab.Error)


def test_acceptance_subset():
    result = mstlab.run_acceptance([3])
    assert len(result) == 1
    assert result[0]["criterion"] == 3 and result[0]["pass"] is True
    assert math.isfinite(result[0]["seconds"])
