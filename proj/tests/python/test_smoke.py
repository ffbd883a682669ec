from fractions import Fraction

import pytest

import invlog


def test_koebe_inverse_and_gamma():
    tail = [2, 3, 4, 5]
    assert invlog.inverse_coefficients(tail) == [-2, 5, -14, 42]
    assert invlog.log_coefficients(tail) == [-1, Fraction(3, 2), Fraction(-10, 3), Fraction(35, 4)]
    assert invlog.log_coefficients(tail, inverse=False) == [1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)]


def test_second_determinants_of_catalog_functions():
    # z/(1-z^2), atanh z, z/(1-z), -log(1-z)
    assert invlog.second_determinant([0, 1, 0], "hankel") == Fraction(-1, 4)
    assert invlog.second_determinant([0, Fraction(1, 3), 0], "hankel") == Fraction(-1, 36)
    assert invlog.second_determinant([1, 1, 1], "toeplitz") == Fraction(3, 16)
    assert invlog.second_determinant([Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)], "toeplitz") == Fraction(143, 2304)
    assert invlog.second_determinant([1, 1, 1], "hankel") == Fraction(1, 48)


def test_schwarz_layer():
    assert invlog.schur_to_coeffs(0.5, 0.5, 0) == pytest.approx((0.5, 0.375, -0.09375))
    assert abs(invlog.determinant_in_schwarz(1j, 0, 0, "convex-sym", "toeplitz")) == pytest.approx(145 / 2304)
    first = invlog.sample(1, 4)
    assert first[0] == (0j, 1 + 0j, 0j)
    assert first[3] == (1j, 0j, 0j)
    with pytest.raises(ArithmeticError):
        invlog.schur_to_coeffs(2, 0, 0)


def test_bounds_and_boundary():
    assert invlog.theorem_bound("convex-sym", "toeplitz") == Fraction(145, 2304)
    assert invlog.boundary_restrict("M", "y=1-x^2") == [12, 0, 0, 0, -11]
    r = invlog.maximize_univariate([0, 6, 0, -6, 1], 0, 1, 1e-12)
    assert r["value"] == pytest.approx(2.437828, abs=1e-5)


def test_suites():
    assert invlog.run_extremal()["passed"]
    report = invlog.run_sampling("starlike-sym", "hankel", 2000, 42)
    assert report["passed"]
    assert report["sampler"]["generator"] == "mt19937_64"
    assert invlog.run_maximization(1e-9, 201)["passed"]


def test_catalog_strings_and_errors():
    assert invlog.series_coefficients("h5", 3) == ["1/1", "1/1*i", "-1/1"]
    assert "koebe" in invlog.function_names()
    with pytest.raises(ValueError):
        invlog.theorem_bound("bogus", "hankel")
    with pytest.raises(ValueError):
        invlog.series_coefficients("nope", 3)
