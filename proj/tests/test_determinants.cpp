#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlog/determinants.hpp"
#include "support.hpp"

using namespace invlog;

namespace
{

template <typename F>
LogCoeffVector<F> seq(std::vector<F> v)
{
    return LogCoeffVector<F>(std::move(v), LogKind::inverse);
}

} // namespace

TEST_CASE("Koebe second Hankel and Toeplitz determinants")
{
    const auto g = seq<Rational>({-1, Rational(3, 2), Rational(-10, 3)});
    const auto h = evaluate(DeterminantRequest<Rational>{g, 2, 1, DeterminantKind::hankel});
    const auto t = evaluate(DeterminantRequest<Rational>{g, 2, 1, DeterminantKind::toeplitz});
    CHECK(h.value == Rational(13, 12));
    CHECK(t.value == Rational(-5, 4));
    CHECK(h21_closed<Rational>(2, 3, 4) == Rational(13, 12));
    CHECK(t21_closed<Rational>(2, 3) == Rational(-5, 4));
    CHECK(*h.squared_modulus == Rational(169, 144));
    CHECK(h.modulus == doctest::Approx(13.0 / 12.0));
}

TEST_CASE("matrix layout")
{
    const auto g = seq<Rational>({1, 2, 3, 4, 5, 6, 7});
    const auto hm = determinant_matrix(DeterminantRequest<Rational>{g, 3, 2, DeterminantKind::hankel});
    CHECK(hm[0][0] == 2);
    CHECK(hm[0][2] == 4);
    CHECK(hm[2][2] == 6);
    CHECK(hm[1][2] == 5);
    const auto tm = determinant_matrix(DeterminantRequest<Rational>{g, 3, 2, DeterminantKind::toeplitz});
    CHECK(tm[0][0] == 2);
    CHECK(tm[2][0] == 4);
    CHECK(tm[0][2] == 4);
    CHECK(tm[1][1] == 2);
    CHECK(DeterminantRequest<Rational>{g, 3, 2, DeterminantKind::hankel}.required_length() == 6);
    CHECK_THROWS_AS(determinant_matrix(DeterminantRequest<Rational>{g, 4, 2, DeterminantKind::hankel}),
                    ContractViolation);
    CHECK_THROWS_AS(determinant_matrix(DeterminantRequest<Rational>{g, 0, 1, DeterminantKind::hankel}),
                    ContractViolation);
}

TEST_CASE("q = 1 is the entry itself")
{
    const auto g = seq<Rational>({Rational(1, 3), 2});
    CHECK(evaluate(DeterminantRequest<Rational>{g, 1, 2, DeterminantKind::hankel}).value == 2);
}

TEST_CASE("fraction-free elimination matches the permutation expansion")
{
    testing::RandomRationals rng(201);
    for (int q = 1; q <= 5; ++q)
    {
        for (int trial = 0; trial < 40; ++trial)
        {
            std::vector<std::vector<GaussianRational>> m(static_cast<std::size_t>(q));
            for (auto& row : m)
            {
                for (int j = 0; j < q; ++j)
                {
                    // occasional zeros force pivoting
                    row.push_back(trial % 4 == 0 && j == 0 ? GaussianRational(0) : rng.gaussian());
                }
            }
            CHECK(bareiss_determinant(m) == testing::oracle::leibniz_determinant(m));
        }
    }
    const std::vector<std::vector<Rational>> singular{{1, 2}, {2, 4}};
    CHECK(bareiss_determinant(singular) == 0);
}

TEST_CASE("closed H21 and T21 against generic evaluation on random input")
{
    testing::RandomRationals rng(203);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto f = rng.normalized<Rational>(8);
        const auto tuple = CoeffTuple<Rational>::from_series(f);
        CHECK(h21_closed(tuple.a2, tuple.a3, tuple.a4) ==
              second_determinant_pipeline(f, DeterminantKind::hankel).value);
        CHECK(t21_closed(tuple.a2, tuple.a3) ==
              second_determinant_pipeline(f, DeterminantKind::toeplitz).value);

        const auto gf = rng.normalized<GaussianRational>(8);
        const auto gt = CoeffTuple<GaussianRational>::from_series(gf);
        const auto gh = second_determinant_pipeline(gf, DeterminantKind::hankel);
        CHECK(h21_closed(gt.a2, gt.a3, gt.a4) == gh.value);
        CHECK(*gh.squared_modulus == gh.value.norm());
    }
}

TEST_CASE("|H21| is rotation invariant")
{
    testing::RandomRationals rng(207);
    for (int trial = 0; trial < 100; ++trial)
    {
        const Complex a2 = to_complex(rng.gaussian());
        const Complex a3 = to_complex(rng.gaussian());
        const Complex a4 = to_complex(rng.gaussian());
        const Complex u = std::polar(1.0, rng.real(0.0, 6.283185307179586));
        const double base = std::abs(h21_closed(a2, a3, a4));
        const double rotated = std::abs(h21_closed(a2 * u, a3 * u * u, a4 * u * u * u));
        CHECK(rotated == doctest::Approx(base).epsilon(1e-10));
    }
}
