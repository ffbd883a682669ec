#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace invlog;
using testing::oracle::lagrange_inverse;
using testing::oracle::log_of_quotient;

namespace
{

using RS = TruncatedSeries<Rational>;

RS koebe(int order)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
    {
        c[static_cast<std::size_t>(n)] = n;
    }
    return RS(order, c);
}

RS geometric(int order, const Rational& ratio)
{
    // 1/(1 - ratio z)
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    Rational p = 1;
    for (auto& x : c)
    {
        x = p;
        p *= ratio;
    }
    return RS(order, c);
}

} // namespace

TEST_CASE("construction pads and validates")
{
    const RS s(6, {1, 2});
    CHECK(s.order() == 6);
    CHECK(s[1] == 2);
    CHECK(s[6] == 0);
    CHECK_THROWS_AS(RS(4), ContractViolation);
    CHECK_THROWS_AS(RS(5, {1, 2, 3, 4, 5, 6, 7}), ContractViolation);
    CHECK_THROWS_AS(TruncatedSeries<Complex>(5, {Complex(NAN, 0)}), DomainError);
    CHECK_THROWS_AS(add(RS(5), RS(6)), ContractViolation);
}

TEST_CASE("products and reciprocals of small series")
{
    const RS one_plus(6, {1, 1});
    const RS one_minus(6, {1, -1});
    CHECK(one_plus * one_minus == RS(6, {1, 0, -1}));
    CHECK(reciprocal(one_minus) == geometric(6, 1));
    CHECK(reciprocal(RS(6, {2})) == RS(6, {Rational(1, 2)}));
    CHECK_THROWS_AS(reciprocal(RS(6, {0, 1})), DomainError);
    CHECK(reflect(koebe(6)) == RS(6, {0, -1, 2, -3, 4, -5, 6}));
}

TEST_CASE("composition")
{
    // 1/(1 - z) composed with z^2 is 1/(1 - z^2)
    const RS z2(6, {0, 0, 1});
    CHECK(compose(geometric(6, 1), z2) == RS(6, {1, 0, 1, 0, 1, 0, 1}));
    CHECK(compose(koebe(6), RS::identity(6)) == koebe(6));
    CHECK_THROWS_AS(compose(koebe(6), RS(6, {1, 1})), DomainError);
}

TEST_CASE("Koebe inverse and logarithmic coefficients")
{
    const auto inv = compositional_inverse(koebe(8));
    CHECK(inv[2] == -2);
    CHECK(inv[3] == 5);
    CHECK(inv[4] == -14);
    CHECK(inv[5] == 42);
    // |A_n| = (2n)!/(n!(n+1)!) for n = 2..8
    for (int n = 2; n <= 8; ++n)
    {
        Integer num = 1;
        for (int k = n + 2; k <= 2 * n; ++k)
        {
            num *= k;
        }
        Integer den = 1;
        for (int k = 2; k <= n; ++k)
        {
            den *= k;
        }
        const Rational catalan(num, den);
        CHECK(inv[n] == ((n % 2 == 0) ? -catalan : catalan));
    }

    const auto logged = log_div_z(inv);
    CHECK(logged[1] / 2 == -1);
    CHECK(logged[2] / 2 == Rational(3, 2));
    CHECK(logged[3] / 2 == Rational(-10, 3));
    CHECK(logged[8] == 0);

    // gamma_n of the Koebe function itself is 1/n
    const auto direct = log_div_z(koebe(8));
    for (int n = 1; n < 8; ++n)
    {
        CHECK(direct[n] / 2 == Rational(1, n));
    }
}

TEST_CASE("z/(1-z) inverts to z/(1+z)")
{
    std::vector<Rational> c(9, Rational(1));
    c[0] = 0;
    const auto inv = compositional_inverse(RS(8, c));
    for (int n = 1; n <= 8; ++n)
    {
        CHECK(inv[n] == (n % 2 == 1 ? 1 : -1));
    }
}

TEST_CASE("derivative of Koebe against (1+z)/(1-z)^3")
{
    // (1+z)/(1-z)^3 = sum_k ((k+1)(k+2)/2 + k(k+1)/2) z^k = sum (k+1)^2 z^k
    const auto d = derivative(koebe(8));
    for (int k = 0; k < 8; ++k)
    {
        const Rational binom_a((k + 1) * (k + 2), 2);
        const Rational binom_b(k * (k + 1), 2);
        CHECK(d[k] == binom_a + binom_b);
    }
    CHECK(d[8] == 0);
}

TEST_CASE("log_div_z of -log(1-z) and of a non-normalized series")
{
    std::vector<Rational> c(9, Rational(0));
    for (int n = 1; n <= 8; ++n)
    {
        c[static_cast<std::size_t>(n)] = Rational(1, n);
    }
    const auto logged = log_div_z(RS(8, c));
    const auto expected = log_of_quotient(c);
    for (int n = 1; n < 8; ++n)
    {
        CHECK(logged[n] == expected[static_cast<std::size_t>(n)]);
    }
    CHECK(logged[1] == Rational(1, 2));
    CHECK_THROWS_AS(log_div_z(RS(8, {0, 2})), DomainError);
    CHECK_THROWS_AS(compositional_inverse(RS(8, {0, 2})), DomainError);
}

TEST_CASE("ring axioms on random exact series")
{
    testing::RandomRationals rng(7);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto a = rng.normalized<Rational>(8);
        const auto b = rng.normalized<Rational>(8);
        const auto c = rng.normalized<Rational>(8);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * RS::constant(8, 1) == a);
        CHECK(a - a == RS(8));
        const auto unit = a + RS::constant(8, 1);
        CHECK(unit * reciprocal(unit) == RS::constant(8, 1));
    }
}

TEST_CASE("compositional inverse against Lagrange inversion")
{
    testing::RandomRationals rng(11);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto f = rng.normalized<Rational>(8);
        const auto inv = compositional_inverse(f);
        CHECK(inv.coefficients() == lagrange_inverse(f.coefficients()));
        CHECK(compositional_inverse(inv) == f);
        CHECK(compose(f, inv) == RS::identity(8));
        CHECK(compose(inv, f) == RS::identity(8));
    }
}

TEST_CASE("log_div_z against the logarithmic-derivative recursion")
{
    testing::RandomRationals rng(13);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto f = rng.normalized<GaussianRational>(8);
        const auto logged = log_div_z(f);
        const auto expected = log_of_quotient(f.coefficients());
        for (int n = 1; n < 8; ++n)
        {
            CHECK(logged[n] == expected[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("float pipeline tracks the exact pipeline")
{
    testing::RandomRationals rng(17);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto f = rng.normalized<GaussianRational>(8);
        const auto exact = to_float(log_div_z(compositional_inverse(f)));
        const auto approx = log_div_z(compositional_inverse(to_float(f)));
        for (int n = 0; n <= 8; ++n)
        {
            CHECK(std::abs(exact[n] - approx[n]) <= 1e-9 * (1.0 + std::abs(exact[n])));
        }
    }
}
