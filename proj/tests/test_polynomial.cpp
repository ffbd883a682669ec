#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "invlog/polynomial.hpp"
#include "support.hpp"

using namespace invlog;

namespace
{

Polynomial from_roots(const std::vector<Rational>& roots)
{
    Polynomial p{1};
    for (const auto& r : roots)
    {
        p = p * Polynomial{-r, 1};
    }
    return p;
}

} // namespace

TEST_CASE("arithmetic and printing")
{
    const Polynomial p{12, 0, 0, 0, -11};
    CHECK(p.degree() == 4);
    CHECK(p.to_string() == "12 - 11*x^4");
    CHECK(p(Rational(1)) == 1);
    CHECK(p(0.5) == doctest::Approx(12 - 11.0 / 16));
    CHECK(p.derivative() == Polynomial{0, 0, 0, -44});
    CHECK(Polynomial{1, 1}.pow(3) == Polynomial{1, 3, 3, 1});
    CHECK((p - p).is_zero());
    CHECK(Polynomial::monomial(3, 2) == Polynomial{0, 0, 3});
    CHECK(Polynomial{0, 0, 0}.degree() == -1);
}

TEST_CASE("division with remainder")
{
    testing::RandomRationals rng(501);
    for (int trial = 0; trial < 100; ++trial)
    {
        std::vector<Rational> a(7);
        std::vector<Rational> b(3);
        for (auto& x : a) x = rng.next();
        for (auto& x : b) x = rng.next();
        b.back() = rng.next() + 20;
        const Polynomial num(a);
        const Polynomial den(b);
        const auto qr = divide(num, den);
        CHECK(qr.quotient * den + qr.remainder == num);
        CHECK(qr.remainder.degree() < den.degree());
    }
    CHECK_THROWS(divide(Polynomial{1}, Polynomial{}));
}

TEST_CASE("gcd and squarefree part")
{
    const auto p = from_roots({1, 1, 2, Rational(1, 3)});
    const auto q = from_roots({1, Rational(1, 3), 5});
    CHECK(gcd(p, q) == from_roots({1, Rational(1, 3)}));
    CHECK(squarefree_part(p) == from_roots({1, 2, Rational(1, 3)}));
    CHECK(squarefree_part(Rational(4) * from_roots({2, 2, 2})) == Rational(4) * from_roots({2}));
}

TEST_CASE("Sturm counts on half-open intervals")
{
    const SturmSequence s(from_roots({-1, 0, Rational(1, 2), 3}));
    CHECK(s.count_roots(-2, 4) == 4);
    CHECK(s.count_roots(0, 3) == 2);   // (0, 3] holds 1/2 and 3
    CHECK(s.count_roots(-1, 0) == 1);  // (-1, 0] holds 0
    CHECK(s.count_roots(Rational(1, 2), Rational(5, 2)) == 0);
    // x^2 + 1 has no real roots
    CHECK(SturmSequence(Polynomial{1, 0, 1}).count_roots(-10, 10) == 0);
}

TEST_CASE("Sturm counts against known roots")
{
    testing::RandomRationals rng(503);
    for (int trial = 0; trial < 100; ++trial)
    {
        std::set<Rational> distinct;
        while (distinct.size() < 5)
        {
            distinct.insert(rng.next());
        }
        const std::vector<Rational> roots(distinct.begin(), distinct.end());
        const SturmSequence s(Rational(-3) * from_roots(roots));
        Rational a = rng.next();
        Rational b = rng.next();
        if (b < a) std::swap(a, b);
        int expected = 0;
        for (const auto& r : roots)
        {
            expected += (r > a && r <= b) ? 1 : 0;
        }
        CHECK(s.count_roots(a, b) == expected);
    }
}

TEST_CASE("root isolation brackets every root")
{
    // (x - 1/3)(x - 1/2)(x^2 - 2) on [0, 2]
    const auto p = from_roots({Rational(1, 3), Rational(1, 2)}) * Polynomial{-2, 0, 1};
    const Rational width(1, 1000000);
    const auto brackets = isolate_roots(p, 0, 2, width);
    REQUIRE(brackets.size() == 3);
    const double expected[] = {1.0 / 3, 0.5, std::sqrt(2.0)};
    for (std::size_t k = 0; k < 3; ++k)
    {
        const auto& b = brackets[k];
        CHECK(b.hi - b.lo <= width);
        CHECK(b.lo.convert_to<double>() <= expected[k]);
        CHECK(b.hi.convert_to<double>() >= expected[k]);
    }
    // endpoint roots are found exactly
    const auto ends = isolate_roots(from_roots({0, 1}), 0, 1, width);
    REQUIRE(ends.size() == 2);
    CHECK(ends[0].exact());
    CHECK(ends[1].exact());
    CHECK(ends[1].lo == 1);
    // repeated roots are reported once
    CHECK(isolate_roots(from_roots({Rational(1, 7), Rational(1, 7)}), 0, 1, width).size() == 1);
}
