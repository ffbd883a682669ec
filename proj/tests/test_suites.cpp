#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invlog/suites.hpp"

using namespace invlog;
using nlohmann::json;

namespace
{

const json& check_named(const json& report, const std::string& name)
{
    for (const auto& c : report.at("checks"))
    {
        if (c.at("name") == name)
        {
            return c;
        }
    }
    throw std::runtime_error("no check " + name);
}

json without_timestamp(json j)
{
    j.erase("timestamp");
    return j;
}

} // namespace

TEST_CASE("extremal suite in exact mode")
{
    const auto report = run_extremal_suite();
    CHECK(report.passed());
    const auto j = report.to_json();
    CHECK(j.at("suite") == "extremal");

    const std::pair<const char*, const char*> values[] = {
        {"h1", "-1/4"}, {"h2", "1/48"}, {"h3", "-1/36"}, {"h4", "-1/2304"},
        {"h6", "3/16"}, {"h8", "143/2304"},
    };
    for (const auto& [name, value] : values)
    {
        const auto& c = check_named(j, name);
        CAPTURE(name);
        CHECK(c.at("value").at("exact") == value);
        CHECK(c.at("routes").at("closed_form").at("exact") == value);
        CHECK(c.at("routes").at("agree") == true);
        CHECK(c.at("pass") == true);
    }
    CHECK(check_named(j, "h5").at("squared_modulus") == "25/256");
    CHECK(check_named(j, "h7").at("squared_modulus") == "21025/5308416");
    CHECK(check_named(j, "h7").at("membership").at("member") == false);

    for (const auto* name : {"h2", "h4"})
    {
        const auto& c = check_named(j, name);
        CHECK(c.at("provenance") == "published-discrepant");
        CHECK(c.at("matches_published") == false);
        CHECK(c.at("strictly_below_bound") == true);
    }
    CHECK(check_named(j, "h2").at("published_modulus") == "1/12");
    CHECK(check_named(j, "h4").at("published_modulus") == "11/576");
    CHECK(check_named(j, "h8rot").at("attains_bound") == true);
}

TEST_CASE("extremal suite in float mode")
{
    const auto report = run_extremal_suite(ScalarMode::floating);
    CHECK(report.passed());
    const auto j = report.to_json();
    const auto& c = check_named(j, "h1");
    CHECK(c.at("value").at("value")[0].get<double>() == doctest::Approx(-0.25));
    CHECK_FALSE(c.at("value").contains("exact"));
}

TEST_CASE("sampling suite reaches the corner values")
{
    const auto sh = run_sampling_suite(ClassTag::starlike_sym, DeterminantKind::hankel, 100000, 42);
    CHECK(sh.passed());
    const auto sj = sh.to_json();
    const auto& a = sj.at("checks")[0];
    CHECK(a.at("max_modulus").get<double>() >= 0.249);
    CHECK(a.at("max_modulus").get<double>() <= 0.25 + 1e-12);

    const auto kt = run_sampling_suite(ClassTag::convex_sym, DeterminantKind::toeplitz, 100000, 42);
    CHECK(kt.passed());
    const double m = kt.to_json().at("checks")[0].at("max_modulus").get<double>();
    CHECK(m >= 143.0 / 2304 - 1e-15);
    CHECK(m <= 145.0 / 2304 + 1e-12);

    // the first element of every stream is the w = z^2 corner
    const auto one = run_sampling_suite(ClassTag::starlike_sym, DeterminantKind::toeplitz, 1, 3);
    const auto oj = one.to_json();
    const auto& o = oj.at("checks")[0];
    CHECK(o.at("max_modulus").get<double>() == doctest::Approx(0.25));
    CHECK(one.to_json().at("sampler").at("partitions") == 1);

    CHECK_THROWS_AS(run_sampling_suite(ClassTag::starlike_sym, DeterminantKind::hankel, 0, 1),
                    ContractViolation);
}

TEST_CASE("sampling reports are reproducible")
{
    const auto a = run_sampling_suite(ClassTag::convex_sym, DeterminantKind::hankel, 50000, 9);
    const auto b = run_sampling_suite(ClassTag::convex_sym, DeterminantKind::hankel, 50000, 9);
    CHECK(dump_report(without_timestamp(a.to_json())) == dump_report(without_timestamp(b.to_json())));
    const auto s = a.to_json().at("sampler");
    CHECK(s.at("generator") == "mt19937_64");
    CHECK(s.at("seed") == 9);
    CHECK(s.at("count") == 50000);
}

TEST_CASE("maximization suite")
{
    const auto report = run_maximization_suite(1e-9, 401);
    CHECK(report.passed());
    const auto j = report.to_json();
    const std::pair<const char*, const char*> bounds[] = {
        {"M", "1/4"}, {"N", "1/36"}, {"P", "5/16"}, {"Q", "145/2304"}};
    for (const auto& [tag, bound] : bounds)
    {
        CHECK(check_named(j, tag).at("bound") == bound);
    }
    const auto& m = check_named(j, "M");
    bool found = false;
    for (const auto& seg : m.at("certificate"))
    {
        if (seg.at("segment") == "y=0")
        {
            CHECK(std::abs(seg.at("max").get<double>() - 2.437828) <= 1e-5);
            found = true;
        }
    }
    CHECK(found);
    CHECK(check_named(j, "P").at("argmax") == json::array({1.0, 0.0}));
}

TEST_CASE("serialization")
{
    CHECK(format_rational(Rational(3, 16)) == "3/16");
    CHECK(format_rational(Rational(-2)) == "-2/1");
    CHECK(parse_rational("145/2304") == Rational(145, 2304));
    const json doc{{"zeta", 1}, {"alpha", {{"b", 2}, {"a", 1}}}};
    const std::string text = dump_report(doc);
    CHECK(text.find("\"alpha\"") < text.find("\"zeta\""));
    CHECK(text.find("\"a\"") < text.find("\"b\""));
    CHECK(text.back() == '\n');
    const auto ts = utc_timestamp();
    CHECK(ts.size() == 20);
    CHECK(ts.back() == 'Z');
}
