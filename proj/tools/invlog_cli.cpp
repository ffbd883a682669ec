// Command-line front end: runs the verification suites and writes JSON reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "invlog/catalog.hpp"
#include "invlog/errors.hpp"
#include "invlog/log_coeffs.hpp"
#include "invlog/suites.hpp"

namespace
{

using invlog::ClassTag;
using invlog::DeterminantKind;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options
{
    std::string mode = "exact";
    std::string json_path;
    int grid = invlog::kDefaultGrid;

    std::string cls = "starlike-sym";
    std::string functional = "hankel";
    std::int64_t count = 100000;
    std::uint64_t seed = 42;

    double tol = invlog::kDefaultTolerance;

    std::string function = "koebe";
    int upto = 5;

    std::string out;
};

const std::map<std::string, ClassTag> kClasses{{"starlike-sym", ClassTag::starlike_sym},
                                               {"convex-sym", ClassTag::convex_sym}};
const std::map<std::string, DeterminantKind> kFunctionals{{"hankel", DeterminantKind::hankel},
                                                          {"toeplitz", DeterminantKind::toeplitz}};

invlog::ScalarMode scalar_mode(const Options& o)
{
    return o.mode == "float" ? invlog::ScalarMode::floating : invlog::ScalarMode::exact;
}

void emit(const json& doc, const std::string& path)
{
    const std::string text = invlog::dump_report(doc);
    if (path.empty() || path == "-")
    {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
    {
        throw std::runtime_error("cannot write " + path);
    }
    out << text;
}

template <typename F>
json values_json(const std::vector<F>& values)
{
    json arr = json::array();
    for (const auto& v : values)
    {
        arr.push_back(invlog::scalar_json(v));
    }
    return arr;
}

template <typename F>
json coeffs_json(const invlog::TruncatedSeries<F>& f, int upto)
{
    const auto inverse = invlog::compositional_inverse(f);
    std::vector<F> a;
    std::vector<F> big_a;
    for (int n = 1; n <= upto; ++n)
    {
        a.push_back(f[n]);
        big_a.push_back(inverse[n]);
    }
    auto gamma = invlog::gamma_of_series(f, invlog::LogKind::direct).values();
    auto big_gamma = invlog::gamma_of_series(f, invlog::LogKind::inverse).values();
    gamma.resize(static_cast<std::size_t>(upto - 1));
    big_gamma.resize(static_cast<std::size_t>(upto - 1));
    return {{"a", values_json(a)},
            {"inverse", values_json(big_a)},
            {"gamma", values_json(gamma)},
            {"inverse_gamma", values_json(big_gamma)}};
}

int run_coeffs(const Options& o)
{
    if (o.upto < 2)
    {
        throw invlog::ContractViolation("--upto must be >= 2");
    }
    // one extra order so gamma_(upto-1) is exact after the top-coefficient drop
    const int order = std::max(o.upto + 1, invlog::kMinimumOrder);
    const auto series = invlog::named_series(o.function, order);
    json doc;
    doc["suite"] = "coeffs";
    doc["version"] = invlog::kArtifactVersion;
    doc["timestamp"] = invlog::utc_timestamp();
    doc["function"] = o.function;
    doc["upto"] = o.upto;
    doc["mode"] = o.mode;
    if (scalar_mode(o) == invlog::ScalarMode::exact)
    {
        doc["coefficients"] =
            std::visit([&](const auto& s) { return coeffs_json(s, o.upto); }, series);
    }
    else
    {
        doc["coefficients"] = coeffs_json(invlog::to_float(series), o.upto);
    }
    emit(doc, o.json_path);
    return kExitPass;
}

int finish(const invlog::VerificationReport& r, const std::string& path)
{
    emit(r.to_json(), path);
    return r.passed() ? kExitPass : kExitFail;
}

int run_all(const Options& o)
{
    std::vector<invlog::VerificationReport> reports;
    reports.push_back(invlog::run_extremal_suite(scalar_mode(o)));
    reports.push_back(invlog::run_maximization_suite(o.tol, o.grid));
    for (const auto& [cname, cls] : kClasses)
    {
        for (const auto& [fname, functional] : kFunctionals)
        {
            reports.push_back(invlog::run_sampling_suite(cls, functional, o.count, o.seed));
        }
    }
    bool pass = true;
    json doc;
    doc["suite"] = "all";
    doc["version"] = invlog::kArtifactVersion;
    doc["timestamp"] = invlog::utc_timestamp();
    doc["reports"] = json::array();
    for (const auto& r : reports)
    {
        pass = pass && r.passed();
        doc["reports"].push_back(r.to_json());
    }
    doc["pass"] = pass;
    emit(doc, o.out.empty() ? o.json_path : o.out);
    return pass ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Exact and sampled checks of inverse logarithmic coefficient determinants"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--mode", o.mode, "scalar mode")->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--json", o.json_path, "report path (default stdout)");
    app.add_option("--grid", o.grid, "interior scan density")->check(CLI::Range(2, 100000));

    auto* extremal = app.add_subcommand("extremal", "extremal catalog h1..h8 through both routes");

    auto* sample = app.add_subcommand("sample", "sampled Schwarz coefficients against a bound");
    sample->add_option("--class", o.cls)->check(CLI::IsMember({"starlike-sym", "convex-sym"}));
    sample->add_option("--functional", o.functional)->check(CLI::IsMember({"hankel", "toeplitz"}));
    sample->add_option("--count", o.count)->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed);

    auto* maximize = app.add_subcommand("maximize", "certified maxima of M, N, P, Q over Omega");
    maximize->add_option("--tol", o.tol)->check(CLI::Range(1e-12, 1.0));

    auto* coeffs = app.add_subcommand("coeffs", "coefficients and logarithmic coefficients");
    coeffs->add_option("--function", o.function)
        ->check(CLI::IsMember(invlog::function_names()));
    coeffs->add_option("--upto", o.upto)->check(CLI::Range(2, 64));

    auto* all = app.add_subcommand("all", "every suite in one document");
    all->add_option("--out", o.out, "report path");
    all->add_option("--count", o.count, "samples per (class, functional) pair")
        ->check(CLI::PositiveNumber);
    all->add_option("--seed", o.seed);
    all->add_option("--tol", o.tol)->check(CLI::Range(1e-12, 1.0));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try
    {
        if (*extremal)
        {
            return finish(invlog::run_extremal_suite(scalar_mode(o)), o.json_path);
        }
        if (*sample)
        {
            return finish(invlog::run_sampling_suite(kClasses.at(o.cls),
                                                     kFunctionals.at(o.functional), o.count,
                                                     o.seed),
                          o.json_path);
        }
        if (*maximize)
        {
            return finish(invlog::run_maximization_suite(o.tol, o.grid), o.json_path);
        }
        if (*coeffs)
        {
            return run_coeffs(o);
        }
        if (*all)
        {
            return run_all(o);
        }
    }
    catch (const invlog::ContractViolation& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
