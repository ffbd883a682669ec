#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invlog/catalog.hpp"
#include "invlog/suites.hpp"

namespace py = pybind11;
using namespace invlog;

namespace
{

ClassTag parse_class(const std::string& s)
{
    if (s == "starlike-sym") return ClassTag::starlike_sym;
    if (s == "convex-sym") return ClassTag::convex_sym;
    throw py::value_error("class must be 'starlike-sym' or 'convex-sym'");
}

DeterminantKind parse_kind(const std::string& s)
{
    if (s == "hankel") return DeterminantKind::hankel;
    if (s == "toeplitz") return DeterminantKind::toeplitz;
    throw py::value_error("functional must be 'hankel' or 'toeplitz'");
}

ObjectiveTag parse_tag(const std::string& s)
{
    if (s == "M") return ObjectiveTag::M;
    if (s == "N") return ObjectiveTag::N;
    if (s == "P") return ObjectiveTag::P;
    if (s == "Q") return ObjectiveTag::Q;
    throw py::value_error("objective must be one of M, N, P, Q");
}

Segment parse_segment(const std::string& s)
{
    if (s == "y=0") return Segment::Y0;
    if (s == "x=0") return Segment::X0;
    if (s == "y=1-x^2") return Segment::PARABOLA;
    throw py::value_error("segment must be 'y=0', 'x=0' or 'y=1-x^2'");
}

std::vector<Rational> parse_all(const std::vector<std::string>& v)
{
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v)
    {
        out.push_back(parse_rational(s));
    }
    return out;
}

std::vector<std::string> format_all(const std::vector<Rational>& v)
{
    std::vector<std::string> out;
    for (const auto& x : v)
    {
        out.push_back(format_rational(x));
    }
    return out;
}

/// z + a2 z^2 + ... from [a2, a3, ...], padded to at least the minimum order.
TruncatedSeries<Rational> normalized_series(const std::vector<std::string>& tail)
{
    std::vector<Rational> c{Rational(0), Rational(1)};
    for (const auto& x : parse_all(tail))
    {
        c.push_back(x);
    }
    const int order = std::max(static_cast<int>(c.size()) - 1, kMinimumOrder);
    return TruncatedSeries<Rational>(order, std::move(c));
}

std::string series_coefficients(const std::string& name, int upto)
{
    // strings keep the exact field representation for Q(i) and Q(sqrt d)
    return std::visit(
        [&](const auto& s) {
            nlohmann::json j = nlohmann::json::array();
            for (int n = 1; n <= std::min(upto, s.order()); ++n)
            {
                j.push_back(format_scalar(s[n]));
            }
            return j.dump();
        },
        named_series(name, std::max(upto, kMinimumOrder)));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact and sampled checks of inverse logarithmic coefficient determinants";
    m.attr("__version__") = kArtifactVersion;

    py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

    m.def("inverse_coefficients",
          [](const std::vector<std::string>& tail) {
              const auto inv = compositional_inverse(normalized_series(tail));
              std::vector<Rational> out;
              for (std::size_t n = 2; n < tail.size() + 2; ++n)
              {
                  out.push_back(inv[static_cast<int>(n)]);
              }
              return format_all(out);
          },
          py::arg("tail"), "A_2.. of the inverse from a_2.. given as 'p/q' strings");

    m.def("log_coefficients",
          [](const std::vector<std::string>& tail, bool inverse) {
              // one extra order so the last requested index is exact
              auto padded = tail;
              padded.push_back("0");
              const auto g = gamma_of_series(normalized_series(padded),
                                             inverse ? LogKind::inverse : LogKind::direct);
              auto values = g.values();
              values.resize(tail.size());
              return format_all(values);
          },
          py::arg("tail"), py::arg("inverse") = true,
          "gamma_1.. (or Gamma_1.. when inverse) from a_2.. as 'p/q' strings");

    m.def("second_determinant",
          [](const std::vector<std::string>& tail, const std::string& kind) {
              if (tail.size() < 3)
              {
                  throw py::value_error("need a2, a3, a4");
              }
              return format_rational(
                  second_determinant_pipeline(normalized_series(tail), parse_kind(kind)).value);
          },
          py::arg("tail"), py::arg("functional"));

    m.def("determinant_in_schwarz",
          [](Complex c1, Complex c2, Complex c3, const std::string& cls, const std::string& kind) {
              return determinant_in_schwarz(c1, c2, c3, parse_class(cls), parse_kind(kind));
          },
          py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("cls"), py::arg("functional"));

    m.def("schur_to_coeffs",
          [](Complex g0, Complex g1, Complex g2) {
              const auto c = schur_to_coeffs({g0, g1, g2});
              return std::make_tuple(c.c1, c.c2, c.c3);
          },
          py::arg("g0"), py::arg("g1"), py::arg("g2"));

    m.def("sample",
          [](std::uint64_t seed, int count) {
              std::vector<std::tuple<Complex, Complex, Complex>> out;
              for (const auto& s : sample(seed, count))
              {
                  out.emplace_back(s.coeffs.c1, s.coeffs.c2, s.coeffs.c3);
              }
              return out;
          },
          py::arg("seed"), py::arg("count"), "Schwarz triples (c1, c2, c3), corners first");

    m.def("theorem_bound",
          [](const std::string& cls, const std::string& kind) {
              return format_rational(theorem_bound(parse_class(cls), parse_kind(kind)));
          },
          py::arg("cls"), py::arg("functional"));

    m.def("boundary_restrict",
          [](const std::string& tag, const std::string& segment) {
              return format_all(
                  boundary_restrict(ObjectiveFunction::make(parse_tag(tag)), parse_segment(segment))
                      .coefficients());
          },
          py::arg("objective"), py::arg("segment"), "coefficients, lowest power first");

    m.def("maximize_univariate",
          [](const std::vector<std::string>& coeffs, double lo, double hi, double tol) {
              const auto r = maximize_univariate(Polynomial(parse_all(coeffs)), lo, hi, tol);
              return py::dict(py::arg("value") = r.value, py::arg("argmax") = r.argmax,
                              py::arg("upper_bound") = r.upper_bound);
          },
          py::arg("coeffs"), py::arg("lo"), py::arg("hi"), py::arg("tol") = kDefaultTolerance);

    m.def("series_coefficients", &series_coefficients, py::arg("name"), py::arg("upto"));
    m.def("function_names", &function_names);

    // suites return the JSON report text; the Python layer parses it
    m.def("run_extremal",
          [](bool exact) {
              py::gil_scoped_release release;
              return dump_report(
                  run_extremal_suite(exact ? ScalarMode::exact : ScalarMode::floating).to_json());
          },
          py::arg("exact") = true);
    m.def("run_sampling",
          [](const std::string& cls, const std::string& kind, std::int64_t count,
             std::uint64_t seed) {
              const auto c = parse_class(cls);
              const auto k = parse_kind(kind);
              py::gil_scoped_release release;
              return dump_report(run_sampling_suite(c, k, count, seed).to_json());
          },
          py::arg("cls"), py::arg("functional"), py::arg("count"), py::arg("seed"));
    m.def("run_maximization",
          [](double tol, int grid) {
              py::gil_scoped_release release;
              return dump_report(run_maximization_suite(tol, grid).to_json());
          },
          py::arg("tol") = kDefaultTolerance, py::arg("grid") = kDefaultGrid);
}
