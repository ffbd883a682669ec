///
/// \file catalog.hpp
///
/// Named test functions: the extremal and example functions h1..h8 for the
/// two symmetric-point classes, the Koebe function, and the rotated h8 that
/// attains the K_S Toeplitz bound through a genuine Schwarz function.
///

#ifndef INVLOG_CATALOG_HPP
#define INVLOG_CATALOG_HPP

#include <string>
#include <variant>
#include <vector>

#include "invlog/subordination.hpp"

namespace invlog
{

/// Exact series in whichever field the function's coefficients live in.
using ExactSeries = std::variant<TruncatedSeries<Rational>, TruncatedSeries<GaussianRational>,
                                 TruncatedSeries<QuadraticRational>>;

TruncatedSeries<Complex> to_float(const ExactSeries& s);

enum class Provenance
{
    /// the computation reproduces the published claim
    published_consistent,
    /// it does not; reported, never asserted
    published_discrepant,
    /// computed here, no published counterpart
    derived
};

const char* to_string(Provenance p);

struct CatalogEntry
{
    std::string name;
    std::string formula;
    ClassTag cls;
    DeterminantKind functional;
    /// Published value of |H_{2,1}| or |T_{2,1}| ("" when none).
    std::string published_modulus;
    Provenance value_provenance;
    /// Sharp bound of the theorem for (cls, functional).
    Rational bound;
    /// Whether the class membership claim survives the numeric grid check.
    Provenance membership_provenance;
    AnalyticFunction analytic;
    /// Leading coefficients (c1, c2, c3) of a Schwarz function generating
    /// the entry within its class; empty when there is none.
    std::vector<GaussianRational> schwarz;
};

/// h1..h8 followed by the rotated-h8 witness.
const std::vector<CatalogEntry>& extremal_catalog();

/// Names accepted by named_series(): h1..h8, h8rot, koebe.
std::vector<std::string> function_names();

/// Exact Taylor series of a named function to the given order.  Throws
/// ContractViolation for unknown names.
ExactSeries named_series(const std::string& name, int order = kDefaultOrder);

/// The sharp bound for a (class, functional) pair: 1/4, 1/36, 5/16, 145/2304.
Rational theorem_bound(ClassTag cls, DeterminantKind kind);

} // namespace invlog

#endif
