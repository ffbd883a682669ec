///
/// \file suites.hpp
///
/// Batch verification suites behind the command-line tool.
///

#ifndef INVLOG_SUITES_HPP
#define INVLOG_SUITES_HPP

#include <cstdint>

#include "invlog/catalog.hpp"
#include "invlog/omega.hpp"
#include "invlog/report.hpp"
#include "invlog/schwarz.hpp"

namespace invlog
{

enum class ScalarMode
{
    exact,
    floating
};

inline constexpr double kFloatTolerance = 1e-12;
inline constexpr double kSamplingSlack = 1e-12;
inline constexpr int kSamplingPartitions = 8;

/// Every catalog function through both routes (closed forms and series
/// pipeline).  Published constants that the computation does not
/// reproduce are reported with provenance "published-discrepant" and do not
/// fail the suite; route disagreement or a bound violation does.
VerificationReport run_extremal_suite(ScalarMode mode = ScalarMode::exact,
                                      int order = kDefaultOrder);

/// Largest |determinant| over `count` sampled Schwarz triples.
///
/// The count is split over min(count, kSamplingPartitions) partitions;
/// partition k draws from SchwarzSampler(seed + k).  The partition layout
/// does not depend on the number of threads, so the report is reproducible.
VerificationReport run_sampling_suite(ClassTag cls, DeterminantKind functional,
                                      std::int64_t count, std::uint64_t seed);

/// Certified maxima of M, N, P, Q over Omega and the resulting bounds.
VerificationReport run_maximization_suite(double tol = kDefaultTolerance,
                                          int grid = kDefaultGrid);

} // namespace invlog

#endif
