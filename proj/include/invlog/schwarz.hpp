///
/// \file schwarz.hpp
///
/// Schwarz-function coefficient triples (c1, c2, c3) built from Schur
/// parameters, the feasibility bounds
///
///   |c1| <= 1,  |c2| <= 1 - |c1|^2,  |c3| <= 1 - |c1|^2 - |c2|^2/(1 + |c1|),
///
/// and a deterministic seeded sampler.
///

#ifndef INVLOG_SCHWARZ_HPP
#define INVLOG_SCHWARZ_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "invlog/scalar.hpp"

namespace invlog
{

inline constexpr double kRegionTolerance = 1e-12;

/// Leading Schur parameters of w(z)/z; each lies in the closed unit disk.
struct SchurParams
{
    Complex g0;
    Complex g1;
    Complex g2;
};

struct SchwarzCoeffs
{
    Complex c1;
    Complex c2;
    Complex c3;
};

/// First three Taylor coefficients of w(z) = z g(z), where g is the
/// bounded function with Schur parameters (g0, g1, g2, 0, 0, ...):
///
///   c1 = g0
///   c2 = (1 - |g0|^2) g1
///   c3 = (1 - |g0|^2) ((1 - |g1|^2) g2 - conj(g0) g1^2)
///
/// Throws DomainError if any parameter lies outside the closed disk.
SchwarzCoeffs schur_to_coeffs(const SchurParams& p);

/// |c1| <= 1, |c2| <= 1 - |c1|^2, |c3| <= 1 - |c1|^2 - |c2|^2/(1 + |c1|), each up to tol.
bool in_coefficient_region(const SchwarzCoeffs& c, double tol = kRegionTolerance);

/// Parameters and the coefficients they generate.
struct SchwarzSample
{
    SchurParams params;
    SchwarzCoeffs coeffs;
};

/// Deterministic stream of Schwarz triples.
///
/// The first kCornerCount elements are fixed corner cases, in order
/// (0,1,0), (1,0,0), (0,0,1), (i,0,0); the rest come from Schur parameters
/// drawn uniformly on the unit disk (area-correct polar draw) from a
/// std::mt19937_64 seeded with `seed`.  Uniform doubles are formed from the
/// top 53 bits of each draw instead of std::uniform_real_distribution,
/// whose output is implementation-defined.
class SchwarzSampler
{
public:
    static constexpr const char* kGeneratorName = "mt19937_64";
    static constexpr int kCornerCount = 4;

    explicit SchwarzSampler(std::uint64_t seed) : engine_(seed) {}

    SchwarzSample next();

    static std::array<SchurParams, kCornerCount> corner_params();

private:
    double uniform01();
    Complex uniform_disk();

    std::mt19937_64 engine_;
    int position_ = 0;
};

/// The first `count` elements of SchwarzSampler(seed).
std::vector<SchwarzSample> sample(std::uint64_t seed, int count);

} // namespace invlog

#endif
