#include "invlog/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace invlog
{

namespace
{

void require_in_disk(const Complex& g, const char* name)
{
    if (std::norm(g) > 1.0 + kRegionTolerance)
    {
        throw DomainError(std::string("schur_to_coeffs: |") + name + "| > 1");
    }
}

} // namespace

SchwarzCoeffs schur_to_coeffs(const SchurParams& p)
{
    require_in_disk(p.g0, "g0");
    require_in_disk(p.g1, "g1");
    require_in_disk(p.g2, "g2");
    const double s0 = 1.0 - std::norm(p.g0);
    const double s1 = 1.0 - std::norm(p.g1);
    return {
        p.g0,
        s0 * p.g1,
        s0 * (s1 * p.g2 - std::conj(p.g0) * p.g1 * p.g1),
    };
}

bool in_coefficient_region(const SchwarzCoeffs& c, double tol)
{
    const double x = std::abs(c.c1);
    const double y = std::abs(c.c2);
    const double z = std::abs(c.c3);
    return x <= 1.0 + tol && y <= 1.0 - x * x + tol &&
           z <= 1.0 - x * x - y * y / (1.0 + x) + tol;
}

std::array<SchurParams, SchwarzSampler::kCornerCount> SchwarzSampler::corner_params()
{
    const Complex zero{0.0, 0.0};
    const Complex one{1.0, 0.0};
    const Complex i{0.0, 1.0};
    return {{
        {zero, one, zero},  // w = z^2
        {one, zero, zero},  // w = z
        {zero, zero, one},  // w = z^3
        {i, zero, zero},    // w = i z
    }};
}

double SchwarzSampler::uniform01()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex SchwarzSampler::uniform_disk()
{
    const double r = std::sqrt(uniform01());
    const double theta = 2.0 * std::numbers::pi * uniform01();
    return {r * std::cos(theta), r * std::sin(theta)};
}

SchwarzSample SchwarzSampler::next()
{
    SchurParams p;
    if (position_ < kCornerCount)
    {
        p = corner_params()[static_cast<std::size_t>(position_)];
    }
    else
    {
        p.g0 = uniform_disk();
        p.g1 = uniform_disk();
        p.g2 = uniform_disk();
    }
    ++position_;
    return {p, schur_to_coeffs(p)};
}

std::vector<SchwarzSample> sample(std::uint64_t seed, int count)
{
    if (count < 1)
    {
        throw ContractViolation("sample: count must be >= 1");
    }
    SchwarzSampler sampler(seed);
    std::vector<SchwarzSample> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
    {
        out.push_back(sampler.next());
    }
    return out;
}

} // namespace invlog
