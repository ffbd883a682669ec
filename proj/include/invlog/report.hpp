///
/// \file report.hpp
///
/// Machine-readable verification reports.  Serialized as one JSON document
/// with sorted keys; rationals are "p/q" strings, complex numbers [re, im].
///

#ifndef INVLOG_REPORT_HPP
#define INVLOG_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "invlog/scalar.hpp"

namespace invlog
{

inline constexpr const char* kArtifactVersion = "0.1.0";

struct SamplerMetadata
{
    std::string generator;
    std::uint64_t seed = 0;
    std::int64_t count = 0;
    int partitions = 1;
};

struct CheckRecord
{
    std::string name;
    bool pass = false;
    /// Everything else about the check (inputs, values, bound, ...).
    nlohmann::json details = nlohmann::json::object();
};

struct VerificationReport
{
    std::string suite;
    std::string version = kArtifactVersion;
    std::string timestamp;
    std::vector<CheckRecord> checks;
    std::optional<SamplerMetadata> sampler;
    nlohmann::json tolerances = nlohmann::json::object();

    bool passed() const;
    nlohmann::json to_json() const;
};

/// Current UTC time, ISO 8601 with second resolution.
std::string utc_timestamp();

/// {"exact": "p/q" or field string, "value": [re, im]} for any scalar.
template <typename F>
nlohmann::json scalar_json(const F& x)
{
    const Complex c = to_complex(x);
    nlohmann::json j;
    j["value"] = {c.real(), c.imag()};
    if constexpr (!std::is_same_v<F, Complex>)
    {
        j["exact"] = format_scalar(x);
    }
    return j;
}

/// Serializes with sorted keys and two-space indentation, newline-terminated.
std::string dump_report(const nlohmann::json& doc);

} // namespace invlog

#endif
