#include "invlog/report.hpp"

#include <chrono>
#include <ctime>

namespace invlog
{

bool VerificationReport::passed() const
{
    for (const auto& c : checks)
    {
        if (!c.pass)
        {
            return false;
        }
    }
    return true;
}

nlohmann::json VerificationReport::to_json() const
{
    nlohmann::json j;
    j["suite"] = suite;
    j["artifact_version"] = version;
    j["timestamp"] = timestamp;
    j["passed"] = passed();
    j["tolerances"] = tolerances;
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
    {
        nlohmann::json rec = c.details;
        rec["name"] = c.name;
        rec["pass"] = c.pass;
        arr.push_back(std::move(rec));
    }
    if (sampler)
    {
        j["sampler"] = {
            {"generator", sampler->generator},
            {"seed", sampler->seed},
            {"count", sampler->count},
            {"partitions", sampler->partitions},
        };
    }
    return j;
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string dump_report(const nlohmann::json& doc)
{
    // nlohmann::json objects are std::map backed, so keys come out sorted
    return doc.dump(2) + "\n";
}

} // namespace invlog
