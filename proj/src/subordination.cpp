#include "invlog/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

namespace invlog
{

Complex class_quotient(const AnalyticFunction& f, ClassTag tag, Complex z)
{
    if (tag == ClassTag::starlike_sym)
    {
        return z * f.first(z) / (f.value(z) - f.value(-z));
    }
    // (z f')' = f' + z f'' and (f(z) - f(-z))' = f'(z) + f'(-z)
    return (f.first(z) + z * f.second(z)) / (f.first(z) + f.first(-z));
}

MembershipResult check_membership(const AnalyticFunction& f, ClassTag tag,
                                  const MembershipGrid& grid)
{
    struct Partial
    {
        double min_re = std::numeric_limits<double>::infinity();
        Complex argmin{0.0, 0.0};
        int non_finite = 0;
    };

    const unsigned workers =
        std::clamp(std::thread::hardware_concurrency(), 1U, static_cast<unsigned>(grid.radii));
    std::vector<Partial> partials(workers);
    auto scan = [&](unsigned w) {
        auto& p = partials[w];
        for (int i = 1 + static_cast<int>(w); i <= grid.radii; i += static_cast<int>(workers))
        {
            const double r = grid.max_radius * i / grid.radii;
            for (int j = 0; j < grid.angles; ++j)
            {
                const double theta = 2.0 * std::numbers::pi * j / grid.angles;
                const Complex z = std::polar(r, theta);
                const Complex q = class_quotient(f, tag, z);
                if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
                {
                    ++p.non_finite;
                    continue;
                }
                if (q.real() < p.min_re)
                {
                    p.min_re = q.real();
                    p.argmin = z;
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w)
    {
        pool.emplace_back(scan, w);
    }
    scan(0);
    pool.clear();

    MembershipResult out;
    out.min_real_part = std::numeric_limits<double>::infinity();
    for (const auto& p : partials)
    {
        out.non_finite_points += p.non_finite;
        // ties resolved by partition index, which is fixed for a given grid
        if (p.min_re < out.min_real_part)
        {
            out.min_real_part = p.min_re;
            out.argmin = p.argmin;
        }
    }
    out.member = out.non_finite_points == 0 && out.min_real_part > -grid.tolerance;
    return out;
}

} // namespace invlog
