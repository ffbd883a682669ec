///
/// \file log_coeffs.hpp
///
/// Logarithmic coefficients gamma_n of f and Gamma_n of its inverse
/// F = f^{-1}, defined by log(f(z)/z) = 2 sum gamma_n z^n and
/// log(F(w)/w) = 2 sum Gamma_n w^n.
///
/// Two routes are public and meant to be compared against each other: the
/// closed forms in a_2..a_5, and the full series pipeline
/// (compositional_inverse -> log_div_z -> halve).
///

#ifndef INVLOG_LOG_COEFFS_HPP
#define INVLOG_LOG_COEFFS_HPP

#include <array>
#include <optional>
#include <vector>

#include "invlog/series.hpp"

namespace invlog
{

/// Taylor coefficients a_2..a_5 of a normalized f; a_5 may be absent.
template <Field F>
struct CoeffTuple
{
    F a2{0};
    F a3{0};
    F a4{0};
    std::optional<F> a5;

    static CoeffTuple from_series(const TruncatedSeries<F>& f)
    {
        return {f[2], f[3], f[4], f.order() >= 5 ? std::optional<F>(f[5]) : std::nullopt};
    }
};

enum class LogKind
{
    direct,
    inverse
};

/// gamma_1..gamma_N or Gamma_1..Gamma_N.  Indexing is 1-based; there is no
/// zeroth coefficient.
template <Field F>
class LogCoeffVector
{
public:
    LogCoeffVector(std::vector<F> values, LogKind kind)
        : values_(std::move(values)), kind_(kind)
    {
    }

    /// Coefficient with index n >= 1.
    const F& operator[](int n) const
    {
        if (n < 1 || n > size())
        {
            throw ContractViolation("LogCoeffVector: index " + std::to_string(n) +
                                    " outside 1.." + std::to_string(size()));
        }
        return values_[static_cast<std::size_t>(n - 1)];
    }

    int size() const { return static_cast<int>(values_.size()); }
    LogKind kind() const { return kind_; }
    const std::vector<F>& values() const { return values_; }

private:
    std::vector<F> values_;
    LogKind kind_;
};

/// A_2..A_5 of f^{-1} from a_2..a_5.
template <Field F>
std::array<F, 4> inverse_coeffs_closed(const CoeffTuple<F>& c)
{
    if (!c.a5)
    {
        throw ContractViolation("inverse_coeffs_closed: a5 is required");
    }
    const F& a2 = c.a2;
    const F& a3 = c.a3;
    const F& a4 = c.a4;
    const F& a5 = *c.a5;
    const F a2sq = a2 * a2;
    return {
        -a2,
        -a3 + F(2) * a2sq,
        -a4 + F(5) * a2 * a3 - F(5) * a2sq * a2,
        -a5 + F(6) * a4 * a2 - F(21) * a3 * a2sq + F(3) * a3 * a3 + F(14) * a2sq * a2sq,
    };
}

/// Gamma_1..Gamma_3 (and Gamma_4 when a5 is present) from the closed forms.
template <Field F>
LogCoeffVector<F> gamma_inverse_closed(const CoeffTuple<F>& c)
{
    const F half = F(1) / F(2);
    const F& a2 = c.a2;
    const F& a3 = c.a3;
    const F& a4 = c.a4;
    const F a2sq = a2 * a2;
    std::vector<F> g{
        -half * a2,
        -half * (a3 - F(3) / F(2) * a2sq),
        -half * (a4 - F(4) * a2 * a3 + F(10) / F(3) * a2sq * a2),
    };
    if (c.a5)
    {
        g.push_back(-half * (*c.a5 - F(5) * a4 * a2 + F(15) * a3 * a2sq -
                             F(5) / F(2) * a3 * a3 - F(35) / F(4) * a2sq * a2sq));
    }
    return LogCoeffVector<F>(std::move(g), LogKind::inverse);
}

/// gamma_n (direct) or Gamma_n (inverse) through the series pipeline.
/// Returns indices 1..N-1 for a series of order N.
template <Field F>
LogCoeffVector<F> gamma_of_series(const TruncatedSeries<F>& f, LogKind kind)
{
    const auto logged = log_div_z(kind == LogKind::inverse ? compositional_inverse(f) : f);
    const F half = F(1) / F(2);
    std::vector<F> g;
    g.reserve(static_cast<std::size_t>(f.order()) - 1);
    for (int n = 1; n < f.order(); ++n)
    {
        g.push_back(logged[n] * half);
    }
    return LogCoeffVector<F>(std::move(g), kind);
}

} // namespace invlog

#endif
