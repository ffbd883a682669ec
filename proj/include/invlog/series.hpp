///
/// \file series.hpp
///
/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N over a scalar
/// field.  Values are immutable; every operation returns a new series and
/// never reads or writes powers above the truncation order N.
///

#ifndef INVLOG_SERIES_HPP
#define INVLOG_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "invlog/errors.hpp"
#include "invlog/scalar.hpp"

namespace invlog
{

inline constexpr int kDefaultOrder = 8;
inline constexpr int kMinimumOrder = 5;

template <Field F>
class TruncatedSeries
{
public:
    using scalar_type = F;

    /// Zero series of the given order.
    explicit TruncatedSeries(int order = kDefaultOrder)
        : coeffs_(checked_size(order), F(0))
    {
    }

    /// Series with the given leading coefficients (powers 0, 1, ...),
    /// zero-padded up to `order`.
    TruncatedSeries(int order, std::vector<F> leading)
        : coeffs_(std::move(leading))
    {
        const auto n = checked_size(order);
        if (coeffs_.size() > n)
        {
            throw ContractViolation("TruncatedSeries: " + std::to_string(coeffs_.size()) +
                                    " coefficients exceed order " + std::to_string(order));
        }
        coeffs_.resize(n, F(0));
        for (const auto& c : coeffs_)
        {
            if (!is_finite_scalar(c))
            {
                throw DomainError("TruncatedSeries: non-finite coefficient");
            }
        }
    }

    TruncatedSeries(int order, std::initializer_list<F> leading)
        : TruncatedSeries(order, std::vector<F>(leading))
    {
    }

    /// The series z.
    static TruncatedSeries identity(int order = kDefaultOrder)
    {
        return TruncatedSeries(order, {F(0), F(1)});
    }

    /// The constant series c.
    static TruncatedSeries constant(int order, F c)
    {
        return TruncatedSeries(order, {std::move(c)});
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^k, 0 <= k <= order().
    const F& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<F>& coefficients() const { return coeffs_; }

    /// f(0) = 0 and f'(0) = 1.
    bool is_normalized() const { return coeffs_[0] == F(0) && coeffs_[1] == F(1); }

    friend bool operator==(const TruncatedSeries& s, const TruncatedSeries& t)
    {
        return s.coeffs_ == t.coeffs_;
    }

private:
    static std::size_t checked_size(int order)
    {
        if (order < kMinimumOrder)
        {
            throw ContractViolation("TruncatedSeries: order must be >= " +
                                    std::to_string(kMinimumOrder) + ", got " +
                                    std::to_string(order));
        }
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<F> coeffs_;
};

namespace detail
{

template <Field F>
void require_same_order(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t,
                        const char* op)
{
    if (s.order() != t.order())
    {
        throw ContractViolation(std::string(op) + ": order mismatch (" +
                                std::to_string(s.order()) + " vs " + std::to_string(t.order()) +
                                ")");
    }
}

template <Field F>
void require_normalized(const TruncatedSeries<F>& f, const char* op)
{
    if (!f.is_normalized())
    {
        throw DomainError(std::string(op) + ": series must satisfy f(0) = 0, f'(0) = 1");
    }
}

} // namespace detail

template <Field F>
TruncatedSeries<F> add(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t)
{
    detail::require_same_order(s, t, "add");
    std::vector<F> out(s.coefficients());
    for (int k = 0; k <= s.order(); ++k)
    {
        out[k] = out[k] + t[k];
    }
    return TruncatedSeries<F>(s.order(), std::move(out));
}

template <Field F>
TruncatedSeries<F> subtract(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t)
{
    detail::require_same_order(s, t, "subtract");
    std::vector<F> out(s.coefficients());
    for (int k = 0; k <= s.order(); ++k)
    {
        out[k] = out[k] - t[k];
    }
    return TruncatedSeries<F>(s.order(), std::move(out));
}

template <Field F>
TruncatedSeries<F> scale(const TruncatedSeries<F>& s, const F& c)
{
    std::vector<F> out(s.coefficients());
    for (auto& v : out)
    {
        v = v * c;
    }
    return TruncatedSeries<F>(s.order(), std::move(out));
}

/// Cauchy product truncated at the common order.
template <Field F>
TruncatedSeries<F> mul(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t)
{
    detail::require_same_order(s, t, "mul");
    const int n = s.order();
    std::vector<F> out(static_cast<std::size_t>(n) + 1, F(0));
    for (int i = 0; i <= n; ++i)
    {
        if (s[i] == F(0))
        {
            continue;
        }
        for (int j = 0; i + j <= n; ++j)
        {
            out[i + j] = out[i + j] + s[i] * t[j];
        }
    }
    return TruncatedSeries<F>(n, std::move(out));
}

template <Field F>
TruncatedSeries<F> operator+(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t)
{
    return add(s, t);
}
template <Field F>
TruncatedSeries<F> operator-(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t)
{
    return subtract(s, t);
}
template <Field F>
TruncatedSeries<F> operator*(const TruncatedSeries<F>& s, const TruncatedSeries<F>& t)
{
    return mul(s, t);
}

/// 1/s; requires s(0) != 0.
template <Field F>
TruncatedSeries<F> reciprocal(const TruncatedSeries<F>& s)
{
    if (s[0] == F(0))
    {
        throw DomainError("reciprocal: constant term is zero");
    }
    const int n = s.order();
    std::vector<F> out(static_cast<std::size_t>(n) + 1, F(0));
    const F inv0 = F(1) / s[0];
    out[0] = inv0;
    for (int k = 1; k <= n; ++k)
    {
        F acc(0);
        for (int j = 1; j <= k; ++j)
        {
            acc = acc + s[j] * out[k - j];
        }
        out[k] = -acc * inv0;
    }
    return TruncatedSeries<F>(n, std::move(out));
}

/// s(-z).
template <Field F>
TruncatedSeries<F> reflect(const TruncatedSeries<F>& s)
{
    std::vector<F> out(s.coefficients());
    for (int k = 1; k <= s.order(); k += 2)
    {
        out[k] = -out[k];
    }
    return TruncatedSeries<F>(s.order(), std::move(out));
}

/// outer(inner(z)) by Horner accumulation; inner must vanish at 0.
template <Field F>
TruncatedSeries<F> compose(const TruncatedSeries<F>& outer, const TruncatedSeries<F>& inner)
{
    detail::require_same_order(outer, inner, "compose");
    if (!(inner[0] == F(0)))
    {
        throw DomainError("compose: inner series has a nonzero constant term");
    }
    const int n = outer.order();
    auto acc = TruncatedSeries<F>::constant(n, outer[n]);
    for (int k = n - 1; k >= 0; --k)
    {
        acc = mul(acc, inner) + TruncatedSeries<F>::constant(n, outer[k]);
    }
    return acc;
}

/// Series F with f(F(w)) = w and F(f(z)) = z up to the truncation order.
///
/// Solved power by power: once A_2..A_{n-1} are fixed, the coefficient of
/// w^n in f(F(w)) is A_n + (terms in lower coefficients), so A_n is minus
/// the residual obtained with A_n = 0.
template <Field F>
TruncatedSeries<F> compositional_inverse(const TruncatedSeries<F>& f)
{
    detail::require_normalized(f, "compositional_inverse");
    const int n = f.order();
    std::vector<F> inv(static_cast<std::size_t>(n) + 1, F(0));
    inv[1] = F(1);
    for (int k = 2; k <= n; ++k)
    {
        const auto residual = compose(f, TruncatedSeries<F>(n, inv));
        inv[k] = -residual[k];
    }
    return TruncatedSeries<F>(n, std::move(inv));
}

/// d/dz; reported at the same order with the top coefficient zero.
template <Field F>
TruncatedSeries<F> derivative(const TruncatedSeries<F>& f)
{
    const int n = f.order();
    std::vector<F> out(static_cast<std::size_t>(n) + 1, F(0));
    for (int k = 1; k <= n; ++k)
    {
        out[k - 1] = f[k] * F(k);
    }
    return TruncatedSeries<F>(n, std::move(out));
}

/// Principal log(f(z)/z) with log 1 = 0.
///
/// f/z is only known through power N-1, so the result is exact through
/// power N-1 and its coefficient of z^N is reported as zero (same
/// convention as derivative()).
template <Field F>
TruncatedSeries<F> log_div_z(const TruncatedSeries<F>& f)
{
    detail::require_normalized(f, "log_div_z");
    const int n = f.order();
    // u = f/z - 1
    std::vector<F> u(static_cast<std::size_t>(n) + 1, F(0));
    for (int k = 1; k < n; ++k)
    {
        u[k] = f[k + 1];
    }
    // log(1 + u) = sum_{k >= 1} (-1)^{k+1} u^k / k
    std::vector<F> log1p(static_cast<std::size_t>(n) + 1, F(0));
    for (int k = 1; k <= n; ++k)
    {
        log1p[k] = (k % 2 == 1 ? F(1) : F(-1)) / F(k);
    }
    auto out = compose(TruncatedSeries<F>(n, std::move(log1p)), TruncatedSeries<F>(n, std::move(u)));
    auto coeffs = out.coefficients();
    coeffs[n] = F(0);
    return TruncatedSeries<F>(n, std::move(coeffs));
}

/// Converts an exact series to the float field.
template <Field F>
TruncatedSeries<Complex> to_float(const TruncatedSeries<F>& s)
{
    std::vector<Complex> out;
    out.reserve(s.coefficients().size());
    for (const auto& c : s.coefficients())
    {
        out.push_back(to_complex(c));
    }
    return TruncatedSeries<Complex>(s.order(), std::move(out));
}

} // namespace invlog

#endif
