// Random instance generators and independent reference implementations used
// as oracles.  Nothing here calls into the series code under test.

#ifndef INVLOG_TESTS_SUPPORT_HPP
#define INVLOG_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "invlog/scalar.hpp"
#include "invlog/series.hpp"

namespace testing
{

using invlog::Complex;
using invlog::GaussianRational;
using invlog::Rational;

class RandomRationals
{
public:
    explicit RandomRationals(std::uint64_t seed) : engine_(seed) {}

    /// p/q with |p| <= bound, 1 <= q <= bound.
    Rational next(int bound = 9)
    {
        std::uniform_int_distribution<int> num(-bound, bound);
        std::uniform_int_distribution<int> den(1, bound);
        return Rational(num(engine_), den(engine_));
    }

    /// Rational in [0, 1].
    Rational unit(int bound = 64)
    {
        std::uniform_int_distribution<int> den(1, bound);
        const int q = den(engine_);
        std::uniform_int_distribution<int> num(0, q);
        return Rational(num(engine_), q);
    }

    GaussianRational gaussian(int bound = 9) { return GaussianRational(next(bound), next(bound)); }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

    Complex disk()
    {
        const double r = std::sqrt(real(0.0, 1.0));
        const double t = real(0.0, 2.0 * std::numbers::pi);
        return std::polar(r, t);
    }

    /// Normalized series z + a2 z^2 + ... with random coefficients.
    template <typename F>
    invlog::TruncatedSeries<F> normalized(int order)
    {
        std::vector<F> c(static_cast<std::size_t>(order) + 1, F(0));
        c[1] = F(1);
        for (int k = 2; k <= order; ++k)
        {
            if constexpr (std::is_same_v<F, GaussianRational>)
            {
                c[static_cast<std::size_t>(k)] = gaussian();
            }
            else
            {
                c[static_cast<std::size_t>(k)] = F(next());
            }
        }
        return invlog::TruncatedSeries<F>(order, std::move(c));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

namespace oracle
{

/// Truncated Cauchy product on plain coefficient vectors.
template <typename F>
std::vector<F> product(const std::vector<F>& a, const std::vector<F>& b)
{
    std::vector<F> out(a.size(), F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j)
        {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

/// 1/a by long division; a[0] must be nonzero.
template <typename F>
std::vector<F> quotient_one_over(const std::vector<F>& a)
{
    std::vector<F> out(a.size(), F(0));
    out[0] = F(1) / a[0];
    for (std::size_t n = 1; n < a.size(); ++n)
    {
        F acc(0);
        for (std::size_t k = 1; k <= n; ++k)
        {
            acc += a[k] * out[n - k];
        }
        out[n] = -acc / a[0];
    }
    return out;
}

/// Inverse coefficients by Lagrange inversion:
/// A_n = (1/n) [z^{n-1}] (z/f(z))^n.
template <typename F>
std::vector<F> lagrange_inverse(const std::vector<F>& f)
{
    const std::size_t order = f.size() - 1;
    std::vector<F> f_over_z(order, F(0));
    for (std::size_t k = 0; k < order; ++k)
    {
        f_over_z[k] = f[k + 1];
    }
    const auto h = quotient_one_over(f_over_z);
    std::vector<F> out(order + 1, F(0));
    std::vector<F> power(order, F(0));
    power[0] = F(1);
    for (std::size_t n = 1; n <= order; ++n)
    {
        power = product(power, h);
        out[n] = power[n - 1] / F(static_cast<int>(n));
    }
    return out;
}

/// Coefficients L_1..L_{N-1} of log(f(z)/z) from n L_n = n b_n - sum_{k<n} k L_k b_{n-k},
/// where b = f/z.
template <typename F>
std::vector<F> log_of_quotient(const std::vector<F>& f)
{
    const std::size_t order = f.size() - 1;
    std::vector<F> b(order, F(0));
    for (std::size_t k = 0; k < order; ++k)
    {
        b[k] = f[k + 1];
    }
    std::vector<F> out(order, F(0));
    for (std::size_t n = 1; n < order; ++n)
    {
        F acc = F(static_cast<int>(n)) * b[n];
        for (std::size_t k = 1; k < n; ++k)
        {
            acc -= F(static_cast<int>(k)) * out[k] * b[n - k];
        }
        out[n] = acc / F(static_cast<int>(n));
    }
    return out;
}

/// Determinant by the permutation expansion.
template <typename F>
F leibniz_determinant(const std::vector<std::vector<F>>& m)
{
    std::vector<std::size_t> perm(m.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
    {
        perm[i] = i;
    }
    F total(0);
    do
    {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
        {
            for (std::size_t j = i + 1; j < perm.size(); ++j)
            {
                inversions += perm[i] > perm[j] ? 1 : 0;
            }
        }
        F term = inversions % 2 == 0 ? F(1) : F(-1);
        for (std::size_t i = 0; i < perm.size(); ++i)
        {
            term *= m[i][perm[i]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Taylor coefficients 0..count-1 of an analytic g by the trapezoid rule on
/// the circle |z| = radius.  Aliasing error is O(radius^samples).
template <typename G>
std::vector<Complex> taylor_by_contour(G g, int count, double radius = 0.5, int samples = 256)
{
    std::vector<Complex> out(static_cast<std::size_t>(count), Complex(0.0, 0.0));
    for (int j = 0; j < samples; ++j)
    {
        const double t = 2.0 * std::numbers::pi * j / samples;
        const Complex gz = g(std::polar(radius, t));
        for (int n = 0; n < count; ++n)
        {
            out[static_cast<std::size_t>(n)] += gz * std::polar(1.0, -n * t);
        }
    }
    for (int n = 0; n < count; ++n)
    {
        out[static_cast<std::size_t>(n)] /= samples * std::pow(radius, n);
    }
    return out;
}

} // namespace oracle

} // namespace testing

#endif
