///
/// \file scalar.hpp
///
/// Scalar fields the series machinery is instantiated over.
///
/// Exact computations use `Rational` (arbitrary precision, always in lowest
/// terms with a positive denominator), `GaussianRational` (Q(i)) or
/// `QuadraticRational` (Q(sqrt d) for one square-free radicand d).  Float
/// computations use `Complex`, i.e. std::complex<double>.
///

#ifndef INVLOG_SCALAR_HPP
#define INVLOG_SCALAR_HPP

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "invlog/errors.hpp"

namespace invlog
{

using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;
using Complex  = std::complex<double>;

/// Anything the truncated-series code can compute over.
template <typename F>
concept Field = requires(const F a, const F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    F(0);
    F(1);
};

//------------------------------------------------------------------------------
// Gaussian<F>: F(i) for a real field F
//------------------------------------------------------------------------------

template <typename F>
class Gaussian
{
public:
    Gaussian() : re_(0), im_(0) {}
    Gaussian(int v) : re_(v), im_(0) {} // NOLINT(google-explicit-constructor)
    Gaussian(F re) : re_(std::move(re)), im_(0) {} // NOLINT
    Gaussian(F re, F im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return Gaussian(F(0), F(1)); }

    const F& real() const { return re_; }
    const F& imag() const { return im_; }

    Gaussian conj() const { return Gaussian(re_, -im_); }
    /// re^2 + im^2, exact in F.
    F norm() const { return re_ * re_ + im_ * im_; }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b)
    {
        return Gaussian(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b)
    {
        return Gaussian(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b)
    {
        return Gaussian(a.re_ * b.re_ - a.im_ * b.im_,
                        a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b)
    {
        const F den = b.norm();
        if (den == F(0))
        {
            throw DomainError("Gaussian: division by zero");
        }
        const Gaussian num = a * b.conj();
        return Gaussian(num.re_ / den, num.im_ / den);
    }
    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    Gaussian& operator+=(const Gaussian& o) { return *this = *this + o; }
    Gaussian& operator-=(const Gaussian& o) { return *this = *this - o; }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }
    Gaussian& operator/=(const Gaussian& o) { return *this = *this / o; }

    friend bool operator==(const Gaussian& a, const Gaussian& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    F re_;
    F im_;
};

using GaussianRational = Gaussian<Rational>;

//------------------------------------------------------------------------------
// QuadraticRational: a + b sqrt(d)
//------------------------------------------------------------------------------

/// Element a + b*sqrt(d) of a real quadratic field.  The radicand is carried
/// by the value; a value with b == 0 is a plain rational and mixes with any
/// radicand.  Mixing two different radicands throws DomainError.
class QuadraticRational
{
public:
    QuadraticRational() = default;
    QuadraticRational(int v) : a_(v) {} // NOLINT(google-explicit-constructor)
    QuadraticRational(Rational a) : a_(std::move(a)) {} // NOLINT
    QuadraticRational(Rational a, Rational b, std::int64_t radicand);

    /// sqrt(radicand) itself.
    static QuadraticRational sqrt_of(std::int64_t radicand)
    {
        return {Rational(0), Rational(1), radicand};
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    /// 0 when the value is rational.
    std::int64_t radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    double to_double() const;

    friend QuadraticRational operator+(const QuadraticRational& x,
                                       const QuadraticRational& y);
    friend QuadraticRational operator-(const QuadraticRational& x,
                                       const QuadraticRational& y);
    friend QuadraticRational operator*(const QuadraticRational& x,
                                       const QuadraticRational& y);
    friend QuadraticRational operator/(const QuadraticRational& x,
                                       const QuadraticRational& y);
    QuadraticRational operator-() const { return {-a_, -b_, d_}; }

    QuadraticRational& operator+=(const QuadraticRational& o) { return *this = *this + o; }
    QuadraticRational& operator-=(const QuadraticRational& o) { return *this = *this - o; }
    QuadraticRational& operator*=(const QuadraticRational& o) { return *this = *this * o; }
    QuadraticRational& operator/=(const QuadraticRational& o) { return *this = *this / o; }

    friend bool operator==(const QuadraticRational& x, const QuadraticRational& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    static std::int64_t common_radicand(const QuadraticRational& x,
                                        const QuadraticRational& y);

    Rational a_{0};
    Rational b_{0};
    std::int64_t d_ = 0;
};

//------------------------------------------------------------------------------
// Uniform helpers over all scalar types
//------------------------------------------------------------------------------

inline Complex to_complex(const Rational& x) { return {x.convert_to<double>(), 0.0}; }
inline Complex to_complex(const GaussianRational& x)
{
    return {x.real().convert_to<double>(), x.imag().convert_to<double>()};
}
inline Complex to_complex(const QuadraticRational& x) { return {x.to_double(), 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }

inline bool is_finite_scalar(const Rational&) { return true; }
inline bool is_finite_scalar(const GaussianRational&) { return true; }
inline bool is_finite_scalar(const QuadraticRational&) { return true; }
inline bool is_finite_scalar(const Complex& x)
{
    return std::isfinite(x.real()) && std::isfinite(x.imag());
}

/// Squared modulus when it is an exact rational, nothing otherwise.
inline std::optional<Rational> exact_norm(const Rational& x) { return x * x; }
inline std::optional<Rational> exact_norm(const GaussianRational& x) { return x.norm(); }
std::optional<Rational> exact_norm(const QuadraticRational& x);
inline std::optional<Rational> exact_norm(const Complex&) { return std::nullopt; }

/// The value as a rational if it is one exactly.
inline std::optional<Rational> as_rational(const Rational& x) { return x; }
inline std::optional<Rational> as_rational(const GaussianRational& x)
{
    if (x.imag() != 0)
    {
        return std::nullopt;
    }
    return x.real();
}
inline std::optional<Rational> as_rational(const QuadraticRational& x)
{
    if (!x.is_rational())
    {
        return std::nullopt;
    }
    return x.rational_part();
}
inline std::optional<Rational> as_rational(const Complex&) { return std::nullopt; }

inline double modulus(const Complex& x) { return std::abs(x); }
template <typename F>
double modulus(const F& x)
{
    if (auto n = exact_norm(x))
    {
        return std::sqrt(n->template convert_to<double>());
    }
    return std::abs(to_complex(x));
}

/// "p/q" with q > 0, always with an explicit denominator.
std::string format_rational(const Rational& x);
/// Parses "p", "p/q" or a finite decimal such as "-0.125".
Rational parse_rational(const std::string& text);

std::string format_scalar(const Rational& x);
std::string format_scalar(const GaussianRational& x);
std::string format_scalar(const QuadraticRational& x);
std::string format_scalar(const Complex& x);

/// Exact rational equal to a finite double.
Rational rational_from_double(double v);

} // namespace invlog

#endif
