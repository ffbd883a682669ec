#include "invlog/scalar.hpp"

#include <cctype>
#include <sstream>

namespace invlog
{

namespace
{

bool is_perfect_square(std::int64_t v)
{
    if (v < 0)
    {
        return false;
    }
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(v))));
    for (auto c = r > 0 ? r - 1 : 0; c <= r + 1; ++c)
    {
        if (c * c == v)
        {
            return true;
        }
    }
    return false;
}

} // namespace

QuadraticRational::QuadraticRational(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand)
{
    if (b_ == 0)
    {
        d_ = 0;
        return;
    }
    if (d_ < 2 || is_perfect_square(d_))
    {
        throw DomainError("QuadraticRational: radicand must be a positive non-square, got " +
                          std::to_string(radicand));
    }
}

std::int64_t QuadraticRational::common_radicand(const QuadraticRational& x,
                                                const QuadraticRational& y)
{
    if (x.d_ == 0)
    {
        return y.d_;
    }
    if (y.d_ == 0 || x.d_ == y.d_)
    {
        return x.d_;
    }
    throw DomainError("QuadraticRational: mixed radicands " + std::to_string(x.d_) + " and " +
                      std::to_string(y.d_));
}

double QuadraticRational::to_double() const
{
    return a_.convert_to<double>() +
           b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
}

QuadraticRational operator+(const QuadraticRational& x, const QuadraticRational& y)
{
    const auto d = QuadraticRational::common_radicand(x, y);
    return {x.a_ + y.a_, x.b_ + y.b_, d};
}

QuadraticRational operator-(const QuadraticRational& x, const QuadraticRational& y)
{
    const auto d = QuadraticRational::common_radicand(x, y);
    return {x.a_ - y.a_, x.b_ - y.b_, d};
}

QuadraticRational operator*(const QuadraticRational& x, const QuadraticRational& y)
{
    const auto d = QuadraticRational::common_radicand(x, y);
    return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

QuadraticRational operator/(const QuadraticRational& x, const QuadraticRational& y)
{
    const auto d = QuadraticRational::common_radicand(x, y);
    // (a - b sqrt d) / (a^2 - b^2 d); the denominator vanishes only for y == 0
    const Rational den = y.a_ * y.a_ - y.b_ * y.b_ * d;
    if (den == 0)
    {
        throw DomainError("QuadraticRational: division by zero");
    }
    const QuadraticRational conj(y.a_, -y.b_, y.d_);
    const QuadraticRational num = x * conj;
    return {num.a_ / den, num.b_ / den, d};
}

std::optional<Rational> exact_norm(const QuadraticRational& x)
{
    if (!x.is_rational())
    {
        return std::nullopt;
    }
    return x.rational_part() * x.rational_part();
}

std::string format_rational(const Rational& x)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(x) << '/' << boost::multiprecision::denominator(x);
    return os.str();
}

Rational parse_rational(const std::string& text)
{
    auto fail = [&]() -> Rational {
        throw ContractViolation("not a rational number: '" + text + "'");
    };
    if (text.empty())
    {
        return fail();
    }
    try
    {
        const auto slash = text.find('/');
        if (slash != std::string::npos)
        {
            const Integer num(text.substr(0, slash));
            const Integer den(text.substr(slash + 1));
            if (den == 0)
            {
                return fail();
            }
            return Rational(num, den);
        }
        const auto dot = text.find_first_of(".eE");
        if (dot == std::string::npos)
        {
            return Rational(Integer(text));
        }
        // decimal / scientific literal: go through the exact binary double
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v))
        {
            return fail();
        }
        return rational_from_double(v);
    }
    catch (const std::runtime_error&)
    {
        return fail();
    }
    catch (const std::invalid_argument&)
    {
        return fail();
    }
    catch (const std::out_of_range&)
    {
        return fail();
    }
}

std::string format_scalar(const Rational& x) { return format_rational(x); }

std::string format_scalar(const GaussianRational& x)
{
    if (x.imag() == 0)
    {
        return format_rational(x.real());
    }
    std::string out;
    if (x.real() != 0)
    {
        out = format_rational(x.real());
        out += x.imag() < 0 ? "-" : "+";
        out += format_rational(abs(x.imag()));
    }
    else
    {
        out = format_rational(x.imag());
    }
    return out + "*i";
}

std::string format_scalar(const QuadraticRational& x)
{
    if (x.is_rational())
    {
        return format_rational(x.rational_part());
    }
    std::string out;
    const std::string root = "*sqrt(" + std::to_string(x.radicand()) + ")";
    if (x.rational_part() != 0)
    {
        out = format_rational(x.rational_part());
        out += x.radical_part() < 0 ? "-" : "+";
        out += format_rational(abs(x.radical_part()));
    }
    else
    {
        out = format_rational(x.radical_part());
    }
    return out + root;
}

std::string format_scalar(const Complex& x)
{
    std::ostringstream os;
    os.precision(17);
    os << '[' << x.real() << ", " << x.imag() << ']';
    return os.str();
}

Rational rational_from_double(double v)
{
    if (!std::isfinite(v))
    {
        throw DomainError("rational_from_double: non-finite value");
    }
    int exp = 0;
    const double mant = std::frexp(v, &exp); // v = mant * 2^exp, |mant| in [0.5, 1)
    const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
    Rational r(scaled);
    const int shift = exp - 53;
    if (shift > 0)
    {
        r *= Rational(Integer(1) << shift);
    }
    else if (shift < 0)
    {
        r /= Rational(Integer(1) << -shift);
    }
    return r;
}

} // namespace invlog
