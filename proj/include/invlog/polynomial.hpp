///
/// \file polynomial.hpp
///
/// Dense univariate polynomials with exact rational coefficients, plus the
/// Sturm-sequence machinery used for exact real-root isolation.
///

#ifndef INVLOG_POLYNOMIAL_HPP
#define INVLOG_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "invlog/scalar.hpp"

namespace invlog
{

class Polynomial
{
public:
    Polynomial() = default;
    /// Coefficients from the constant term upwards.
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs)
        : Polynomial(std::vector<Rational>(coeffs))
    {
    }

    /// c x^k
    static Polynomial monomial(Rational c, int k);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k (zero beyond the degree).
    Rational coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& x) const;
    double operator()(double x) const;

    Polynomial derivative() const;
    Polynomial pow(int k) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

    /// "12 - 11*x^4" style rendering in the given variable.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct DivisionResult
{
    Polynomial quotient;
    Polynomial remainder;
};

DivisionResult divide(const Polynomial& num, const Polynomial& den);
/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& p, const Polynomial& q);
/// p / gcd(p, p'): same roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// Sturm sequence s_0 = p, s_1 = p', s_{k+1} = -rem(s_{k-1}, s_k).
class SturmSequence
{
public:
    explicit SturmSequence(const Polynomial& p);

    /// Number of distinct roots of p in the half-open interval (a, b].
    /// p must be squarefree for the count to be exact.
    int count_roots(const Rational& a, const Rational& b) const;

    const std::vector<Polynomial>& chain() const { return chain_; }

private:
    int sign_variations(const Rational& x) const;

    std::vector<Polynomial> chain_;
};

/// An open interval (lo, hi) holding exactly one root; lo == hi when
/// the root was hit exactly.
struct RootBracket
{
    Rational lo;
    Rational hi;
    bool exact() const { return lo == hi; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// All real roots of p in the closed interval [lo, hi], each bracketed to
/// width <= width (or found exactly), in increasing order.
std::vector<RootBracket> isolate_roots(const Polynomial& p, const Rational& lo,
                                       const Rational& hi, const Rational& width);

} // namespace invlog

#endif
