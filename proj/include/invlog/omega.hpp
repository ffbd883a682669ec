///
/// \file omega.hpp
///
/// The four bounding objectives over the region
///
///   Omega = { (x, y) : 0 <= x <= 1, 0 <= y <= 1 - x^2 }
///
/// (x = |c1|, y = |c2|), their exact restrictions to the three boundary
/// pieces of Omega, and a certified maximization: exact boundary analysis
/// plus a dense interior grid that tries to falsify boundary dominance.
///
///   M(x,y) = x^4 + 18 x^2 y + 12 y^2 + 6x (1 - x^2 - y^2/(1+x))
///   N(x,y) = x^4 + 68 x^2 y + 64 y^2 + 36x (1 - x^2 - y^2/(1+x))
///   P(x,y) = x^4 + 4 x^2 + 4 y^2 + 4 x^2 y
///   Q(x,y) = x^4 + 144 x^2 + 64 y^2 + 16 x^2 y
///

#ifndef INVLOG_OMEGA_HPP
#define INVLOG_OMEGA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invlog/polynomial.hpp"
#include "invlog/scalar.hpp"
#include "invlog/subordination.hpp"

namespace invlog
{

enum class ObjectiveTag
{
    M,
    N,
    P,
    Q
};

const char* to_string(ObjectiveTag t);

/// coeff * x^x_power * y^y_power, divided by (1 + x) when over_one_plus_x.
struct ObjectiveTerm
{
    long coeff = 0;
    int x_power = 0;
    int y_power = 0;
    bool over_one_plus_x = false;
};

class ObjectiveFunction
{
public:
    static ObjectiveFunction make(ObjectiveTag tag);

    /// The objective bounding the given (class, determinant) pair.
    static ObjectiveFunction for_functional(ClassTag cls, DeterminantKind kind);

    ObjectiveTag tag() const { return tag_; }
    const std::vector<ObjectiveTerm>& terms() const { return terms_; }

    /// Denominator D of the prefactor: D |determinant| <= objective.
    long prefactor() const;

    double operator()(double x, double y) const;
    Rational evaluate_exact(const Rational& x, const Rational& y) const;

    std::string to_string() const;

private:
    ObjectiveFunction(ObjectiveTag tag, std::vector<ObjectiveTerm> terms)
        : tag_(tag), terms_(std::move(terms))
    {
    }

    ObjectiveTag tag_;
    std::vector<ObjectiveTerm> terms_;
};

enum class Segment
{
    Y0,       ///< y = 0, polynomial in x on [0, 1]
    X0,       ///< x = 0, polynomial in y on [0, 1]
    PARABOLA  ///< y = 1 - x^2, polynomial in x on [0, 1]
};

const char* to_string(Segment s);

/// Exact substitution of the segment into the objective.  On the parabola
/// the rational term simplifies via (1 - x^2)^2/(1 + x) = (1 - x^2)(1 - x).
Polynomial boundary_restrict(const ObjectiveFunction& f, Segment segment);

struct UnivariateMax
{
    double value = 0.0;
    double argmax = 0.0;
    /// Set when the maximizer is a rational point (endpoint or exact root).
    std::optional<Rational> exact_value;
    std::optional<Rational> exact_argmax;
    /// value + (Lipschitz bound) * (bracket width): no point of the interval
    /// exceeds it.
    double upper_bound = 0.0;
    /// Approximate locations of the interior critical points examined.
    std::vector<double> critical_points;
};

/// Global maximum of p on [lo, hi]: exact isolation of the roots of p'
/// (Sturm sequences, bisection to width tol) plus both endpoints.
UnivariateMax maximize_univariate(const Polynomial& p, double lo, double hi, double tol);

struct OmegaPoint
{
    double x = 0.0;
    double y = 0.0;
};

struct SegmentCertificate
{
    Segment segment;
    Polynomial restriction;
    UnivariateMax max;
    OmegaPoint argmax;
};

struct CertifiedMax
{
    double value = 0.0;
    OmegaPoint argmax;
    std::optional<Rational> exact_value;
    std::vector<SegmentCertificate> certificate;
    double tolerance = 0.0;
    int grid = 0;
    double interior_scan_max = 0.0;
    OmegaPoint interior_scan_argmax;
};

/// The interior grid found a value above the certified boundary maximum.
class InteriorExceedsBoundary : public std::runtime_error
{
public:
    InteriorExceedsBoundary(ObjectiveTag tag, OmegaPoint point, double interior_value,
                            double boundary_value);

    ObjectiveTag tag() const { return tag_; }
    OmegaPoint point() const { return point_; }
    double interior_value() const { return interior_value_; }
    double boundary_value() const { return boundary_value_; }

private:
    ObjectiveTag tag_;
    OmegaPoint point_;
    double interior_value_;
    double boundary_value_;
};

inline constexpr int kDefaultGrid = 2001;
inline constexpr double kDefaultTolerance = 1e-9;

CertifiedMax maximize_over_omega(const ObjectiveFunction& f, double tol = kDefaultTolerance,
                                 int grid = kDefaultGrid);

/// Exact maximum divided by the prefactor denominator.  Throws
/// ContractViolation when the maximum was not attained at a rational point.
Rational bound_from_max(ObjectiveTag tag, const CertifiedMax& max);
Rational bound_from_max(ObjectiveTag tag);

} // namespace invlog

#endif
