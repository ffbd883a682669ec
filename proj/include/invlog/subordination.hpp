///
/// \file subordination.hpp
///
/// Taylor coefficients of functions starlike (S*_S) or convex (K_S) with
/// respect to symmetric points, generated from a Schwarz function w through
///
///   S*_S:  2 z f'(z)        / (f(z) - f(-z))   = (1 + w) / (1 - w)
///   K_S:   2 (z f'(z))'     / (f(z) - f(-z))'  = (1 + w) / (1 - w)
///
/// either by solving those identities coefficient by coefficient or by the
/// closed forms for a_2, a_3, a_4.
///

#ifndef INVLOG_SUBORDINATION_HPP
#define INVLOG_SUBORDINATION_HPP

#include <array>
#include <complex>
#include <functional>
#include <string>

#include "invlog/determinants.hpp"

namespace invlog
{

enum class ClassTag
{
    starlike_sym,
    convex_sym
};

inline const char* to_string(ClassTag t)
{
    return t == ClassTag::starlike_sym ? "starlike-sym" : "convex-sym";
}

/// Thrown when the coefficient recursion hits a zero pivot.
class DegenerateRecursion : public ContractViolation
{
public:
    DegenerateRecursion(int power, const std::string& what)
        : ContractViolation(what), power_(power)
    {
    }
    int power() const { return power_; }

private:
    int power_;
};

/// The normalized f subordinate to w for the given class, solved up to
/// power `upto` (coefficients above it are zero).
///
/// Writing phi = (1+w)/(1-w) and g = f(z) - f(-z) = 2 sum_{k odd} a_k z^k,
/// the coefficient of z^n (S*_S) or z^{n-1} (K_S) reads
///
///   L(n) a_n = sum_{k odd, k <= n} R(k) a_k phi_{n-k}
///
/// with L(n) = 2n, R(k) = 2 for S*_S and L(n) = 2n^2, R(k) = 2k for K_S.
/// Since phi_0 = 1 the pivot is L(n) - [n odd] R(n), a nonzero integer
/// for n >= 2.
template <Field F>
TruncatedSeries<F> coeffs_from_schwarz(const TruncatedSeries<F>& w, ClassTag tag, int upto)
{
    if (!(w[0] == F(0)))
    {
        throw DomainError("coeffs_from_schwarz: w(0) must be 0");
    }
    if (std::abs(to_complex(w[1])) > 1.0 + 1e-12)
    {
        throw DomainError("coeffs_from_schwarz: |c1| > 1 is not a Schwarz coefficient");
    }
    if (upto < 1 || upto > w.order())
    {
        throw ContractViolation("coeffs_from_schwarz: upto must lie in 1.." +
                                std::to_string(w.order()));
    }
    const int order = w.order();
    const auto one = TruncatedSeries<F>::constant(order, F(1));
    const auto phi = mul(one + w, reciprocal(one - w));

    const bool convex = tag == ClassTag::convex_sym;
    auto lhs_weight = [&](int n) { return convex ? F(2 * n * n) : F(2 * n); };
    auto rhs_weight = [&](int k) { return convex ? F(2 * k) : F(2); };

    std::vector<F> a(static_cast<std::size_t>(order) + 1, F(0));
    a[1] = F(1);
    for (int n = 2; n <= upto; ++n)
    {
        F rhs(0);
        for (int k = 1; k < n; k += 2)
        {
            rhs = rhs + rhs_weight(k) * a[k] * phi[n - k];
        }
        F pivot = lhs_weight(n);
        if (n % 2 == 1)
        {
            pivot = pivot - rhs_weight(n) * phi[0];
        }
        if (pivot == F(0))
        {
            throw DegenerateRecursion(n, "coeffs_from_schwarz: zero pivot at power " +
                                             std::to_string(n));
        }
        a[n] = rhs / pivot;
    }
    return TruncatedSeries<F>(order, std::move(a));
}

/// a2 = c1, a3 = c2 + c1^2, a4 = (c3 + 3 c1 c2 + 2 c1^3) / 2.
template <Field F>
std::array<F, 3> coeffs_closed_starlike(const F& c1, const F& c2, const F& c3)
{
    const F c1sq = c1 * c1;
    return {c1, c2 + c1sq, (c3 + F(3) * c1 * c2 + F(2) * c1sq * c1) / F(2)};
}

/// a2 = c1/2, a3 = (c2 + c1^2)/3, a4 = (c3 + 3 c1 c2 + 2 c1^3)/8.
template <Field F>
std::array<F, 3> coeffs_closed_convex(const F& c1, const F& c2, const F& c3)
{
    const F c1sq = c1 * c1;
    return {c1 / F(2), (c2 + c1sq) / F(3), (c3 + F(3) * c1 * c2 + F(2) * c1sq * c1) / F(8)};
}

template <Field F>
std::array<F, 3> coeffs_closed(const F& c1, const F& c2, const F& c3, ClassTag tag)
{
    return tag == ClassTag::starlike_sym ? coeffs_closed_starlike(c1, c2, c3)
                                         : coeffs_closed_convex(c1, c2, c3);
}

/// H_{2,1} or T_{2,1} of Gamma written directly in the Schwarz coefficients.
template <Field F>
F determinant_in_schwarz(const F& c1, const F& c2, const F& c3, ClassTag tag,
                         DeterminantKind kind)
{
    const F c1sq = c1 * c1;
    const F c1p4 = c1sq * c1sq;
    const F c2sq = c2 * c2;
    if (kind == DeterminantKind::hankel)
    {
        if (tag == ClassTag::starlike_sym)
        {
            return (c1p4 - F(18) * c1sq * c2 - F(12) * c2sq + F(6) * c1 * c3) / F(48);
        }
        return (-c1p4 - F(68) * c1sq * c2 - F(64) * c2sq + F(36) * c1 * c3) / F(2304);
    }
    if (tag == ClassTag::starlike_sym)
    {
        return (-c1p4 + F(4) * c1sq - F(4) * c2sq + F(4) * c1sq * c2) / F(16);
    }
    return (-c1p4 + F(144) * c1sq - F(64) * c2sq + F(16) * c1sq * c2) / F(2304);
}

//------------------------------------------------------------------------------
// Numeric membership diagnostic
//------------------------------------------------------------------------------

/// f together with its first two derivatives, evaluated in double precision.
struct AnalyticFunction
{
    std::function<Complex(Complex)> value;
    std::function<Complex(Complex)> first;
    std::function<Complex(Complex)> second;
};

struct MembershipGrid
{
    int radii = 64;
    int angles = 256;
    double max_radius = 0.995;
    double tolerance = 1e-9;
};

struct MembershipResult
{
    bool member = false;
    double min_real_part = 0.0;
    Complex argmin{0.0, 0.0};
    /// number of grid points where the quotient was not finite
    int non_finite_points = 0;
};

/// The quotient whose real part is positive on the disk exactly for
/// members of the class: zf'/(f(z)-f(-z)) or (zf')'/(f(z)-f(-z))'.
Complex class_quotient(const AnalyticFunction& f, ClassTag tag, Complex z);

/// Samples Re(class_quotient) on a polar grid with radii
/// max_radius * i / radii (i = 1..radii) and `angles` equally spaced angles.
/// A diagnostic, not a proof.
MembershipResult check_membership(const AnalyticFunction& f, ClassTag tag,
                                  const MembershipGrid& grid = {});

} // namespace invlog

#endif
