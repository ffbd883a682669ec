#include "invlog/catalog.hpp"

#include <cmath>

namespace invlog
{

namespace
{

const Complex kI{0.0, 1.0};

// sqrt(145)/8, the square of the scale factor inside h7
double h7_r2() { return std::sqrt(145.0) / 8.0; }

AnalyticFunction z_over_one_minus_z2()
{
    return {
        [](Complex z) { return z / (1.0 - z * z); },
        [](Complex z) { return (1.0 + z * z) / std::pow(1.0 - z * z, 2); },
        [](Complex z) { return (6.0 * z + 2.0 * z * z * z) / std::pow(1.0 - z * z, 3); },
    };
}

AnalyticFunction z_over_one_minus_z()
{
    return {
        [](Complex z) { return z / (1.0 - z); },
        [](Complex z) { return 1.0 / std::pow(1.0 - z, 2); },
        [](Complex z) { return 2.0 / std::pow(1.0 - z, 3); },
    };
}

AnalyticFunction artanh_scaled(double r2)
{
    // atanh(r z) / r, expanded as z + r^2 z^3/3 + r^4 z^5/5 + ...
    const double r = std::sqrt(r2);
    return {
        [r](Complex z) { return std::atanh(r * z) / r; },
        [r2](Complex z) { return 1.0 / (1.0 - r2 * z * z); },
        [r2](Complex z) { return 2.0 * r2 * z / std::pow(1.0 - r2 * z * z, 2); },
    };
}

AnalyticFunction minus_log_one_minus_z()
{
    return {
        [](Complex z) { return -std::log(1.0 - z); },
        [](Complex z) { return 1.0 / (1.0 - z); },
        [](Complex z) { return 1.0 / std::pow(1.0 - z, 2); },
    };
}

AnalyticFunction z_over_one_minus_iz()
{
    return {
        [](Complex z) { return z / (1.0 - kI * z); },
        [](Complex z) { return 1.0 / std::pow(1.0 - kI * z, 2); },
        [](Complex z) { return 2.0 * kI / std::pow(1.0 - kI * z, 3); },
    };
}

AnalyticFunction i_log_one_minus_iz()
{
    return {
        [](Complex z) { return kI * std::log(1.0 - kI * z); },
        [](Complex z) { return 1.0 / (1.0 - kI * z); },
        [](Complex z) { return kI / std::pow(1.0 - kI * z, 2); },
    };
}

template <Field F, typename Coeff>
TruncatedSeries<F> build(int order, Coeff coeff)
{
    std::vector<F> c(static_cast<std::size_t>(order) + 1, F(0));
    for (int n = 1; n <= order; ++n)
    {
        c[static_cast<std::size_t>(n)] = coeff(n);
    }
    return TruncatedSeries<F>(order, std::move(c));
}

GaussianRational i_power(int k)
{
    switch (((k % 4) + 4) % 4)
    {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
    }
}

} // namespace

const char* to_string(Provenance p)
{
    switch (p)
    {
    case Provenance::published_consistent: return "published-consistent";
    case Provenance::published_discrepant: return "published-discrepant";
    case Provenance::derived: return "derived";
    }
    return "?";
}

TruncatedSeries<Complex> to_float(const ExactSeries& s)
{
    return std::visit([](const auto& series) { return to_float(series); }, s);
}

Rational theorem_bound(ClassTag cls, DeterminantKind kind)
{
    if (kind == DeterminantKind::hankel)
    {
        return cls == ClassTag::starlike_sym ? Rational(1, 4) : Rational(1, 36);
    }
    return cls == ClassTag::starlike_sym ? Rational(5, 16) : Rational(145, 2304);
}

std::vector<std::string> function_names()
{
    return {"h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8", "h8rot", "koebe"};
}

ExactSeries named_series(const std::string& name, int order)
{
    using R = Rational;
    if (name == "h1")
    {
        // z/(1-z^2) = z + z^3 + z^5 + ...
        return build<R>(order, [](int n) { return R(n % 2); });
    }
    if (name == "h2" || name == "h6")
    {
        return build<R>(order, [](int) { return R(1); });
    }
    if (name == "h3")
    {
        // atanh z = z + z^3/3 + z^5/5 + ...
        return build<R>(order, [](int n) { return n % 2 == 1 ? R(1, n) : R(0); });
    }
    if (name == "h4" || name == "h8")
    {
        return build<R>(order, [](int n) { return R(1, n); });
    }
    if (name == "h5")
    {
        // z/(1 - iz) = sum i^{n-1} z^n
        return build<GaussianRational>(order, [](int n) { return i_power(n - 1); });
    }
    if (name == "h7")
    {
        // atanh(r z)/r with r^2 = sqrt(145)/8: coefficient of z^{2k+1} is r^{2k}/(2k+1)
        return build<QuadraticRational>(order, [](int n) -> QuadraticRational {
            if (n % 2 == 0)
            {
                return QuadraticRational(0);
            }
            const int k = (n - 1) / 2;
            Rational rational_part(1);
            for (int j = 0; j < k / 2; ++j)
            {
                rational_part *= Rational(145, 64);
            }
            rational_part /= n;
            if (k % 2 == 0)
            {
                return QuadraticRational(rational_part);
            }
            return QuadraticRational(Rational(0), rational_part / 8, 145);
        });
    }
    if (name == "h8rot")
    {
        // i log(1 - iz) = sum i^{n-1} z^n / n
        return build<GaussianRational>(
            order, [](int n) { return i_power(n - 1) / GaussianRational(n); });
    }
    if (name == "koebe")
    {
        return build<R>(order, [](int n) { return R(n); });
    }
    throw ContractViolation("unknown function '" + name + "'");
}

const std::vector<CatalogEntry>& extremal_catalog()
{
    using enum ClassTag;
    using enum DeterminantKind;
    using enum Provenance;
    static const std::vector<CatalogEntry> catalog{
        {"h1", "z/(1-z^2)", starlike_sym, hankel, "1/4", published_consistent,
         theorem_bound(starlike_sym, hankel), published_consistent, z_over_one_minus_z2(), {0, 1}},
        {"h2", "z/(1-z)", starlike_sym, hankel, "1/12", published_discrepant,
         theorem_bound(starlike_sym, hankel), published_consistent, z_over_one_minus_z(), {1}},
        {"h3", "1/2 log((1+z)/(1-z))", convex_sym, hankel, "1/36", published_consistent,
         theorem_bound(convex_sym, hankel), published_consistent, artanh_scaled(1.0), {0, 1}},
        {"h4", "-log(1-z)", convex_sym, hankel, "11/576", published_discrepant,
         theorem_bound(convex_sym, hankel), published_consistent, minus_log_one_minus_z(), {1}},
        {"h5", "z/(1-iz)", starlike_sym, toeplitz, "5/16", published_consistent,
         theorem_bound(starlike_sym, toeplitz), published_consistent, z_over_one_minus_iz(), {GaussianRational::i()}},
        {"h6", "z/(1-z)", starlike_sym, toeplitz, "3/16", published_consistent,
         theorem_bound(starlike_sym, toeplitz), published_consistent, z_over_one_minus_z(), {1}},
        // singular at |z| = 1/r ~ 0.815 since r^2 = sqrt(145)/8 > 1
        {"h7", "atanh(r z)/r, r^2 = sqrt(145)/8", convex_sym, toeplitz, "145/2304",
         published_consistent, theorem_bound(convex_sym, toeplitz), published_discrepant,
         artanh_scaled(h7_r2()), {}},
        {"h8", "-log(1-z)", convex_sym, toeplitz, "143/2304", published_consistent,
         theorem_bound(convex_sym, toeplitz), published_consistent, minus_log_one_minus_z(), {1}},
        {"h8rot", "i log(1-iz)", convex_sym, toeplitz, "", derived,
         theorem_bound(convex_sym, toeplitz), derived, i_log_one_minus_iz(), {GaussianRational::i()}},
    };
    return catalog;
}

} // namespace invlog
