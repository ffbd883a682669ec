#include "invlog/omega.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace invlog
{

const char* to_string(ObjectiveTag t)
{
    switch (t)
    {
    case ObjectiveTag::M: return "M";
    case ObjectiveTag::N: return "N";
    case ObjectiveTag::P: return "P";
    case ObjectiveTag::Q: return "Q";
    }
    return "?";
}

const char* to_string(Segment s)
{
    switch (s)
    {
    case Segment::Y0: return "y=0";
    case Segment::X0: return "x=0";
    case Segment::PARABOLA: return "y=1-x^2";
    }
    return "?";
}

ObjectiveFunction ObjectiveFunction::make(ObjectiveTag tag)
{
    switch (tag)
    {
    case ObjectiveTag::M:
        // x^4 + 18x^2 y + 12y^2 + 6x - 6x^3 - 6x y^2/(1+x)
        return {tag, {{1, 4, 0}, {18, 2, 1}, {12, 0, 2}, {6, 1, 0}, {-6, 3, 0}, {-6, 1, 2, true}}};
    case ObjectiveTag::N:
        return {tag,
                {{1, 4, 0}, {68, 2, 1}, {64, 0, 2}, {36, 1, 0}, {-36, 3, 0}, {-36, 1, 2, true}}};
    case ObjectiveTag::P:
        return {tag, {{1, 4, 0}, {4, 2, 0}, {4, 0, 2}, {4, 2, 1}}};
    case ObjectiveTag::Q:
        return {tag, {{1, 4, 0}, {144, 2, 0}, {64, 0, 2}, {16, 2, 1}}};
    }
    throw ContractViolation("unknown objective");
}

ObjectiveFunction ObjectiveFunction::for_functional(ClassTag cls, DeterminantKind kind)
{
    if (kind == DeterminantKind::hankel)
    {
        return make(cls == ClassTag::starlike_sym ? ObjectiveTag::M : ObjectiveTag::N);
    }
    return make(cls == ClassTag::starlike_sym ? ObjectiveTag::P : ObjectiveTag::Q);
}

long ObjectiveFunction::prefactor() const
{
    switch (tag_)
    {
    case ObjectiveTag::M: return 48;
    case ObjectiveTag::N: return 2304;
    case ObjectiveTag::P: return 16;
    case ObjectiveTag::Q: return 2304;
    }
    return 1;
}

double ObjectiveFunction::operator()(double x, double y) const
{
    double acc = 0.0;
    for (const auto& t : terms_)
    {
        double v = static_cast<double>(t.coeff) * std::pow(x, t.x_power) * std::pow(y, t.y_power);
        if (t.over_one_plus_x)
        {
            v /= 1.0 + x;
        }
        acc += v;
    }
    return acc;
}

Rational ObjectiveFunction::evaluate_exact(const Rational& x, const Rational& y) const
{
    Rational acc(0);
    for (const auto& t : terms_)
    {
        Rational v(t.coeff);
        for (int k = 0; k < t.x_power; ++k)
        {
            v *= x;
        }
        for (int k = 0; k < t.y_power; ++k)
        {
            v *= y;
        }
        if (t.over_one_plus_x)
        {
            v /= 1 + x;
        }
        acc += v;
    }
    return acc;
}

std::string ObjectiveFunction::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_)
    {
        if (!first)
        {
            os << (t.coeff < 0 ? " - " : " + ");
        }
        else if (t.coeff < 0)
        {
            os << '-';
        }
        first = false;
        os << std::labs(t.coeff);
        if (t.x_power > 0)
        {
            os << "*x" << (t.x_power > 1 ? "^" + std::to_string(t.x_power) : "");
        }
        if (t.y_power > 0)
        {
            os << "*y" << (t.y_power > 1 ? "^" + std::to_string(t.y_power) : "");
        }
        if (t.over_one_plus_x)
        {
            os << "/(1+x)";
        }
    }
    return os.str();
}

Polynomial boundary_restrict(const ObjectiveFunction& f, Segment segment)
{
    const Polynomial x = Polynomial::monomial(Rational(1), 1);
    const Polynomial one{Rational(1)};
    Polynomial out;
    for (const auto& t : f.terms())
    {
        const Rational c(t.coeff);
        switch (segment)
        {
        case Segment::Y0:
            if (t.y_power > 0)
            {
                break;
            }
            if (t.over_one_plus_x)
            {
                throw DomainError("boundary_restrict: term is not polynomial on y = 0");
            }
            out = out + Polynomial::monomial(c, t.x_power);
            break;
        case Segment::X0:
            // 1/(1+x) = 1 at x = 0; result is a polynomial in y
            if (t.x_power > 0)
            {
                break;
            }
            out = out + Polynomial::monomial(c, t.y_power);
            break;
        case Segment::PARABOLA:
        {
            // y = (1 - x)(1 + x)
            const Polynomial one_minus = one - x;
            const Polynomial one_plus = one + x;
            Polynomial term = Polynomial::monomial(c, t.x_power) * one_minus.pow(t.y_power);
            if (t.over_one_plus_x)
            {
                if (t.y_power == 0)
                {
                    throw DomainError("boundary_restrict: term is not polynomial on the parabola");
                }
                term = term * one_plus.pow(t.y_power - 1);
            }
            else
            {
                term = term * one_plus.pow(t.y_power);
            }
            out = out + term;
            break;
        }
        }
    }
    return out;
}

namespace
{

struct Candidate
{
    Rational point;
    Rational value;
    bool exact;
    Rational half_width;
};

double lipschitz_bound(const Polynomial& p, double lo, double hi)
{
    const double r = std::max(std::abs(lo), std::abs(hi));
    double bound = 0.0;
    for (int k = 1; k <= p.degree(); ++k)
    {
        bound += k * std::abs(p.coeff(k).convert_to<double>()) * std::pow(r, k - 1);
    }
    return bound;
}

} // namespace

UnivariateMax maximize_univariate(const Polynomial& p, double lo, double hi, double tol)
{
    if (!(lo < hi))
    {
        throw ContractViolation("maximize_univariate: requires lo < hi");
    }
    if (p.degree() > 8)
    {
        throw ContractViolation("maximize_univariate: degree must be <= 8");
    }
    if (!(tol > 0.0))
    {
        throw ContractViolation("maximize_univariate: tol must be positive");
    }
    const Rational lo_r = rational_from_double(lo);
    const Rational hi_r = rational_from_double(hi);

    std::vector<Candidate> candidates{
        {lo_r, p(lo_r), true, Rational(0)},
        {hi_r, p(hi_r), true, Rational(0)},
    };
    UnivariateMax out;
    const Polynomial dp = p.derivative();
    if (!dp.is_zero())
    {
        for (const auto& b : isolate_roots(dp, lo_r, hi_r, rational_from_double(tol)))
        {
            if (b.exact())
            {
                out.critical_points.push_back(b.lo.convert_to<double>());
                candidates.push_back({b.lo, p(b.lo), true, Rational(0)});
                continue;
            }
            const Rational mid = b.midpoint();
            out.critical_points.push_back(mid.convert_to<double>());
            Candidate best{b.lo, p(b.lo), false, (b.hi - b.lo) / 2};
            for (const Rational& x : {mid, b.hi})
            {
                Rational v = p(x);
                if (v > best.value)
                {
                    best.point = x;
                    best.value = std::move(v);
                }
            }
            candidates.push_back(std::move(best));
        }
    }

    // exact candidates come first, so ties resolve towards rational maximizers
    std::stable_partition(candidates.begin(), candidates.end(),
                          [](const Candidate& c) { return c.exact; });
    const Candidate* best = &candidates.front();
    for (const auto& c : candidates)
    {
        if (c.value > best->value)
        {
            best = &c;
        }
    }
    out.value = best->value.convert_to<double>();
    out.argmax = best->point.convert_to<double>();
    if (best->exact)
    {
        out.exact_value = best->value;
        out.exact_argmax = best->point;
    }
    const double lipschitz = lipschitz_bound(p, lo, hi);
    out.upper_bound = out.value;
    for (const auto& c : candidates)
    {
        out.upper_bound = std::max(
            out.upper_bound,
            c.value.convert_to<double>() + lipschitz * 2.0 * c.half_width.convert_to<double>());
    }
    return out;
}

InteriorExceedsBoundary::InteriorExceedsBoundary(ObjectiveTag tag, OmegaPoint point,
                                                 double interior_value, double boundary_value)
    : std::runtime_error("objective " + std::string(invlog::to_string(tag)) +
                         ": interior value " + std::to_string(interior_value) + " at (" +
                         std::to_string(point.x) + ", " + std::to_string(point.y) +
                         ") exceeds boundary maximum " + std::to_string(boundary_value)),
      tag_(tag), point_(point), interior_value_(interior_value), boundary_value_(boundary_value)
{
}

namespace
{

struct ScanResult
{
    double value = -std::numeric_limits<double>::infinity();
    int i = 0;
    int j = 0;
};

bool better(const ScanResult& a, const ScanResult& b)
{
    if (a.value != b.value)
    {
        return a.value > b.value;
    }
    return a.i != b.i ? a.i < b.i : a.j < b.j;
}

OmegaPoint grid_point(int i, int j, int grid)
{
    const double x = static_cast<double>(i) / (grid - 1);
    return {x, (1.0 - x * x) * static_cast<double>(j) / (grid - 1)};
}

ScanResult scan_interior(const ObjectiveFunction& f, int grid)
{
    const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
    std::vector<ScanResult> partial(workers);
    auto run = [&](unsigned w) {
        ScanResult best;
        for (int i = static_cast<int>(w); i < grid; i += static_cast<int>(workers))
        {
            for (int j = 0; j < grid; ++j)
            {
                const OmegaPoint pt = grid_point(i, j, grid);
                const ScanResult cand{f(pt.x, pt.y), i, j};
                if (better(cand, best))
                {
                    best = cand;
                }
            }
        }
        partial[w] = best;
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
        {
            pool.emplace_back(run, w);
        }
        run(0);
    }
    ScanResult best = partial.front();
    for (const auto& r : partial)
    {
        if (better(r, best))
        {
            best = r;
        }
    }
    return best;
}

} // namespace

CertifiedMax maximize_over_omega(const ObjectiveFunction& f, double tol, int grid)
{
    if (!(tol >= 1e-12))
    {
        throw ContractViolation("maximize_over_omega: tol must be >= 1e-12");
    }
    if (grid < 2)
    {
        throw ContractViolation("maximize_over_omega: grid must be >= 2");
    }
    CertifiedMax out;
    out.tolerance = tol;
    out.grid = grid;
    for (Segment s : {Segment::Y0, Segment::X0, Segment::PARABOLA})
    {
        SegmentCertificate cert{s, boundary_restrict(f, s), {}, {}};
        cert.max = maximize_univariate(cert.restriction, 0.0, 1.0, tol);
        const double t = cert.max.argmax;
        switch (s)
        {
        case Segment::Y0: cert.argmax = {t, 0.0}; break;
        case Segment::X0: cert.argmax = {0.0, t}; break;
        case Segment::PARABOLA: cert.argmax = {t, 1.0 - t * t}; break;
        }
        out.certificate.push_back(std::move(cert));
    }

    const SegmentCertificate* best = &out.certificate.front();
    for (const auto& c : out.certificate)
    {
        bool higher = false;
        if (c.max.exact_value && best->max.exact_value)
        {
            higher = *c.max.exact_value > *best->max.exact_value;
        }
        else
        {
            higher = c.max.value > best->max.value ||
                     (c.max.value == best->max.value && c.max.exact_value && !best->max.exact_value);
        }
        if (higher)
        {
            best = &c;
        }
    }
    out.value = best->max.value;
    out.argmax = best->argmax;
    out.exact_value = best->max.exact_value;

    const ScanResult scan = scan_interior(f, grid);
    out.interior_scan_max = scan.value;
    out.interior_scan_argmax = grid_point(scan.i, scan.j, grid);
    if (scan.value > out.value + tol)
    {
        throw InteriorExceedsBoundary(f.tag(), out.interior_scan_argmax, scan.value, out.value);
    }
    return out;
}

Rational bound_from_max(ObjectiveTag tag, const CertifiedMax& max)
{
    if (!max.exact_value)
    {
        throw ContractViolation(std::string("bound_from_max: maximum of ") + to_string(tag) +
                                " is not attained at a rational point");
    }
    return *max.exact_value / ObjectiveFunction::make(tag).prefactor();
}

Rational bound_from_max(ObjectiveTag tag)
{
    return bound_from_max(tag, maximize_over_omega(ObjectiveFunction::make(tag)));
}

} // namespace invlog
