#include "invlog/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace invlog
{

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
    {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::monomial(Rational c, int k)
{
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

Rational Polynomial::coeff(int k) const
{
    if (k < 0 || k > degree())
    {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    {
        acc = acc * x + *it;
    }
    return acc;
}

double Polynomial::operator()(double x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    {
        acc = acc * x + it->convert_to<double>();
    }
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (degree() < 1)
    {
        return {};
    }
    std::vector<Rational> d;
    d.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
    {
        d.push_back(coeffs_[k] * static_cast<long>(k));
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial out{Rational(1)};
    for (int i = 0; i < k; ++i)
    {
        out = out * *this;
    }
    return out;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q)
{
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
    {
        v[k] += p.coeffs_[k];
    }
    for (std::size_t k = 0; k < q.coeffs_.size(); ++k)
    {
        v[k] += q.coeffs_[k];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const
{
    std::vector<Rational> v(coeffs_);
    for (auto& c : v)
    {
        c = -c;
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q)
{
    if (p.is_zero() || q.is_zero())
    {
        return {};
    }
    std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    {
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
        {
            v[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p)
{
    return Polynomial{c} * p;
}

std::string Polynomial::to_string(const std::string& var) const
{
    if (is_zero())
    {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
    {
        const Rational& c = coeffs_[k];
        if (c == 0)
        {
            continue;
        }
        const Rational mag = abs(c);
        if (first)
        {
            if (c < 0)
            {
                os << '-';
            }
        }
        else
        {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (k == 0 || !unit)
        {
            os << mag;
            if (k > 0)
            {
                os << '*';
            }
        }
        if (k >= 1)
        {
            os << var;
        }
        if (k >= 2)
        {
            os << '^' << k;
        }
    }
    return os.str();
}

DivisionResult divide(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero())
    {
        throw DomainError("polynomial division by zero");
    }
    std::vector<Rational> rem(num.coefficients());
    const int dd = den.degree();
    const int nd = num.degree();
    if (nd < dd)
    {
        return {Polynomial{}, num};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(nd - dd) + 1, Rational(0));
    for (int k = nd - dd; k >= 0; --k)
    {
        const Rational factor = rem[static_cast<std::size_t>(k + dd)] / den.leading();
        quot[static_cast<std::size_t>(k)] = factor;
        if (factor == 0)
        {
            continue;
        }
        for (int j = 0; j <= dd; ++j)
        {
            rem[static_cast<std::size_t>(k + j)] -= factor * den.coeff(j);
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& p, const Polynomial& q)
{
    Polynomial a = p;
    Polynomial b = q;
    while (!b.is_zero())
    {
        Polynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
    {
        return a;
    }
    return (Rational(1) / a.leading()) * a;
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() < 1)
    {
        return p;
    }
    return divide(p, gcd(p, p.derivative())).quotient;
}

SturmSequence::SturmSequence(const Polynomial& p)
{
    if (p.is_zero())
    {
        return;
    }
    chain_.push_back(p);
    Polynomial next = p.derivative();
    while (!next.is_zero())
    {
        chain_.push_back(next);
        const auto& a = chain_[chain_.size() - 2];
        const auto& b = chain_.back();
        next = -divide(a, b).remainder;
    }
}

int SturmSequence::sign_variations(const Rational& x) const
{
    int variations = 0;
    int last = 0;
    for (const auto& s : chain_)
    {
        const Rational v = s(x);
        const int sign = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (sign == 0)
        {
            continue;
        }
        if (last != 0 && sign != last)
        {
            ++variations;
        }
        last = sign;
    }
    return variations;
}

int SturmSequence::count_roots(const Rational& a, const Rational& b) const
{
    // Zeros of s_0 at an endpoint do not change the variation count just to
    // the right of it, so this counts roots in (a, b].
    return sign_variations(a) - sign_variations(b);
}

std::vector<RootBracket> isolate_roots(const Polynomial& p, const Rational& lo,
                                       const Rational& hi, const Rational& width)
{
    if (!(lo <= hi))
    {
        throw ContractViolation("isolate_roots: lo > hi");
    }
    if (!(width > 0))
    {
        throw ContractViolation("isolate_roots: width must be positive");
    }
    if (p.is_zero())
    {
        throw DomainError("isolate_roots: the zero polynomial has no isolated roots");
    }
    const Polynomial s = squarefree_part(p);
    std::vector<RootBracket> out;
    if (s.degree() < 1)
    {
        return out;
    }
    if (s(lo) == 0)
    {
        out.push_back({lo, lo});
    }
    if (lo == hi)
    {
        return out;
    }
    const bool hi_is_root = s(hi) == 0;
    if (hi_is_root)
    {
        out.push_back({hi, hi});
    }
    const SturmSequence sturm(s);

    // roots strictly inside (a, b)
    struct Pending
    {
        Rational a;
        Rational b;
        int count;
    };
    std::vector<Pending> work{{lo, hi, sturm.count_roots(lo, hi) - (hi_is_root ? 1 : 0)}};
    while (!work.empty())
    {
        Pending cur = std::move(work.back());
        work.pop_back();
        if (cur.count == 0)
        {
            continue;
        }
        if (cur.count == 1 && cur.b - cur.a <= width)
        {
            out.push_back({cur.a, cur.b});
            continue;
        }
        Rational mid = (cur.a + cur.b) / 2;
        int left = sturm.count_roots(cur.a, mid);
        int right = cur.count - left;
        if (s(mid) == 0)
        {
            out.push_back({mid, mid});
            --left;
        }
        work.push_back({mid, cur.b, right});
        work.push_back({cur.a, std::move(mid), left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
    return out;
}

} // namespace invlog
