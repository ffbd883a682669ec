///
/// \file determinants.hpp
///
/// Hankel H_{q,n} and Toeplitz T_{q,n} determinants over a logarithmic
/// coefficient sequence, plus the closed forms of H_{2,1} and T_{2,1} in
/// terms of a_2, a_3, a_4.
///

#ifndef INVLOG_DETERMINANTS_HPP
#define INVLOG_DETERMINANTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invlog/log_coeffs.hpp"

namespace invlog
{

enum class DeterminantKind
{
    hankel,
    toeplitz
};

inline const char* to_string(DeterminantKind k)
{
    return k == DeterminantKind::hankel ? "hankel" : "toeplitz";
}

template <Field F>
struct DeterminantRequest
{
    LogCoeffVector<F> seq;
    int q = 2;
    int n = 1;
    DeterminantKind kind = DeterminantKind::hankel;

    /// Highest sequence index the matrix touches.
    int required_length() const
    {
        return kind == DeterminantKind::hankel ? n + 2 * (q - 1) : n + q - 1;
    }
};

template <Field F>
struct DeterminantResult
{
    F value;
    double modulus = 0.0;
    /// |value|^2, present whenever it is an exact rational.
    std::optional<Rational> squared_modulus;
};

template <Field F>
DeterminantResult<F> make_result(F value)
{
    DeterminantResult<F> r{std::move(value), 0.0, std::nullopt};
    r.modulus = modulus(r.value);
    r.squared_modulus = exact_norm(r.value);
    return r;
}

/// Determinant of a square matrix by fraction-free (Bareiss) elimination.
/// Every division is exact over the field, and in exact mode intermediate
/// entries stay minors of the input.
template <Field F>
F bareiss_determinant(std::vector<std::vector<F>> m)
{
    const std::size_t size = m.size();
    if (size == 0)
    {
        return F(1);
    }
    F prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k)
    {
        if (m[k][k] == F(0))
        {
            std::size_t swap_row = k + 1;
            while (swap_row < size && m[swap_row][k] == F(0))
            {
                ++swap_row;
            }
            if (swap_row == size)
            {
                return F(0);
            }
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i)
        {
            for (std::size_t j = k + 1; j < size; ++j)
            {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    F det = m[size - 1][size - 1];
    return negate ? -det : det;
}

/// q x q matrix with entries Gamma_{n+i+j} (Hankel) or Gamma_{n+|i-j|}
/// (Toeplitz), i, j = 0..q-1.
template <Field F>
std::vector<std::vector<F>> determinant_matrix(const DeterminantRequest<F>& r)
{
    if (r.q < 1 || r.n < 1)
    {
        throw ContractViolation("determinant: q and n must be >= 1");
    }
    if (r.seq.size() < r.required_length())
    {
        throw ContractViolation("determinant: " + std::string(to_string(r.kind)) + " q=" +
                                std::to_string(r.q) + " n=" + std::to_string(r.n) + " needs " +
                                std::to_string(r.required_length()) + " coefficients, got " +
                                std::to_string(r.seq.size()));
    }
    std::vector<std::vector<F>> m(static_cast<std::size_t>(r.q));
    for (int i = 0; i < r.q; ++i)
    {
        auto& row = m[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(r.q));
        for (int j = 0; j < r.q; ++j)
        {
            const int offset = r.kind == DeterminantKind::hankel ? i + j : (i > j ? i - j : j - i);
            row.push_back(r.seq[r.n + offset]);
        }
    }
    return m;
}

template <Field F>
DeterminantResult<F> evaluate(const DeterminantRequest<F>& r)
{
    return make_result(bareiss_determinant(determinant_matrix(r)));
}

/// H_{2,1} = (13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4) / 48.
template <Field F>
F h21_closed(const F& a2, const F& a3, const F& a4)
{
    const F a2sq = a2 * a2;
    return (F(13) * a2sq * a2sq - F(12) * a2sq * a3 - F(12) * a3 * a3 + F(12) * a2 * a4) / F(48);
}

/// T_{2,1} = (-9 a2^4 + 4 a2^2 - 4 a3^2 + 12 a2^2 a3) / 16.
template <Field F>
F t21_closed(const F& a2, const F& a3)
{
    const F a2sq = a2 * a2;
    return (F(-9) * a2sq * a2sq + F(4) * a2sq - F(4) * a3 * a3 + F(12) * a2sq * a3) / F(16);
}

/// Second Hankel or Toeplitz determinant of Gamma through the full pipeline:
/// compositional inverse, logarithm, generic 2x2 determinant.
template <Field F>
DeterminantResult<F> second_determinant_pipeline(const TruncatedSeries<F>& f, DeterminantKind kind)
{
    return evaluate(DeterminantRequest<F>{gamma_of_series(f, LogKind::inverse), 2, 1, kind});
}

} // namespace invlog

#endif
