#pragma once

// Truncated power series in t with RatYPoly coefficients. A series of order N
// stores a_0..a_N where the series is sum a_n t^n (plain, not divided by n!).

#include <cstddef>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "poly.hpp"

namespace patlab {

class EgfSeries {
public:
    explicit EgfSeries(std::size_t order) : terms_(order + 1) {}

    /// Builds sum_n c_n t^n / n! from integer polynomials c_0..c_N.
    static EgfSeries from_egf(const std::vector<YPoly>& c)
    {
        if (c.empty()) throw InvalidInput("from_egf: need at least the constant term");
        EgfSeries s(c.size() - 1);
        for (std::size_t n = 0; n < c.size(); ++n) {
            s.terms_[n] = to_rational(c[n]);
            s.terms_[n] *= Rational(1, factorial(static_cast<unsigned>(n)));
        }
        return s;
    }

    static EgfSeries one(std::size_t order)
    {
        EgfSeries s(order);
        s.terms_[0] = RatYPoly(Rational(1));
        return s;
    }

    std::size_t order() const { return terms_.size() - 1; }
    const RatYPoly& operator[](std::size_t n) const { return terms_.at(n); }
    RatYPoly& operator[](std::size_t n) { return terms_.at(n); }
    const std::vector<RatYPoly>& terms() const { return terms_; }

    /// n! a_n for every n, as integer polynomials. Throws ConsistencyError on a fraction.
    std::vector<YPoly> egf_coefficients() const
    {
        std::vector<YPoly> out;
        out.reserve(terms_.size());
        for (std::size_t n = 0; n < terms_.size(); ++n)
            out.push_back(to_integral(terms_[n] * Rational(factorial(static_cast<unsigned>(n))),
                                      "egf coefficient " + std::to_string(n)));
        return out;
    }

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    std::vector<RatYPoly> terms_;
};

namespace detail {
inline void require_unit_constant(const EgfSeries& f, const char* op)
{
    if (f[0] != RatYPoly(Rational(1))) throw InvalidInput(std::string(op) + ": constant term must be 1");
}
} // namespace detail

inline EgfSeries series_mul(const EgfSeries& f, const EgfSeries& g)
{
    if (f.order() != g.order())
        throw InvalidInput("series_mul: order mismatch (" + std::to_string(f.order()) + " vs " +
                           std::to_string(g.order()) + ")");
    EgfSeries r(f.order());
    for (std::size_t i = 0; i <= f.order(); ++i) {
        if (f[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= f.order(); ++j) r[i + j] += f[i] * g[j];
    }
    return r;
}

inline EgfSeries series_reciprocal(const EgfSeries& f)
{
    detail::require_unit_constant(f, "series_reciprocal");
    EgfSeries g(f.order());
    g[0] = RatYPoly(Rational(1));
    for (std::size_t n = 1; n <= f.order(); ++n) {
        RatYPoly acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!f[k].is_zero()) acc += f[k] * g[n - k];
        g[n] = -acc;
    }
    return g;
}

/// log f, from n L_n = n f_n - sum_{k=1}^{n-1} k L_k f_{n-k}.
inline EgfSeries series_log(const EgfSeries& f)
{
    detail::require_unit_constant(f, "series_log");
    EgfSeries L(f.order());
    for (std::size_t n = 1; n <= f.order(); ++n) {
        RatYPoly acc = f[n] * Rational(static_cast<long long>(n));
        for (std::size_t k = 1; k < n; ++k)
            if (!L[k].is_zero()) acc -= L[k] * f[n - k] * Rational(static_cast<long long>(k));
        L[n] = acc * Rational(1, static_cast<long long>(n));
    }
    return L;
}

/// exp(L) (x = 1), for round-trip checks.
inline EgfSeries series_exp(const EgfSeries& L)
{
    if (!L[0].is_zero()) throw InvalidInput("series_exp: constant term must be 0");
    // E' = L' E  =>  n E_n = sum_{k=1}^n k L_k E_{n-k}
    EgfSeries E(L.order());
    E[0] = RatYPoly(Rational(1));
    for (std::size_t n = 1; n <= L.order(); ++n) {
        RatYPoly acc;
        for (std::size_t k = 1; k <= n; ++k)
            if (!L[k].is_zero()) acc += L[k] * E[n - k] * Rational(static_cast<long long>(k));
        E[n] = acc * Rational(1, static_cast<long long>(n));
    }
    return E;
}

/// For n = 0..upto, n! [t^n] exp(x L) as a polynomial in x and y.
/// The x^k part is n! [t^n] L^k / k!.
inline std::vector<XYPoly> exp_x(const EgfSeries& L, std::size_t upto)
{
    if (!L[0].is_zero()) throw InvalidInput("exp_x: L_0 must be 0");
    if (upto > L.order()) throw InvalidInput("exp_x: upto exceeds series order");

    std::vector<XYPoly> out(upto + 1);
    out[0] = XYPoly::constant(1);

    EgfSeries power = EgfSeries::one(L.order()); // L^k / k!
    for (unsigned k = 1; k <= upto; ++k) {
        power = series_mul(power, L);
        for (std::size_t n = 0; n <= L.order(); ++n) power[n] *= Rational(1, k);
        // L^k starts at t^k.
        for (std::size_t n = k; n <= upto; ++n) {
            const RatYPoly scaled = power[n] * Rational(factorial(static_cast<unsigned>(n)));
            for (const auto& [e, c] : scaled.terms()) {
                if (!is_integral(c))
                    throw ConsistencyError("exp_x: non-integral coefficient " + c.str() + " at t^" +
                                           std::to_string(n) + " x^" + std::to_string(k) + " y^" +
                                           std::to_string(e));
                out[n].add_term(k, e, boost::multiprecision::numerator(c));
            }
        }
    }
    return out;
}

} // namespace patlab
