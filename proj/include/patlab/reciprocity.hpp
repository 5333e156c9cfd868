#pragma once

// NM data -> U_n(y) (series inversion, composition sum) -> NM_n(x,y).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "series.hpp"

namespace patlab {

/// NM_n(1,y) for n = 0..upto, by enumeration.
inline std::vector<YPoly> nm_y_sequence(const PatternSet& g, std::size_t upto, unsigned threads = 1)
{
    std::vector<YPoly> out;
    out.reserve(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) out.push_back(nm_polynomial(n, g, threads).at_x_one());
    return out;
}

/// U_n = n! [t^n] 1 / (sum_n NM_n(1,y) t^n / n!), given NM_0 = 1.
inline std::vector<YPoly> u_from_nm(const std::vector<YPoly>& nm)
{
    return series_reciprocal(EgfSeries::from_egf(nm)).egf_coefficients();
}

/// U_0..U_upto from brute-force NM data. U_0 = 1.
inline std::vector<YPoly> u_from_bruteforce(const PatternSet& g, std::size_t upto, unsigned threads = 1)
{
    if (!g.starts_with_one())
        throw InvalidInput("u_from_bruteforce: every pattern must start with 1 (got " + g.str() +
                           "); the factorization NM = (1/U)^x needs it");
    return u_from_nm(nm_y_sequence(g, upto, threads));
}

struct BrickSumStats {
    std::uint64_t compositions = 0;
};

/// U_n as the signed sum over compositions (b_1..b_k) of n of
/// (-1)^k (n; b_1..b_k) prod NM_{b_i}(1,y). nm must cover indices 0..n.
inline YPoly u_via_brick_sum(std::span<const YPoly> nm, std::size_t n, BrickSumStats* stats = nullptr)
{
    if (n == 0) return YPoly(1);
    if (nm.size() <= n) throw InvalidInput("u_via_brick_sum: NM data shorter than n");
    if (n > 40) throw InvalidInput("u_via_brick_sum: n too large for a composition sum");
    const BigInt nfact = factorial(static_cast<unsigned>(n));
    YPoly total;
    const std::uint64_t ncomp = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < ncomp; ++mask) {
        // bit i set: cut after cell i+1
        YPoly term(1);
        BigInt denom = 1;
        int sign = 1;
        std::size_t start = 0;
        for (std::size_t cell = 1; cell <= n; ++cell) {
            if (cell == n || (mask >> (cell - 1) & 1)) {
                const std::size_t b = cell - start;
                term = term * nm[b];
                denom *= factorial(static_cast<unsigned>(b));
                sign = -sign;
                start = cell;
            }
        }
        total += term * BigInt(sign * (nfact / denom));
    }
    if (stats) stats->compositions += ncomp;
    return total;
}

inline YPoly u_via_brick_sum(const PatternSet& g, std::size_t n, BrickSumStats* stats = nullptr)
{
    const auto nm = nm_y_sequence(g, n);
    return u_via_brick_sum(std::span<const YPoly>(nm), n, stats);
}

/// NM_n(x,y) = n! [t^n] exp(x log(1/U)) for n = 0..upto. u[0] must be 1.
inline std::vector<XYPoly> nm_from_u(const std::vector<YPoly>& u, std::size_t upto)
{
    if (u.size() <= upto) throw InvalidInput("nm_from_u: need U_0..U_" + std::to_string(upto));
    std::vector<YPoly> head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(upto + 1));
    EgfSeries L = series_log(EgfSeries::from_egf(head));
    for (std::size_t n = 0; n <= upto; ++n) L[n] = -L[n];
    return exp_x(L, upto);
}

} // namespace patlab
