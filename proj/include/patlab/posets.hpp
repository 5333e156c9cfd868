#pragma once

// Catalan numbers, the banded Catalan matrices M_k / P_k and their
// determinants, posets forced by overlapping pattern matches, and
// linear-extension counting by dynamic programming over downsets.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "perm.hpp"

namespace patlab {

inline BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

enum class CatalanKind { M, P };

struct CatalanMatrix {
    CatalanKind kind = CatalanKind::M;
    std::size_t k = 0;
    std::vector<std::vector<BigInt>> entries;

    /// M_k: C_2 on the diagonal, C_{3j+2} on the j-th superdiagonal, -1 below
    /// the diagonal. P_k: M_k with every C_m in the last column replaced by C_{m-1}.
    static CatalanMatrix build(CatalanKind kind, std::size_t k)
    {
        CatalanMatrix m{kind, k, std::vector<std::vector<BigInt>>(k, std::vector<BigInt>(k, 0))};
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) {
                if (c + 1 == r) {
                    m.entries[r][c] = -1;
                } else if (c >= r) {
                    unsigned idx = static_cast<unsigned>(3 * (c - r) + 2);
                    if (kind == CatalanKind::P && c + 1 == k) --idx;
                    m.entries[r][c] = catalan(idx);
                }
            }
        return m;
    }
};

/// Fraction-free Gaussian elimination; exact for integer matrices.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw InvalidInput("determinant of a non-square matrix");
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// det(M_k) = sum_{j=0}^{k-1} C_{2+3j} det(M_{k-j-1}), det(M_0) = 1.
inline std::vector<BigInt> det_M_by_recursion(std::size_t kmax)
{
    std::vector<BigInt> d{1};
    for (std::size_t k = 1; k <= kmax; ++k) {
        BigInt s = 0;
        for (std::size_t j = 0; j < k; ++j) s += catalan(static_cast<unsigned>(2 + 3 * j)) * d[k - j - 1];
        d.push_back(s);
    }
    return d;
}

/// det(P_k) = C_{3k-2} + sum_{j=0}^{k-2} C_{2+3j} det(P_{k-j-1}), det(P_0) = 1.
inline std::vector<BigInt> det_P_by_recursion(std::size_t kmax)
{
    std::vector<BigInt> d{1};
    for (std::size_t k = 1; k <= kmax; ++k) {
        BigInt s = catalan(static_cast<unsigned>(3 * k - 2));
        for (std::size_t j = 0; j + 2 <= k; ++j) s += catalan(static_cast<unsigned>(2 + 3 * j)) * d[k - j - 1];
        d.push_back(s);
    }
    return d;
}

namespace detail {
inline BigInt det_both_routes(CatalanKind kind, std::size_t k)
{
    const BigInt by_matrix = bareiss_determinant(CatalanMatrix::build(kind, k).entries);
    const BigInt by_rec = kind == CatalanKind::M ? det_M_by_recursion(k)[k] : det_P_by_recursion(k)[k];
    if (by_matrix != by_rec)
        throw ConsistencyError(std::string("det(") + (kind == CatalanKind::M ? "M" : "P") + "_" + std::to_string(k) +
                               "): matrix gives " + by_matrix.str() + ", recursion gives " + by_rec.str());
    return by_matrix;
}
} // namespace detail

inline BigInt det_M(std::size_t k) { return detail::det_both_routes(CatalanKind::M, k); }
inline BigInt det_P(std::size_t k) { return detail::det_both_routes(CatalanKind::P, k); }

// ---------------------------------------------------------------------------

/// A finite poset on {0..n-1}, n <= 64, stored as its transitive closure.
class Poset {
public:
    Poset() = default;

    /// Builds the order generated by the relations a < b. Throws on a cycle.
    Poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less) : below_(n, 0)
    {
        if (n > 64) throw InvalidInput("Poset: at most 64 elements");
        for (const auto& [a, b] : less) {
            if (a >= n || b >= n) throw InvalidInput("Poset: relation references an element out of range");
            below_[b] |= std::uint64_t{1} << a;
        }
        // Warshall closure on bitsets.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (below_[i] >> k & 1) below_[i] |= below_[k];
        for (std::size_t i = 0; i < n; ++i)
            if (below_[i] >> i & 1)
                throw ConsistencyError("Poset: relations contain a cycle through element " + std::to_string(i + 1));
    }

    std::size_t size() const { return below_.size(); }
    bool less(std::size_t a, std::size_t b) const { return below_[b] >> a & 1; }
    std::uint64_t below_mask(std::size_t b) const { return below_[b]; }

    /// Hasse diagram edges (a, b): a < b with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t b = 0; b < size(); ++b)
            for (std::size_t a = 0; a < size(); ++a) {
                if (!less(a, b)) continue;
                bool direct = true;
                for (std::size_t c = 0; c < size() && direct; ++c)
                    if (less(a, c) && less(c, b)) direct = false;
                if (direct) out.emplace_back(a, b);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<std::size_t> minimal_elements() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i)
            if (below_[i] == 0) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> maximal_elements() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < size(); ++i) {
            bool top = true;
            for (std::size_t j = 0; j < size() && top; ++j)
                if (less(i, j)) top = false;
            if (top) out.push_back(i);
        }
        return out;
    }

    /// The subposet on `keep`, renumbered in the given order.
    Poset induced(const std::vector<std::size_t>& keep) const
    {
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j)
                if (less(keep[i], keep[j])) rel.emplace_back(i, j);
        return Poset(keep.size(), rel);
    }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::uint64_t> below_; // bit a of below_[b]: a < b
};

inline Poset chain_poset(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
    return Poset(n, rel);
}

inline Poset antichain_poset(std::size_t n) { return Poset(n, {}); }

/// Two chains a_1<...<a_n and b_1<...<b_n with a_i < b_i.
inline Poset ladder_poset(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) {
            rel.emplace_back(i, i + 1);
            rel.emplace_back(n + i, n + i + 1);
        }
        rel.emplace_back(i, n + i);
    }
    return Poset(2 * n, rel);
}

/// Cells 0..length-1 ordered by the constraints of a tau-match at each
/// 1-based start: cell s+r-1 < cell s+t-1 whenever tau_r < tau_t.
inline Poset build_match_poset(const Permutation& tau, const std::vector<std::size_t>& starts, std::size_t length)
{
    if (tau.empty() || tau[0] != 1) throw InvalidInput("build_match_poset: tau must start with 1");
    const Permutation inv = tau.inverse();
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t s : starts) {
        if (s < 1 || s - 1 + tau.size() > length)
            throw InvalidInput("build_match_poset: match at " + std::to_string(s) + " does not fit in length " +
                               std::to_string(length));
        for (std::size_t v = 1; v < tau.size(); ++v)
            rel.emplace_back(s - 1 + static_cast<std::size_t>(inv[v - 1] - 1), s - 1 + static_cast<std::size_t>(inv[v] - 1));
    }
    return Poset(length, rel);
}

/// Removes a unique minimum `bottoms` times, then a unique maximum `tops`
/// times. Throws ConsistencyError if the element to remove is not unique.
inline Poset strip_forced(const Poset& p, std::size_t bottoms, std::size_t tops)
{
    Poset cur = p;
    auto drop = [&](bool bottom) {
        const auto ext = bottom ? cur.minimal_elements() : cur.maximal_elements();
        if (ext.size() != 1)
            throw ConsistencyError(std::string("strip_forced: poset has ") + std::to_string(ext.size()) + " " +
                                   (bottom ? "minimal" : "maximal") + " elements, expected a forced one");
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < cur.size(); ++i)
            if (i != ext[0]) keep.push_back(i);
        cur = cur.induced(keep);
    };
    for (std::size_t i = 0; i < bottoms; ++i) drop(true);
    for (std::size_t i = 0; i < tops; ++i) drop(false);
    return cur;
}

inline constexpr std::size_t kMaxLinearExtensionSize = 24;

/// Number of linear extensions, by counting downsets level by level.
inline BigInt count_linear_extensions(const Poset& p)
{
    const std::size_t n = p.size();
    if (n > kMaxLinearExtensionSize)
        throw InvalidInput("count_linear_extensions: " + std::to_string(n) + " elements exceeds the limit of " +
                           std::to_string(kMaxLinearExtensionSize));
    using Count = unsigned __int128;
    std::unordered_map<std::uint64_t, Count> level{{0, 1}};
    for (std::size_t step = 0; step < n; ++step) {
        std::unordered_map<std::uint64_t, Count> next;
        for (const auto& [mask, cnt] : level)
            for (std::size_t v = 0; v < n; ++v) {
                const std::uint64_t bit = std::uint64_t{1} << v;
                if (!(mask & bit) && (p.below_mask(v) & ~mask) == 0) next[mask | bit] += cnt;
            }
        level = std::move(next);
    }
    const Count total = level.empty() ? 0 : level.begin()->second;
    BigInt r = static_cast<std::uint64_t>(total >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(total);
    return r;
}

/// One cover pair per line, elements 1-based.
inline std::string to_edge_list(const Poset& p)
{
    std::string out;
    for (const auto& [a, b] : p.covers()) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

/// 1, 2a, 2, 2a-1, ..., a, a+1.
inline Permutation tau_a_pattern(std::size_t a)
{
    if (a < 2) throw InvalidInput("tau_a_pattern: a must be >= 2");
    std::vector<int> w;
    for (std::size_t i = 1; i <= a; ++i) {
        w.push_back(static_cast<int>(i));
        w.push_back(static_cast<int>(2 * a + 1 - i));
    }
    return Permutation(std::move(w));
}

// ---------------------------------------------------------------------------

struct SequenceCheck {
    char which = 'A';      // 'A' against det(M), 'B' against det(P)
    std::size_t index = 0; // A_index / B_index
    std::size_t poset_size = 0;
    BigInt extensions = 0;
    BigInt determinant = 0;
    bool pass = false;
    std::string note;
};

/// 142536 match schedule: pairs of starts 6i+1, 6i+3 for i < pairs, plus a
/// lone start 6*pairs+1 when `trailing`.
inline std::vector<std::size_t> schedule_142536(std::size_t pairs, bool trailing)
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < pairs; ++i) {
        s.push_back(6 * i + 1);
        s.push_back(6 * i + 3);
    }
    if (trailing) s.push_back(6 * pairs + 1);
    return s;
}

/// A_{k+1} from the poset of 142536-matches at 1,3,7,9,...,6k+1,6k+3 on 6k+8
/// cells and B_{k+1} from matches at 1,3,...,6k+1 on 6k+6 cells, each with two
/// forced bottoms and two forced tops removed (6k+4 and 6k+2 elements).
inline std::vector<SequenceCheck> verify_A_B_sequences(std::size_t kmax)
{
    const Permutation tau = Permutation::parse("142536");
    std::vector<SequenceCheck> out;
    for (std::size_t k = 0; k <= kmax; ++k) {
        for (char which : {'A', 'B'}) {
            SequenceCheck c;
            c.which = which;
            c.index = k + 1;
            try {
                const Poset full = which == 'A' ? build_match_poset(tau, schedule_142536(k + 1, false), 6 * k + 8)
                                                : build_match_poset(tau, schedule_142536(k, true), 6 * k + 6);
                const Poset bar = strip_forced(full, 2, 2);
                c.poset_size = bar.size();
                c.extensions = count_linear_extensions(bar);
                c.determinant = which == 'A' ? det_M(k + 1) : det_P(k + 1);
                c.pass = c.extensions == c.determinant;
            } catch (const std::exception& e) {
                c.pass = false;
                c.note = e.what();
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace patlab
