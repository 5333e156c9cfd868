#pragma once

// Slow, direct implementations used only as test oracles. They share no code
// with the library beyond the BigInt / Rational typedefs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "patlab/bigint.hpp"

namespace oracle {

using Word = std::vector<int>;
using patlab::BigInt;
using patlab::Rational;

/// Rank of each entry among the entries, by counting smaller ones.
inline Word red(const Word& w)
{
    Word r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int smaller = 0;
        for (int v : w) smaller += v < w[i];
        r[i] = smaller + 1;
    }
    return r;
}

inline bool has_match(const Word& s, const std::vector<Word>& gamma)
{
    for (const auto& t : gamma)
        for (std::size_t i = 0; i + t.size() <= s.size(); ++i)
            if (red(Word(s.begin() + i, s.begin() + i + t.size())) == t) return true;
    return false;
}

/// (start, end) 0-based inclusive, all matches.
inline std::vector<std::pair<std::size_t, std::size_t>> matches(const Word& s, const std::vector<Word>& gamma)
{
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& t : gamma)
        for (std::size_t i = 0; i + t.size() <= s.size(); ++i)
            if (red(Word(s.begin() + i, s.begin() + i + t.size())) == t) out.insert({i, i + t.size() - 1});
    return {out.begin(), out.end()};
}

inline std::vector<Word> all_perms(std::size_t n)
{
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<Word> avoiders(std::size_t n, const std::vector<Word>& gamma)
{
    std::vector<Word> out;
    for (auto& w : all_perms(n))
        if (!has_match(w, gamma)) out.push_back(w);
    return out;
}

inline int des(const Word& w)
{
    int d = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
    return d;
}

inline int lrmin(const Word& w)
{
    int c = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < j; ++i) ok = ok && w[i] > w[j];
        c += ok;
    }
    return c;
}

/// (lrmin, 1+des) -> count.
inline std::map<std::pair<int, int>, std::int64_t> nm_table(std::size_t n, const std::vector<Word>& gamma)
{
    std::map<std::pair<int, int>, std::int64_t> t;
    for (const auto& w : avoiders(n, gamma)) ++t[{lrmin(w), 1 + des(w)}];
    return t;
}

/// Dense coefficient list in y, index = exponent.
using Dense = std::vector<BigInt>;

inline Dense trim(Dense d)
{
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

inline Dense nm_y(std::size_t n, const std::vector<Word>& gamma)
{
    if (n == 0) return {1};
    Dense d(n + 1, 0);
    for (const auto& [k, c] : nm_table(n, gamma)) d[k.second] += c;
    return trim(d);
}

/// U_0..U_N by solving sum_{k} C(n,k) NM_k U_{n-k} = [n == 0] for U_n.
inline std::vector<Dense> u_sequence(const std::vector<Word>& gamma, std::size_t N)
{
    std::vector<Dense> nm;
    for (std::size_t n = 0; n <= N; ++n) nm.push_back(nm_y(n, gamma));
    std::vector<Dense> u{{1}};
    for (std::size_t n = 1; n <= N; ++n) {
        Dense acc(2 * n + 2, 0);
        for (std::size_t k = 1; k <= n; ++k) {
            const BigInt c = patlab::binomial(static_cast<long long>(n), static_cast<long long>(k));
            for (std::size_t i = 0; i < nm[k].size(); ++i)
                for (std::size_t j = 0; j < u[n - k].size(); ++j) acc[i + j] -= c * nm[k][i] * u[n - k][j];
        }
        u.push_back(trim(acc));
    }
    return u;
}

inline BigInt laplace_det(const std::vector<std::vector<BigInt>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    BigInt total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BigInt> row;
            for (std::size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(row);
        }
        const BigInt term = m[0][c] * laplace_det(minor);
        total += c % 2 == 0 ? term : BigInt(-term);
    }
    return total;
}

/// Orderings of 0..n-1 compatible with every (a, b) meaning a before b.
inline std::uint64_t linear_extensions(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t count = 0;
    do {
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
        bool ok = true;
        for (const auto& [a, b] : rel) ok = ok && pos[a] < pos[b];
        count += ok;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

inline std::vector<std::vector<std::size_t>> compositions(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    std::function<void(std::size_t, std::vector<std::size_t>&)> rec = [&](std::size_t rest, std::vector<std::size_t>& cur) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 1; b <= rest; ++b) {
            cur.push_back(b);
            rec(rest - b, cur);
            cur.pop_back();
        }
    };
    std::vector<std::size_t> cur;
    rec(n, cur);
    return out;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240607);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Word random_perm(std::size_t n)
{
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng());
    return w;
}

} // namespace oracle
