#pragma once

// Permutations, descent / left-to-right-minimum statistics, consecutive
// pattern matching and enumeration of pattern avoiders.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "poly.hpp"

namespace patlab {

/// A permutation of {1..n} in one-line notation. Indexing is 0-based.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word))
    {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v])
                throw InvalidInput("not a permutation of 1.." + std::to_string(word_.size()) + ": " + str_of(word_));
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<int> w(n);
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    /// "14253", "1 4 2 5 3" or "[1,10,2,...]".
    static Permutation parse(std::string_view text)
    {
        std::vector<int> w;
        std::string_view t = text;
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        if (t.empty()) throw InvalidInput("empty permutation text");
        const bool bracketed = t.front() == '[';
        if (bracketed) {
            if (t.back() != ']') throw InvalidInput("unterminated bracket in permutation: " + std::string(text));
            t = t.substr(1, t.size() - 2);
        }
        const bool separated = bracketed || t.find_first_of(" ,") != std::string_view::npos;
        if (separated) {
            std::string cur;
            auto flush = [&] {
                if (!cur.empty()) w.push_back(std::stoi(cur));
                cur.clear();
            };
            for (char ch : t) {
                if (std::isdigit(static_cast<unsigned char>(ch)))
                    cur += ch;
                else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
                    flush();
                else
                    throw InvalidInput("bad character in permutation: " + std::string(text));
            }
            flush();
        } else {
            for (char ch : t) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw InvalidInput("bad character in permutation: " + std::string(text));
                w.push_back(ch - '0');
            }
        }
        return Permutation(std::move(w));
    }

    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }
    int operator[](std::size_t i) const { return word_[i]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const
    {
        std::vector<int> inv(word_.size());
        for (std::size_t i = 0; i < word_.size(); ++i) inv[word_[i] - 1] = static_cast<int>(i + 1);
        return Permutation(std::move(inv));
    }

    /// Digit word when every entry is <= 9, bracket form otherwise.
    std::string str() const { return str_of(word_); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    static std::string str_of(const std::vector<int>& w)
    {
        const bool small = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v <= 9; });
        std::string s;
        if (small) {
            for (int v : w) s += static_cast<char>('0' + v);
            return s;
        }
        s = "[";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
        return s + "]";
    }

    std::vector<int> word_;
};

/// Order-isomorphic permutation of a word of distinct positive integers.
inline Permutation reduce(const std::vector<int>& word)
{
    std::vector<std::size_t> idx(word.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<int> out(word.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (word[idx[r]] <= 0) throw InvalidInput("reduce: entries must be positive");
        if (r > 0 && word[idx[r]] == word[idx[r - 1]])
            throw InvalidInput("reduce: duplicate entry " + std::to_string(word[idx[r]]));
        out[idx[r]] = static_cast<int>(r + 1);
    }
    return Permutation(std::move(out));
}

/// 1-based positions i with p_i > p_{i+1}.
inline std::vector<std::size_t> descents(const Permutation& p)
{
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] > p[i + 1]) d.push_back(i + 1);
    return d;
}

inline std::size_t des(const Permutation& p) { return descents(p).size(); }

/// Values strictly below every earlier value.
inline std::vector<int> lr_minima(const Permutation& p)
{
    if (p.empty()) throw InvalidInput("lr_minima: empty permutation");
    std::vector<int> out;
    for (int v : p.word())
        if (out.empty() || v < out.back()) out.push_back(v);
    return out;
}

/// A set of consecutive patterns, stored sorted and deduplicated.
class PatternSet {
public:
    PatternSet() = default;

    explicit PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns))
    {
        if (patterns_.empty()) throw InvalidInput("pattern set must be nonempty");
        std::sort(patterns_.begin(), patterns_.end());
        patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
        for (const auto& t : patterns_) {
            if (t.size() < 2) throw InvalidInput("patterns must have length >= 2: " + t.str());
            std::vector<int> order(t.size()); // positions sorted by value
            for (std::size_t i = 0; i < t.size(); ++i) order[t[i] - 1] = static_cast<int>(i);
            orders_.push_back(std::move(order));
        }
    }

    /// Comma-separated list; bracketed patterns may contain commas.
    static PatternSet parse(std::string_view text)
    {
        std::vector<Permutation> ps;
        std::string cur;
        int depth = 0;
        for (char ch : text) {
            if (ch == '[') ++depth;
            if (ch == ']') --depth;
            if (ch == ',' && depth == 0) {
                ps.push_back(Permutation::parse(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (depth != 0) throw InvalidInput("unbalanced brackets in pattern set: " + std::string(text));
        ps.push_back(Permutation::parse(cur));
        return PatternSet(std::move(ps));
    }

    const std::vector<Permutation>& patterns() const { return patterns_; }
    std::size_t size() const { return patterns_.size(); }

    bool starts_with_one() const
    {
        return std::all_of(patterns_.begin(), patterns_.end(), [](const Permutation& t) { return t[0] == 1; });
    }
    std::size_t min_length() const
    {
        std::size_t m = patterns_.front().size();
        for (const auto& t : patterns_) m = std::min(m, t.size());
        return m;
    }
    std::size_t max_length() const
    {
        std::size_t m = 0;
        for (const auto& t : patterns_) m = std::max(m, t.size());
        return m;
    }
    std::size_t max_descents() const
    {
        std::size_t m = 0;
        for (const auto& t : patterns_) m = std::max(m, des(t));
        return m;
    }

    /// Every pattern with j >= 1 descents has descent bottoms 2, 3, ..., j+1
    /// in left-to-right order.
    bool descent_bottoms_hypothesis() const
    {
        for (const auto& t : patterns_) {
            int expect = 2;
            for (std::size_t i : descents(t))
                if (t[i] != expect++) return false;
        }
        return true;
    }

    /// Does the window w[0..len) reduce to pattern k? Requires len == pattern length.
    bool window_matches(std::size_t k, const int* w) const
    {
        const auto& ord = orders_[k];
        for (std::size_t r = 1; r < ord.size(); ++r)
            if (w[ord[r - 1]] > w[ord[r]]) return false;
        return true;
    }

    /// Does some pattern match a window ending exactly at w[len-1]?
    bool any_match_ending_at(const int* w, std::size_t len) const
    {
        for (std::size_t k = 0; k < patterns_.size(); ++k) {
            const std::size_t m = patterns_[k].size();
            if (m <= len && window_matches(k, w + len - m)) return true;
        }
        return false;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < patterns_.size(); ++i) s += (i ? "," : "") + patterns_[i].str();
        return s;
    }

    friend bool operator==(const PatternSet& a, const PatternSet& b) { return a.patterns_ == b.patterns_; }

private:
    std::vector<Permutation> patterns_;
    std::vector<std::vector<int>> orders_;
};

/// A pattern occurrence occupying cells [first, last] (0-based, inclusive).
struct MatchWindow {
    std::size_t first;
    std::size_t last;
    friend auto operator<=>(const MatchWindow&, const MatchWindow&) = default;
};

/// Every (start, length) occurrence of a pattern of g in p, sorted.
inline std::vector<MatchWindow> match_windows(const Permutation& p, const PatternSet& g)
{
    std::vector<MatchWindow> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const std::size_t m = g.patterns()[k].size();
        for (std::size_t i = 0; i + m <= p.size(); ++i)
            if (g.window_matches(k, p.word().data() + i)) out.push_back({i, i + m - 1});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Distinct 1-based starting positions of Gamma-matches.
inline std::vector<std::size_t> gamma_match_starts(const Permutation& p, const PatternSet& g)
{
    std::vector<std::size_t> s;
    for (const auto& w : match_windows(p, g))
        if (s.empty() || s.back() != w.first + 1) s.push_back(w.first + 1);
    return s;
}

struct PermStats {
    std::size_t des = 0;
    std::size_t lrmin = 0;
    std::size_t gamma_mch = 0;
};

inline PermStats stats(const Permutation& p, const PatternSet& g)
{
    return {des(p), p.empty() ? 0 : lr_minima(p).size(), gamma_match_starts(p, g).size()};
}

namespace detail {

struct AvoiderState {
    const PatternSet* g;
    std::size_t n;
    std::vector<int> prefix;
    std::vector<bool> used;
};

// F(prefix, des, lrmin) called once per completed avoider, in lexicographic order.
template <class F>
void avoider_dfs(AvoiderState& st, std::size_t des_count, std::size_t lrmin, int current_min, F& visit)
{
    const std::size_t len = st.prefix.size();
    if (len == st.n) {
        visit(st.prefix, des_count, lrmin);
        return;
    }
    for (int v = 1; v <= static_cast<int>(st.n); ++v) {
        if (st.used[v]) continue;
        st.prefix.push_back(v);
        if (!st.g->any_match_ending_at(st.prefix.data(), len + 1)) {
            st.used[v] = true;
            const bool d = len > 0 && st.prefix[len - 1] > v;
            const bool m = len == 0 || v < current_min;
            avoider_dfs(st, des_count + d, lrmin + m, m ? v : current_min, visit);
            st.used[v] = false;
        }
        st.prefix.pop_back();
    }
}

template <class F>
void avoiders_with_first(std::size_t n, const PatternSet& g, int first, F& visit)
{
    AvoiderState st{&g, n, {}, std::vector<bool>(n + 1, false)};
    st.prefix.reserve(n);
    st.prefix.push_back(first);
    st.used[first] = true;
    avoider_dfs(st, 0, 1, first, visit);
}

} // namespace detail

/// Calls visit(word, des, lrmin) for every avoider of length n in lexicographic order.
template <class F>
void for_each_avoider(std::size_t n, const PatternSet& g, F&& visit)
{
    if (n == 0) {
        const std::vector<int> empty;
        visit(empty, std::size_t{0}, std::size_t{0});
        return;
    }
    for (int first = 1; first <= static_cast<int>(n); ++first) detail::avoiders_with_first(n, g, first, visit);
}

inline std::vector<Permutation> enumerate_avoiders(std::size_t n, const PatternSet& g)
{
    std::vector<Permutation> out;
    for_each_avoider(n, g, [&](const std::vector<int>& w, std::size_t, std::size_t) { out.emplace_back(w); });
    return out;
}

/// counts[lrmin][1 + des] = number of avoiders of length n with those statistics.
using NmCounts = std::vector<std::vector<std::uint64_t>>;

/// Avoider statistics; work is split across threads by first entry.
inline NmCounts nm_counts(std::size_t n, const PatternSet& g, unsigned threads = 1)
{
    NmCounts total(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    if (n == 0) {
        total[0][0] = 1;
        return total;
    }
    auto run_block = [&](int first, NmCounts& acc) {
        auto visit = [&](const std::vector<int>&, std::size_t d, std::size_t m) { ++acc[m][1 + d]; };
        detail::avoiders_with_first(n, g, first, visit);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        for (int first = 1; first <= static_cast<int>(n); ++first) run_block(first, total);
        return total;
    }
    std::vector<NmCounts> partial(threads, total);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            for (int first = static_cast<int>(t) + 1; first <= static_cast<int>(n); first += static_cast<int>(threads))
                run_block(first, partial[t]);
        });
    for (auto& th : pool) th.join();
    for (const auto& part : partial)
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) total[i][j] += part[i][j];
    return total;
}

/// Sum over avoiders of x^lrmin y^(1+des). n = 0 gives the constant 1.
inline XYPoly nm_polynomial(std::size_t n, const PatternSet& g, unsigned threads = 1)
{
    if (n == 0) return XYPoly::constant(1);
    const NmCounts c = nm_counts(n, g, threads);
    XYPoly p;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (c[i][j]) p.add_term(static_cast<unsigned>(i), static_cast<unsigned>(j), BigInt(c[i][j]));
    return p;
}

} // namespace patlab
