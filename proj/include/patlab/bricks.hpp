#pragma once

// Brick tabloids, filled labeled brick tabloids (B, sigma), the split/merge
// involution J and the checks on its fixed points.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "poly.hpp"

namespace patlab {

/// A composition (b_1, ..., b_k) of n; each brick covers consecutive cells.
class BrickTabloid {
public:
    BrickTabloid() = default;
    explicit BrickTabloid(std::vector<std::size_t> bricks) : bricks_(std::move(bricks))
    {
        for (std::size_t b : bricks_)
            if (b == 0) throw InvalidInput("brick lengths must be positive");
    }

    /// Bit c (c < n-1) set means a brick ends at cell c (0-based).
    static BrickTabloid from_cuts(std::size_t n, std::uint64_t cuts)
    {
        std::vector<std::size_t> b;
        std::size_t start = 0;
        for (std::size_t c = 0; c < n; ++c)
            if (c + 1 == n || (cuts >> c & 1)) {
                b.push_back(c + 1 - start);
                start = c + 1;
            }
        return BrickTabloid(std::move(b));
    }

    static BrickTabloid parse(std::string_view text)
    {
        std::vector<std::size_t> b;
        std::string cur;
        for (char ch : std::string(text) + ",") {
            if (std::isdigit(static_cast<unsigned char>(ch)))
                cur += ch;
            else if (ch == ',' || ch == ' ' || ch == '(' || ch == ')') {
                if (!cur.empty()) b.push_back(std::stoul(cur));
                cur.clear();
            } else {
                throw InvalidInput("bad character in brick list: " + std::string(text));
            }
        }
        if (b.empty()) throw InvalidInput("empty brick list");
        return BrickTabloid(std::move(b));
    }

    const std::vector<std::size_t>& bricks() const { return bricks_; }
    std::size_t count() const { return bricks_.size(); }
    std::size_t cells() const { return std::accumulate(bricks_.begin(), bricks_.end(), std::size_t{0}); }

    /// 0-based first cell of each brick.
    std::vector<std::size_t> starts() const
    {
        std::vector<std::size_t> s;
        std::size_t at = 0;
        for (std::size_t b : bricks_) {
            s.push_back(at);
            at += b;
        }
        return s;
    }

    /// Brick index of every cell.
    std::vector<std::size_t> brick_of_cell() const
    {
        std::vector<std::size_t> r;
        for (std::size_t i = 0; i < bricks_.size(); ++i) r.insert(r.end(), bricks_[i], i);
        return r;
    }

    /// The multiset of brick lengths, as a partition in weakly decreasing order.
    std::vector<std::size_t> shape() const
    {
        auto s = bricks_;
        std::sort(s.rbegin(), s.rend());
        return s;
    }

    friend bool operator==(const BrickTabloid&, const BrickTabloid&) = default;

private:
    std::vector<std::size_t> bricks_;
};

struct SignedWeight {
    int sign = 1;
    unsigned ypower = 0;
    YPoly poly() const { return YPoly::monomial(BigInt(sign), ypower); }
    friend bool operator==(const SignedWeight&, const SignedWeight&) = default;
};

/// A pair (B, sigma). Labels are derived: y on a cell whose successor is in
/// the same brick and smaller, -y on the last cell of each brick.
struct FilledTabloid {
    BrickTabloid tabloid;
    Permutation sigma;

    FilledTabloid(BrickTabloid b, Permutation s) : tabloid(std::move(b)), sigma(std::move(s))
    {
        if (tabloid.cells() != sigma.size())
            throw InvalidInput("brick lengths sum to " + std::to_string(tabloid.cells()) +
                               " but the permutation has length " + std::to_string(sigma.size()));
    }

    std::size_t size() const { return sigma.size(); }

    /// 0-based cells labeled y.
    std::vector<std::size_t> y_cells() const
    {
        std::vector<std::size_t> out;
        const auto owner = tabloid.brick_of_cell();
        for (std::size_t c = 0; c + 1 < size(); ++c)
            if (owner[c] == owner[c + 1] && sigma[c] > sigma[c + 1]) out.push_back(c);
        return out;
    }

    SignedWeight weight() const
    {
        const std::size_t k = tabloid.count();
        return {k % 2 == 0 ? 1 : -1, static_cast<unsigned>(y_cells().size() + k)};
    }

    friend bool operator==(const FilledTabloid&, const FilledTabloid&) = default;
};

/// Rebuilds sigma from the set-partition description: brick i holds the
/// values of sets[i], arranged so that they reduce to perms[i].
inline FilledTabloid from_set_partition(const BrickTabloid& b, const std::vector<std::vector<int>>& sets,
                                        const std::vector<Permutation>& perms)
{
    if (sets.size() != b.count() || perms.size() != b.count())
        throw InvalidInput("from_set_partition: need one set and one permutation per brick");
    std::vector<int> word;
    for (std::size_t i = 0; i < b.count(); ++i) {
        if (sets[i].size() != b.bricks()[i] || perms[i].size() != b.bricks()[i])
            throw InvalidInput("from_set_partition: brick " + std::to_string(i + 1) + " size mismatch");
        std::vector<int> sorted = sets[i];
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t c = 0; c < sorted.size(); ++c) word.push_back(sorted[perms[i][c] - 1]);
    }
    return FilledTabloid(b, Permutation(std::move(word)));
}

// ---------------------------------------------------------------------------
// Counting brick tabloids

/// Number of lambda-brick tabloids of shape (n): the distinct orderings of lambda.
inline BigInt count_brick_tabloids(const std::vector<std::size_t>& lambda, std::size_t n)
{
    std::size_t sum = 0;
    std::map<std::size_t, unsigned> mult;
    for (std::size_t part : lambda) {
        if (part == 0) throw InvalidInput("partition parts must be positive");
        sum += part;
        ++mult[part];
    }
    if (sum != n) throw InvalidInput("lambda is not a partition of " + std::to_string(n));
    BigInt r = factorial(static_cast<unsigned>(lambda.size()));
    for (const auto& [part, m] : mult) r /= factorial(m);
    return r;
}

/// Calls visit(lambda) for every partition of n, parts weakly decreasing.
template <class F>
void for_each_partition(std::size_t n, F&& visit)
{
    std::vector<std::size_t> parts;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t maxpart) {
        if (rest == 0) {
            visit(static_cast<const std::vector<std::size_t>&>(parts));
            return;
        }
        for (std::size_t p = std::min(rest, maxpart); p >= 1; --p) {
            parts.push_back(p);
            rec(rest - p, p);
            parts.pop_back();
        }
    };
    rec(n, n);
}

/// U_n grouped by brick shape: sum over lambda |- n of
/// (-1)^l(lambda) B_{lambda,n} (n; lambda) prod NM_{lambda_i}(1,y).
/// Independent of the composition loop in reciprocity.
inline YPoly u_via_partition_sum(const std::vector<YPoly>& nm, std::size_t n)
{
    if (n == 0) return YPoly(1);
    if (nm.size() <= n) throw InvalidInput("u_via_partition_sum: NM data shorter than n");
    YPoly total;
    const BigInt nfact = factorial(static_cast<unsigned>(n));
    for_each_partition(n, [&](const std::vector<std::size_t>& lambda) {
        YPoly prod(1);
        BigInt denom = 1;
        for (std::size_t part : lambda) {
            prod = prod * nm[part];
            denom *= factorial(static_cast<unsigned>(part));
        }
        BigInt coeff = count_brick_tabloids(lambda, n) * (nfact / denom);
        if (lambda.size() % 2) coeff = -coeff;
        total += prod * coeff;
    });
    return total;
}

// ---------------------------------------------------------------------------
// O_{Gamma,n} and the involution

namespace detail {

inline bool window_inside(const MatchWindow& w, std::size_t lo, std::size_t hi) { return w.first >= lo && w.last <= hi; }

inline bool in_O(const BrickTabloid& b, const std::vector<MatchWindow>& windows)
{
    const auto owner = b.brick_of_cell();
    for (const auto& w : windows)
        if (owner[w.first] == owner[w.last]) return false;
    return true;
}

} // namespace detail

inline bool in_O(const FilledTabloid& o, const PatternSet& g)
{
    return detail::in_O(o.tabloid, match_windows(o.sigma, g));
}

/// Calls visit(o) for every o in O_{Gamma,n}: permutations in lexicographic
/// order, and for each permutation the compositions in cut-mask order.
template <class F>
void for_each_O(const PatternSet& g, std::size_t n, F&& visit)
{
    if (n == 0) return;
    if (n > 12) throw InvalidInput("for_each_O: n too large for exhaustive enumeration");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    const std::uint64_t ncomp = std::uint64_t{1} << (n - 1);
    do {
        const Permutation sigma(w);
        const auto windows = match_windows(sigma, g);
        // A window [a,b] is broken iff some cut lies in cells a..b-1.
        std::vector<std::uint64_t> need;
        for (const auto& mw : windows) need.push_back(((std::uint64_t{1} << mw.last) - 1) & ~((std::uint64_t{1} << mw.first) - 1));
        for (std::uint64_t cuts = 0; cuts < ncomp; ++cuts) {
            bool ok = true;
            for (std::uint64_t m : need)
                if (!(cuts & m)) {
                    ok = false;
                    break;
                }
            if (ok) visit(FilledTabloid(BrickTabloid::from_cuts(n, cuts), sigma));
        }
    } while (std::next_permutation(w.begin(), w.end()));
}

inline std::vector<FilledTabloid> enumerate_O(const PatternSet& g, std::size_t n)
{
    std::vector<FilledTabloid> out;
    for_each_O(g, n, [&](const FilledTabloid& o) { out.push_back(o); });
    return out;
}

enum class JCase { Fixed, Split, Merge };

struct JStep {
    FilledTabloid result;
    JCase kind = JCase::Fixed;
    std::size_t cell = 0; // 0-based cell c where the case applied
};

/// One application of J with the case that fired. Throws if o is not in O.
inline JStep involution_step(const PatternSet& g, const FilledTabloid& o)
{
    const auto windows = match_windows(o.sigma, g);
    const auto& b = o.tabloid.bricks();
    if (!detail::in_O(o.tabloid, windows)) throw InvalidInput("involution_J: object has a match inside a single brick");
    const auto starts = o.tabloid.starts();
    const auto owner = o.tabloid.brick_of_cell();
    const auto& s = o.sigma;
    const std::size_t n = o.size();

    auto any_window_in = [&](std::size_t lo, std::size_t hi) {
        return std::any_of(windows.begin(), windows.end(), [&](const MatchWindow& w) { return detail::window_inside(w, lo, hi); });
    };

    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t j = owner[c];
        const std::size_t end = starts[j] + b[j] - 1;
        if (c < end && s[c] > s[c + 1]) {
            bool split = j == 0 || s[starts[j] - 1] < s[starts[j]];
            if (!split) split = any_window_in(starts[j - 1], c);
            if (split) {
                std::vector<std::size_t> nb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
                nb.push_back(c - starts[j] + 1);
                nb.push_back(end - c);
                nb.insert(nb.end(), b.begin() + static_cast<std::ptrdiff_t>(j) + 1, b.end());
                return {FilledTabloid(BrickTabloid(std::move(nb)), s), JCase::Split, c};
            }
        }
        if (c == end && c + 1 < n && s[c] > s[c + 1]) {
            const std::size_t hi = starts[j + 1] + b[j + 1] - 1;
            if (!any_window_in(starts[j], hi)) {
                std::vector<std::size_t> nb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(j));
                nb.push_back(b[j] + b[j + 1]);
                nb.insert(nb.end(), b.begin() + static_cast<std::ptrdiff_t>(j) + 2, b.end());
                return {FilledTabloid(BrickTabloid(std::move(nb)), s), JCase::Merge, c};
            }
        }
    }
    return {o, JCase::Fixed, 0};
}

inline FilledTabloid involution_J(const PatternSet& g, const FilledTabloid& o) { return involution_step(g, o).result; }

inline bool is_fixed_point(const PatternSet& g, const FilledTabloid& o) { return involution_step(g, o).kind == JCase::Fixed; }

inline std::vector<FilledTabloid> fixed_points(const PatternSet& g, std::size_t n)
{
    std::vector<FilledTabloid> out;
    for_each_O(g, n, [&](const FilledTabloid& o) {
        if (is_fixed_point(g, o)) out.push_back(o);
    });
    return out;
}

/// Sum of sgn * W over a collection.
template <class Range>
YPoly signed_weight_sum(const Range& objects)
{
    YPoly total;
    for (const auto& o : objects) total += o.weight().poly();
    return total;
}

// ---------------------------------------------------------------------------
// Fixed-point conditions

struct LemmaCheck {
    bool applies = true;
    bool pass = true;
    std::vector<std::size_t> witness_cells; // 1-based
    std::string note;
};

struct LemmaReport {
    LemmaCheck a; // brick with no descent into it carries no y label
    LemmaCheck b; // brick with a descent into it: match inside b_{i-1} u b_i, at most kmax-1 y labels
    LemmaCheck c; // first cells increase (only under the descent-bottom hypothesis)
    bool all_pass() const { return a.pass && b.pass && (!c.applies || c.pass); }
};

inline LemmaReport check_lemma_conditions(const PatternSet& g, const FilledTabloid& o)
{
    LemmaReport r;
    const auto windows = match_windows(o.sigma, g);
    const auto starts = o.tabloid.starts();
    const auto& b = o.tabloid.bricks();
    const auto& s = o.sigma;
    const std::size_t kmax = g.max_descents();

    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t lo = starts[i];
        const std::size_t hi = lo + b[i] - 1;
        std::vector<std::size_t> ys;
        for (std::size_t c = lo; c < hi; ++c)
            if (s[c] > s[c + 1]) ys.push_back(c + 1);
        if (i == 0 || s[lo - 1] < s[lo]) {
            if (!ys.empty()) {
                r.a.pass = false;
                r.a.witness_cells.insert(r.a.witness_cells.end(), ys.begin(), ys.end());
            }
        } else {
            const bool has_match = std::any_of(windows.begin(), windows.end(), [&](const MatchWindow& w) {
                return detail::window_inside(w, starts[i - 1], hi);
            });
            if (!has_match || ys.size() + 1 > kmax) {
                r.b.pass = false;
                r.b.witness_cells.push_back(lo + 1);
            }
        }
    }

    r.c.applies = g.descent_bottoms_hypothesis();
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (s[starts[i]] > s[starts[i + 1]]) {
            r.c.pass = false;
            r.c.witness_cells.push_back(starts[i + 1] + 1);
        }
    if (!r.c.applies) r.c.note = "descent-bottom hypothesis does not hold for this pattern set";
    return r;
}

/// "[1 6|-y][4 5:y 2|-y]": cell values, ":y" after y-labeled cells, "|-y" on brick ends.
inline std::string render(const FilledTabloid& o)
{
    std::string out;
    const auto starts = o.tabloid.starts();
    const auto& b = o.tabloid.bricks();
    for (std::size_t i = 0; i < b.size(); ++i) {
        out += '[';
        for (std::size_t c = starts[i]; c < starts[i] + b[i]; ++c) {
            if (c > starts[i]) out += ' ';
            out += std::to_string(o.sigma[c]);
            if (c + 1 == starts[i] + b[i])
                out += "|-y";
            else if (o.sigma[c] > o.sigma[c + 1])
                out += ":y";
        }
        out += ']';
    }
    return out;
}

} // namespace patlab
