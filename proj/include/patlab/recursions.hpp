#pragma once

// Recursions and closed forms for U_n(y), one per pattern family.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "poly.hpp"
#include "posets.hpp"

namespace patlab {

enum class FamilyId {
    G14253_15243, // {14253, 15243}
    T142536,      // {142536}
    TAU_A,        // {1 (2a) 2 (2a-1) ... a (a+1)}
    P1324,        // {1324}
    P1324_DOTS,   // {1 3 2 4 5 ... p}, p >= 5
    GAMMA_K1K2,   // 1 first, 2 at position k1+1, two increasing runs
    G1324_123,    // {1324, 123}
    G1324P_12P,   // {1 3 2 4 ... p, 1 2 ... p-1}, p >= 5
    GAMMA22S,     // Gamma_{2,2} plus the identity of length s+1
};

struct FamilySpec {
    FamilyId id = FamilyId::G14253_15243;
    unsigned a = 0;
    unsigned p = 0;
    unsigned k1 = 0;
    unsigned k2 = 0;
    unsigned s = 0;

    static FamilySpec g14253_15243() { return {FamilyId::G14253_15243}; }
    static FamilySpec t142536() { return {FamilyId::T142536}; }
    static FamilySpec tau_a(unsigned a) { return {FamilyId::TAU_A, a}; }
    static FamilySpec p1324() { return {FamilyId::P1324}; }
    static FamilySpec p1324_dots(unsigned p) { return {FamilyId::P1324_DOTS, 0, p}; }
    static FamilySpec gamma_k1k2(unsigned k1, unsigned k2) { return {FamilyId::GAMMA_K1K2, 0, 0, k1, k2}; }
    static FamilySpec g1324_123() { return {FamilyId::G1324_123}; }
    static FamilySpec g1324p_12p(unsigned p) { return {FamilyId::G1324P_12P, 0, p}; }
    static FamilySpec gamma22s(unsigned s) { return {FamilyId::GAMMA22S, 0, 0, 0, 0, s}; }

    void validate() const
    {
        switch (id) {
        case FamilyId::TAU_A:
            if (a < 2) throw InvalidInput("tau_a needs a >= 2");
            break;
        case FamilyId::P1324_DOTS:
        case FamilyId::G1324P_12P:
            if (p < 5) throw InvalidInput(name() + " needs p >= 5");
            break;
        case FamilyId::GAMMA_K1K2:
            if (k1 < 2 || k2 < 2) throw InvalidInput("gamma_k1k2 needs k1, k2 >= 2");
            break;
        case FamilyId::GAMMA22S:
            if (s < 2) throw InvalidInput("gamma22s needs s >= 2");
            break;
        default:
            break;
        }
    }

    std::string name() const
    {
        switch (id) {
        case FamilyId::G14253_15243: return "14253_15243";
        case FamilyId::T142536: return "142536";
        case FamilyId::TAU_A: return "tau_a(a=" + std::to_string(a) + ")";
        case FamilyId::P1324: return "1324";
        case FamilyId::P1324_DOTS: return "1324p(p=" + std::to_string(p) + ")";
        case FamilyId::GAMMA_K1K2: return "gamma_k1k2(k1=" + std::to_string(k1) + ",k2=" + std::to_string(k2) + ")";
        case FamilyId::G1324_123: return "1324_123";
        case FamilyId::G1324P_12P: return "1324p_12p(p=" + std::to_string(p) + ")";
        case FamilyId::GAMMA22S: return "gamma22s(s=" + std::to_string(s) + ")";
        }
        return "?";
    }

    /// Parses a CLI family name; parameters come from the matching fields.
    static FamilySpec from_name(const std::string& n, unsigned a, unsigned p, unsigned k1, unsigned k2, unsigned s)
    {
        FamilySpec f;
        if (n == "14253_15243") f = g14253_15243();
        else if (n == "142536") f = t142536();
        else if (n == "tau_a") f = tau_a(a);
        else if (n == "1324") f = p1324();
        else if (n == "1324p") f = p1324_dots(p);
        else if (n == "gamma_k1k2") f = gamma_k1k2(k1, k2);
        else if (n == "1324_123") f = g1324_123();
        else if (n == "1324p_12p") f = g1324p_12p(p);
        else if (n == "gamma22s") f = gamma22s(s);
        else
            throw InvalidInput("unknown family '" + n +
                               "' (expected 14253_15243, 142536, tau_a, 1324, 1324p, gamma_k1k2, 1324_123, 1324p_12p, gamma22s)");
        f.validate();
        return f;
    }

    PatternSet pattern_set() const
    {
        validate();
        auto ident = [](unsigned len) { return Permutation::identity(len); };
        auto p1324_to = [](unsigned len) {
            std::vector<int> w{1, 3, 2};
            for (unsigned v = 4; v <= len; ++v) w.push_back(static_cast<int>(v));
            return Permutation(std::move(w));
        };
        switch (id) {
        case FamilyId::G14253_15243: return PatternSet::parse("14253,15243");
        case FamilyId::T142536: return PatternSet::parse("142536");
        case FamilyId::TAU_A: return PatternSet({tau_a_pattern(a)});
        case FamilyId::P1324: return PatternSet::parse("1324");
        case FamilyId::P1324_DOTS: return PatternSet({p1324_to(p)});
        case FamilyId::GAMMA_K1K2: return gamma_k1k2_set(k1, k2);
        case FamilyId::G1324_123: return PatternSet::parse("1324,123");
        case FamilyId::G1324P_12P: return PatternSet({p1324_to(p), ident(p - 1)});
        case FamilyId::GAMMA22S: {
            auto pats = gamma_k1k2_set(2, 2).patterns();
            pats.push_back(ident(s + 1));
            return PatternSet(std::move(pats));
        }
        }
        throw InvalidInput("unsupported family");
    }

    /// All sigma in S_{k1+k2} with sigma_1 = 1, sigma_{k1+1} = 2, increasing on
    /// positions 1..k1 and on k1+1..k1+k2: choose which of 3..p join the first run.
    static PatternSet gamma_k1k2_set(unsigned k1, unsigned k2)
    {
        const unsigned p = k1 + k2;
        std::vector<Permutation> out;
        std::vector<int> rest;
        for (unsigned v = 3; v <= p; ++v) rest.push_back(static_cast<int>(v));
        std::vector<bool> pick(rest.size(), false);
        std::fill(pick.begin(), pick.begin() + (k1 - 1), true);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<int> first{1}, second{2};
            for (std::size_t i = 0; i < rest.size(); ++i) (pick[i] ? first : second).push_back(rest[i]);
            first.insert(first.end(), second.begin(), second.end());
            out.emplace_back(std::move(first));
        } while (std::next_permutation(pick.begin(), pick.end()));
        return PatternSet(std::move(out));
    }
};

/// Sign of the y^3 (n-3)(n-5)(n-6) U_{n-6} term of the {14253,15243} recursion.
enum class Sign123 { Plus, Minus };

struct RecursionOptions {
    Sign123 sign_123 = Sign123::Plus;
};

/// Memoized U_0, U_1, ... for one family. U_0 = 1, U_1 = -y.
class RecursionEngine {
public:
    explicit RecursionEngine(FamilySpec spec, RecursionOptions opts = {}) : spec_(spec), opts_(opts)
    {
        spec_.validate();
        memo_.push_back(YPoly(1));
        memo_.push_back(-YPoly::y());
    }

    const FamilySpec& spec() const { return spec_; }

    const YPoly& u(std::size_t n)
    {
        while (memo_.size() <= n) memo_.push_back(step(static_cast<long>(memo_.size())));
        return memo_[n];
    }

    /// U_0..U_upto.
    std::vector<YPoly> sequence(std::size_t upto)
    {
        u(upto);
        return {memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(upto + 1)};
    }

private:
    // U_j with U_j = 0 for j < 0.
    YPoly at(long j) const { return j < 0 ? YPoly() : memo_[static_cast<std::size_t>(j)]; }
    // U_j with U_j = 0 for j <= 0.
    YPoly at_pos(long j) const { return j <= 0 ? YPoly() : memo_[static_cast<std::size_t>(j)]; }

    static YPoly y() { return YPoly::y(); }
    static YPoly one_minus_y() { return YPoly(1) - YPoly::y(); }
    static YPoly ypow(unsigned e) { return YPoly::monomial(1, e); }
    static YPoly neg_ypow(unsigned e) { return YPoly::neg_y_pow(e); }
    static long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

    const BigInt& det_cached(std::vector<BigInt>& cache, CatalanKind kind, std::size_t k)
    {
        while (cache.size() <= k) cache.push_back(kind == CatalanKind::M ? det_M(cache.size()) : det_P(cache.size()));
        return cache[k];
    }

    YPoly step(long n)
    {
        switch (spec_.id) {
        case FamilyId::G14253_15243: return step_14253_15243(n);
        case FamilyId::T142536: return step_142536(n);
        case FamilyId::TAU_A: return step_tau_a(n);
        case FamilyId::P1324: return step_1324(n);
        case FamilyId::P1324_DOTS: return step_1324_dots(n);
        case FamilyId::GAMMA_K1K2: return step_k1k2(n);
        case FamilyId::G1324_123: return step_1324_123(n);
        case FamilyId::G1324P_12P: return step_1324p_12p(n);
        case FamilyId::GAMMA22S: return step_gamma22s(n);
        }
        throw InvalidInput("unsupported family");
    }

    // (1-y)U_{n-1} - y^2(n-3)(U_{n-4} + (1-y)(n-5)U_{n-5}) +/- y^3(n-3)(n-5)(n-6)U_{n-6}.
    // The correction terms read U_j = 0 for j <= 0; with U_0 = 1 they fail at n = 4.
    YPoly step_14253_15243(long n)
    {
        YPoly r = one_minus_y() * at(n - 1);
        const YPoly inner = at_pos(n - 4) + one_minus_y() * at_pos(n - 5) * BigInt(n - 5);
        r -= ypow(2) * inner * BigInt(n - 3);
        const YPoly last = ypow(3) * at_pos(n - 6) * BigInt((n - 3) * (n - 5) * (n - 6));
        if (opts_.sign_123 == Sign123::Plus)
            r += last;
        else
            r -= last;
        return r;
    }

    YPoly step_142536(long n)
    {
        YPoly r = one_minus_y() * at(n - 1);
        for (long k = 0; k <= floor_div(n - 8, 6); ++k)
            r += ypow(static_cast<unsigned>(3 * k + 3)) * at(n - 6 * k - 7) *
                 det_cached(det_m_, CatalanKind::M, static_cast<std::size_t>(k + 1));
        for (long k = 0; k <= floor_div(n - 6, 6); ++k) {
            const YPoly inner = at(n - 6 * k - 4) + y() * at(n - 6 * k - 5);
            r -= ypow(static_cast<unsigned>(3 * k + 2)) * inner *
                 det_cached(det_p_, CatalanKind::P, static_cast<std::size_t>(k + 1));
        }
        return r;
    }

    YPoly step_tau_a(long n)
    {
        const long a = spec_.a;
        YPoly r = one_minus_y() * at(n - 1);
        for (long k = 0; k <= floor_div(n - 2 * a, 2 * a); ++k) {
            const long ka = (k + 1) * a;
            r -= ypow(static_cast<unsigned>(ka - 1)) * at(n - 2 * ka + 1) * binomial(n - ka - 1, ka - 1);
        }
        for (long k = 0; k <= floor_div(n - 2 * a - 2, 2 * a); ++k) {
            const long ka = (k + 1) * a;
            r += ypow(static_cast<unsigned>(ka)) * at(n - 2 * ka - 1) * binomial(n - ka - 2, ka);
        }
        return r;
    }

    YPoly step_1324(long n)
    {
        YPoly r = one_minus_y() * at(n - 1);
        for (long k = 2; k <= n / 2; ++k)
            r += neg_ypow(static_cast<unsigned>(k - 1)) * at(n - 2 * k + 1) * catalan(static_cast<unsigned>(k - 1));
        return r;
    }

    YPoly step_1324_dots(long n)
    {
        const long p = spec_.p;
        YPoly r = one_minus_y() * at(n - 1);
        for (long k = 2; k <= floor_div(n - 2, p - 2) + 1; ++k)
            r += neg_ypow(static_cast<unsigned>(k - 1)) * at(n - ((k - 1) * (p - 2) + 1));
        return r;
    }

    YPoly step_k1k2(long n)
    {
        const long m = std::min(spec_.k1, spec_.k2);
        const long M = std::max(spec_.k1, spec_.k2);
        YPoly tail;
        for (long i = 1; i <= m - 1; ++i) tail += at(n - M - i);
        const YPoly inner = at(n - M) + y() * tail;
        return one_minus_y() * at(n - 1) - y() * inner * binomial(n - 2, static_cast<long>(spec_.k1) - 1);
    }

    // Upper summation bound floor(n/2): the largest k with n - 2k >= 0.
    YPoly step_1324_123(long n)
    {
        YPoly r = -y() * at(n - 1) - y() * at(n - 2);
        for (long k = 2; k <= n / 2; ++k)
            r += neg_ypow(static_cast<unsigned>(k)) * at(n - 2 * k) * catalan(static_cast<unsigned>(k - 1));
        return r;
    }

    // Transcribed literally; see the conformance report for how it compares.
    YPoly step_1324p_12p(long n)
    {
        const long p = spec_.p;
        YPoly r;
        for (long k = 1; k <= p - 2; ++k) r -= y() * at(n - k);
        for (long k = 1; k <= p - 2; ++k)
            for (long m = 2; m <= floor_div(n - k, p - 2); ++m)
                r += neg_ypow(static_cast<unsigned>(m)) * at(n - k - (m - 1) * (p - 2));
        return r;
    }

    YPoly step_gamma22s(long n)
    {
        YPoly r = -y() * at(n - 1);
        for (long k = 0; k <= static_cast<long>(spec_.s) - 2; ++k) {
            r -= y() * at(n - k - 2) * BigInt(n - k - 1);
            r -= ypow(2) * at(n - k - 3) * BigInt(n - k - 2);
        }
        return r;
    }

    FamilySpec spec_;
    RecursionOptions opts_;
    std::vector<YPoly> memo_;
    std::vector<BigInt> det_m_;
    std::vector<BigInt> det_p_;
};

inline std::vector<YPoly> u_recursion(const FamilySpec& spec, std::size_t upto, RecursionOptions opts = {})
{
    RecursionEngine e(spec, opts);
    return e.sequence(upto);
}

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what)
{
    if (num % den != 0) throw ConsistencyError(std::string(what) + ": non-integral coefficient");
    return num / den;
}
} // namespace detail

/// Closed forms for {1324,123} as stated, indexed by the subscript i of U_i:
///   i = 2n:   sum_{k=0}^n (2k+1) C(2n, n-k) / (n+k+1) (-y)^{n+k+1}
///   i = 2n+1: sum_{k=0}^n 2(k+1) C(2n+1, n-k) / (n+k+2) (-y)^{n+k}
inline YPoly u_closed_1324_123(std::size_t i)
{
    const long n = static_cast<long>(i / 2);
    YPoly r;
    for (long k = 0; k <= n; ++k) {
        if (i % 2 == 0) {
            const BigInt c = detail::exact_div((2 * k + 1) * binomial(2 * n, n - k), BigInt(n + k + 1), "u_closed_1324_123");
            r += YPoly::neg_y_pow(static_cast<unsigned>(n + k + 1)) * c;
        } else {
            const BigInt c = detail::exact_div(2 * (k + 1) * binomial(2 * n + 1, n - k), BigInt(n + k + 2), "u_closed_1324_123");
            r += YPoly::neg_y_pow(static_cast<unsigned>(n + k)) * c;
        }
    }
    return r;
}

/// Readings of the double falling factorial (x)_k for k >= 1:
/// KFactors = x(x-2)...(x-2k+2) (k factors), Literal = x(x-2)...(x-2k-2) (k+2 factors).
enum class DoubleFallingReading { KFactors, Literal };

inline BigInt double_falling(long x, long k, DoubleFallingReading reading)
{
    if (k == 0) return 1;
    const long factors = reading == DoubleFallingReading::KFactors ? k : k + 2;
    BigInt r = 1;
    for (long i = 0; i < factors; ++i) r *= x - 2 * i;
    return r;
}

/// Closed forms for Gamma_{2,2,2}, indexed by the subscript i of U_i:
///   i = 2n:   sum_{j=0}^n (2n-1)_{n-j} (-y)^{n+j}
///   i = 2n+1: sum_{j=0}^n (2n)_{n-j} (-y)^{n+1+j}
inline YPoly u_closed_gamma222(std::size_t i, DoubleFallingReading reading = DoubleFallingReading::KFactors)
{
    const long n = static_cast<long>(i / 2);
    YPoly r;
    for (long j = 0; j <= n; ++j) {
        if (i % 2 == 0)
            r += YPoly::neg_y_pow(static_cast<unsigned>(n + j)) * double_falling(2 * n - 1, n - j, reading);
        else
            r += YPoly::neg_y_pow(static_cast<unsigned>(n + 1 + j)) * double_falling(2 * n, n - j, reading);
    }
    return r;
}

} // namespace patlab
