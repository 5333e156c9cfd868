#pragma once

// Exact sparse polynomials in y (integer or rational coefficients) and in
// x,y (integer coefficients), plus their text and JSON encodings.

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "error.hpp"

namespace patlab {

/// Sparse univariate polynomial in y. Zero coefficients are never stored.
template <class Coeff>
class UniPoly {
public:
    using Exponent = unsigned;
    using TermMap = std::map<Exponent, Coeff>;

    UniPoly() = default;
    UniPoly(const Coeff& constant) { add_term(0, constant); } // NOLINT(implicit)
    UniPoly(int constant) : UniPoly(Coeff(constant)) {}       // NOLINT(implicit)

    static UniPoly monomial(const Coeff& c, Exponent e)
    {
        UniPoly p;
        p.add_term(e, c);
        return p;
    }
    static UniPoly y() { return monomial(Coeff(1), 1); }

    /// (-y)^e
    static UniPoly neg_y_pow(Exponent e) { return monomial(Coeff(e % 2 == 0 ? 1 : -1), e); }

    void add_term(Exponent e, const Coeff& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Coeff coeff(Exponent e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first); }
    Coeff leading_coeff() const { return terms_.empty() ? Coeff(0) : terms_.rbegin()->second; }

    Coeff evaluate(const Coeff& at) const
    {
        Coeff acc = 0;
        Exponent prev = terms_.empty() ? 0 : terms_.rbegin()->first;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            for (Exponent k = it->first; k < prev; ++k) acc *= at;
            acc += it->second;
            prev = it->first;
        }
        for (Exponent k = 0; k < prev; ++k) acc *= at;
        return acc;
    }

    /// Multiply by y^k.
    UniPoly shifted(Exponent k) const
    {
        UniPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    UniPoly& operator*=(const Coeff& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a)
    {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend UniPoly operator*(UniPoly a, const Coeff& s) { return a *= s; }
    friend UniPoly operator*(const Coeff& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        UniPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    TermMap terms_;
};

using YPoly = UniPoly<BigInt>;
using RatYPoly = UniPoly<Rational>;

/// Sparse polynomial in x and y with integer coefficients.
class XYPoly {
public:
    using Exponents = std::pair<unsigned, unsigned>; // (x, y)
    using TermMap = std::map<Exponents, BigInt>;

    XYPoly() = default;

    static XYPoly constant(const BigInt& c)
    {
        XYPoly p;
        p.add_term(0, 0, c);
        return p;
    }

    void add_term(unsigned xe, unsigned ye, const BigInt& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({xe, ye}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BigInt coeff(unsigned xe, unsigned ye) const
    {
        auto it = terms_.find({xe, ye});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of x^k as a polynomial in y.
    YPoly x_coeff(unsigned k) const
    {
        YPoly r;
        for (auto it = terms_.lower_bound({k, 0}); it != terms_.end() && it->first.first == k; ++it)
            r.add_term(it->first.second, it->second);
        return r;
    }

    YPoly at_x_one() const
    {
        YPoly r;
        for (const auto& [e, c] : terms_) r.add_term(e.second, c);
        return r;
    }

    BigInt evaluate(const BigInt& x, const BigInt& y) const
    {
        BigInt acc = 0;
        for (const auto& [e, c] : terms_) acc += c * pow(x, e.first) * pow(y, e.second);
        return acc;
    }

    XYPoly& operator+=(const XYPoly& o)
    {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    friend XYPoly operator+(XYPoly a, const XYPoly& b) { return a += b; }
    friend bool operator==(const XYPoly&, const XYPoly&) = default;

private:
    TermMap terms_;
};

inline RatYPoly to_rational(const YPoly& p)
{
    RatYPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, Rational(c));
    return r;
}

/// Throws ConsistencyError if any coefficient is not an integer.
inline YPoly to_integral(const RatYPoly& p, std::string_view context = "polynomial")
{
    YPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (!is_integral(c))
            throw ConsistencyError(std::string(context) + ": non-integral coefficient " + c.str() +
                                   " at y^" + std::to_string(e));
        r.add_term(e, boost::multiprecision::numerator(c));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Text format: ascending powers, e.g. "-y + 4 y^2 - 4 y^3"; for x,y terms are
// ordered by y power then x power: "x y + 11 x y^2 + 15 x^2 y^2".

namespace detail {

inline void append_term(std::string& out, const BigInt& c, std::string_view monomial)
{
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    if (monomial.empty()) {
        out += mag.str();
        return;
    }
    if (mag != 1) {
        out += mag.str();
        out += ' ';
    }
    out += monomial;
}

inline std::string power(char var, unsigned e)
{
    if (e == 0) return {};
    if (e == 1) return std::string(1, var);
    return std::string(1, var) + "^" + std::to_string(e);
}

} // namespace detail

inline std::string format(const YPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) detail::append_term(out, c, detail::power('y', e));
    return out;
}

inline std::string format(const XYPoly& p)
{
    if (p.is_zero()) return "0";
    std::vector<std::pair<XYPoly::Exponents, BigInt>> sorted(p.terms().begin(), p.terms().end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
    });
    std::string out;
    for (const auto& [e, c] : sorted) {
        std::string mono = detail::power('x', e.first);
        std::string ypart = detail::power('y', e.second);
        if (!mono.empty() && !ypart.empty()) mono += ' ';
        mono += ypart;
        detail::append_term(out, c, mono);
    }
    return out;
}

namespace detail {

struct ParsedTerm {
    BigInt coeff;
    unsigned xe = 0;
    unsigned ye = 0;
};

/// Accepts the text format above plus compact variants ("xy+11xy^2", "3*x^2*y",
/// U+2212 minus signs).
inline std::vector<ParsedTerm> parse_terms(std::string_view text, std::string_view allowed_vars)
{
    std::string s;
    bool gap = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
        if (ch == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s += '-';
            i += 2;
            gap = false;
        } else if (std::isspace(ch)) {
            gap = true;
        } else if (ch != '*') {
            // "2 3" is two numbers, not 23.
            if (gap && std::isdigit(ch) && !s.empty() && std::isdigit(static_cast<unsigned char>(s.back())))
                throw InvalidInput("polynomial text has adjacent numbers separated by space: '" + std::string(text) + "'");
            s += static_cast<char>(ch);
            gap = false;
        }
    }
    if (s.empty()) throw InvalidInput("empty polynomial text");

    std::vector<ParsedTerm> terms;
    std::size_t i = 0;
    auto read_uint = [&](std::string& digits) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            throw InvalidInput("expected '+' or '-' in polynomial text: " + std::string(text));
        }
        std::string digits;
        read_uint(digits);
        ParsedTerm t;
        t.coeff = digits.empty() ? BigInt(1) : BigInt(digits);
        bool any_var = false;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            const char var = s[i++];
            if (allowed_vars.find(var) == std::string_view::npos)
                throw InvalidInput(std::string("unexpected variable '") + var + "' in polynomial text");
            unsigned e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                read_uint(ed);
                if (ed.empty()) throw InvalidInput("missing exponent after '^'");
                e = static_cast<unsigned>(std::stoul(ed));
            }
            (var == 'x' ? t.xe : t.ye) += e;
            any_var = true;
        }
        if (digits.empty() && !any_var) throw InvalidInput("malformed term in polynomial text: " + std::string(text));
        t.coeff *= sign;
        terms.push_back(std::move(t));
    }
    return terms;
}

} // namespace detail

inline YPoly parse_ypoly(std::string_view text)
{
    YPoly p;
    if (text == "0") return p;
    for (const auto& t : detail::parse_terms(text, "y")) p.add_term(t.ye, t.coeff);
    return p;
}

inline XYPoly parse_xypoly(std::string_view text)
{
    XYPoly p;
    if (text == "0") return p;
    for (const auto& t : detail::parse_terms(text, "xy")) p.add_term(t.xe, t.ye, t.coeff);
    return p;
}

// ---------------------------------------------------------------------------
// JSON: {"vars":["x","y"],"terms":[[xexp,yexp,"coeff"],...]} sorted by (xexp,yexp);
// YPoly uses {"vars":["y"],"terms":[[yexp,"coeff"],...]}.

inline nlohmann::json to_json(const YPoly& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.str()});
    return {{"vars", {"y"}}, {"terms", std::move(terms)}};
}

inline nlohmann::json to_json(const XYPoly& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.str()});
    return {{"vars", {"x", "y"}}, {"terms", std::move(terms)}};
}

inline YPoly ypoly_from_json(const nlohmann::json& j)
{
    if (j.at("vars") != nlohmann::json::array({"y"})) throw InvalidInput("expected vars [\"y\"]");
    YPoly p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw InvalidInput("YPoly term must be [yexp, coeff]");
        p.add_term(t[0].get<unsigned>(), BigInt(t[1].get<std::string>()));
    }
    return p;
}

inline XYPoly xypoly_from_json(const nlohmann::json& j)
{
    if (j.at("vars") != nlohmann::json::array({"x", "y"})) throw InvalidInput("expected vars [\"x\",\"y\"]");
    XYPoly p;
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3) throw InvalidInput("XYPoly term must be [xexp, yexp, coeff]");
        p.add_term(t[0].get<unsigned>(), t[1].get<unsigned>(), BigInt(t[2].get<std::string>()));
    }
    return p;
}

} // namespace patlab
