#pragma once

// Published reference values, transcribed verbatim (including any misprints;
// comparisons are reported, never patched). Entry n-1 holds the row for n.

#include <string_view>
#include <vector>

#include "poly.hpp"

namespace patlab::reference {

/// U_n(y) for {14253, 15243}, n = 1..10.
inline const std::vector<std::string_view>& u_14253_15243()
{
    static const std::vector<std::string_view> rows{
        "-y",
        "-y + y^2",
        "-y + 2y^2 - y^3",
        "-y + 3 y^2 - 3 y^3 + y^4",
        "-y + 4 y^2 -4y^3 + 4 y^4 -y^5",
        "-y + 5y^2 -2y^3 + 2y^4 -5y^5 + y^6",
        "-y + 6 y^2 + 5y^3 -28 y^4 + 5 y^5 + 6 y^6 - y^7",
        "-y + 7 y^2 + 19 y^3 - 123y^4 + 123y^5 -19 y^6 -7 y^7 + y^8",
        "-y + 8 y^2 + 42y^3 -334y^4 + 588 y^5 -334y^6 + 42y^7 + 8 y^8 - y^9",
        "-y + 9 y^2 + 76y^3 -726y^4 + 1606y^5 -1606y^6 + 726 y^7 - 76 y^8 - 9 y^9 + y^10",
    };
    return rows;
}

/// NM_n(x,y) for {14253, 15243}, n = 1..7.
inline const std::vector<std::string_view>& nm_14253_15243()
{
    static const std::vector<std::string_view> rows{
        "xy",
        "xy+x^2y^2",
        "x y+x y^2+3 x^2 y^2+x^3 y^3",
        "x y+4 x y^2+7 x^2 y^2+x y^3+4 x^2 y^3+6 x^3 y^3+x^4 y^4",
        "x y+11 x y^2+15 x^2 y^2+9 x y^3+30 x^2 y^3+25 x^3 y^3+x y^4+5 x^2 y^4+10 x^3 y^4+10 x^4 y^4+x^5 y^5",
        "x y+26 x y^2+31 x^2 y^2+58 x y^3+146 x^2 y^3+90 x^3 y^3+22 x y^4+79 x^2 y^4+120 x^3 y^4+"
        "65 x^4 y^4+x y^5+6 x^2 y^5+15 x^3 y^5+20 x^4 y^5+15 x^5 y^5+x^6 y^6",
        "x y+57 x y^2+63 x^2 y^2+282 x y^3+588 x^2 y^3+301 x^3 y^3+252 x y^4+770 x^2 y^4+"
        "896 x^3 y^4+350 x^4 y^4+51 x y^5+210 x^2 y^5+364 x^3 y^5+350 x^4 y^5+140 x^5 y^5+"
        "x y^6+7 x^2 y^6+21 x^3 y^6+35 x^4 y^6+35 x^5 y^6+21 x^6 y^6+x^7 y^7",
    };
    return rows;
}

/// U_n(y) for {142536}, n = 1..14.
inline const std::vector<std::string_view>& u_142536()
{
    static const std::vector<std::string_view> rows{
        "-y",
        "-y + y^2",
        "-y + 2y^2 - y^3",
        "-y + 3 y^2 - 3 y^3 + y^4",
        "-y + 4 y^2 - 6 y^3 + 4 y^4 - y^5",
        "-y + 5y^2 - 9y^3 + 10y^4 -5y^5 + y^6",
        "-y + 6 y^2 - 13 y^3 + 18 y^4 - 15 y^5 + 6 y^6 - y^7",
        "-y + 7 y^2 - 18 y^3 + 27 y^4 - 32 y^5 + 21 y^6 - 7 y^7 + y^8",
        "-y + 8 y^2 - 24 y^3 + 40 y^4 - 54 y^5 + 52 y^6 - 28 y^7 + 8 y^8 - y^9",
        "-y + 9 y^2 - 31 y^3 + 58 y^4 - 85 y^5 + 100 y^6 - 79 y^7 + 36 y^8 - 9 y^9 + y^10",
        "-y + 10 y^2 - 39 y^3 +82 y^4 - 129 y^5 + 170 y^6 - 172 y^7 + 114 y^8 - 45 y^9 + 10y^10 - y^11",
        "-y + 11 y^2 - 48 y^3 + 113 y^4 - 191 y^5 + 289 y^6 - 320 y^7 + 278 y^8 - 158 y^9 + 55 y^10 - 11 y^11 + y^12",
        "-y + 12 y^2 - 58 y^3 + 152 y^4 - 277 y^5 + 456 y^6 - 578 y^7 + 568 y^8 - 427 y^9 +212 y^10 - 66 y^11 + 12 y^12 - y^13",
        "-y + 13 y^2 - 69 y^3 + 200 y^4 - 394 y^5 + 689 y^6 - 1031 y^7 + 1068 y^8 + 956 y^9 + 629 y^10 - 277 y^11 + 78 y^12 - 13 y^13 + y^14",
    };
    return rows;
}

inline std::vector<YPoly> parse_y_rows(const std::vector<std::string_view>& rows)
{
    std::vector<YPoly> out;
    for (auto r : rows) out.push_back(parse_ypoly(r));
    return out;
}

inline std::vector<XYPoly> parse_xy_rows(const std::vector<std::string_view>& rows)
{
    std::vector<XYPoly> out;
    for (auto r : rows) out.push_back(parse_xypoly(r));
    return out;
}

} // namespace patlab::reference
