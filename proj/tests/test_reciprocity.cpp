#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "patlab/bricks.hpp"
#include "patlab/reciprocity.hpp"

using namespace patlab;

namespace {
std::vector<oracle::Word> words(const PatternSet& g)
{
    std::vector<oracle::Word> out;
    for (const auto& t : g.patterns()) out.push_back(t.word());
    return out;
}

YPoly from_dense(const oracle::Dense& d)
{
    YPoly p;
    for (std::size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<unsigned>(i), d[i]);
    return p;
}
} // namespace

TEST_CASE("U_1 is -y for any set starting with 1")
{
    for (const char* g : {"123", "1324", "14253,15243", "142536", "1423,12345"})
        CHECK(u_from_bruteforce(PatternSet::parse(g), 1)[1] == parse_ypoly("-y"));
}

TEST_CASE("u_from_bruteforce published rows")
{
    CHECK(u_from_bruteforce(PatternSet::parse("14253,15243"), 6)[6] == parse_ypoly("-y + 5y^2 - 2y^3 + 2y^4 - 5y^5 + y^6"));
    CHECK(u_from_bruteforce(PatternSet::parse("142536"), 7)[7] ==
          parse_ypoly("-y + 6y^2 - 13y^3 + 18y^4 - 15y^5 + 6y^6 - y^7"));
    CHECK(u_from_bruteforce(PatternSet::parse("123"), 0)[0] == YPoly(1));
}

TEST_CASE("u_from_bruteforce refuses sets not starting with 1")
{
    CHECK_THROWS_AS(u_from_bruteforce(PatternSet::parse("2134"), 3), InvalidInput);
    CHECK_THROWS_AS(u_from_bruteforce(PatternSet::parse("123,213"), 3), InvalidInput);
}

TEST_CASE("u_from_bruteforce equals the binomial-convolution oracle")
{
    for (const char* gs : {"1324", "123", "14253,15243", "1423", "1324,123"}) {
        const auto g = PatternSet::parse(gs);
        const auto expect = oracle::u_sequence(words(g), 7);
        const auto got = u_from_bruteforce(g, 7);
        for (std::size_t n = 0; n <= 7; ++n) CHECK(got[n] == from_dense(expect[n]));
    }
}

TEST_CASE("oracle values frozen from an independent enumeration")
{
    CHECK(u_from_bruteforce(PatternSet::parse("1324"), 9)[9] ==
          parse_ypoly("-y + 14y^2 - 72y^3 + 166y^4 - 170y^5 + 94y^6 - 34y^7 + 8y^8 - y^9"));
    CHECK(u_from_bruteforce(PatternSet::parse("1324,123"), 9)[9] ==
          parse_ypoly("-42y^5 + 48y^6 - 27y^7 + 8y^8 - y^9"));
    CHECK(u_from_bruteforce(PatternSet::parse("13245"), 9)[9] ==
          parse_ypoly("-y + 13y^2 - 51y^3 + 88y^4 - 90y^5 + 61y^6 - 28y^7 + 8y^8 - y^9"));
}

TEST_CASE("brick sum small cases")
{
    const auto g = PatternSet::parse("14253,15243");
    const auto nm = nm_y_sequence(g, 8);
    CHECK(u_via_brick_sum(std::span<const YPoly>(nm), 1) == parse_ypoly("-y"));
    CHECK(u_via_brick_sum(std::span<const YPoly>(nm), 2) == parse_ypoly("-y + y^2"));
    CHECK(u_via_brick_sum(std::span<const YPoly>(nm), 8) ==
          parse_ypoly("-y + 7 y^2 + 19 y^3 - 123y^4 + 123y^5 -19 y^6 -7 y^7 + y^8"));
    CHECK(u_via_brick_sum(std::span<const YPoly>(nm), 0) == YPoly(1));
    CHECK_THROWS_AS(u_via_brick_sum(std::span<const YPoly>(nm), 9), InvalidInput);
}

TEST_CASE("brick sum visits 2^(n-1) compositions")
{
    const auto nm = nm_y_sequence(PatternSet::parse("123"), 9);
    for (std::size_t n = 1; n <= 9; ++n) {
        BrickSumStats st;
        u_via_brick_sum(std::span<const YPoly>(nm), n, &st);
        CHECK(st.compositions == (std::uint64_t{1} << (n - 1)));
        CHECK(st.compositions == oracle::compositions(n).size());
    }
}

TEST_CASE("brick sum, partition sum and series inversion agree")
{
    for (const char* gs : {"1324", "123", "14253,15243", "142536", "1423", "1324,1423,12345"}) {
        const auto g = PatternSet::parse(gs);
        const auto nm = nm_y_sequence(g, 8);
        const auto u = u_from_nm(nm);
        for (std::size_t n = 1; n <= 8; ++n) {
            CHECK(u_via_brick_sum(std::span<const YPoly>(nm), n) == u[n]);
            CHECK(u_via_partition_sum(nm, n) == u[n]);
        }
    }
}

TEST_CASE("nm_from_u inverts the pipeline")
{
    const auto g = PatternSet::parse("14253,15243");
    const auto u = u_from_bruteforce(g, 7);
    const auto nm = nm_from_u(u, 7);
    for (std::size_t n = 0; n <= 7; ++n) CHECK(nm[n] == nm_polynomial(n, g));
    CHECK(nm[1] == parse_xypoly("x y"));
    CHECK(nm[7].coeff(1, 2) == 57);
    CHECK(nm[7].coeff(2, 2) == 63);
    CHECK(nm_from_u(u, 1)[1] == parse_xypoly("xy"));
}

TEST_CASE("nm_from_u with staircase U")
{
    // U_n = (-y)^n is the U of {12}: only the decreasing permutation avoids it.
    const auto g = PatternSet::parse("12");
    std::vector<YPoly> u;
    for (unsigned n = 0; n <= 7; ++n) u.push_back(YPoly::neg_y_pow(n));
    CHECK(u_from_bruteforce(g, 7) == u);
    const auto nm = nm_from_u(u, 7);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(nm[n] == nm_polynomial(n, g));
}

TEST_CASE("NM at x = y = 1 counts avoiders")
{
    const auto g = PatternSet::parse("1324");
    const auto nm = nm_from_u(u_from_bruteforce(g, 7), 7);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(nm[n].evaluate(1, 1) == oracle::avoiders(n, {{1, 3, 2, 4}}).size());
}

TEST_CASE("nm_from_u rejects short input")
{
    CHECK_THROWS_AS(nm_from_u({YPoly(1)}, 2), InvalidInput);
}
