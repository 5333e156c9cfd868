#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "patlab/bricks.hpp"
#include "patlab/reciprocity.hpp"
#include "patlab/verify.hpp"

using namespace patlab;

namespace {
std::vector<oracle::Word> words(const PatternSet& g)
{
    std::vector<oracle::Word> out;
    for (const auto& t : g.patterns()) out.push_back(t.word());
    return out;
}
} // namespace

TEST_CASE("count_brick_tabloids")
{
    CHECK(count_brick_tabloids({2, 2, 1, 1}, 6) == 6);
    CHECK(count_brick_tabloids({5}, 5) == 1);
    CHECK(count_brick_tabloids({1, 1, 1, 1}, 4) == 1);
    CHECK(count_brick_tabloids({3, 2, 1}, 6) == 6);
    CHECK_THROWS_AS(count_brick_tabloids({2, 2}, 5), InvalidInput);
    CHECK_THROWS_AS(count_brick_tabloids({2, 0}, 2), InvalidInput);
}

TEST_CASE("brick tabloid counts over all shapes give 2^(n-1)")
{
    for (std::size_t n = 1; n <= 10; ++n) {
        BigInt total = 0;
        for_each_partition(n, [&](const std::vector<std::size_t>& lambda) { total += count_brick_tabloids(lambda, n); });
        CHECK(total == BigInt(1) << (n - 1));
    }
}

TEST_CASE("BrickTabloid helpers")
{
    const BrickTabloid b({2, 3, 1});
    CHECK(b.cells() == 6);
    CHECK(b.starts() == std::vector<std::size_t>{0, 2, 5});
    CHECK(b.brick_of_cell() == std::vector<std::size_t>{0, 0, 1, 1, 1, 2});
    CHECK(b.shape() == std::vector<std::size_t>{3, 2, 1});
    CHECK(BrickTabloid::from_cuts(6, 0b10010) == b);
    CHECK(BrickTabloid::parse("(2,3,1)") == b);
    CHECK_THROWS_AS(BrickTabloid({2, 0}), InvalidInput);
    CHECK_THROWS_AS(FilledTabloid(b, Permutation::parse("12345")), InvalidInput);
}

TEST_CASE("labels, weight and rendering")
{
    const FilledTabloid o(BrickTabloid({2, 3, 1}), Permutation::parse("164523"));
    CHECK(o.y_cells() == std::vector<std::size_t>{3});
    CHECK(o.weight() == SignedWeight{-1, 4});
    CHECK(render(o) == "[1 6|-y][4 5:y 2|-y][3|-y]");
    CHECK(render(FilledTabloid(BrickTabloid({2}), Permutation::parse("21"))) == "[2:y 1|-y]");
}

TEST_CASE("enumerate_O small cases")
{
    const auto one = enumerate_O(PatternSet::parse("123"), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].weight().poly() == parse_ypoly("-y"));

    const auto two = enumerate_O(PatternSet::parse("14253,15243"), 2);
    CHECK(two.size() == 4);

    CHECK(signed_weight_sum(enumerate_O(PatternSet::parse("14253,15243"), 3)) == parse_ypoly("-y + 2y^2 - y^3"));
}

TEST_CASE("enumerate_O equals a filter over all (composition, permutation) pairs")
{
    for (const char* gs : {"123", "1324", "14253,15243", "21"}) {
        const auto g = PatternSet::parse(gs);
        for (std::size_t n = 1; n <= 6; ++n) {
            std::size_t expect = 0;
            for (const auto& w : oracle::all_perms(n)) {
                const auto ms = oracle::matches(w, words(g));
                for (const auto& comp : oracle::compositions(n)) {
                    std::vector<std::size_t> owner;
                    for (std::size_t i = 0; i < comp.size(); ++i) owner.insert(owner.end(), comp[i], i);
                    bool ok = true;
                    for (const auto& [a, b] : ms) ok = ok && owner[a] != owner[b];
                    expect += ok;
                }
            }
            CHECK(enumerate_O(g, n).size() == expect);
        }
    }
}

TEST_CASE("frozen O sizes for {14253,15243}")
{
    // Counted independently by a direct filter over pairs.
    const auto g = PatternSet::parse("14253,15243");
    CHECK(enumerate_O(g, 5).size() == 1918);
    CHECK(enumerate_O(g, 6).size() == 22992);
}

TEST_CASE("J on worked objects")
{
    {
        const auto g = fixtures::split_at_8_patterns();
        const auto o = fixtures::split_at_8_object();
        REQUIRE(in_O(o, g));
        const auto st = involution_step(g, o);
        CHECK(st.kind == JCase::Split);
        CHECK(st.cell + 1 == 8);
        CHECK(st.result.tabloid == BrickTabloid({4, 4, 2, 8}));
        const auto back = involution_step(g, st.result);
        CHECK(back.kind == JCase::Merge);
        CHECK(back.cell + 1 == 8);
        CHECK(back.result == o);
    }
    {
        const auto g = PatternSet::parse("14253");
        const FilledTabloid inc(BrickTabloid({6}), Permutation::identity(6));
        CHECK(involution_J(g, inc) == inc);
    }
    {
        const auto g = PatternSet::parse("123");
        const FilledTabloid bad(BrickTabloid({3}), Permutation::identity(3));
        CHECK_THROWS_AS(involution_J(g, bad), InvalidInput);
    }
}

TEST_CASE("J is a sign-reversing involution and fixed points carry U_n")
{
    for (const char* gs : {"14253,15243", "142536", "1324", "123", "15342", "1423,12345"}) {
        const auto g = PatternSet::parse(gs);
        const auto u = u_from_bruteforce(g, 6);
        for (std::size_t n = 1; n <= 6; ++n) {
            YPoly fixed_sum;
            for_each_O(g, n, [&](const FilledTabloid& o) {
                const auto img = involution_J(g, o);
                if (img == o) {
                    fixed_sum += o.weight().poly();
                    return;
                }
                REQUIRE(in_O(img, g));
                CHECK(involution_J(g, img) == o);
                CHECK(img.weight().sign == -o.weight().sign);
                CHECK(img.weight().ypower == o.weight().ypower);
            });
            CHECK(fixed_sum == u[n]);
            CHECK(signed_weight_sum(fixed_points(g, n)) == u[n]);
        }
    }
}

TEST_CASE("fixed-point sum for {14253,15243} at n = 5")
{
    CHECK(signed_weight_sum(fixed_points(PatternSet::parse("14253,15243"), 5)) == parse_ypoly("-y + 4 y^2 -4y^3 + 4 y^4 -y^5"));
    CHECK(fixed_points(PatternSet::parse("123"), 1).size() == 1);
}

TEST_CASE("fixed-point conditions")
{
    const auto g = PatternSet::parse("14253,15243");
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& o : fixed_points(g, n)) CHECK(check_lemma_conditions(g, o).all_pass());

    const auto inc = FilledTabloid(BrickTabloid({4}), Permutation::identity(4));
    const auto r = check_lemma_conditions(g, inc);
    CHECK(r.a.pass);
    CHECK(r.all_pass());

    const auto g2 = PatternSet::parse("15342");
    const auto o = fixtures::unsorted_fixed_point_15342();
    CHECK(is_fixed_point(g2, o));
    const auto r2 = check_lemma_conditions(g2, o);
    CHECK(r2.a.pass);
    CHECK(r2.b.pass);
    CHECK_FALSE(r2.c.applies);
    CHECK_FALSE(r2.c.pass);
    CHECK(r2.c.witness_cells == std::vector<std::size_t>{6});
    CHECK(r2.all_pass());
}

TEST_CASE("no smaller {15342} fixed point has unsorted brick-first entries")
{
    const auto g = PatternSet::parse("15342");
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& o : fixed_points(g, n)) CHECK(check_lemma_conditions(g, o).c.pass);
}

TEST_CASE("four-brick object from its set-partition description")
{
    const auto o = fixtures::four_brick_object();
    CHECK(o.size() == 19);
    CHECK(in_O(o, fixtures::four_brick_patterns()));
    CHECK(o.weight() == SignedWeight{1, 11});
    CHECK_THROWS_AS(from_set_partition(BrickTabloid({2}), {{1, 2}, {3}}, {Permutation::parse("12")}), InvalidInput);
}
