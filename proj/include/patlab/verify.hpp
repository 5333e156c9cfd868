#pragma once

// Property suites shared by the CLI and the acceptance tests. Each returns
// {suite, cases: [{id, expected, got, pass, note}]}.

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "bricks.hpp"
#include "conformance.hpp"
#include "perm.hpp"
#include "posets.hpp"
#include "reciprocity.hpp"
#include "recursions.hpp"
#include "reference_tables.hpp"

namespace patlab {

struct CaseResult {
    std::string id;
    std::string expected;
    std::string got;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool pass() const
    {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string id, std::string expected, std::string got, std::string note = {})
    {
        const bool ok = expected == got;
        cases.push_back({std::move(id), std::move(expected), std::move(got), ok, std::move(note)});
    }
    void add_bool(std::string id, bool ok, std::string note = {})
    {
        cases.push_back({std::move(id), "true", ok ? "true" : "false", ok, std::move(note)});
    }
};

inline nlohmann::json to_json(const SuiteReport& r)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"id", c.id}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}, {"note", c.note}});
    return {{"suite", r.suite}, {"pass", r.pass()}, {"cases", std::move(cases)}};
}

// ---------------------------------------------------------------------------
// Worked objects

namespace fixtures {

/// Gamma = {1324, 1423, 12345}, bricks (9,3,5,2) on 19 cells, built from the
/// set-partition description. Expected weight y^11, sign +1.
inline FilledTabloid four_brick_object()
{
    return from_set_partition(BrickTabloid({9, 3, 5, 2}),
                              {{2, 5, 6, 9, 11, 15, 16, 17, 19}, {7, 8, 14}, {1, 3, 10, 13, 18}, {4, 12}},
                              {Permutation::parse("124653798"), Permutation::parse("132"), Permutation::parse("51243"),
                               Permutation::parse("21")});
}
inline PatternSet four_brick_patterns() { return PatternSet::parse("1324,1423,12345"); }

/// Gamma = {14253}, 18 cells. Merging the first two bricks would create the
/// match 9 15 11 16 13; cell 6 is y-labeled but no match ends by then; J
/// splits after cell 8.
inline FilledTabloid split_at_8_object()
{
    return FilledTabloid(BrickTabloid({4, 6, 8}),
                         Permutation({3, 7, 9, 15, 11, 16, 13, 17, 1, 2, 4, 5, 6, 8, 10, 12, 14, 18}));
}
inline PatternSet split_at_8_patterns() { return PatternSet::parse("14253"); }

/// The smallest fixed point of J for {15342} whose brick-first entries are not increasing.
inline FilledTabloid unsorted_fixed_point_15342() { return FilledTabloid(BrickTabloid({2, 3, 1}), Permutation::parse("164523")); }

} // namespace fixtures

// ---------------------------------------------------------------------------

inline std::vector<PatternSet> involution_test_sets()
{
    return {PatternSet::parse("14253,15243"), PatternSet::parse("142536"), PatternSet::parse("1324"),
            PatternSet::parse("123")};
}

/// J^2 = id, sign reversal, fixed-point sum = U_n, and (when with_lemma)
/// the fixed-point conditions, for n = 1..max_n.
inline SuiteReport involution_suite(std::size_t max_n, bool with_involution = true, bool with_lemma = true)
{
    SuiteReport rep;
    rep.suite = with_involution ? "involution" : "lemma";
    for (const auto& g : involution_test_sets()) {
        const auto u = u_from_bruteforce(g, max_n);
        for (std::size_t n = 1; n <= max_n; ++n) {
            std::size_t objects = 0, moved = 0, not_involutive = 0, not_reversing = 0, left_O = 0;
            std::size_t fixed = 0, lemma_fail = 0, c_checked = 0;
            YPoly all_sum, fixed_sum;
            std::string first_lemma_failure;
            const bool c_applies = g.descent_bottoms_hypothesis();
            for_each_O(g, n, [&](const FilledTabloid& o) {
                ++objects;
                const SignedWeight w = o.weight();
                all_sum += w.poly();
                const JStep st = involution_step(g, o);
                if (st.kind == JCase::Fixed) {
                    ++fixed;
                    fixed_sum += w.poly();
                    if (with_lemma) {
                        const auto lr = check_lemma_conditions(g, o);
                        if (c_applies) ++c_checked;
                        if (!lr.all_pass()) {
                            if (lemma_fail++ == 0) first_lemma_failure = render(o);
                        }
                    }
                    return;
                }
                ++moved;
                if (!in_O(st.result, g)) {
                    ++left_O;
                    return;
                }
                if (involution_J(g, st.result) != o) ++not_involutive;
                const SignedWeight w2 = st.result.weight();
                if (w2.sign != -w.sign || w2.ypower != w.ypower) ++not_reversing;
            });
            const std::string tag = "{" + g.str() + "} n=" + std::to_string(n);
            if (with_involution) {
                rep.add("J maps O to O and J^2=id " + tag, "0", std::to_string(left_O + not_involutive),
                        std::to_string(objects) + " objects, " + std::to_string(moved) + " moved");
                rep.add("sign-reversing off fixed points " + tag, "0", std::to_string(not_reversing));
                rep.add("sum over O equals U_n " + tag, format(u[n]), format(all_sum));
                rep.add("fixed-point sum equals U_n " + tag, format(u[n]), format(fixed_sum),
                        std::to_string(fixed) + " fixed points");
            }
            if (with_lemma)
                rep.add("fixed-point conditions " + tag, "0", std::to_string(lemma_fail),
                        (c_applies ? "first-entry condition checked on " + std::to_string(c_checked) + " fixed points"
                                   : std::string("first-entry condition not applicable")) +
                            (first_lemma_failure.empty() ? "" : "; first failure " + first_lemma_failure));
        }
    }

    {
        const auto g = PatternSet::parse("15342");
        const auto o = fixtures::unsorted_fixed_point_15342();
        const auto lr = check_lemma_conditions(g, o);
        rep.add_bool("{15342} object " + render(o) + " is a fixed point", is_fixed_point(g, o));
        rep.add_bool("{15342} object satisfies (a),(b)", lr.a.pass && lr.b.pass);
        rep.add_bool("{15342} descent-bottom hypothesis fails", !lr.c.applies);
        rep.add_bool("{15342} object has non-increasing brick-first entries", !lr.c.pass);
    }
    if (with_involution) {
        const auto g = fixtures::split_at_8_patterns();
        const auto o = fixtures::split_at_8_object();
        const auto st = involution_step(g, o);
        rep.add("{14253} 18-cell example: first applicable cell", "8 (split)",
                std::to_string(st.cell + 1) + (st.kind == JCase::Split ? " (split)" : st.kind == JCase::Merge ? " (merge)" : " (fixed)"),
                render(o) + " -> " + render(st.result));
        rep.add_bool("{14253} 18-cell example: J^2 = id", involution_J(g, st.result) == o);
    }
    return rep;
}

inline SuiteReport determinant_suite(std::size_t kmax = 3)
{
    SuiteReport rep;
    rep.suite = "determinants";
    const auto mrec = det_M_by_recursion(8);
    const auto prec = det_P_by_recursion(8);
    for (std::size_t k = 0; k <= 8; ++k) {
        rep.add("det M_" + std::to_string(k) + " matrix vs recursion", mrec[k].str(),
                bareiss_determinant(CatalanMatrix::build(CatalanKind::M, k).entries).str());
        rep.add("det P_" + std::to_string(k) + " matrix vs recursion", prec[k].str(),
                bareiss_determinant(CatalanMatrix::build(CatalanKind::P, k).entries).str());
    }
    for (const auto& c : verify_A_B_sequences(kmax))
        rep.add(std::string(1, c.which) + "_" + std::to_string(c.index) + " linear extensions vs det " +
                    (c.which == 'A' ? "M_" : "P_") + std::to_string(c.index),
                c.determinant.str(), c.extensions.str(),
                std::to_string(c.poset_size) + "-element poset" + (c.note.empty() ? "" : "; " + c.note));
    for (std::size_t n = 1; n <= 6; ++n)
        rep.add("ladder D_" + std::to_string(n) + " extensions = C_" + std::to_string(n), catalan(static_cast<unsigned>(n)).str(),
                count_linear_extensions(ladder_poset(n)).str());
    {
        const auto o = fixtures::four_brick_object();
        const auto w = o.weight();
        rep.add_bool("four-brick object has no match inside a brick", in_O(o, fixtures::four_brick_patterns()));
        rep.add("four-brick object weight", "y^11", "y^" + std::to_string(w.ypower));
        rep.add("four-brick object sign", "1", std::to_string(w.sign));
    }
    return rep;
}

/// Each recursion vs the oracle; the {142536} rows vs the published rows.
inline SuiteReport recursion_suite(std::size_t max_n = 10, unsigned threads = 1)
{
    SuiteReport rep;
    rep.suite = "recursions";
    OracleCache oracle(threads);
    const std::size_t n10 = std::min<std::size_t>(max_n, 10);
    const std::size_t n9 = std::min<std::size_t>(max_n, 9);
    struct Item {
        FamilySpec spec;
        std::size_t n;
    };
    const std::vector<Item> items{{FamilySpec::g14253_15243(), n10}, {FamilySpec::t142536(), n10},
                                  {FamilySpec::tau_a(2), n10},        {FamilySpec::tau_a(3), n10},
                                  {FamilySpec::p1324(), n9},          {FamilySpec::p1324_dots(5), n9},
                                  {FamilySpec::gamma_k1k2(2, 2), n9}, {FamilySpec::g1324_123(), n9},
                                  {FamilySpec::gamma22s(2), n9}};
    for (const auto& it : items) {
        const auto fc = compare_recursion(it.spec, it.n, it.n, oracle);
        const auto bad = fc.first_oracle_mismatch();
        rep.add(fc.family + " recursion vs oracle n<=" + std::to_string(it.n), "agree",
                bad ? "first mismatch at n=" + std::to_string(*bad) : "agree");
    }
    {
        const auto table = reference::parse_y_rows(reference::u_142536());
        const auto rec = u_recursion(FamilySpec::t142536(), 11);
        for (std::size_t n = 1; n <= 11; ++n)
            rep.add("142536 recursion vs published row " + std::to_string(n), format(table[n - 1]), format(rec[n]));
    }
    return rep;
}

} // namespace patlab
