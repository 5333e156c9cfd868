// patlab: compute and cross-check NM_n(x,y) and U_n(y) for consecutive pattern sets.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "patlab/patlab.hpp"

using namespace patlab;
using nlohmann::json;

namespace {

constexpr std::size_t kDefaultMaxEnum = 11;

std::size_t max_enum()
{
    if (const char* v = std::getenv("PATLAB_MAX_ENUM")) {
        try {
            return std::stoul(v);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("PATLAB_MAX_ENUM is not a number: ") + v);
        }
    }
    return kDefaultMaxEnum;
}

void require_enumerable(std::size_t n, const std::string& hint)
{
    const std::size_t lim = max_enum();
    if (n > lim)
        throw InvalidInput("n=" + std::to_string(n) + " exceeds the brute-force limit " + std::to_string(lim) + "; " + hint +
                           " (or raise PATLAB_MAX_ENUM)");
}

struct FamilyArgs {
    std::string name;
    unsigned a = 3, p = 5, k1 = 2, k2 = 2, s = 2;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--family", name, "recursion family: 14253_15243, 142536, tau_a, 1324, 1324p, gamma_k1k2, 1324_123, 1324p_12p, gamma22s");
        cmd->add_option("--a", a, "tau_a parameter")->capture_default_str();
        cmd->add_option("--p", p, "1324p / 1324p_12p parameter")->capture_default_str();
        cmd->add_option("--k1", k1, "gamma_k1k2 parameter")->capture_default_str();
        cmd->add_option("--k2", k2, "gamma_k1k2 parameter")->capture_default_str();
        cmd->add_option("--s", s, "gamma22s parameter")->capture_default_str();
    }
    std::optional<FamilySpec> spec() const
    {
        if (name.empty()) return std::nullopt;
        return FamilySpec::from_name(name, a, p, k1, k2, s);
    }
};

/// Resolves --gamma / --family into a pattern set, checking they agree.
PatternSet resolve_gamma(const std::string& gamma, const std::optional<FamilySpec>& fam)
{
    if (gamma.empty() && !fam) throw InvalidInput("give --gamma or --family");
    if (!fam) return PatternSet::parse(gamma);
    const PatternSet fg = fam->pattern_set();
    if (!gamma.empty() && PatternSet::parse(gamma) != fg)
        throw InvalidInput("--gamma " + gamma + " does not match family " + fam->name() + " (patterns " + fg.str() + ")");
    return fg;
}

std::vector<YPoly> published_u(const FamilySpec& f)
{
    if (f.id == FamilyId::G14253_15243) return reference::parse_y_rows(reference::u_14253_15243());
    if (f.id == FamilyId::T142536) return reference::parse_y_rows(reference::u_142536());
    return {};
}

std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

// ---------------------------------------------------------------------------

int cmd_nm(const std::string& gamma, const FamilyArgs& fa, std::size_t n, const std::string& fmt, bool via_u, unsigned threads)
{
    const auto fam = fa.spec();
    const PatternSet g = resolve_gamma(gamma, fam);
    std::vector<XYPoly> rows;
    std::string source;
    if (via_u) {
        if (!fam) throw InvalidInput("--via-u needs --family to supply the U recursion");
        rows = nm_from_u(u_recursion(*fam, n), n);
        source = "reciprocity from " + fam->name() + " recursion";
    } else {
        require_enumerable(n, "use --via-u --family <name>");
        for (std::size_t k = 0; k <= n; ++k) rows.push_back(nm_polynomial(k, g, threads));
        source = "enumeration";
    }

    std::ostringstream out;
    if (fmt == "json") {
        json arr = json::array();
        for (std::size_t k = 1; k <= n; ++k) arr.push_back({{"n", k}, {"nm", to_json(rows[k])}});
        out << json{{"gamma", g.str()}, {"source", source}, {"rows", arr}}.dump(2) << "\n";
    } else if (fmt == "csv") {
        out << "n,nm\n";
        for (std::size_t k = 1; k <= n; ++k) out << k << "," << csv_quote(to_json(rows[k]).at("terms").dump()) << "\n";
    } else {
        for (std::size_t k = 1; k <= n; ++k) out << k << " | " << format(rows[k]) << "\n";
    }
    std::cout << out.str();
    return 0;
}

int cmd_u(const std::string& gamma, const FamilyArgs& fa, std::size_t n, const std::string& method, const std::string& fmt,
          unsigned threads)
{
    const auto fam = fa.spec();
    const PatternSet g = resolve_gamma(gamma, fam);
    const bool all = method == "all";
    const std::size_t lim = max_enum();

    std::optional<std::vector<YPoly>> oracle, bricks, rec;
    std::size_t enum_upto = n;
    if (method == "oracle" || method == "bricksum") require_enumerable(n, "use --method recursion with --family");
    if (all) enum_upto = std::min(n, lim);
    if (method == "oracle" || all) oracle = u_from_bruteforce(g, enum_upto, threads);
    if (method == "bricksum" || all) {
        if (!g.starts_with_one()) throw InvalidInput("bricksum route needs every pattern to start with 1");
        const auto nm = nm_y_sequence(g, enum_upto, threads);
        std::vector<YPoly> b{YPoly(1)};
        for (std::size_t k = 1; k <= enum_upto; ++k) b.push_back(u_via_brick_sum(std::span<const YPoly>(nm), k));
        bricks = std::move(b);
    }
    if (method == "recursion" || (all && fam)) {
        if (!fam) throw InvalidInput("--method recursion needs --family");
        rec = u_recursion(*fam, n);
    }
    const std::vector<YPoly> table = fam ? published_u(*fam) : std::vector<YPoly>{};

    auto cell = [](const std::optional<std::vector<YPoly>>& v, std::size_t k) -> std::optional<YPoly> {
        if (!v || k >= v->size()) return std::nullopt;
        return (*v)[k];
    };

    bool ok = true;
    json rows = json::array();
    std::ostringstream text;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::pair<std::string, YPoly>> vals;
        if (auto v = cell(oracle, k)) vals.emplace_back("oracle", *v);
        if (auto v = cell(bricks, k)) vals.emplace_back("bricksum", *v);
        if (auto v = cell(rec, k)) vals.emplace_back("recursion", *v);
        bool agree = true;
        for (const auto& [name, v] : vals) agree = agree && v == vals.front().second;
        json row{{"n", k}};
        for (const auto& [name, v] : vals) row[name] = format(v);
        if (all) {
            row["agree"] = agree;
            ok = ok && agree;
            if (k <= table.size()) {
                row["table"] = format(table[k - 1]);
                row["table_agrees"] = !vals.empty() && table[k - 1] == vals.back().second;
            }
        }
        rows.push_back(row);
        text << k;
        for (const auto& [name, v] : vals) text << " | " << name << ": " << format(v);
        if (all) {
            text << " | agree: " << (agree ? "yes" : "NO");
            if (k <= table.size()) text << " | table: " << (row["table_agrees"].get<bool>() ? "matches" : "DIFFERS (" + format(table[k - 1]) + ")");
        }
        text << "\n";
    }
    if (fmt == "json")
        std::cout << json{{"gamma", g.str()}, {"method", method}, {"rows", rows}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::size_t max_n, const std::string& out_path, unsigned threads)
{
    std::vector<SuiteReport> reports;
    const bool all = suite == "all";
    if (all || suite == "involution") reports.push_back(involution_suite(max_n, true, !all));
    if (all || suite == "lemma") reports.push_back(involution_suite(max_n, false, true));
    if (all || suite == "determinants") reports.push_back(determinant_suite(3));
    if (all || suite == "recursions") reports.push_back(recursion_suite(std::max<std::size_t>(max_n, 1), threads));
    bool ok = true;
    json arr = json::array();
    for (const auto& r : reports) {
        ok = ok && r.pass();
        arr.push_back(to_json(r));
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << r.suite << " (" << r.cases.size() << " cases)\n";
    }
    json doc = reports.size() == 1 ? to_json(reports.front()) : json{{"suites", arr}, {"pass", ok}};
    write_output(doc.dump(2) + "\n", out_path);
    return ok ? 0 : 1;
}

int cmd_trace(const std::string& gamma, const std::string& bricks, const std::string& perm)
{
    const PatternSet g = PatternSet::parse(gamma);
    const FilledTabloid o(BrickTabloid::parse(bricks), Permutation::parse(perm));
    if (!in_O(o, g)) throw InvalidInput("object " + render(o) + " has a pattern match inside a single brick");
    const JStep st = involution_step(g, o);
    const SignedWeight w = o.weight();
    std::cout << "object:  " << render(o) << "\n";
    std::cout << "weight:  " << format(w.poly()) << "\n";
    if (st.kind == JCase::Fixed) {
        std::cout << "J:       fixed point\n";
        const auto lr = check_lemma_conditions(g, o);
        auto show = [](const char* name, const LemmaCheck& c) {
            std::cout << "  (" << name << ") " << (!c.applies ? "n/a" : c.pass ? "pass" : "FAIL");
            if (!c.witness_cells.empty()) {
                std::cout << " cells";
                for (auto cidx : c.witness_cells) std::cout << " " << cidx;
            }
            if (!c.note.empty()) std::cout << " [" << c.note << "]";
            std::cout << "\n";
        };
        show("a", lr.a);
        show("b", lr.b);
        show("c", lr.c);
    } else {
        std::cout << "J:       " << (st.kind == JCase::Split ? "split" : "merge") << " at cell " << st.cell + 1 << "\n";
        std::cout << "image:   " << render(st.result) << "\n";
        std::cout << "weight:  " << format(st.result.weight().poly()) << "\n";
        std::cout << "J(J(o)): " << render(involution_J(g, st.result)) << "\n";
    }
    return 0;
}

int cmd_conformance(const std::string& out_path, unsigned threads)
{
    ConformanceOptions opt;
    opt.threads = threads;
    const json rep = conformance_report(opt);
    write_output(rep.dump(2) + "\n", out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"patlab: consecutive pattern avoidance, U_n(y) and NM_n(x,y) by enumeration, reciprocity and recursions"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for enumeration")->capture_default_str();

    std::string gamma, fmt = "text", method = "all", suite = "all", out_path, bricks, perm;
    std::size_t n = 7, max_n = 5;
    bool via_u = false;
    FamilyArgs fam_nm, fam_u;

    auto* nm = app.add_subcommand("nm", "table of NM_k(x,y), k <= n");
    nm->add_option("--gamma", gamma, "pattern set, e.g. 14253,15243 or [1,10,2,9]");
    nm->add_option("--n", n, "largest size")->required();
    nm->add_option("--format", fmt, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    nm->add_flag("--via-u", via_u, "derive NM from a family recursion instead of enumerating");
    fam_nm.attach(nm);

    auto* u = app.add_subcommand("u", "table of U_k(y), k <= n");
    u->add_option("--gamma", gamma, "pattern set");
    u->add_option("--n", n, "largest size")->required();
    u->add_option("--method", method, "oracle, bricksum, recursion or all")
        ->check(CLI::IsMember({"oracle", "bricksum", "recursion", "all"}))
        ->capture_default_str();
    u->add_option("--format", fmt, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    fam_u.attach(u);

    auto* verify = app.add_subcommand("verify", "run property suites; nonzero exit on failure");
    verify->add_option("--suite", suite, "involution, lemma, determinants, recursions or all")
        ->check(CLI::IsMember({"involution", "lemma", "determinants", "recursions", "all"}))
        ->capture_default_str();
    verify->add_option("--max-n", max_n, "largest n for exhaustive checks")->capture_default_str();
    verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

    auto* trace = app.add_subcommand("trace", "show one step of the involution on an object");
    trace->add_option("--gamma", gamma, "pattern set")->required();
    trace->add_option("--bricks", bricks, "brick lengths, e.g. 2,3,1")->required();
    trace->add_option("--perm", perm, "permutation, e.g. 164523")->required();

    auto* conf = app.add_subcommand("conformance", "recursion / closed form vs oracle vs published rows, as JSON");
    conf->add_option("--out", out_path, "write the report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*nm) return cmd_nm(gamma, fam_nm, n, fmt, via_u, threads);
        if (*u) return cmd_u(gamma, fam_u, n, method, fmt, threads);
        if (*verify) return cmd_verify(suite, max_n, out_path, threads);
        if (*trace) return cmd_trace(gamma, bricks, perm);
        if (*conf) return cmd_conformance(out_path, threads);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
