// Command-line front end: verification suites for the symmetry structure of
// the averaged two-dimensional vorticity equation, plus ad-hoc user checks.

#include <fstream>
#include <iostream>
#include <chrono>
#include <sstream>

#include <CLI11.hpp>

#include "liesym/algebras.hpp"
#include "liesym/classify.hpp"
#include "liesym/equiv.hpp"
#include "liesym/invariants.hpp"
#include "liesym/options.hpp"
#include "liesym/report.hpp"

using namespace liesym;

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// ---------------------------------------------------------------------------
// The check subcommand: a user file with [equation], [generators],
// [invariants] and [algebra] sections, all optional.
// ---------------------------------------------------------------------------

struct CheckInput {
    Expr left;                 // expression required to vanish
    Atom principal;            // jet coordinate the equation is solved for
    bool has_equation = false;
    std::vector<std::pair<std::string, VectorField>> generators;
    std::vector<std::pair<std::string, Expr>> invariants;
    std::vector<std::string> algebras;
};

// "x: -t*y; y: t*x; psi: (x^2+y^2)/2" -> point vector field
VectorField parse_coordinate_list(const std::string& text,
                                  const ParseContext& ctx) {
    VectorField q;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        item = trim(item);
        if (item.empty()) continue;
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("generator entry without a coordinate: " + item);
        std::string coord = trim(item.substr(0, colon));
        Expr e = parse(trim(item.substr(colon + 1)), ctx);
        if (coord == "t")
            q.set(coord_t(), e);
        else if (coord == "x")
            q.set(coord_x(), e);
        else if (coord == "y")
            q.set(coord_y(), e);
        else if (coord == "psi")
            q.set(coord_psi(), e);
        else
            throw ParseError("unknown generator coordinate: " + coord);
    }
    return q;
}

Atom parse_jet_name(const std::string& name) {
    // psi_txy style: the dependent name followed by a derivative suffix
    size_t us = name.find('_');
    if (us == std::string::npos)
        throw ParseError("principal derivative must be a jet name: " + name);
    MIdx idx{0, 0, 0};
    for (char ch : name.substr(us + 1)) {
        if (ch == 't') ++idx[0];
        else if (ch == 'x') ++idx[1];
        else if (ch == 'y') ++idx[2];
        else throw ParseError("bad derivative suffix: " + name);
    }
    return jet_atom(name.substr(0, us), idx);
}

CheckInput read_check_file(const std::string& path, const ParseContext& ctx) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open check file: " + path);
    CheckInput out;
    std::string section, line;
    std::string eq_left, eq_principal;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[' && s.back() == ']') {
            section = s.substr(1, s.size() - 2);
            if (section != "equation" && section != "generators" &&
                section != "invariants" && section != "algebra")
                throw ParseError("unknown section: " + section);
            continue;
        }
        if (section == "algebra") {
            out.algebras.push_back(s);
            continue;
        }
        size_t colon = s.find(':');
        if (colon == std::string::npos)
            throw ParseError("malformed line in [" + section + "]: " + s);
        std::string key = trim(s.substr(0, colon));
        std::string value = trim(s.substr(colon + 1));
        if (section == "equation") {
            if (key == "left") eq_left = value;
            else if (key == "principal") eq_principal = value;
            else throw ParseError("unknown equation key: " + key);
        } else if (section == "generators") {
            out.generators.emplace_back(key, parse_coordinate_list(value, ctx));
        } else if (section == "invariants") {
            out.invariants.emplace_back(key, parse(value, ctx));
        } else {
            throw ParseError("content outside any section: " + s);
        }
    }
    if (!eq_left.empty()) {
        if (eq_principal.empty())
            throw ParseError("[equation] needs both `left` and `principal`");
        out.left = parse(eq_left, ctx);
        out.principal = parse_jet_name(eq_principal);
        out.has_equation = true;
    }
    return out;
}

SuiteReport run_check(const CheckInput& in) {
    SuiteReport rep;
    rep.suite = "check";

    Expr delta;
    Atom principal;
    if (in.has_equation) {
        delta = in.left;
        principal = in.principal;
    } else {
        delta = zeta_expr({1, 0, 0}) +
                poisson(jet("psi", {0, 0, 0}), zeta_expr());
        principal = jet_atom("psi", {1, 0, 2});
    }
    Expr solved = from_atom(principal) - delta;
    if (depends_on(solved, principal))
        throw ParseError(
            "equation is not solved with unit coefficient for the principal "
            "derivative");
    SolutionManifold man(principal, solved);

    auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, q] : in.generators) {
        CaseResult c;
        c.case_label = "symmetry";
        c.generator = name;
        ZeroResult r = check_symmetry(q, delta, man);
        c.verdict = r.verdict();
        if (std::string(c.verdict) == "inconclusive") c.verdict = "nonzero";
        c.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        t0 = std::chrono::steady_clock::now();
        rep.cases.push_back(std::move(c));
    }

    std::vector<VectorField> gens;
    for (const auto& [name, q] : in.generators) gens.push_back(q);
    if (gens.empty()) gens = g0_basis();
    for (const auto& [name, I] : in.invariants) {
        CaseResult c;
        c.case_label = "invariant";
        c.generator = name;
        unsigned r = std::max(1u, max_jet_order(I));
        ZeroResult worst;
        worst.kind = ZeroKind::Zero;
        for (const ZeroResult& v : invariant_verdicts(I, gens, r)) {
            if (!v.ok()) { worst = v; break; }
            if (!v.symbolic()) worst = v;
        }
        c.verdict = worst.verdict();
        if (std::string(c.verdict) == "inconclusive") c.verdict = "nonzero";
        c.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        t0 = std::chrono::steady_clock::now();
        rep.cases.push_back(std::move(c));
    }

    for (const std::string& name : in.algebras) {
        AlgebraPresentation pres;
        if (name == "equivalence" || name == "g1") pres = g1_presentation();
        else if (name == "point" || name == "g0") pres = g0_presentation();
        else if (name == "time-independent") pres = time_independent_presentation();
        else if (name == "space-independent") pres = space_independent_presentation();
        else if (name == "autonomous") pres = autonomous_presentation();
        else throw ParseError("unknown algebra presentation: " + name);
        for (const TableCell& cell : commutator_table(pres)) {
            CaseResult c;
            c.case_label = "algebra " + name + " [" + cell.left + ", " +
                           cell.right + "]";
            c.generator = cell.label;
            c.verdict = (cell.matched && cell.recognized && cell.member)
                            ? "symbolic-zero"
                            : "nonzero";
            rep.cases.push_back(std::move(c));
        }
    }

    rep.sort_cases();
    return rep;
}

void emit(const std::vector<SuiteReport>& reports, bool json) {
    if (json) {
        std::cout << to_json(reports) << "\n";
    } else {
        for (const auto& r : reports) std::cout << to_text(r);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry verification suites for the averaged vorticity "
                 "equation"};
    app.require_subcommand(0, 1);

    bool json = false;
    std::uint64_t seed = 0;
    unsigned max_order = 6, precision = 128;
    std::string suite_flag;
    app.add_flag("--json", json, "machine-readable report");
    app.add_option("--seed", seed, "seed for the sampling stream");
    app.add_option("--max-order", max_order, "jet order cap");
    app.add_option("--numeric-precision", precision,
                   "mantissa bits for the numeric fallback");
    app.add_option("--suite", suite_flag,
                   "run one named suite (commutators, adjoint, g0, "
                   "invariants, equivalence, tables)");

    int table = 0;
    CLI::App* tables = app.add_subcommand(
        "verify-tables", "parameterization tables against their extensions");
    tables->add_option("--table", table, "restrict to one table (1-4)")
        ->check(CLI::Range(1, 4));

    app.add_subcommand("verify-commutators",
                       "commutator table of the equivalence algebra");
    app.add_subcommand("verify-adjoint", "closed-form adjoint actions");
    app.add_subcommand("verify-g0",
                       "point symmetries of the unforced equation");
    app.add_subcommand("verify-invariants",
                       "differential invariant catalogs");
    app.add_subcommand("verify-equivalence",
                       "equivalence-group transformation checks");

    CLI::App* check = app.add_subcommand("check", "ad-hoc user checks");
    std::string file;
    std::vector<std::string> inline_gens;
    check->add_option("--file", file, "check file");
    check->add_option("--generator", inline_gens,
                      "inline generator as coordinate:expression pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 3;
    }

    options().max_order = max_order;
    options().precision_bits = precision;
    reset_rng(seed);

    std::vector<SuiteReport> reports;
    try {
        auto run_named = [&](const std::string& name) {
            if (name == "commutators") reports.push_back(run_commutator_suite());
            else if (name == "adjoint") reports.push_back(run_adjoint_suite());
            else if (name == "g0") reports.push_back(run_g0_suite());
            else if (name == "invariants") reports.push_back(run_invariant_suite());
            else if (name == "equivalence")
                reports.push_back(run_equivalence_suite(rng()));
            else if (name == "tables")
                for (int n = 1; n <= 4; ++n) reports.push_back(run_table_suite(n));
            else throw ParseError("unknown suite: " + name);
        };

        if (app.got_subcommand("verify-commutators")) run_named("commutators");
        else if (app.got_subcommand("verify-adjoint")) run_named("adjoint");
        else if (app.got_subcommand("verify-g0")) run_named("g0");
        else if (app.got_subcommand("verify-invariants")) run_named("invariants");
        else if (app.got_subcommand("verify-equivalence")) run_named("equivalence");
        else if (app.got_subcommand("verify-tables")) {
            if (table)
                reports.push_back(run_table_suite(table));
            else
                for (int n = 1; n <= 4; ++n)
                    reports.push_back(run_table_suite(n));
        } else if (app.got_subcommand("check")) {
            ParseContext ctx = equivalence_context();
            CheckInput in;
            if (!file.empty()) in = read_check_file(file, ctx);
            for (size_t i = 0; i < inline_gens.size(); ++i)
                in.generators.emplace_back(
                    "inline-" + std::to_string(i + 1),
                    parse_coordinate_list(inline_gens[i], ctx));
            if (in.generators.empty() && in.invariants.empty() &&
                in.algebras.empty())
                throw ParseError("check: nothing to verify");
            reports.push_back(run_check(in));
        } else if (!suite_flag.empty()) {
            run_named(suite_flag);
        } else {
            std::cerr << "no subcommand; see --help\n";
            return 3;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    emit(reports, json);
    return exit_status(reports);
}
