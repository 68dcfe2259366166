#include "liesym/classify.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "liesym/jet.hpp"

#ifndef LIESYM_DATA_DIR
#define LIESYM_DATA_DIR "data"
#endif

namespace liesym {

namespace {

const Atom& at_x() { static Atom a = symbol_atom("x", false); return a; }
const Atom& at_y() { static Atom a = symbol_atom("y", false); return a; }

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

bool word_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

// Replace whole-word occurrences of `name` by the parenthesized value.
std::string expand_word(const std::string& text, const std::string& name,
                        const std::string& value) {
    std::string out;
    size_t i = 0;
    while (i < text.size()) {
        size_t p = text.find(name, i);
        if (p == std::string::npos) {
            out += text.substr(i);
            break;
        }
        bool left = p > 0 && word_char(text[p - 1]);
        bool right = p + name.size() < text.size() && word_char(text[p + name.size()]);
        out += text.substr(i, p - i);
        if (left || right)
            out += name;
        else
            out += "(" + value + ")";
        i = p + name.size();
    }
    return out;
}

// Split a generator-sum or term string at top-level occurrences of `seps`.
std::vector<std::pair<char, std::string>> top_split(const std::string& s,
                                                    const std::string& seps) {
    std::vector<std::pair<char, std::string>> out;
    int depth = 0;
    char pending = '+';
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth == 0 && seps.find(c) != std::string::npos &&
            !trim(cur).empty()) {
            out.emplace_back(pending, trim(cur));
            pending = c;
            cur.clear();
        } else if (depth == 0 && seps.find(c) != std::string::npos) {
            // leading sign of the next term
            if (c == '-') pending = pending == '-' ? '+' : '-';
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.emplace_back(pending, trim(cur));
    return out;
}

VectorField generator_by_name(const std::string& name, bool has_arg,
                              const Expr& arg) {
    if (name == "D1" || name == "D2" || name == "dt") {
        if (has_arg) throw ParseError(name + " takes no argument");
        if (name == "D1") return eq_D1();
        if (name == "D2") return eq_D2();
        return eq_Dt();
    }
    if (!has_arg) throw ParseError(name + " requires an argument");
    if (name == "J") return eq_J(arg);
    if (name == "X") return eq_X(arg);
    if (name == "Y") return eq_Y(arg);
    if (name == "R") return eq_R(arg);
    if (name == "H") return eq_H(arg);
    if (name == "G") return eq_G(arg);
    if (name == "Z") return eq_Z(arg);
    if (name == "K") return vf_sub(eq_H(arg), eq_Z(arg));
    throw ParseError("unknown generator family: " + name);
}

bool is_generator_factor(const std::string& f, std::string& name,
                         bool& has_arg, std::string& arg) {
    static const std::vector<std::string> kNames = {
        "D1", "D2", "dt", "J", "X", "Y", "R", "H", "G", "Z", "K"};
    for (const auto& n : kNames) {
        if (f == n) {
            name = n;
            has_arg = false;
            return true;
        }
        if (f.size() > n.size() + 1 && f.compare(0, n.size(), n) == 0 &&
            f[n.size()] == '(' && f.back() == ')') {
            // the parenthesis must close at the very end of the factor
            int depth = 0;
            bool closes_early = false;
            for (size_t i = n.size(); i + 1 < f.size(); ++i) {
                if (f[i] == '(') ++depth;
                if (f[i] == ')') --depth;
                if (depth == 0) { closes_early = true; break; }
            }
            if (closes_early) continue;
            name = n;
            has_arg = true;
            arg = f.substr(n.size() + 1, f.size() - n.size() - 2);
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Data file loading
// ---------------------------------------------------------------------------

struct Block {
    std::vector<std::pair<std::string, std::string>> entries;
    std::vector<std::string> values(const std::string& key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : entries)
            if (k == key) out.push_back(v);
        return out;
    }
    std::string value(const std::string& key, bool required = true) const {
        auto vs = values(key);
        if (vs.empty()) {
            if (required) throw ParseError("missing key: " + key);
            return "";
        }
        return vs.front();
    }
};

std::vector<Block> read_blocks(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SymbolicError("cannot open data file: " + path);
    std::vector<Block> blocks;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s == "[row]" || s == "[record]") {
            blocks.emplace_back();
            continue;
        }
        size_t colon = s.find(':');
        if (colon == std::string::npos || blocks.empty())
            throw ParseError("malformed data line in " + path + ": " + s);
        blocks.back().entries.emplace_back(trim(s.substr(0, colon)),
                                           trim(s.substr(colon + 1)));
    }
    return blocks;
}

// Context extension and let-macro expansion shared by rows and records.
struct BlockScope {
    ParseContext ctx = equivalence_context();
    std::vector<std::pair<std::string, std::string>> lets;

    explicit BlockScope(const Block& b) {
        for (const auto& cs : b.values("constants"))
            for (const auto& c : split(cs, ','))
                if (!c.empty()) ctx.constants.insert(c);
        for (const auto& fs : b.values("functions"))
            for (const auto& [_, decl] : top_split(fs, ",")) {
                size_t p = decl.find('(');
                if (p == std::string::npos || decl.back() != ')')
                    throw ParseError("malformed function declaration: " + decl);
                std::string name = trim(decl.substr(0, p));
                auto argnames =
                    split(decl.substr(p + 1, decl.size() - p - 2), ',');
                ctx.declare_fn(name, argnames);
            }
        for (const auto& [k, v] : b.entries) {
            if (k != "let") continue;
            size_t eq = v.find('=');
            if (eq == std::string::npos)
                throw ParseError("malformed let: " + v);
            lets.emplace_back(trim(v.substr(0, eq)),
                              expand(trim(v.substr(eq + 1))));
        }
    }

    std::string expand(std::string text) const {
        for (const auto& [name, value] : lets)
            text = expand_word(text, name, value);
        return text;
    }
    Expr expr(const std::string& text) const {
        return parse(expand(text), ctx);
    }
};

ParameterizationScheme load_scheme(const Block& b) {
    BlockScope sc(b);
    std::string cls_text = b.value("class");
    SchemeClass cls;
    if (cls_text == "space-independent")
        cls = SchemeClass::SpaceIndependent;
    else if (cls_text == "general")
        cls = SchemeClass::SpaceDependent;
    else
        throw ParseError("unknown scheme class: " + cls_text);

    std::vector<Expr> args;
    for (const auto& a : b.values("arg")) args.push_back(sc.expr(a));
    std::vector<VectorField> ext;
    for (const auto& g : b.values("extension"))
        ext.push_back(parse_generator(sc.expand(g), sc.ctx));

    std::string note;
    for (const auto& n : b.values("note")) {
        if (!note.empty()) note += "; ";
        note += n;
    }
    return make_scheme(b.value("label"), cls, std::move(args),
                       sc.expr(b.value("f1")), sc.expr(b.value("f2")),
                       std::move(ext), std::move(note));
}

SubalgebraRecord load_record(const Block& b) {
    BlockScope sc(b);
    SubalgebraRecord rec;
    rec.label = b.value("label");
    for (const auto& g : b.values("basis"))
        rec.basis.push_back(parse_generator(sc.expand(g), sc.ctx));
    rec.constraints = b.values("constraint");
    for (const auto& c : b.values("case")) {
        Subst s;
        for (const auto& part : split(c, ',')) {
            size_t eq = part.find('=');
            if (eq == std::string::npos)
                throw ParseError("malformed case: " + c);
            std::string name = trim(part.substr(0, eq));
            s[symbol_atom(name, true)] = parse(trim(part.substr(eq + 1)), sc.ctx);
        }
        rec.cases.push_back(std::move(s));
    }
    if (rec.cases.empty()) rec.cases.emplace_back();
    return rec;
}

std::vector<ParameterizationScheme> load_schemes(const std::string& file) {
    std::vector<ParameterizationScheme> out;
    for (const auto& b : read_blocks(std::string(LIESYM_DATA_DIR) + "/" + file))
        out.push_back(load_scheme(b));
    return out;
}

std::vector<SubalgebraRecord> load_records(const std::string& file) {
    std::vector<SubalgebraRecord> out;
    for (const auto& b : read_blocks(std::string(LIESYM_DATA_DIR) + "/" + file))
        out.push_back(load_record(b));
    return out;
}

// ---------------------------------------------------------------------------
// Field helpers
// ---------------------------------------------------------------------------

VectorField vf_subst(const VectorField& q, const Subst& s) {
    VectorField out;
    out.label = q.label;
    for (const auto& [c, e] : q.coef) out.set(c, substitute(e, s));
    return out;
}

void collect_constants(const Expr& e, std::set<Atom, AtomLess>& out) {
    std::set<Atom, AtomLess> atoms;
    collect_atoms(e, atoms);
    for (const auto& a : atoms)
        if (a.data().kind == AtomKind::Symbol && a.data().constant)
            out.insert(a);
}

// Specialize every named constant left in the fields to a generic rational.
std::vector<VectorField> specialize_constants(
    const std::vector<VectorField>& basis, const Subst& kase,
    std::function<Rational()> draw) {
    std::vector<VectorField> out;
    for (const auto& q : basis) out.push_back(vf_subst(q, kase));
    std::set<Atom, AtomLess> consts;
    for (const auto& q : out)
        for (const auto& [c, e] : q.coef) collect_constants(e, consts);
    Subst s;
    for (const auto& a : consts) s[a] = rat(draw());
    if (!s.empty())
        for (auto& q : out) q = vf_subst(q, s);
    return out;
}

Rational continued_fraction(const Real& v) {
    Real x = v;
    long long h2 = 0, h1 = 1, k2 = 1, k1 = 0;
    for (int i = 0; i < 40; ++i) {
        Real fl = floor(x);
        long long a = fl.convert_to<long long>();
        long long h = a * h1 + h2, k = a * k1 + k2;
        if (k == 0) break;
        if (abs(v - Real(h) / Real(k)) < 1e-25) return Rational(h, k);
        Real frac = x - fl;
        if (frac < 1e-30) break;
        x = 1 / frac;
        h2 = h1; h1 = h;
        k2 = k1; k1 = k;
    }
    throw SymbolicError("value is not close to a small rational");
}

// Least-squares candidate for  sum_k lambda_k q_k = c  over sampled points.
std::vector<Rational> span_coefficients(const std::vector<VectorField>& basis,
                                        const VectorField& c,
                                        std::mt19937_64& g) {
    size_t m = basis.size();
    std::set<Atom, AtomLess> coords;
    std::set<Atom, AtomLess> leaves;
    for (const auto& q : basis)
        for (const auto& [co, e] : q.coef) {
            coords.insert(co);
            collect_leaves(e, leaves);
        }
    for (const auto& [co, e] : c.coef) {
        coords.insert(co);
        collect_leaves(e, leaves);
    }

    std::vector<std::vector<Real>> rows;   // m entries per row
    std::vector<Real> rhs;
    int samples = 0;
    for (int attempt = 0; attempt < 24 && samples < 3; ++attempt) {
        Env env;
        for (const auto& a : leaves) {
            bool positive = a.data().kind == AtomKind::Symbol;
            Rational r = sample_rational(g, positive);
            env.emplace(a, Real(numerator(r)) / Real(denominator(r)));
        }
        try {
            std::vector<std::vector<Real>> local;
            std::vector<Real> local_rhs;
            for (const auto& co : coords) {
                std::vector<Real> row(m);
                for (size_t k = 0; k < m; ++k)
                    row[k] = eval(basis[k].get(co), env);
                local.push_back(std::move(row));
                local_rhs.push_back(eval(c.get(co), env));
            }
            for (auto& r : local) rows.push_back(std::move(r));
            for (auto& r : local_rhs) rhs.push_back(std::move(r));
            ++samples;
        } catch (const PoleError&) {
            // resample
        }
    }
    if (samples < 3) throw SymbolicError("persistent poles while sampling");

    // normal equations
    std::vector<std::vector<Real>> N(m, std::vector<Real>(m, Real(0)));
    std::vector<Real> b(m, Real(0));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) N[i][j] += rows[r][i] * rows[r][j];
            b[i] += rows[r][i] * rhs[r];
        }
    // Gaussian elimination with partial pivoting; rank-deficient directions
    // get coefficient zero.
    std::vector<size_t> order(m);
    for (size_t i = 0; i < m; ++i) order[i] = i;
    std::vector<Real> sol(m, Real(0));
    std::vector<bool> used(m, false);
    for (size_t col = 0; col < m; ++col) {
        size_t piv = m;
        Real best(0);
        for (size_t r = 0; r < m; ++r) {
            if (used[r]) continue;
            if (abs(N[r][col]) > best) { best = abs(N[r][col]); piv = r; }
        }
        if (piv == m || best < 1e-30) continue;
        used[piv] = true;
        order[col] = piv;
        for (size_t r = 0; r < m; ++r) {
            if (r == piv || abs(N[r][col]) < 1e-60) continue;
            Real f = N[r][col] / N[piv][col];
            for (size_t cc = 0; cc < m; ++cc) N[r][cc] -= f * N[piv][cc];
            b[r] -= f * b[piv];
        }
        sol[col] = Real(1);  // mark pivoted
    }
    std::vector<Rational> lambda(m, Rational(0));
    for (size_t col = 0; col < m; ++col) {
        if (sol[col] == 0) continue;
        size_t piv = order[col];
        lambda[col] = continued_fraction(b[piv] / N[piv][col]);
    }
    return lambda;
}

void fold_result(ZeroResult& acc, const ZeroResult& r) {
    auto rank = [](const ZeroResult& z) {
        if (z.kind == ZeroKind::NonZero) return 3;
        if (z.kind == ZeroKind::Unknown) return z.numerically_zero ? 1 : 2;
        return 0;
    };
    if (rank(r) > rank(acc)) {
        acc.kind = r.kind;
        acc.numerically_zero = r.numerically_zero;
    }
    for (const auto& e : r.evidence) acc.evidence.push_back(e);
}

} // namespace

// ---------------------------------------------------------------------------
// Schemes
// ---------------------------------------------------------------------------

Expr inv_R() { return sqrt_(jet("zeta", {0, 1, 0}) * jet("zeta", {0, 1, 0}) +
                            jet("zeta", {0, 0, 1}) * jet("zeta", {0, 0, 1})); }

Expr inv_Phi() {
    return atan_(jet("zeta", {0, 0, 1}) / jet("zeta", {0, 1, 0}));
}

static Expr zeta_grad_sq() {
    Expr zx = jet("zeta", {0, 1, 0}), zy = jet("zeta", {0, 0, 1});
    return zx * zx + zy * zy;
}

Expr inv_P1(const Expr& I1, const Expr& I2) {
    Expr zx = jet("zeta", {0, 1, 0}), zy = jet("zeta", {0, 0, 1});
    return (zx * I1 - zy * I2) / zeta_grad_sq();
}

Expr inv_P2(const Expr& I1, const Expr& I2) {
    Expr zx = jet("zeta", {0, 1, 0}), zy = jet("zeta", {0, 0, 1});
    return (zy * I1 + zx * I2) / zeta_grad_sq();
}

ParameterizationScheme make_scheme(std::string label, SchemeClass cls,
                                   std::vector<Expr> args, Expr f1, Expr f2,
                                   std::vector<VectorField> extension,
                                   std::string note) {
    member_flux(f1, f2);  // validates the jet content of both components
    if (cls == SchemeClass::SpaceIndependent)
        for (const Expr* f : {&f1, &f2})
            if (depends_on(*f, at_x()) || depends_on(*f, at_y()))
                throw SymbolicError(
                    "space-independent scheme depends on x or y: " + label);
    ParameterizationScheme s;
    s.label = std::move(label);
    s.cls = cls;
    s.args = std::move(args);
    s.f1 = std::move(f1);
    s.f2 = std::move(f2);
    s.extension = std::move(extension);
    s.note = std::move(note);
    return s;
}

// ---------------------------------------------------------------------------
// Invariant surface condition
// ---------------------------------------------------------------------------

std::pair<Expr, Expr> invariant_surface_residual(
    const VectorField& Q, const ParameterizationScheme& s) {
    Subst fsub;
    fsub[coord_f1()] = s.f1;
    fsub[coord_f2()] = s.f2;
    Expr xi0 = Q.get(coord_t());
    Expr thx = Q.get(coord_zx()), thy = Q.get(coord_zy());

    std::pair<Expr, Expr> out;
    Expr* slots[2] = {&out.first, &out.second};
    const Expr* fs[2] = {&s.f1, &s.f2};
    const Atom* fc[2] = {&coord_f1(), &coord_f2()};
    for (int i = 0; i < 2; ++i) {
        Expr phi = substitute(Q.get(*fc[i]), fsub);
        if (s.cls == SchemeClass::SpaceIndependent &&
            (depends_on(phi, at_x()) || depends_on(phi, at_y())))
            throw SymbolicError(
                "operator is outside the reduced algebra of the "
                "space-independent class: " + Q.label);
        Expr r = xi0 * diff(*fs[i], coord_t()) +
                 thx * diff(*fs[i], coord_zx()) +
                 thy * diff(*fs[i], coord_zy()) - phi;
        if (s.cls == SchemeClass::SpaceDependent)
            r = r + Q.get(coord_x()) * diff(*fs[i], coord_x()) +
                Q.get(coord_y()) * diff(*fs[i], coord_y());
        *slots[i] = r;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Table row verification
// ---------------------------------------------------------------------------

bool TableRowReport::pass() const {
    for (const auto* side : {&extension, &kernel})
        for (const auto& v : *side)
            if (!v.result.ok()) return false;
    return true;
}

bool TableRowReport::all_symbolic() const {
    for (const auto* side : {&extension, &kernel})
        for (const auto& v : *side)
            if (!v.result.symbolic()) return false;
    return true;
}

TableRowReport verify_table_entry(const ParameterizationScheme& s) {
    // Named constants are specialized to distinct generic positive rationals
    // before checking; with symbolic constants the canonicalizer has to carry
    // non-rational exponents like S^(3/(2(b+1))) and a single generator check
    // can take minutes.  Everything else (functions, jets) stays symbolic.
    std::set<Atom, AtomLess> consts;
    collect_constants(s.f1, consts);
    collect_constants(s.f2, consts);
    for (const auto& g : s.extension)
        for (const auto& [c, e] : g.coef) collect_constants(e, consts);

    std::vector<VectorField> ker;
    if (s.cls == SchemeClass::SpaceIndependent) {
        ker.push_back(g0_X(param_t("gamma1")));
        ker.push_back(g0_Y(param_t("gamma2")));
    }
    ker.push_back(g0_Z(param_t("chi")));

    TableRowReport rep;
    rep.label = s.label;
    ZeroResult init;
    init.kind = ZeroKind::Zero;
    for (const auto& g : s.extension) rep.extension.push_back({g.label, init});
    for (const auto& k : ker) rep.kernel.push_back({k.label, init});

    std::mt19937_64 g(0x5eedULL);
    const int draws = 1;
    for (int d = 0; d < draws; ++d) {
        Subst sub;
        std::set<Rational> taken;
        for (const auto& a : consts) {
            Rational r;
            do { r = sample_rational(g, true); } while (taken.count(r));
            taken.insert(r);
            sub[a] = rat(r);
        }
        ClassMember m =
            member_flux(substitute(s.f1, sub), substitute(s.f2, sub));
        Expr rhs_psi = expand_zeta(m.rhs);
        Expr delta = zeta_expr({1, 0, 0}) +
                     poisson(jet("psi", {0, 0, 0}), zeta_expr()) - rhs_psi;
        SolutionManifold man = vorticity_manifold(rhs_psi);
        for (size_t i = 0; i < s.extension.size(); ++i) {
            VectorField p = vf_subst(project_point(s.extension[i]), sub);
            fold_result(rep.extension[i].result, check_symmetry(p, delta, man));
        }
        for (size_t i = 0; i < ker.size(); ++i)
            fold_result(rep.kernel[i].result, check_symmetry(ker[i], delta, man));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Subalgebra records
// ---------------------------------------------------------------------------

ZeroResult record_closure(const SubalgebraRecord& rec, std::mt19937_64& g) {
    ZeroResult acc;
    acc.kind = ZeroKind::Zero;
    for (const auto& kase : rec.cases) {
        std::vector<VectorField> basis = specialize_constants(
            rec.basis, kase, [&g] { return sample_rational(g, false); });
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                VectorField c = commutator(basis[i], basis[j]);
                if (vf_is_zero(c)) continue;
                ZeroResult verdict;
                try {
                    std::vector<Rational> lambda =
                        span_coefficients(basis, c, g);
                    VectorField resid = c;
                    for (size_t k = 0; k < basis.size(); ++k)
                        resid = vf_sub(resid, vf_scale(basis[k], lambda[k]));
                    verdict = vf_zero_verdict(resid);
                } catch (const SymbolicError& err) {
                    verdict.kind = ZeroKind::NonZero;
                    verdict.evidence.push_back(rec.label + ": " + err.what());
                }
                if (!verdict.ok())
                    verdict.evidence.push_back(
                        rec.label + ": bracket of elements " +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        " left the span");
                fold_result(acc, verdict);
            }
    }
    return acc;
}

bool jjt_condition(const std::vector<VectorField>& basis) {
    // Substitute fixed generic rationals for named constants, project to the
    // point space and extract exact coordinates in the five-dimensional span.
    int counter = 0;
    std::vector<VectorField> fields = specialize_constants(
        basis, Subst{}, [&counter] {
            static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23};
            int i = counter++;
            return Rational(primes[i % 8], primes[(i + 3) % 8] + 1);
        });

    std::vector<std::array<Rational, 5>> vecs;  // D1, dt, D2, J, J^t
    for (const auto& q : fields) {
        Recognized r = recognize(project_point(q), true);
        if (!r.ok)
            throw SymbolicError("basis element outside the projected algebra: " +
                                r.why);
        for (const Expr* e : {&r.gamma1, &r.gamma2, &r.sigma, &r.delta, &r.chi})
            if (!e->zero())
                throw SymbolicError(
                    "basis element outside the five-dimensional span");
        Expr bt = diff(r.beta, "t");
        if (!bt.is_rational() || !(r.beta - bt * sym("t")).is_rational())
            throw SymbolicError("rotation argument is not affine in time");
        vecs.push_back({r.c1, r.c0, r.c2,
                        (r.beta - bt * sym("t")).rational_value(),
                        bt.rational_value()});
    }

    auto rank = [](std::vector<std::array<Rational, 5>> rows) {
        size_t rk = 0;
        for (size_t col = 0; col < 5 && rk < rows.size(); ++col) {
            size_t piv = rk;
            while (piv < rows.size() && rows[piv][col] == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[rk], rows[piv]);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rk || rows[r][col] == 0) continue;
                Rational f = rows[r][col] / rows[rk][col];
                for (size_t c = 0; c < 5; ++c) rows[r][c] -= f * rows[rk][c];
            }
            ++rk;
        }
        return rk;
    };

    size_t dim_u = rank(vecs);
    std::vector<std::array<Rational, 5>> joined = vecs;
    joined.push_back({0, 0, 0, 1, 0});
    joined.push_back({0, 0, 0, 0, 1});
    size_t dim_sum = rank(joined);
    size_t dim_cap = dim_u + 2 - dim_sum;
    return dim_cap == 0 || dim_cap == 2;
}

bool jjt_condition(const SubalgebraRecord& rec) {
    return jjt_condition(rec.basis);
}

// ---------------------------------------------------------------------------
// Generator parsing and the catalog
// ---------------------------------------------------------------------------

VectorField parse_generator(const std::string& text, const ParseContext& ctx) {
    VectorField acc;
    acc.label = trim(text);
    for (const auto& [sign, term] : top_split(text, "+-")) {
        Expr coef = sign == '-' ? rat(Rational(-1)) : one();
        VectorField gen;
        bool have_gen = false;
        for (const auto& [op, factor] : top_split(term, "*")) {
            if (op != '+' && op != '*')
                throw ParseError("unexpected separator in generator term: " +
                                 term);
            std::string name, arg;
            bool has_arg = false;
            if (is_generator_factor(factor, name, has_arg, arg)) {
                if (have_gen)
                    throw ParseError("two generator factors in one term: " +
                                     term);
                gen = generator_by_name(name, has_arg,
                                        has_arg ? parse(arg, ctx) : zero());
                have_gen = true;
            } else {
                coef = coef * parse(factor, ctx);
            }
        }
        if (!have_gen)
            throw ParseError("generator term without a generator: " + term);
        acc = vf_add(acc, vf_scale(gen, coef));
    }
    acc.label = trim(text);
    return acc;
}

const std::vector<ParameterizationScheme>& Catalog::table(int n) const {
    switch (n) {
    case 1: return table1;
    case 2: return table2;
    case 3: return table3;
    case 4: return table4;
    }
    throw SymbolicError("no such table: " + std::to_string(n));
}

const Catalog& catalog() {
    static const Catalog cat = [] {
        Catalog c;
        c.table1 = load_schemes("table1.scm");
        c.table2 = load_schemes("table2.scm");
        c.table3 = load_schemes("table3.scm");
        c.table4 = load_schemes("table4.scm");
        c.restricted = load_records("subalgebras-restricted.alg");
        c.general = load_records("subalgebras-general.alg");
        c.optimal = load_records("subalgebras-optimal.alg");
        return c;
    }();
    return cat;
}

} // namespace liesym
