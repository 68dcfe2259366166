#include "liesym/invariants.hpp"

#include <utility>

#include "liesym/algebras.hpp"
#include "liesym/jet.hpp"

namespace liesym {

namespace {

Expr pj(int a, int b, int c) { return jet("psi", {a, b, c}); }

// second/third-order building blocks of the full-algebra invariants
Expr theta_() { return sub(pj(0, 2, 0), pj(0, 0, 2)); }
Expr eta_() { return mul(rat(2), pj(0, 1, 1)); }
Expr zeta_() { return add(pj(0, 2, 0), pj(0, 0, 2)); }
Expr sig3_() { return sub(pj(0, 3, 0), mul(rat(3), pj(0, 1, 2))); }
Expr vsig3_() { return sub(mul(rat(3), pj(0, 2, 1)), pj(0, 0, 3)); }
Expr zx_() { return add(pj(0, 3, 0), pj(0, 1, 2)); }
Expr zy_() { return add(pj(0, 2, 1), pj(0, 0, 3)); }

Expr sq(const Expr& e) { return mul(e, e); }

DiffOp material_op() {
    // D_t + psi_x D_y - psi_y D_x
    DiffOp v;
    v.name = "V";
    v.ct = one();
    v.cx = neg(pj(0, 0, 1));
    v.cy = pj(0, 1, 0);
    return v;
}

} // namespace

Expr DiffOp::apply(const Expr& e) const {
    Expr out = zero();
    if (!ct.zero()) out = add(out, mul(ct, total_derivative(e, 0)));
    if (!cx.zero()) out = add(out, mul(cx, total_derivative(e, 1)));
    if (!cy.zero()) out = add(out, mul(cy, total_derivative(e, 2)));
    return out;
}

InvariantCatalog full_algebra_catalog() {
    InvariantCatalog c;
    c.algebra = "full point symmetry algebra";
    c.generators = g0_basis();

    Expr th = theta_(), et = eta_(), ze = zeta_();
    Expr s3 = sig3_(), v3 = vsig3_(), zx = zx_(), zy = zy_();
    Expr hess = add(sq(th), sq(et));       // theta^2 + eta^2
    Expr grad = add(sq(zx), sq(zy));       // zeta_x^2 + zeta_y^2
    DiffOp V = material_op();

    c.invariants = {
        {"I1", div(V.apply(ze), hess)},
        {"I2", mul(add(mul(th, V.apply(th)), mul(et, V.apply(et))),
                   pow(hess, Rational(-3, 2)))},
        {"I3", div(add(sq(add(V.apply(th), mul(et, ze))),
                       sq(sub(V.apply(et), mul(th, ze)))),
                   sq(hess))},
        {"I4", div(add(sq(s3), sq(v3)), grad)},
        {"I5", mul(add(mul(th, sub(sq(zx), sq(zy))),
                       mul(rat(2), mul(et, mul(zx, zy)))),
                   mul(pow(hess, Rational(-1, 2)), inv(grad)))},
        {"I6", mul(add(mul(s3, sub(pow(zx, Rational(3)),
                                   mul(rat(3), mul(zx, sq(zy))))),
                       mul(v3, sub(mul(rat(3), mul(sq(zx), zy)),
                                   pow(zy, Rational(3))))),
                   pow(grad, Rational(-2)))},
    };
    c.expected_rank = 6;

    Expr hm = pow(hess, Rational(-1, 2));
    // both scalings force the prefactor (theta^2+eta^2)^{1/2}/(zeta_x^2+zeta_y^2)
    Expr gm = mul(pow(hess, Rational(1, 2)), inv(grad));
    DiffOp o1{"normalized material derivative", hm, mul(hm, V.cx), mul(hm, V.cy)};
    DiffOp o2{"normalized gradient direction", zero(), mul(gm, zx), mul(gm, zy)};
    DiffOp o3{"normalized tangent direction", zero(), mul(gm, neg(zy)), mul(gm, zx)};
    c.operators = {o1, o2, o3};
    return c;
}

InvariantCatalog rotation_catalog() {
    InvariantCatalog c;
    c.algebra = "rotation subalgebra";
    c.generators = {g0_Dt(), g0_J(), g0_Jt(),
                    g0_Z(fn("chi", {sym("t")}, {0}))};

    Expr x = sym("x"), y = sym("y");
    Expr r2 = add(sq(x), sq(y));
    Expr px = pj(0, 1, 0), py = pj(0, 0, 1);
    Expr radial = add(mul(x, px), mul(y, py));        // x psi_x + y psi_y
    Expr angular = sub(mul(x, py), mul(y, px));       // x psi_y - y psi_x

    c.invariants = {
        {"J0", r2},
        {"J1", angular},
        {"J2", sub(mul(r2, zeta_()), mul(rat(2), radial))},
        {"J3",
         add(mul(r2, add(mul(x, pj(1, 1, 0)), mul(y, pj(1, 0, 1)))),
             mul(radial,
                 add(add(mul(mul(x, y), sub(pj(0, 0, 2), pj(0, 2, 0))),
                         mul(sub(sq(x), sq(y)), pj(0, 1, 1))),
                     angular)))},
    };
    c.expected_rank = 4;

    DiffOp v = material_op();
    DiffOp radial_op{"radial direction", zero(), x, y};
    DiffOp tangent_op{"tangent direction", zero(), neg(y), x};
    c.operators = {v, radial_op, tangent_op};
    c.notes = {
        "polar rewrite of the invariants: r, psi_phi, r psi_rr - psi_r, "
        "r psi_tr + psi_r psi_r_phi",
        "polar rewrite of the operators: D_t + psi_r/r D_phi, D_r, D_phi",
    };
    return c;
}

InvariantCatalog spatial_catalog() {
    InvariantCatalog c;
    c.algebra = "time translation and gauge shifts";
    c.generators = {g0_Dt(), g0_Z(fn("chi", {sym("t")}, {0}))};
    c.invariants = {
        {"x", sym("x")},
        {"y", sym("y")},
        {"psi_x", pj(0, 1, 0)},
        {"psi_y", pj(0, 0, 1)},
    };
    c.expected_rank = 4;
    c.operators = {{"D_t", one(), zero(), zero()},
                   {"D_x", zero(), one(), zero()},
                   {"D_y", zero(), zero(), one()}};
    return c;
}

std::vector<ZeroResult> invariant_verdicts(const Expr& I,
                                           const std::vector<VectorField>& gens,
                                           unsigned r) {
    std::vector<ZeroResult> out;
    out.reserve(gens.size());
    for (const auto& q : gens) {
        VectorField pr = prolong(q, r);
        out.push_back(is_zero(pr.apply(I)));
    }
    return out;
}

bool is_differential_invariant(const Expr& I,
                               const std::vector<VectorField>& gens,
                               unsigned r) {
    for (const auto& v : invariant_verdicts(I, gens, r))
        if (!v.ok()) return false;
    return true;
}

std::vector<ZeroResult> invariant_differentiation_verdicts(
    const DiffOp& op, const std::vector<VectorField>& gens, unsigned r) {
    // coordinates the truncated commutator is tested on: the base variables
    // and every psi-jet of order below the truncation
    std::vector<Expr> coords = {sym("t"), sym("x"), sym("y")};
    for (int a = 0; a <= static_cast<int>(r) - 1; ++a)
        for (int b = 0; a + b <= static_cast<int>(r) - 1; ++b)
            for (int cc = 0; a + b + cc <= static_cast<int>(r) - 1; ++cc)
                coords.push_back(pj(a, b, cc));

    std::vector<ZeroResult> out;
    out.reserve(gens.size());
    for (const auto& q : gens) {
        VectorField pr = prolong(q, r);
        ZeroResult worst;
        worst.kind = ZeroKind::Zero;
        for (const auto& u : coords) {
            Expr res = sub(op.apply(pr.apply(u)), pr.apply(op.apply(u)));
            ZeroResult z = is_zero(res);
            if (z.kind == ZeroKind::NonZero) {
                worst = z;
                break;
            }
            if (!z.symbolic() && worst.symbolic()) worst = z;
        }
        out.push_back(std::move(worst));
    }
    return out;
}

bool is_invariant_differentiation(const DiffOp& op,
                                  const std::vector<VectorField>& gens,
                                  unsigned r) {
    for (const auto& v : invariant_differentiation_verdicts(op, gens, r))
        if (!v.ok()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Functional independence
// ---------------------------------------------------------------------------

namespace {

struct KernelKey {
    Atom atom;
    Rational exp;
    bool operator<(const KernelKey& o) const {
        int c = cmp(atom, o.atom);
        if (c != 0) return c < 0;
        return exp < o.exp;
    }
};

Rational floor_rat(const Rational& q) {
    Int n = numerator(q), d = denominator(q);
    Int f = n / d;
    if (n < 0 && f * d != n) f -= 1;
    return Rational(f);
}

/// Replace transcendental factors (non-polynomial kernels, and fractional
/// powers of sums) by fresh independent symbols, so that everything that is
/// left is rational in its atoms.
struct Rationalizer {
    std::map<KernelKey, Atom> fresh;
    int counter = 0;

    Atom fresh_for(const Atom& a, const Rational& e) {
        KernelKey k{a, e};
        auto it = fresh.find(k);
        if (it != fresh.end()) return it->second;
        Atom s = symbol_atom("_k" + std::to_string(counter++), false);
        fresh.emplace(k, s);
        return s;
    }

    Expr run(const Expr& e) {
        Expr out = zero();
        for (const auto& t : e.terms) {
            Expr term = rat(t.coef);
            for (const auto& f : t.factors) {
                const AtomData& d = f.atom.data();
                if (d.kind == AtomKind::Kernel) {
                    bool integer_exp = denominator(f.exp) == 1;
                    if (d.kernel == KernelKind::PowSum && integer_exp) {
                        term = mul(term, pow(from_atom(f.atom), f.exp));
                        continue;
                    }
                    if (d.kernel == KernelKind::PowSum) {
                        Rational ip = floor_rat(f.exp);
                        Rational fp = f.exp - ip;
                        if (ip != 0)
                            term = mul(term, pow(from_atom(f.atom), ip));
                        term = mul(term, from_atom(fresh_for(f.atom, fp)));
                        continue;
                    }
                    term = mul(term, from_atom(fresh_for(f.atom, f.exp)));
                    continue;
                }
                term = mul(term, pow(from_atom(f.atom), f.exp));
            }
            out = add(out, term);
        }
        return out;
    }
};

struct RationalPole : PoleError {
    using PoleError::PoleError;
};

using RatEnv = std::map<Atom, Rational, AtomLess>;

Rational eval_rat(const Expr& e, RatEnv& env, std::mt19937_64& g);

Rational eval_rat_atom(const Atom& a, RatEnv& env, std::mt19937_64& g) {
    const AtomData& d = a.data();
    if (d.kind == AtomKind::Kernel) {
        if (d.kernel != KernelKind::PowSum)
            throw SymbolicError("non-rational kernel survived rationalization");
        return eval_rat(*d.arg, env, g);
    }
    auto it = env.find(a);
    if (it != env.end()) return it->second;
    bool positive = d.kind == AtomKind::Symbol;
    Rational v = sample_rational(g, positive);
    env.emplace(a, v);
    return v;
}

Rational eval_rat(const Expr& e, RatEnv& env, std::mt19937_64& g) {
    Rational acc = 0;
    for (const auto& t : e.terms) {
        Rational tv = t.coef;
        for (const auto& f : t.factors) {
            if (denominator(f.exp) != 1)
                throw SymbolicError("fractional exponent survived rationalization");
            Rational base = eval_rat_atom(f.atom, env, g);
            Int n = numerator(f.exp);
            if (base == 0) {
                if (n < 0) throw RationalPole("zero base at negative power");
                tv = 0;
                break;
            }
            bool invert = n < 0;
            if (invert) n = -n;
            Rational p = 1;
            for (Int i = 0; i < n; ++i) p *= base;
            tv *= invert ? Rational(1) / p : p;
        }
        acc += tv;
    }
    return acc;
}

unsigned rational_rank(std::vector<std::vector<Rational>>& m) {
    unsigned rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

unsigned functional_rank(const std::vector<Expr>& exprs, int samples) {
    Rationalizer rz;
    std::vector<Expr> flat;
    flat.reserve(exprs.size());
    for (const auto& e : exprs) flat.push_back(rz.run(e));

    // Jacobian columns: base variables and jet coordinates they depend on
    std::set<Atom, AtomLess> atoms;
    for (const auto& e : flat) collect_atoms(e, atoms);
    std::vector<Atom> vars;
    for (const auto& a : atoms) {
        const AtomData& d = a.data();
        if (d.kind == AtomKind::Jet ||
            (d.kind == AtomKind::Symbol && !d.constant &&
             d.name.rfind("_k", 0) != 0))
            vars.push_back(a);
    }

    std::vector<std::vector<Expr>> jac(flat.size());
    for (std::size_t i = 0; i < flat.size(); ++i)
        for (const auto& v : vars) jac[i].push_back(diff(flat[i], v));

    std::mt19937_64& g = rng();
    unsigned best = 0;
    int good = 0;
    for (int s = 0; s < samples; ++s) {
        RatEnv env;
        std::vector<std::vector<Rational>> m(flat.size());
        try {
            for (std::size_t i = 0; i < flat.size(); ++i)
                for (const auto& e : jac[i]) m[i].push_back(eval_rat(e, env, g));
        } catch (const RationalPole&) {
            continue;
        }
        ++good;
        best = std::max(best, rational_rank(m));
        if (best == flat.size()) break;
    }
    if (good == 0) throw PoleError("functional_rank: every sample hit a pole");
    return best;
}

} // namespace liesym
