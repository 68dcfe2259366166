#include "liesym/vectorfield.hpp"

namespace liesym {

Expr VectorField::apply(const Expr& e) const {
    Expr acc = zero();
    for (const auto& [c, f] : coef) {
        if (f.zero()) continue;
        Expr d = diff(e, c);
        if (!d.zero()) acc = add(acc, mul(f, d));
    }
    return acc;
}

VectorField vf_add(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    for (const auto& [c, f] : b.coef) r.set(c, add(r.get(c), f));
    return r;
}

VectorField vf_neg(const VectorField& a) {
    VectorField r;
    for (const auto& [c, f] : a.coef) r.set(c, neg(f));
    return r;
}

VectorField vf_sub(const VectorField& a, const VectorField& b) {
    return vf_add(a, vf_neg(b));
}

VectorField vf_scale(const VectorField& a, const Expr& s) {
    VectorField r;
    for (const auto& [c, f] : a.coef) r.set(c, mul(f, s));
    return r;
}

VectorField vf_scale(const VectorField& a, const Rational& s) {
    return vf_scale(a, rat(s));
}

VectorField commutator(const VectorField& a, const VectorField& b) {
    VectorField r;
    std::set<Atom, AtomLess> coords;
    for (const auto& [c, f] : a.coef) coords.insert(c);
    for (const auto& [c, f] : b.coef) coords.insert(c);
    for (const auto& c : coords) r.set(c, sub(a.apply(b.get(c)), b.apply(a.get(c))));
    return r;
}

bool vf_is_zero(const VectorField& a) { return a.zero_field(); }

ZeroResult vf_zero_verdict(const VectorField& a) {
    ZeroResult worst;
    worst.kind = ZeroKind::Zero;
    for (const auto& [c, f] : a.coef) {
        ZeroResult r = is_zero(f);
        if (r.kind == ZeroKind::NonZero) {
            r.evidence.push_back("coordinate " + to_string(c));
            return r;
        }
        if (r.kind == ZeroKind::Unknown) {
            if (worst.kind == ZeroKind::Zero) worst = r;
            worst.numerically_zero = worst.numerically_zero && r.numerically_zero;
        }
    }
    return worst;
}

std::string to_string(const VectorField& a) {
    std::string s;
    for (const auto& [c, f] : a.coef) {
        if (f.zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(f) + ")*d/d(" + to_string(c) + ")";
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Prolongation
// ---------------------------------------------------------------------------

unsigned max_jet_order(const Expr& e) {
    std::set<Atom, AtomLess> atoms;
    collect_atoms(e, atoms);
    unsigned r = 0;
    for (const auto& a : atoms)
        if (a.data().kind == AtomKind::Jet)
            r = std::max(r, (unsigned)midx_order(a.data().jet));
    return r;
}

VectorField prolong(const VectorField& q, unsigned r,
                    const std::vector<std::string>& deps) {
    VectorField p = q;
    std::array<Expr, 3> xi;
    for (int i = 0; i < 3; ++i) xi[i] = q.get(symbol_atom(kIndep[i], false));

    for (const auto& dep : deps) {
        // breadth-first over multi-indices in graded order
        std::vector<MIdx> level = {{0, 0, 0}};
        for (unsigned n = 0; n < r; ++n) {
            std::set<std::array<int, 3>> next_set;
            for (const auto& alpha : level)
                for (int i = 0; i < 3; ++i) {
                    MIdx beta = alpha;
                    beta[i] += 1;
                    if (next_set.count(beta)) continue;
                    next_set.insert(beta);
                    Expr phi = total_derivative(p.get(jet_atom(dep, alpha)), i);
                    for (int j = 0; j < 3; ++j) {
                        if (xi[j].zero()) continue;
                        MIdx aj = alpha;
                        aj[j] += 1;
                        phi = sub(phi, mul(total_derivative(xi[j], i), jet(dep, aj)));
                    }
                    p.set(jet_atom(dep, beta), phi);
                }
            level.assign(next_set.begin(), next_set.end());
        }
    }
    return p;
}

ZeroResult check_symmetry(const VectorField& q, const Expr& delta,
                          const SolutionManifold& m) {
    unsigned r = max_jet_order(delta);
    VectorField p = prolong(q, r);
    Expr e = m.reduce(p.apply(delta));
    return is_zero(e);
}

} // namespace liesym
