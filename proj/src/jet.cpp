#include "liesym/jet.hpp"

#include "liesym/options.hpp"

namespace liesym {

Expr total_derivative(const Expr& e, int i) {
    return derive(e, [i](const Atom& a) -> Expr {
        const AtomData& d = a.data();
        if (d.kind == AtomKind::Symbol) {
            if (!d.constant && d.name == kIndep[i]) return one();
            return zero();
        }
        // Jet atom
        MIdx idx = d.jet;
        idx[i] += 1;
        if ((unsigned)midx_order(idx) > options().max_order)
            throw OrderOverflow("jet order cap " + std::to_string(options().max_order) +
                                " exceeded at " + d.name);
        return jet(d.name, idx);
    });
}

Expr total_derivative(const Expr& e, const MIdx& alpha) {
    Expr r = e;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < alpha[i]; ++k) r = total_derivative(r, i);
    return r;
}

Expr poisson(const Expr& a, const Expr& b) {
    return sub(mul(total_derivative(a, 1), total_derivative(b, 2)),
               mul(total_derivative(a, 2), total_derivative(b, 1)));
}

Expr zeta_expr(const MIdx& extra) {
    MIdx xx = extra, yy = extra;
    xx[1] += 2;
    yy[2] += 2;
    return add(jet("psi", xx), jet("psi", yy));
}

// ---------------------------------------------------------------------------
// SolutionManifold
// ---------------------------------------------------------------------------

SolutionManifold::SolutionManifold(Atom principal, Expr rhs)
    : principal_(std::move(principal)), rhs_(std::move(rhs)) {
    const AtomData& d = principal_.data();
    if (d.kind != AtomKind::Jet)
        throw SymbolicError("principal coordinate must be a jet coordinate");
    pidx_ = d.jet;
    dep_ = d.name;
    if (depends_on(rhs_, principal_))
        throw SymbolicError("right-hand side depends on the principal coordinate");
}

static bool geq_componentwise(const MIdx& a, const MIdx& b) {
    return a[0] >= b[0] && a[1] >= b[1] && a[2] >= b[2];
}

Expr SolutionManifold::solved(const MIdx& idx) const {
    auto it = cache_.find(idx);
    if (it != cache_.end()) return it->second;
    Expr s;
    if (idx == pidx_) {
        s = rhs_;
    } else {
        // peel one derivative off; every component of idx - pidx_ is >= 0
        MIdx lower = idx;
        int i = 0;
        for (; i < 3; ++i)
            if (idx[i] > pidx_[i]) break;
        lower[i] -= 1;
        s = total_derivative(solved(lower), i);
    }
    cache_.emplace(idx, s);
    return s;
}

Expr SolutionManifold::reduce(const Expr& e) const {
    Expr cur = e;
    // substitution strictly decreases jets in lexicographic (t, y, x) order,
    // so this loop terminates
    while (true) {
        std::set<Atom, AtomLess> atoms;
        collect_atoms(cur, atoms);
        bool found = false;
        for (const auto& a : atoms) {
            const AtomData& d = a.data();
            if (d.kind != AtomKind::Jet || d.name != dep_) continue;
            if (!geq_componentwise(d.jet, pidx_)) continue;
            Subst s;
            s.emplace(a, solved(d.jet));
            cur = substitute(cur, s);
            found = true;
            break;
        }
        if (!found) break;
    }
    return cur;
}

SolutionManifold vorticity_manifold(const Expr& rhs) {
    // zeta_t + {psi, zeta} = rhs, solved for psi_tyy:
    // psi_tyy = -psi_txx - psi_x*zeta_y + psi_y*zeta_x + rhs
    Expr solved = add(
        sub(mul(jet("psi", {0, 0, 1}), zeta_expr({0, 1, 0})),
            add(jet("psi", {1, 2, 0}),
                mul(jet("psi", {0, 1, 0}), zeta_expr({0, 0, 1})))),
        rhs);
    return SolutionManifold(jet_atom("psi", {1, 0, 2}), std::move(solved));
}

// ---------------------------------------------------------------------------
// Euler operator
// ---------------------------------------------------------------------------

Expr euler_operator(const Expr& density, const std::string& dep) {
    // highest (x, y) derivative order of dep appearing in the density
    std::set<Atom, AtomLess> atoms;
    collect_atoms(density, atoms);
    int top = 0;
    for (const auto& a : atoms) {
        const AtomData& d = a.data();
        if (d.kind == AtomKind::Jet && d.name == dep) {
            if (d.jet[0] != 0)
                throw SymbolicError("Euler operator expects no t-derivatives of " + dep);
            top = std::max(top, d.jet[1] + d.jet[2]);
        }
    }
    Expr acc = zero();
    for (int n = 0; n <= top; ++n)
        for (int ax = 0; ax <= n; ++ax) {
            int ay = n - ax;
            MIdx alpha{0, ax, ay};
            Expr part = diff(density, jet_atom(dep, alpha));
            if (part.zero()) continue;
            part = total_derivative(part, alpha);
            acc = add(acc, (n % 2 == 0) ? part : neg(part));
        }
    return acc;
}

} // namespace liesym
