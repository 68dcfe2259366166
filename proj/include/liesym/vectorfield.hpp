#ifndef LIESYM_VECTORFIELD_HPP
#define LIESYM_VECTORFIELD_HPP

#include <string>

#include "liesym/jet.hpp"
#include "liesym/zero.hpp"

namespace liesym {

/// A vector field as a map coordinate -> coefficient.  Coordinates are
/// Symbol atoms (t, x, y, f1, f2, ...) or Jet atoms (psi, zeta_x, ...);
/// everything not listed has coefficient zero.
struct VectorField {
    std::map<Atom, Expr, AtomLess> coef;
    std::string label;

    Expr get(const Atom& c) const {
        auto it = coef.find(c);
        return it == coef.end() ? zero() : it->second;
    }
    void set(const Atom& c, Expr e) {
        if (e.zero())
            coef.erase(c);
        else
            coef[c] = std::move(e);
    }
    bool zero_field() const {
        for (const auto& [c, e] : coef)
            if (!e.zero()) return false;
        return true;
    }

    /// Apply as a derivation: sum of coef_c * d/dc.
    Expr apply(const Expr& e) const;
};

VectorField vf_add(const VectorField& a, const VectorField& b);
VectorField vf_sub(const VectorField& a, const VectorField& b);
VectorField vf_neg(const VectorField& a);
VectorField vf_scale(const VectorField& a, const Expr& s);
VectorField vf_scale(const VectorField& a, const Rational& s);

/// Lie bracket [a, b]^c = a(b^c) - b(a^c).
VectorField commutator(const VectorField& a, const VectorField& b);

/// All coefficients vanish identically (exact canonical test only).
bool vf_is_zero(const VectorField& a);

/// Zero test per coefficient with the full symbolic/numeric pipeline;
/// the worst verdict across coefficients wins.
ZeroResult vf_zero_verdict(const VectorField& a);

std::string to_string(const VectorField& a);

/// Prolong a point vector field on (t, x, y) x deps to all jets of order
/// <= r using phi^{alpha+e_i} = D_i phi^alpha - sum_j D_i(xi^j) u_{alpha+e_j}.
VectorField prolong(const VectorField& q, unsigned r,
                    const std::vector<std::string>& deps = {"psi"});

/// Max jet order over all dependent variables occurring in e.
unsigned max_jet_order(const Expr& e);

/// Infinitesimal invariance: prolong q to the order of delta, apply to
/// delta, reduce on the manifold, and zero-test.
ZeroResult check_symmetry(const VectorField& q, const Expr& delta,
                          const SolutionManifold& m);

} // namespace liesym

#endif
