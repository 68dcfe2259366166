#ifndef LIESYM_JET_HPP
#define LIESYM_JET_HPP

#include "liesym/expr.hpp"

namespace liesym {

/// Total derivative with respect to the i-th base variable (0=t, 1=x, 2=y).
/// Throws OrderOverflow past the configured jet order cap.
Expr total_derivative(const Expr& e, int i);
Expr total_derivative(const Expr& e, const MIdx& alpha);

/// Poisson bracket {a, b} = a_x b_y - a_y b_x with total x/y derivatives.
Expr poisson(const Expr& a, const Expr& b);

/// The vorticity zeta = psi_xx + psi_yy, differentiated by `extra`.
Expr zeta_expr(const MIdx& extra = {0, 0, 0});

/// An equation solved for a principal jet coordinate, together with its
/// total-derivative closure.  reduce() substitutes every jet coordinate
/// lying above the principal one until none remains.
class SolutionManifold {
public:
    SolutionManifold(Atom principal, Expr rhs);

    Expr reduce(const Expr& e) const;

    const Atom& principal() const { return principal_; }
    const Expr& rhs() const { return rhs_; }

private:
    Expr solved(const MIdx& idx) const;

    Atom principal_;
    MIdx pidx_;
    std::string dep_;
    Expr rhs_;
    mutable std::map<MIdx, Expr> cache_;
};

/// Manifold of zeta_t + {psi, zeta} = rhs, solved for psi_tyy.
SolutionManifold vorticity_manifold(const Expr& rhs);

/// Variational (Euler) operator with respect to `dep` over (x, y); t rides
/// along as a parameter.  Annihilates x/y divergences.
Expr euler_operator(const Expr& density, const std::string& dep = "zeta");

} // namespace liesym

#endif
