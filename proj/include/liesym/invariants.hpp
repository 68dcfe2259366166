#ifndef LIESYM_INVARIANTS_HPP
#define LIESYM_INVARIANTS_HPP

#include <string>
#include <vector>

#include "liesym/vectorfield.hpp"

namespace liesym {

/// A formal combination h0*D_t + h1*D_x + h2*D_y of total derivatives with
/// jet-expression coefficients (candidate operator of invariant
/// differentiation).
struct DiffOp {
    std::string name;
    Expr ct, cx, cy;

    Expr apply(const Expr& e) const;
};

struct NamedInvariant {
    std::string name;
    Expr expr;
};

/// A named set of candidate differential invariants and invariant
/// differentiation operators attached to a point symmetry algebra.
struct InvariantCatalog {
    std::string algebra;
    std::vector<VectorField> generators;
    std::vector<NamedInvariant> invariants;
    std::vector<DiffOp> operators;
    /// documentation only (e.g. polar-coordinate rewrites); never verified
    std::vector<std::string> notes;
    /// expected Jacobian rank of the invariant list
    unsigned expected_rank = 0;
};

/// Full point symmetry algebra of the vorticity equation with its basis of
/// third-order differential invariants and the three operators of invariant
/// differentiation.
InvariantCatalog full_algebra_catalog();

/// Rotation subalgebra <d_t, J, J^t, Z(chi)> with Cartesian invariants.
InvariantCatalog rotation_catalog();

/// Translation/shift subalgebra <d_t, Z(chi)>: invariants x, y, psi_x, psi_y
/// and the plain total derivatives.
InvariantCatalog spatial_catalog();

/// Per-generator verdicts for Q_(r) I = 0.
std::vector<ZeroResult> invariant_verdicts(const Expr& I,
                                           const std::vector<VectorField>& gens,
                                           unsigned r);
bool is_differential_invariant(const Expr& I,
                               const std::vector<VectorField>& gens,
                               unsigned r);

/// Per-generator verdicts for the truncated commutator [op, Q_(r)]: its
/// coefficients on the base coordinates and on all psi-jets of order < r
/// must vanish.
std::vector<ZeroResult> invariant_differentiation_verdicts(
    const DiffOp& op, const std::vector<VectorField>& gens, unsigned r);
bool is_invariant_differentiation(const DiffOp& op,
                                  const std::vector<VectorField>& gens,
                                  unsigned r);

/// Computed rank (a lower bound) of the Jacobian of exprs with respect to
/// all base/jet coordinates, over exact rationals at random sample points;
/// maximum over `samples` draws.  Transcendental kernels are replaced by
/// fresh independent symbols before differentiation.
unsigned functional_rank(const std::vector<Expr>& exprs, int samples = 10);

} // namespace liesym

#endif
