#ifndef LIESYM_EQUIV_HPP
#define LIESYM_EQUIV_HPP

#include <random>
#include <utility>
#include <vector>

#include "liesym/jet.hpp"
#include "liesym/vectorfield.hpp"
#include "liesym/zero.hpp"

namespace liesym {

// ---------------------------------------------------------------------------
// Class members.  Three nested right-hand-side shapes for the vorticity
// transport equation zeta_t + {psi, zeta} = ..., written with zeta and its
// spatial derivatives as opaque jet coordinates jet("zeta", ...):
//
//   General:   zeta_t = F(t, x, y, psi, psi_x, psi_y, zeta, ..., zeta_yy)
//   Transport: zeta_t + {psi, zeta} = H(t, x, y, zeta, ..., zeta_yy)
//   Flux:      zeta_t + {psi, zeta} = D_x f1 + D_y f2,
//              f_i = f_i(t, x, y, zeta_x, zeta_y)
// ---------------------------------------------------------------------------

enum class MemberForm { General, Transport, Flux };

struct ClassMember {
    MemberForm form = MemberForm::Transport;
    Expr rhs;       // the right-hand side in the form's own convention
    Expr f1, f2;    // only for Flux: rhs == D_x f1 + D_y f2
};

/// Construct members; each validates the declared argument dependencies and
/// throws SymbolicError on stray coordinates (psi derivatives inside H,
/// time derivatives of zeta, second zeta derivatives inside flux pairs, ...).
ClassMember member_general(Expr F);
ClassMember member_transport(Expr H);
ClassMember member_flux(Expr f1, Expr f2);

/// jet("zeta", idx) as an expression.
Expr zeta_jet(const MIdx& idx);

/// Replace every zeta jet by the matching derivative of psi_xx + psi_yy.
Expr expand_zeta(const Expr& e);

/// D_x f1 + D_y f2 in the zeta-jet alphabet.
Expr flux_divergence(const Expr& f1, const Expr& f2);

/// The member's right-hand side for zeta_t + {psi,zeta} = rhs, in psi jets;
/// feeds vorticity_manifold.
Expr transport_rhs_in_psi(const ClassMember& m);

// ---------------------------------------------------------------------------
// Point transformations of the outer class:
//   t~ = T(t),  x~ = Z1(t,x,y),  y~ = Z2(t,x,y),  psi~ = Ups(t) psi + Phi(t,x,y)
// with Z1_k Z2_k = 0, Z1_k Z1_k = Z2_k Z2_k =: L and T_t Ups L != 0.
// ---------------------------------------------------------------------------

struct PointTransformation {
    Expr T, Z1, Z2, Ups, Phi;
    Expr L;  // derived: Z1_x^2 + Z1_y^2
};

/// Validates the orthogonality/isometry conditions (symbolic-or-numeric Zero
/// required) and nondegeneracy (NonZero required); throws SymbolicError.
PointTransformation make_point_transformation(Expr T, Expr Z1, Expr Z2,
                                              Expr Ups, Expr Phi);
PointTransformation point_identity();

// ---------------------------------------------------------------------------
// The structured transformations acting on the transport class:
//   t~ = tau,  x~ = lam (x c - y s) + gamma1,  eps y~ = lam (x s + y c) + gamma2,
//   psi~ = eps (lam/tau_t)(lam psi + (lam/2) beta_t (x^2+y^2)
//          - gamma1_t (x s + y c) + gamma2_t (x c - y s)) + delta + (sigma/2)(x^2+y^2)
// with c = cos beta, s = sin beta; tau, lam, beta, gamma_i, sigma functions
// of t; delta(t,x,y) harmonic; eps = +-1, tau_t != 0, lam > 0.
// ---------------------------------------------------------------------------

struct TransportTransformation {
    int eps = 1;
    Expr tau, lam, beta, gamma1, gamma2, sigma;
    Expr delta;
};

TransportTransformation transport_identity();

/// Validate eps, tau_t != 0 and harmonicity of delta; throws SymbolicError.
void validate(const TransportTransformation& tr);

/// Nested subgroups singled out by constraints on the parameter functions.
enum class TransportSubgroup {
    Full,                 // no extra constraint
    AffineTime,           // tau_tt = 0
    SpaceHomogeneous,     // lam_t = 0, sigma = 0, delta affine in (x, y)
    AffineHomogeneous,    // intersection of the previous two
    Flux,                 // tau_tt = 0, lam_t = 0
    SpaceIndependentFlux  // Flux plus beta_tt = 0, sigma = 0, delta_x = delta_y = 0
};

/// Residual expressions whose vanishing puts tr into the subgroup.
std::vector<Expr> subgroup_residuals(const TransportTransformation& tr,
                                     TransportSubgroup s);
bool in_subgroup(const TransportTransformation& tr, TransportSubgroup s);

/// Assemble the explicit point transformation realizing tr.
PointTransformation to_point_transformation(const TransportTransformation& tr);

// ---------------------------------------------------------------------------
// Induced transformations of the right-hand sides.  All formulas are written
// in the source coordinates: the returned member is the new right-hand side
// composed with the transformation, so equality checks happen on the source
// jet space (see pushforward_residual).
// ---------------------------------------------------------------------------

/// General form: F~ computed from T, Z1, Z2, Ups, Phi.
ClassMember apply_point(const PointTransformation& tr, const ClassMember& m);

/// Transport form: H~ computed from the structured parameters.
ClassMember apply_transport(const TransportTransformation& tr, const ClassMember& m);

/// Flux form (requires tr in the Flux subgroup): the transformed pair
/// (f1~, f2~) including the gauge terms chi(t) and rho(t,x,y).
std::pair<Expr, Expr> apply_flux(const TransportTransformation& tr,
                                 const Expr& f1, const Expr& f2,
                                 const Expr& chi, const Expr& rho);

/// Transformed vorticity in source coordinates:
///   point shape: L^{-1} (Ups zeta + Phi_xx + Phi_yy)
///   structured shape: (eps/tau_t)(zeta + 2 beta_t) + 2 sigma / lam^2
/// (both in the zeta-jet alphabet).
Expr transformed_vorticity(const PointTransformation& tr);
Expr transformed_vorticity(const TransportTransformation& tr);

// ---------------------------------------------------------------------------
// Jet pushforward.  For a point transformation the derivatives of psi~ with
// respect to the new base variables, expressed through source coordinates,
// follow recursively from D_mu(psi~ expression) = D_mu(Z~^nu) psi~_nu.
// ---------------------------------------------------------------------------

/// Map from new coordinates (the t, x, y symbols and psi jets of order <= r,
/// reusing the source atom alphabet) to their source-coordinate expressions.
Subst pushforward_exprs(const PointTransformation& tr, int r);

/// Same pushforward for a structured transformation.  The inverse Jacobian of
/// a rotation-plus-shift has a short closed form, which keeps the recursion
/// far smaller than inverting the generic 3x3 matrix via its adjugate.
Subst pushforward_exprs(const TransportTransformation& tr, int r);

/// Evaluate the pushforward at a sample point.
Env jets_pushforward(const PointTransformation& tr, const Env& point, int r);
Env jets_pushforward(const TransportTransformation& tr, const Env& point, int r);

/// Residual of the transformed equation evaluated through the pushforward and
/// reduced on the source solution manifold; identically zero iff the induced
/// right-hand-side formula is consistent with the point transformation.
/// General members check zeta~_t~ - F~, transport/flux members check
/// zeta~_t~ + {psi~, zeta~} - H~.
Expr pushforward_residual(const PointTransformation& tr, const ClassMember& m);
Expr pushforward_residual(const TransportTransformation& tr, const ClassMember& m);

// ---------------------------------------------------------------------------
// Adjoint series: Ad(e^{eps X}) Y = sum_k (-eps)^k / k! ad_X^k Y.
// ---------------------------------------------------------------------------

/// Series coefficients [Y, -[X,Y], [X,[X,Y]]/2, ...] up to order N.
std::vector<VectorField> adjoint(const VectorField& X, const VectorField& Y,
                                 int N = 6);

/// k-th Taylor coefficient around eps = 0 of a field whose coefficients
/// depend on the symbol named `eps`; used to compare closed forms of adjoint
/// actions against the series.
VectorField series_coefficient(const VectorField& F, const std::string& eps, int k);

// ---------------------------------------------------------------------------
// Membership constraints for transport-form right-hand sides.
// ---------------------------------------------------------------------------

struct ConstraintVerdict {
    std::string name;
    ZeroResult verdict;
};

/// The four constraints carving the flux class with space-independent pairs
/// out of the transport class: H_zeta = 0, H_x = H_y = 0, vanishing
/// variational derivative, and linearity in the second derivatives
/// (zeta_ij H_{zeta_ij} = H).
std::vector<ConstraintVerdict> class_constraints(const ClassMember& m);

// ---------------------------------------------------------------------------
// Deterministic sampling for the verification suites.
// ---------------------------------------------------------------------------

/// Polynomial of degree <= deg in t with rational coefficients in [-3, 3].
Expr sample_time_polynomial(std::mt19937_64& g, int deg = 2);

/// Structured transformation with polynomial parameters restricted to the
/// requested subgroup; both signs of eps occur.
TransportTransformation sample_transport_transformation(
    std::mt19937_64& g, TransportSubgroup s = TransportSubgroup::Full);

/// Random polynomial transport member (degree <= 1 in each zeta jet).
ClassMember sample_transport_member(std::mt19937_64& g);

/// Random polynomial flux pair f_i(t, x, y, zeta_x, zeta_y).
std::pair<Expr, Expr> sample_flux_pair(std::mt19937_64& g);

/// A drawn harmonic polynomial: one of 1, x, y, x^2 - y^2, xy, x^3 - 3xy^2.
Expr sample_harmonic(std::mt19937_64& g);

} // namespace liesym

#endif
