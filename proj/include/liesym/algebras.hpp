#ifndef LIESYM_ALGEBRAS_HPP
#define LIESYM_ALGEBRAS_HPP

#include <functional>
#include <string>
#include <vector>

#include "liesym/vectorfield.hpp"

namespace liesym {

// ---------------------------------------------------------------------------
// Coordinates of the joint space (t, x, y, psi, zeta_x, zeta_y, f1, f2) on
// which the equivalence algebra acts.  Point fields use the first four only.
// ---------------------------------------------------------------------------

const Atom& coord_t();
const Atom& coord_x();
const Atom& coord_y();
const Atom& coord_psi();
const Atom& coord_zx();
const Atom& coord_zy();
const Atom& coord_f1();
const Atom& coord_f2();

// Opaque parameter functions.
Expr param_t(const std::string& name);         // name(t)
Expr param_xy(const std::string& name);        // name(t, x, y)
Expr param_harmonic(const std::string& name);  // name(t, x, y), harmonic in (x, y)
Expr param_xy_only(const std::string& name);   // name(x, y)
Expr param_harmonic_xy(const std::string& name);  // name(x, y), harmonic

// ---------------------------------------------------------------------------
// Generator families of the equivalence algebra on the joint space.  The
// argument is the parameter function as an expression (it may itself be a
// composite, e.g. beta evaluated at a shifted time).
// ---------------------------------------------------------------------------

VectorField eq_D1();
VectorField eq_Dt();
VectorField eq_D2();
VectorField eq_J(const Expr& beta);    // beta = beta(t)
VectorField eq_X(const Expr& gamma1);  // gamma1 = gamma1(t)
VectorField eq_Y(const Expr& gamma2);  // gamma2 = gamma2(t)
VectorField eq_R(const Expr& sigma);   // sigma = sigma(t)
VectorField eq_H(const Expr& delta);   // delta = delta(t,x,y), harmonic in (x,y)
VectorField eq_G(const Expr& rho);     // rho = rho(t,x,y)
VectorField eq_Z(const Expr& chi);     // chi = chi(t)

/// Drop all coefficients except those on (t, x, y, psi).
VectorField project_point(const VectorField& q);

// Point symmetry generators of the unforced vorticity equation.
VectorField g0_D1();
VectorField g0_Dt();
VectorField g0_D2();
VectorField g0_J();                      // -y dx + x dy
VectorField g0_Jt();                     // -ty dx + tx dy + (x^2+y^2)/2 dpsi
VectorField g0_Jgen(const Expr& beta);   // rotation with time-dependent angle rate
VectorField g0_X(const Expr& gamma1);
VectorField g0_Y(const Expr& gamma2);
VectorField g0_Z(const Expr& chi);

/// The eight generators with opaque gamma1, gamma2, chi.
std::vector<VectorField> g0_basis();

// ---------------------------------------------------------------------------
// Symbolic generator terms and the encoded structure relations.
// ---------------------------------------------------------------------------

enum class Gen { D1, D2, Dt, J, X, Y, R, H, G, Z };

struct GenTerm {
    Gen kind;
    Rational coef = 1;
    Expr arg = one();  // ignored for D1, D2, Dt
};

using GenSum = std::vector<GenTerm>;

std::string to_string(const GenTerm& t);
std::string to_string(const GenSum& s);

VectorField instantiate(const GenSum& s);        // joint-space field
VectorField instantiate_point(const GenSum& s);  // projected point field

/// Expected commutator of two generator-family elements, as encoded
/// structure relations of the equivalence algebra.
GenSum structure_bracket(const GenTerm& a, const GenTerm& b);

// ---------------------------------------------------------------------------
// Recognizer: decompose a joint-space (or point) vector field into the
// generator families.  Fails with a reason when the field is not in the span.
// ---------------------------------------------------------------------------

struct Recognized {
    bool ok = false;
    std::string why;
    Rational c1 = 0, c0 = 0, c2 = 0;  // D1, dt, D2 parts
    Expr beta, gamma1, gamma2, sigma, delta, chi;
    Expr rho_x, rho_y;  // the G part is recovered through the gradient of rho
    std::string label() const;
};

Recognized recognize(const VectorField& q, bool point_space = false);

/// Rebuild a field from its recognized parts.
VectorField instantiate(const Recognized& r);

// ---------------------------------------------------------------------------
// Presentations and the commutator table.
// ---------------------------------------------------------------------------

struct AlgebraPresentation {
    std::string name;
    bool point_space = false;            // instantiate on (t,x,y,psi) only
    std::vector<GenTerm> basis;          // opaque parameter instances
    std::vector<GenTerm> basis_alt;      // same families, fresh parameter names
    std::function<bool(const Recognized&)> member;  // closure predicate
};

AlgebraPresentation g1_presentation();   // full equivalence algebra
AlgebraPresentation g0_presentation();   // point symmetry algebra
AlgebraPresentation time_independent_presentation();   // subclass f_t = 0
AlgebraPresentation space_independent_presentation();  // subclass f_x = f_y = 0
AlgebraPresentation autonomous_presentation();         // both restrictions

struct TableCell {
    std::string left, right;   // generator labels
    std::string label;         // expected commutator, pretty-printed
    bool matched = false;      // computed bracket equals the encoded relation
    bool recognized = false;   // decomposition into families succeeded
    bool member = false;       // recognized parts lie in the presentation
};

/// All pairwise commutators (upper triangle plus same-family pairs with a
/// fresh second parameter), checked against the structure relations and the
/// recognizer.
std::vector<TableCell> commutator_table(const AlgebraPresentation& pres);

} // namespace liesym

#endif
