#ifndef LIESYM_CLASSIFY_HPP
#define LIESYM_CLASSIFY_HPP

#include <string>
#include <utility>
#include <vector>

#include "liesym/algebras.hpp"
#include "liesym/equiv.hpp"
#include "liesym/parse.hpp"
#include "liesym/vectorfield.hpp"

namespace liesym {

// ---------------------------------------------------------------------------
// Parameterization schemes: closed-form right-hand sides built from opaque
// invariant functions I1, I2 of declared arguments, together with the claimed
// symmetry extension.
// ---------------------------------------------------------------------------

/// Which class the scheme belongs to: flux components depending on all of
/// (t, x, y, zeta_x, zeta_y), or on (t, zeta_x, zeta_y) only.
enum class SchemeClass { SpaceDependent, SpaceIndependent };

struct ParameterizationScheme {
    std::string label;
    SchemeClass cls = SchemeClass::SpaceIndependent;
    std::vector<Expr> args;  // declared arguments of I1 and I2 (empty:
                             // the invariant functions are plain constants)
    Expr f1, f2;
    std::vector<VectorField> extension;  // claimed extension generators on the
                                         // joint space; project for symmetry
    std::string note;                    // stated side conditions, verbatim
};

/// Validates the flux pair (via the class-member constructor) and the class
/// tag (space-independent schemes must not touch x or y).
ParameterizationScheme make_scheme(std::string label, SchemeClass cls,
                                   std::vector<Expr> args, Expr f1, Expr f2,
                                   std::vector<VectorField> extension,
                                   std::string note = "");

// Derived quantities shared by the catalog entries, in the zeta-jet alphabet.
Expr inv_R();                              // sqrt(zeta_x^2 + zeta_y^2)
Expr inv_Phi();                            // atan(zeta_y / zeta_x)
Expr inv_P1(const Expr& I1, const Expr& I2);
Expr inv_P2(const Expr& I1, const Expr& I2);

// ---------------------------------------------------------------------------
// Subalgebra records.
// ---------------------------------------------------------------------------

struct SubalgebraRecord {
    std::string label;  // which shipped list the record comes from
    std::vector<VectorField> basis;
    std::vector<std::string> constraints;  // stated side conditions, verbatim
    std::vector<Subst> cases;  // substitutions for the symbolic constants that
                               // realize the stated parameter constraints;
                               // a single empty case when unconstrained
};

/// Zero-test closure: every pairwise commutator of the basis must be a
/// rational linear combination of the basis elements.  Symbolic constants are
/// specialized per stored case (remaining ones drawn from the given stream),
/// candidate coefficients recovered numerically and confirmed exactly.
ZeroResult record_closure(const SubalgebraRecord& rec, std::mt19937_64& g);

/// Exact dimension of the intersection of the record's span with the
/// two rotation generators, computed over the five-dimensional projected
/// algebra (scaling, time translation, space scaling, both rotations).
/// The verdict passes iff the dimension is 0 or 2.
/// Throws when a basis element is outside that span.
bool jjt_condition(const SubalgebraRecord& rec);
bool jjt_condition(const std::vector<VectorField>& basis);

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

/// Invariant surface condition residual pair for an equivalence-algebra
/// operator Q acting on the scheme's flux components: for space-independent
/// schemes  xi^0 f^i_t + theta^j f^i_{zeta_j} - phi^i,  with the spatial
/// xi^x f^i_x + xi^y f^i_y terms added for space-dependent schemes.
std::pair<Expr, Expr> invariant_surface_residual(
    const VectorField& Q, const ParameterizationScheme& s);

struct GeneratorVerdict {
    std::string generator;
    ZeroResult result;
};

struct TableRowReport {
    std::string label;
    std::vector<GeneratorVerdict> extension;
    std::vector<GeneratorVerdict> kernel;
    bool pass() const;          // every verdict accepted (ok())
    bool all_symbolic() const;  // every verdict exactly zero
};

/// Build the flux-form equation for the scheme and run the symmetry check
/// for every claimed extension generator (projected to the point space) and
/// for the kernel: translations and the stream-function shift for
/// space-independent schemes, the shift alone for space-dependent ones.
TableRowReport verify_table_entry(const ParameterizationScheme& s);

// ---------------------------------------------------------------------------
// The shipped catalog: parsed once from the data files.
// ---------------------------------------------------------------------------

struct Catalog {
    std::vector<ParameterizationScheme> table1, table2, table3, table4;
    std::vector<SubalgebraRecord> restricted;  // graded subalgebra lists of
                                               // the reduced equivalence algebra
    std::vector<SubalgebraRecord> general;     // one-dimensional list for the
                                               // space-dependent class
    std::vector<SubalgebraRecord> optimal;     // one-dimensional optimal list
                                               // of the full equivalence algebra

    const std::vector<ParameterizationScheme>& table(int n) const;
};

const Catalog& catalog();

/// Parse a generator sum such as "D1 + b*D2 + a*J(1) + K(c) + G(ct*x)" into a
/// joint-space vector field.  K(delta) abbreviates H(delta) - Z(delta).
VectorField parse_generator(const std::string& text, const ParseContext& ctx);

} // namespace liesym

#endif
