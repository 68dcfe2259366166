#ifndef LIESYM_EXPR_HPP
#define LIESYM_EXPR_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace liesym {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct SymbolicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a total derivative would push a jet coordinate past the
/// configured order cap.
struct OrderOverflow : SymbolicError {
    using SymbolicError::SymbolicError;
};

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

/// The independent variables are fixed as (t, x, y) throughout.
inline constexpr std::array<const char*, 3> kIndep = {"t", "x", "y"};
using MIdx = std::array<int, 3>;

inline int midx_order(const MIdx& a) { return a[0] + a[1] + a[2]; }

enum class AtomKind { Symbol, Jet, Fn, Kernel };

enum class KernelKind { Sin, Cos, Exp, Ln, Atan, PowSum, SymPow };

/// One node in the multiplicative layer.  Atoms are immutable and shared.
struct AtomData {
    AtomKind kind;

    // Symbol: a base variable (t, x, y) or a named constant.
    std::string name;    // also: dependent-variable name for Jet, fn name for Fn
    bool constant = false;

    // Jet: derivative multi-index of `name` with respect to (t, x, y).
    MIdx jet{0, 0, 0};

    // Fn: an opaque function of the argument expressions, differentiated
    // `der[k]` times with respect to its k-th slot.  If harm_x >= 0 the
    // function is harmonic in slots (harm_x, harm_y), i.e. F_aa = -F_bb,
    // and `der` is kept with der[harm_x] <= 1.
    std::vector<ExprPtr> args;
    std::vector<int> der;
    int harm_x = -1, harm_y = -1;

    // Kernel: sin/cos/exp/ln/atan of `arg`; PowSum holds a primitive sum
    // whose rational power lives in the enclosing Factor; SymPow is
    // base^exponent with a non-rational constant exponent.
    KernelKind kernel = KernelKind::Sin;
    ExprPtr arg;   // kernel argument / power base
    ExprPtr expo;  // SymPow exponent
};

class Atom {
public:
    Atom() = default;
    explicit Atom(std::shared_ptr<const AtomData> d) : d_(std::move(d)) {}
    const AtomData& data() const { return *d_; }
    const std::shared_ptr<const AtomData>& ptr() const { return d_; }
    bool valid() const { return d_ != nullptr; }

private:
    std::shared_ptr<const AtomData> d_;
};

int cmp(const Atom& a, const Atom& b);
int cmp(const Expr& a, const Expr& b);

struct AtomLess {
    bool operator()(const Atom& a, const Atom& b) const { return cmp(a, b) < 0; }
};

inline bool same_atom(const Atom& a, const Atom& b) { return cmp(a, b) == 0; }

// ---------------------------------------------------------------------------
// Expressions: canonical sums of terms, each term a rational coefficient
// times a sorted product of atom^exponent factors.
// ---------------------------------------------------------------------------

struct Factor {
    Atom atom;
    Rational exp;  // nonzero
};

struct Term {
    Rational coef;  // nonzero
    std::vector<Factor> factors;  // sorted by atom, unique atoms
};

struct Expr {
    std::vector<Term> terms;  // sorted by monomial, unique monomials

    bool zero() const { return terms.empty(); }
    bool is_rational() const {
        return terms.empty() || (terms.size() == 1 && terms[0].factors.empty());
    }
    Rational rational_value() const {
        if (terms.empty()) return 0;
        if (!is_rational()) throw SymbolicError("expression is not a rational constant");
        return terms[0].coef;
    }
};

inline ExprPtr make_ptr(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

// Construction ---------------------------------------------------------------

Expr rat(const Rational& r);
inline Expr zero() { return Expr{}; }
inline Expr one() { return rat(1); }

Atom symbol_atom(const std::string& name, bool constant);
Expr sym(const std::string& name);    // non-constant base symbol
Expr cst(const std::string& name);    // arbitrary named constant
Expr from_atom(const Atom& a);

Atom jet_atom(const std::string& dep, const MIdx& idx);
Expr jet(const std::string& dep, const MIdx& idx);

/// Opaque function application; `harm` marks two argument slots in which the
/// function is harmonic (pass {-1,-1} for none).  Returns a signed atom as an
/// expression because the harmonic rewrite F_xx -> -F_yy can flip signs.
Expr fn(const std::string& name, std::vector<Expr> args, std::vector<int> der,
        std::pair<int, int> harm = {-1, -1});

// Arithmetic (always canonical) ----------------------------------------------

Expr add(const Expr& a, const Expr& b);
Expr sub(const Expr& a, const Expr& b);
Expr neg(const Expr& a);
Expr mul(const Expr& a, const Expr& b);
Expr mul(const Expr& a, const Rational& r);
Expr pow(const Expr& base, const Rational& q);
Expr pow(const Expr& base, const Expr& q);  // constant symbolic exponent
Expr inv(const Expr& a);
Expr div(const Expr& a, const Expr& b);

inline Expr operator+(const Expr& a, const Expr& b) { return add(a, b); }
inline Expr operator-(const Expr& a, const Expr& b) { return sub(a, b); }
inline Expr operator-(const Expr& a) { return neg(a); }
inline Expr operator*(const Expr& a, const Expr& b) { return mul(a, b); }
inline Expr operator*(const Rational& r, const Expr& a) { return mul(a, r); }
inline Expr operator*(const Expr& a, const Rational& r) { return mul(a, r); }
inline Expr operator/(const Expr& a, const Expr& b) { return div(a, b); }

Expr sin_(const Expr& u);
Expr cos_(const Expr& u);
Expr exp_(const Expr& u);
Expr ln_(const Expr& u);
Expr atan_(const Expr& u);
inline Expr sqrt_(const Expr& u) { return pow(u, Rational(1, 2)); }

// Calculus --------------------------------------------------------------------

/// A derivation is determined by its action on Symbol and Jet atoms; chain
/// rules through Fn arguments and kernels are handled generically.
using BaseDeriv = std::function<Expr(const Atom&)>;

Expr derive(const Expr& e, const BaseDeriv& base);
Expr derive_atom(const Atom& a, const BaseDeriv& base);

/// Partial derivative with respect to a Symbol or Jet atom (chain-rules
/// through opaque-function arguments, so diff(gamma(t)*x, t) = gamma'(t)*x).
Expr diff(const Expr& e, const Atom& v);
Expr diff(const Expr& e, const std::string& symbol_name);

using Subst = std::map<Atom, Expr, AtomLess>;
Expr substitute(const Expr& e, const Subst& s);

/// All atoms occurring in e, recursing into function arguments and kernels.
void collect_atoms(const Expr& e, std::set<Atom, AtomLess>& out);

/// Leaf atoms that need numeric values during evaluation (symbols, jets and
/// opaque-function applications; kernels are computed, not sampled).
void collect_leaves(const Expr& e, std::set<Atom, AtomLess>& out);

bool depends_on(const Expr& e, const Atom& v);
bool is_constant_expr(const Expr& e);  // only constant symbols / numbers

// Printing ---------------------------------------------------------------------

std::string to_string(const Expr& e);
std::string to_string(const Atom& a);
std::string to_string(const Rational& r);

} // namespace liesym

#endif
