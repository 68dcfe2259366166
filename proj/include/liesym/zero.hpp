#ifndef LIESYM_ZERO_HPP
#define LIESYM_ZERO_HPP

#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "liesym/expr.hpp"

namespace liesym {

using Real = boost::multiprecision::mpfr_float;

/// Raised when a sample point hits a pole / domain boundary (ln of a
/// non-positive value, fractional power of a negative base, ...).
struct PoleError : SymbolicError {
    using SymbolicError::SymbolicError;
};

using Env = std::map<Atom, Real, AtomLess>;

/// High-precision evaluation; every Symbol/Jet/Fn atom must be in env.
Real eval(const Expr& e, const Env& env);

void set_precision_bits(unsigned bits);

enum class ZeroKind { Zero, NonZero, Unknown };

struct ZeroResult {
    ZeroKind kind = ZeroKind::Unknown;
    bool numerically_zero = false;       // meaningful when kind == Unknown
    std::vector<std::string> evidence;   // sampled residual magnitudes, notes

    /// Accepted as vanishing (symbolically or numerically).
    bool ok() const {
        return kind == ZeroKind::Zero || (kind == ZeroKind::Unknown && numerically_zero);
    }
    bool symbolic() const { return kind == ZeroKind::Zero; }
    const char* verdict() const {
        if (kind == ZeroKind::Zero) return "symbolic-zero";
        if (kind == ZeroKind::NonZero) return "nonzero";
        return numerically_zero ? "numeric-zero" : "inconclusive";
    }
};

/// The shared deterministic sample stream (reset by the CLI per run).
std::mt19937_64& rng();
void reset_rng(std::uint64_t seed);

/// Random rational with small numerator/denominator; positive when asked.
Rational sample_rational(std::mt19937_64& g, bool positive);

/// Build an environment for all leaves of e (t and named constants positive).
Env sample_env(const Expr& e, std::mt19937_64& g);

/// Canonicalize, clear denominators, and fall back to seeded high-precision
/// sampling.  Zero is only ever reported from the exact canonical form.
ZeroResult is_zero(const Expr& e);

/// Multiply out common (including negative/fractional) factors; preserves
/// vanishing on the positive chart.
Expr clear_common_factors(const Expr& e);

} // namespace liesym

#endif
