#include "liesym/zero.hpp"

#include <cmath>

#include "liesym/options.hpp"

namespace liesym {

Options& options() {
    static Options opts;
    return opts;
}

void set_precision_bits(unsigned bits) {
    // mpfr_float precision is configured in decimal digits
    unsigned digits = (unsigned)(bits * 0.30103) + 4;
    Real::default_precision(digits);
}

std::mt19937_64& rng() {
    static std::mt19937_64 g(options().seed);
    return g;
}

void reset_rng(std::uint64_t seed) {
    options().seed = seed;
    rng().seed(seed);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

static Real eval_pow(const Real& b, const Rational& q) {
    if (denominator(q) == 1) {
        if (b == 0 && q < 0) throw PoleError("zero base with negative exponent");
        int n = numerator(q).convert_to<int>();
        return pow(b, n);
    }
    if (b <= 0) throw PoleError("fractional power of a non-positive base");
    Real qe = Real(numerator(q)) / Real(denominator(q));
    return pow(b, qe);
}

static Real eval_atom(const Atom& a, const Env& env);

static void ensure_precision() {
    static bool done = false;
    if (!done) {
        set_precision_bits(options().precision_bits);
        done = true;
    }
}

Real eval(const Expr& e, const Env& env) {
    ensure_precision();
    Real acc = 0;
    for (const auto& t : e.terms) {
        Real tv = Real(numerator(t.coef)) / Real(denominator(t.coef));
        for (const auto& f : t.factors) tv *= eval_pow(eval_atom(f.atom, env), f.exp);
        acc += tv;
    }
    return acc;
}

static Real eval_atom(const Atom& a, const Env& env) {
    const AtomData& d = a.data();
    switch (d.kind) {
    case AtomKind::Symbol:
    case AtomKind::Jet:
    case AtomKind::Fn: {
        auto it = env.find(a);
        if (it == env.end())
            throw SymbolicError("no sample value for atom " + to_string(a));
        return it->second;
    }
    case AtomKind::Kernel: {
        Real u = eval(*d.arg, env);
        switch (d.kernel) {
        case KernelKind::Sin:
            return sin(u);
        case KernelKind::Cos:
            return cos(u);
        case KernelKind::Exp:
            if (u > 256) throw PoleError("exp overflow guard");
            return exp(u);
        case KernelKind::Ln:
            if (u <= 0) throw PoleError("ln of a non-positive value");
            return log(u);
        case KernelKind::Atan:
            return atan(u);
        case KernelKind::PowSum:
            return u;  // the factor exponent is applied by the caller
        case KernelKind::SymPow: {
            if (u <= 0) throw PoleError("symbolic power of a non-positive base");
            Real q = eval(*d.expo, env);
            return pow(u, q);
        }
        }
    }
    }
    throw SymbolicError("unreachable atom kind");
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

Rational sample_rational(std::mt19937_64& g, bool positive) {
    std::uniform_int_distribution<int> num(1, 48);
    std::uniform_int_distribution<int> den(1, 8);
    std::uniform_int_distribution<int> sgn(0, 1);
    int n = num(g), d = den(g);
    if (!positive && sgn(g)) n = -n;
    return Rational(n, d);
}

Env sample_env(const Expr& e, std::mt19937_64& g) {
    std::set<Atom, AtomLess> leaves;
    collect_leaves(e, leaves);
    Env env;
    for (const auto& a : leaves) {
        // base variables and named constants stay on the positive chart;
        // jets and opaque function values are generic signed samples
        bool positive = a.data().kind == AtomKind::Symbol;
        Rational r = sample_rational(g, positive);
        env.emplace(a, Real(numerator(r)) / Real(denominator(r)));
    }
    return env;
}

// ---------------------------------------------------------------------------
// Denominator clearing
// ---------------------------------------------------------------------------

Expr clear_common_factors(const Expr& e) {
    Expr cur = e;
    for (int pass = 0; pass < 5; ++pass) {
        if (cur.zero() || cur.terms.size() == 1) break;
        // per-atom minimum exponent, absence counting as zero
        std::map<Atom, Rational, AtomLess> mins;
        std::map<Atom, size_t, AtomLess> counts;
        for (const auto& t : cur.terms)
            for (const auto& f : t.factors) {
                auto [it, fresh] = mins.emplace(f.atom, f.exp);
                if (!fresh && f.exp < it->second) it->second = f.exp;
                counts[f.atom] += 1;
            }
        bool changed = false;
        for (auto& [a, ex] : mins) {
            if (counts[a] < cur.terms.size() && ex > 0) continue;
            if (ex == 0) continue;
            const AtomData& d = a.data();
            bool clearable = d.kind != AtomKind::Kernel ||
                             d.kernel == KernelKind::PowSum ||
                             d.kernel == KernelKind::SymPow ||
                             d.kernel == KernelKind::Exp;
            if (!clearable && ex > 0) continue;  // don't divide by sin etc.
            // multiply by the bare factor so it merges with each term's
            // exponent before any expansion takes place
            Expr f;
            f.terms.push_back(Term{1, {Factor{a, -ex}}});
            cur = mul(cur, f);
            changed = true;
            if (cur.zero()) return cur;
        }
        if (!changed) break;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// The zero test
// ---------------------------------------------------------------------------

ZeroResult is_zero(const Expr& e) {
    ZeroResult res;
    if (e.zero()) {
        res.kind = ZeroKind::Zero;
        return res;
    }
    Expr cleared = clear_common_factors(e);
    if (cleared.zero()) {
        res.kind = ZeroKind::Zero;
        res.evidence.push_back("vanishes after clearing common factors");
        return res;
    }

    const Options& o = options();
    const Real tol_zero("1e-30");
    const Real tol_nonzero("1e-10");
    std::mt19937_64& g = rng();

    unsigned got = 0;
    bool all_tiny = true;
    for (unsigned s = 0; s < o.samples; ++s) {
        Real r;
        bool ok = false;
        for (unsigned k = 0; k < o.pole_retries && !ok; ++k) {
            try {
                Env env = sample_env(cleared, g);
                r = abs(eval(cleared, env));
                ok = true;
            } catch (const PoleError&) {
                // resample
            }
        }
        if (!ok) {
            res.kind = ZeroKind::Unknown;
            res.numerically_zero = false;
            res.evidence.push_back("sampling failed: persistent poles");
            return res;
        }
        ++got;
        res.evidence.push_back(r.str(6));
        if (r > tol_nonzero) {
            res.kind = ZeroKind::NonZero;
            return res;
        }
        if (r >= tol_zero) all_tiny = false;
    }
    res.kind = ZeroKind::Unknown;
    res.numerically_zero = (got == o.samples) && all_tiny;
    return res;
}

} // namespace liesym
