#include "liesym/expr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace liesym {

// ---------------------------------------------------------------------------
// Ordering
// ---------------------------------------------------------------------------

static int cmp_rat(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

static int cmp_int(long a, long b) { return a < b ? -1 : (a > b ? 1 : 0); }

static int cmp_midx(const MIdx& a, const MIdx& b) {
    // graded, then lexicographic
    int c = cmp_int(midx_order(a), midx_order(b));
    if (c) return c;
    for (int i = 0; i < 3; ++i)
        if ((c = cmp_int(a[i], b[i]))) return c;
    return 0;
}

int cmp(const Expr& a, const Expr& b);

static int cmp_ptr(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    return cmp(*a, *b);
}

int cmp(const Atom& a, const Atom& b) {
    if (a.ptr() == b.ptr()) return 0;
    const AtomData& x = a.data();
    const AtomData& y = b.data();
    int c = cmp_int((long)x.kind, (long)y.kind);
    if (c) return c;
    switch (x.kind) {
    case AtomKind::Symbol:
        if ((c = x.name.compare(y.name))) return c < 0 ? -1 : 1;
        return cmp_int(x.constant, y.constant);
    case AtomKind::Jet:
        if ((c = x.name.compare(y.name))) return c < 0 ? -1 : 1;
        return cmp_midx(x.jet, y.jet);
    case AtomKind::Fn: {
        if ((c = x.name.compare(y.name))) return c < 0 ? -1 : 1;
        if ((c = cmp_int((long)x.args.size(), (long)y.args.size()))) return c;
        for (size_t i = 0; i < x.der.size(); ++i)
            if ((c = cmp_int(x.der[i], y.der[i]))) return c;
        for (size_t i = 0; i < x.args.size(); ++i)
            if ((c = cmp_ptr(x.args[i], y.args[i]))) return c;
        if ((c = cmp_int(x.harm_x, y.harm_x))) return c;
        return cmp_int(x.harm_y, y.harm_y);
    }
    case AtomKind::Kernel:
        if ((c = cmp_int((long)x.kernel, (long)y.kernel))) return c;
        if ((c = cmp_ptr(x.arg, y.arg))) return c;
        return cmp_ptr(x.expo, y.expo);
    }
    return 0;
}

static int cmp_monomial(const Term& a, const Term& b) {
    size_t n = std::min(a.factors.size(), b.factors.size());
    for (size_t i = 0; i < n; ++i) {
        int c = cmp(a.factors[i].atom, b.factors[i].atom);
        if (c) return c;
        if ((c = cmp_rat(a.factors[i].exp, b.factors[i].exp))) return c;
    }
    return cmp_int((long)a.factors.size(), (long)b.factors.size());
}

int cmp(const Expr& a, const Expr& b) {
    size_t n = std::min(a.terms.size(), b.terms.size());
    for (size_t i = 0; i < n; ++i) {
        int c = cmp_monomial(a.terms[i], b.terms[i]);
        if (c) return c;
        if ((c = cmp_rat(a.terms[i].coef, b.terms[i].coef))) return c;
    }
    return cmp_int((long)a.terms.size(), (long)b.terms.size());
}

// ---------------------------------------------------------------------------
// Atom construction
// ---------------------------------------------------------------------------

static Atom make(AtomData d) {
    return Atom(std::make_shared<const AtomData>(std::move(d)));
}

Atom symbol_atom(const std::string& name, bool constant) {
    AtomData d;
    d.kind = AtomKind::Symbol;
    d.name = name;
    d.constant = constant;
    return make(std::move(d));
}

Atom jet_atom(const std::string& dep, const MIdx& idx) {
    AtomData d;
    d.kind = AtomKind::Jet;
    d.name = dep;
    d.jet = idx;
    return make(std::move(d));
}

Expr rat(const Rational& r) {
    Expr e;
    if (r != 0) e.terms.push_back(Term{r, {}});
    return e;
}

Expr from_atom(const Atom& a) {
    Expr e;
    e.terms.push_back(Term{1, {Factor{a, 1}}});
    return e;
}

Expr sym(const std::string& name) { return from_atom(symbol_atom(name, false)); }
Expr cst(const std::string& name) { return from_atom(symbol_atom(name, true)); }
Expr jet(const std::string& dep, const MIdx& idx) { return from_atom(jet_atom(dep, idx)); }

Expr fn(const std::string& name, std::vector<Expr> args, std::vector<int> der,
        std::pair<int, int> harm) {
    if (der.size() < args.size()) der.resize(args.size(), 0);
    int sign = 1;
    if (harm.first >= 0) {
        // harmonic side relation: F_aa = -F_bb, keep der[a] <= 1
        while (der[harm.first] >= 2) {
            der[harm.first] -= 2;
            der[harm.second] += 2;
            sign = -sign;
        }
    }
    AtomData d;
    d.kind = AtomKind::Fn;
    d.name = name;
    for (auto& a : args) d.args.push_back(make_ptr(std::move(a)));
    d.der = std::move(der);
    d.harm_x = harm.first;
    d.harm_y = harm.second;
    Expr e = from_atom(make(std::move(d)));
    return sign == 1 ? e : neg(e);
}

static Atom kernel_atom(KernelKind k, Expr arg, ExprPtr expo = nullptr) {
    AtomData d;
    d.kind = AtomKind::Kernel;
    d.kernel = k;
    d.arg = make_ptr(std::move(arg));
    d.expo = std::move(expo);
    return make(std::move(d));
}

// ---------------------------------------------------------------------------
// Canonicalizing arithmetic
// ---------------------------------------------------------------------------

static Expr normalize_monomial(Rational coef, std::vector<Factor> fs);
static Expr mul_term_term(const Term& a, const Term& b);

Expr add(const Expr& a, const Expr& b) {
    Expr r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = cmp_monomial(a.terms[i], b.terms[j]);
        if (c < 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c > 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Rational s = a.terms[i].coef + b.terms[j].coef;
            if (s != 0) r.terms.push_back(Term{s, a.terms[i].factors});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

Expr neg(const Expr& a) {
    Expr r = a;
    for (auto& t : r.terms) t.coef = -t.coef;
    return r;
}

Expr sub(const Expr& a, const Expr& b) { return add(a, neg(b)); }

Expr mul(const Expr& a, const Rational& r) {
    if (r == 0) return zero();
    Expr e = a;
    for (auto& t : e.terms) t.coef *= r;
    return e;
}

Expr mul(const Expr& a, const Expr& b) {
    Expr acc;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) acc = add(acc, mul_term_term(ta, tb));
    return acc;
}

static Expr mul_term_term(const Term& a, const Term& b) {
    std::vector<Factor> fs;
    fs.reserve(a.factors.size() + b.factors.size());
    fs.insert(fs.end(), a.factors.begin(), a.factors.end());
    fs.insert(fs.end(), b.factors.begin(), b.factors.end());
    return normalize_monomial(a.coef * b.coef, std::move(fs));
}

// integer nth root if exact, else nothing
static bool exact_root(const Int& v, unsigned n, Int& out) {
    if (v < 0) return false;
    if (v == 0 || v == 1 || n == 1) {
        out = v;
        return true;
    }
    Int lo = 0, hi = v;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        Int p = 1;
        bool over = false;
        for (unsigned i = 0; i < n; ++i) {
            p *= mid;
            if (p > v) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    Int p = 1;
    for (unsigned i = 0; i < n; ++i) p *= lo;
    if (p == v) {
        out = lo;
        return true;
    }
    return false;
}

static Rational rat_int_pow(const Rational& c, const Int& n) {
    Rational r = 1, b = c;
    Int k = n < 0 ? -n : n;
    while (k > 0) {
        if (k % 2 == 1) r *= b;
        b *= b;
        k /= 2;
    }
    if (n < 0) {
        if (r == 0) throw SymbolicError("division by zero");
        r = 1 / r;
    }
    return r;
}

// c^q as an expression (exact rational if possible, else a PowSum factor)
static Expr rational_pow_expr(const Rational& c, const Rational& q) {
    if (c == 0) {
        if (q <= 0) throw SymbolicError("0 raised to a non-positive power");
        return zero();
    }
    if (c == 1 || q == 0) return one();
    Int qn = numerator(q), qd = denominator(q);
    if (qd == 1) return rat(rat_int_pow(c, qn));
    if (c < 0) throw SymbolicError("fractional power of a negative constant");
    Int rn, rd;
    if (exact_root(numerator(c), (unsigned)qd, rn) &&
        exact_root(denominator(c), (unsigned)qd, rd)) {
        Rational root(rn, rd);
        return rat(rat_int_pow(root, qn));
    }
    Expr e;
    e.terms.push_back(Term{1, {Factor{kernel_atom(KernelKind::PowSum, rat(c)), q}}});
    return e;
}

// Split e into a monomial factor m and a primitive sum S with e = m*S:
// per-atom minimum exponents and the rational content are pulled out, and
// the leading coefficient of S is made positive.
struct Content {
    Rational coef = 1;
    std::vector<Factor> factors;  // sorted
};

static Expr apply_content_inverse(const Expr& e, const Content& m);

static Content extract_content(const Expr& e) {
    Content m;
    // rational content: gcd of numerators / lcm of denominators, sign of lead
    Int g = 0, l = 1;
    for (const auto& t : e.terms) {
        g = gcd(g, numerator(t.coef));
        l = lcm(l, denominator(t.coef));
    }
    if (g == 0) g = 1;
    m.coef = Rational(g, l);
    if (e.terms[0].coef < 0) m.coef = -m.coef;
    // per-atom minimum exponent, a term without the atom counting as 0
    std::map<Atom, Rational, AtomLess> mins;
    for (const auto& t : e.terms)
        for (const auto& f : t.factors) {
            auto [it, fresh] = mins.emplace(f.atom, f.exp);
            if (!fresh && f.exp < it->second) it->second = f.exp;
        }
    for (auto& [a, ex] : mins) {
        bool everywhere = true;
        for (const auto& t : e.terms) {
            bool present = false;
            for (const auto& f : t.factors)
                if (same_atom(f.atom, a)) present = true;
            if (!present) everywhere = false;
        }
        if (!everywhere && ex > 0) ex = 0;
        if (ex != 0) m.factors.push_back(Factor{a, ex});
    }
    return m;
}

// e / m, exact by construction of m
static Expr apply_content_inverse(const Expr& e, const Content& m) {
    Expr r;
    for (const auto& t : e.terms) {
        Term nt;
        nt.coef = t.coef / m.coef;
        for (const auto& f : t.factors) {
            Rational ex = f.exp;
            for (const auto& g : m.factors)
                if (same_atom(g.atom, f.atom)) ex -= g.exp;
            if (ex != 0) nt.factors.push_back(Factor{f.atom, ex});
        }
        for (const auto& g : m.factors) {
            bool present = false;
            for (const auto& f : t.factors)
                if (same_atom(f.atom, g.atom)) present = true;
            if (!present) nt.factors.push_back(Factor{g.atom, -g.exp});
        }
        std::sort(nt.factors.begin(), nt.factors.end(),
                  [](const Factor& a, const Factor& b) { return cmp(a.atom, b.atom) < 0; });
        r.terms.push_back(std::move(nt));
    }
    std::sort(r.terms.begin(), r.terms.end(),
              [](const Term& a, const Term& b) { return cmp_monomial(a, b) < 0; });
    return r;
}

static Expr pow_atom(const Atom& a, const Rational& q);

Expr pow(const Expr& base, const Rational& q) {
    if (base.zero()) {
        if (q <= 0) throw SymbolicError("0 raised to a non-positive power");
        return zero();
    }
    if (q == 0) return one();
    if (q == 1) return base;
    if (base.terms.size() == 1) {
        const Term& t = base.terms[0];
        Expr acc = rational_pow_expr(t.coef, q);
        for (const auto& f : t.factors) acc = mul(acc, pow_atom(f.atom, f.exp * q));
        return acc;
    }
    if (denominator(q) == 1 && q > 0) {
        // expand positive integer powers of sums
        Expr r = one(), b = base;
        Int k = numerator(q);
        while (k > 0) {
            if (k % 2 == 1) r = mul(r, b);
            b = mul(b, b);
            k /= 2;
        }
        return r;
    }
    Content m = extract_content(base);
    if (denominator(q) != 1 && m.coef < 0) {
        // keep the pulled-out content positive under fractional powers (the
        // sign stays inside the primitive sum, e.g. for sums of squares whose
        // leading monomial happens to carry a negative coefficient)
        m.coef = -m.coef;
    }
    Expr prim = apply_content_inverse(base, m);
    Expr acc = rational_pow_expr(m.coef, q);
    for (const auto& f : m.factors) acc = mul(acc, pow_atom(f.atom, f.exp * q));
    if (prim.terms.size() == 1) return mul(acc, pow(prim, q));
    Expr ps;
    ps.terms.push_back(Term{1, {Factor{kernel_atom(KernelKind::PowSum, std::move(prim)), q}}});
    return mul(acc, ps);
}

static Expr pow_atom(const Atom& a, const Rational& q) {
    if (q == 0) return one();
    const AtomData& d = a.data();
    if (d.kind == AtomKind::Kernel) {
        switch (d.kernel) {
        case KernelKind::PowSum:
            return pow(*d.arg, q);
        case KernelKind::SymPow:
            return pow(*d.arg, mul(*d.expo, q));
        case KernelKind::Exp:
            return exp_(mul(*d.arg, q));
        default:
            break;
        }
    }
    // sin^2 and friends are handled by monomial normalization
    return normalize_monomial(1, {Factor{a, q}});
}

Expr inv(const Expr& a) { return pow(a, Rational(-1)); }
Expr div(const Expr& a, const Expr& b) { return mul(a, inv(b)); }

// symbolic exponents -----------------------------------------------------------

static Expr sympow_of(Expr base, Expr expo) {
    Expr e;
    Atom a = kernel_atom(KernelKind::SymPow, std::move(base), make_ptr(std::move(expo)));
    e.terms.push_back(Term{1, {Factor{a, 1}}});
    return e;
}

static Expr sym_pow_part(const Expr& base, const Expr& qs);

Expr pow(const Expr& base, const Expr& q) {
    if (!is_constant_expr(q))
        throw SymbolicError("symbolic exponent must be a constant expression");
    // split the exponent into rational part + rest
    Rational r = 0;
    Expr qs;
    for (const auto& t : q.terms) {
        if (t.factors.empty())
            r = t.coef;
        else
            qs.terms.push_back(t);
    }
    Expr acc = pow(base, r);
    if (qs.zero()) return acc;
    return mul(acc, sym_pow_part(base, qs));
}

static Expr sym_pow_part(const Expr& base, const Expr& qs) {
    if (base.zero()) throw SymbolicError("0 raised to a symbolic power");
    if (base.terms.size() == 1) {
        const Term& t = base.terms[0];
        Expr acc = one();
        if (t.coef != 1) {
            if (t.coef < 0)
                throw SymbolicError("symbolic power of a negative constant");
            acc = sympow_of(rat(t.coef), qs);
        }
        for (const auto& f : t.factors) {
            const AtomData& d = f.atom.data();
            Expr fe = mul(qs, f.exp);
            if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::PowSum) {
                acc = mul(acc, pow(*d.arg, fe));
            } else if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::SymPow) {
                acc = mul(acc, pow(*d.arg, mul(*d.expo, fe)));
            } else if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::Exp) {
                acc = mul(acc, exp_(mul(*d.arg, fe)));
            } else {
                acc = mul(acc, sympow_of(from_atom(f.atom), fe));
            }
        }
        return acc;
    }
    Content m = extract_content(base);
    Expr prim = apply_content_inverse(base, m);
    Expr mono;
    mono.terms.push_back(Term{m.coef, m.factors});
    Expr acc = sym_pow_part(mono, qs);
    if (prim.terms.size() == 1) return mul(acc, sym_pow_part(prim, qs));
    return mul(acc, sympow_of(std::move(prim), qs));
}

// kernels -----------------------------------------------------------------------

static bool leading_negative(const Expr& e) {
    return !e.terms.empty() && e.terms[0].coef < 0;
}

Expr sin_(const Expr& u) {
    if (u.zero()) return zero();
    if (leading_negative(u)) return neg(sin_(neg(u)));
    return from_atom(kernel_atom(KernelKind::Sin, u));
}

Expr cos_(const Expr& u) {
    if (u.zero()) return one();
    if (leading_negative(u)) return cos_(neg(u));
    return from_atom(kernel_atom(KernelKind::Cos, u));
}

Expr atan_(const Expr& u) {
    if (u.zero()) return zero();
    if (leading_negative(u)) return neg(atan_(neg(u)));
    return from_atom(kernel_atom(KernelKind::Atan, u));
}

Expr exp_(const Expr& u) {
    // canonical form: exp(c*m) is stored as Exp(m)^c with m a coefficient-one
    // monomial, so exp(x)*exp(-x) and exp(x)^2*exp(-2x) cancel structurally
    if (u.zero()) return one();
    Expr acc = one();
    for (const auto& t : u.terms) {
        Expr m;
        m.terms.push_back(Term{1, t.factors});
        Atom a = kernel_atom(KernelKind::Exp, std::move(m));
        acc = mul(acc, normalize_monomial(1, {Factor{a, t.coef}}));
    }
    return acc;
}

Expr ln_(const Expr& u) {
    if (u.zero()) throw SymbolicError("ln of zero");
    if (u.terms.size() == 1) {
        const Term& t = u.terms[0];
        if (t.coef < 0) throw SymbolicError("ln of a negative monomial");
        Expr acc = zero();
        if (t.coef != 1) acc = from_atom(kernel_atom(KernelKind::Ln, rat(t.coef)));
        for (const auto& f : t.factors) {
            const AtomData& d = f.atom.data();
            Expr la;
            if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::PowSum)
                la = ln_(*d.arg);
            else if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::SymPow)
                la = mul(*d.expo, ln_(*d.arg));
            else if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::Exp)
                la = *d.arg;
            else
                la = from_atom(kernel_atom(KernelKind::Ln, from_atom(f.atom)));
            acc = add(acc, mul(la, f.exp));
        }
        return acc;
    }
    Content m = extract_content(u);
    Expr prim = apply_content_inverse(u, m);
    Expr mono;
    mono.terms.push_back(Term{m.coef, m.factors});
    Expr acc = m.coef == 1 && m.factors.empty() ? zero() : ln_(mono);
    if (prim.terms.size() == 1) return add(acc, ln_(prim));
    return add(acc, from_atom(kernel_atom(KernelKind::Ln, std::move(prim))));
}

// monomial normalization ---------------------------------------------------------

static Expr normalize_monomial(Rational coef, std::vector<Factor> fs) {
    if (coef == 0) return zero();
    std::sort(fs.begin(), fs.end(),
              [](const Factor& a, const Factor& b) { return cmp(a.atom, b.atom) < 0; });
    // merge equal atoms
    std::vector<Factor> merged;
    for (auto& f : fs) {
        if (!merged.empty() && same_atom(merged.back().atom, f.atom))
            merged.back().exp += f.exp;
        else
            merged.push_back(std::move(f));
    }
    std::vector<Factor> kept;
    for (auto& f : merged)
        if (f.exp != 0) kept.push_back(std::move(f));

    // look for a factor that needs rewriting
    for (size_t i = 0; i < kept.size(); ++i) {
        const AtomData& d = kept[i].atom.data();
        const Rational& e = kept[i].exp;
        Expr repl;
        bool rewrite = false;
        if (d.kind == AtomKind::Kernel) {
            switch (d.kernel) {
            case KernelKind::Sin:
                if (denominator(e) == 1 && e >= 2) {
                    // sin^2 u = 1 - cos^2 u keeps trig monomials canonical
                    Expr s2 = sub(one(), mul(cos_(*d.arg), cos_(*d.arg)));
                    Expr rest = e == 2 ? one() : normalize_monomial(1, {Factor{kept[i].atom, e - 2}});
                    repl = mul(rest, s2);
                    rewrite = true;
                }
                break;
            case KernelKind::PowSum:
                if (denominator(e) == 1 && e > 0) {
                    repl = pow(*d.arg, e);
                    rewrite = true;
                }
                break;
            case KernelKind::SymPow:
                if (e != 1) {
                    repl = pow(*d.arg, mul(*d.expo, e));
                    rewrite = true;
                } else {
                    // merge with another SymPow over the same base
                    for (size_t j = i + 1; j < kept.size(); ++j) {
                        const AtomData& d2 = kept[j].atom.data();
                        if (d2.kind == AtomKind::Kernel && d2.kernel == KernelKind::SymPow &&
                            cmp_ptr(d.arg, d2.arg) == 0) {
                            Expr total = add(*d.expo, mul(*d2.expo, kept[j].exp));
                            repl = pow(*d.arg, total);
                            kept.erase(kept.begin() + j);
                            rewrite = true;
                            break;
                        }
                    }
                }
                break;
            default:
                break;
            }
        }
        if (rewrite) {
            std::vector<Factor> rest = kept;
            rest.erase(rest.begin() + i);
            Expr restm = normalize_monomial(coef, std::move(rest));
            return mul(restm, repl);
        }
    }
    Expr r;
    r.terms.push_back(Term{std::move(coef), std::move(kept)});
    return r;
}

// ---------------------------------------------------------------------------
// Calculus
// ---------------------------------------------------------------------------

Expr derive_atom(const Atom& a, const BaseDeriv& base) {
    const AtomData& d = a.data();
    switch (d.kind) {
    case AtomKind::Symbol:
    case AtomKind::Jet:
        return base(a);
    case AtomKind::Fn: {
        Expr acc = zero();
        for (size_t k = 0; k < d.args.size(); ++k) {
            Expr da = derive(*d.args[k], base);
            if (da.zero()) continue;
            std::vector<int> der = d.der;
            der[k] += 1;
            std::vector<Expr> args;
            for (const auto& p : d.args) args.push_back(*p);
            acc = add(acc, mul(fn(d.name, std::move(args), std::move(der),
                                  {d.harm_x, d.harm_y}),
                               da));
        }
        return acc;
    }
    case AtomKind::Kernel: {
        Expr du = derive(*d.arg, base);
        switch (d.kernel) {
        case KernelKind::Sin:
            return mul(cos_(*d.arg), du);
        case KernelKind::Cos:
            return neg(mul(sin_(*d.arg), du));
        case KernelKind::Exp:
            return mul(from_atom(a), du);
        case KernelKind::Ln:
            return mul(du, inv(*d.arg));
        case KernelKind::Atan:
            return mul(du, inv(add(one(), mul(*d.arg, *d.arg))));
        case KernelKind::PowSum:
            return du;  // the enclosing factor rule supplies the power
        case KernelKind::SymPow: {
            Expr r = mul(mul(*d.expo, from_atom(a)), mul(du, inv(*d.arg)));
            Expr dq = derive(*d.expo, base);
            if (!dq.zero()) r = add(r, mul(mul(from_atom(a), ln_(*d.arg)), dq));
            return r;
        }
        }
    }
    }
    return zero();
}

Expr derive(const Expr& e, const BaseDeriv& base) {
    Expr acc = zero();
    for (const auto& t : e.terms) {
        for (size_t i = 0; i < t.factors.size(); ++i) {
            Expr da = derive_atom(t.factors[i].atom, base);
            if (da.zero()) continue;
            std::vector<Factor> rest;
            for (size_t j = 0; j < t.factors.size(); ++j)
                if (j != i) rest.push_back(t.factors[j]);
            Expr part = normalize_monomial(t.coef * t.factors[i].exp, std::move(rest));
            part = mul(part, pow_atom(t.factors[i].atom, t.factors[i].exp - 1));
            acc = add(acc, mul(part, da));
        }
    }
    return acc;
}

Expr diff(const Expr& e, const Atom& v) {
    return derive(e, [&](const Atom& a) { return same_atom(a, v) ? one() : zero(); });
}

Expr diff(const Expr& e, const std::string& symbol_name) {
    return diff(e, symbol_atom(symbol_name, false));
}

// substitution -------------------------------------------------------------------

static Expr subst_atom(const Atom& a, const Subst& s) {
    auto it = s.find(a);
    if (it != s.end()) return it->second;
    const AtomData& d = a.data();
    switch (d.kind) {
    case AtomKind::Symbol:
    case AtomKind::Jet:
        return from_atom(a);
    case AtomKind::Fn: {
        std::vector<Expr> args;
        bool changed = false;
        for (const auto& p : d.args) {
            Expr na = substitute(*p, s);
            if (cmp(na, *p) != 0) changed = true;
            args.push_back(std::move(na));
        }
        if (!changed) return from_atom(a);
        return fn(d.name, std::move(args), d.der, {d.harm_x, d.harm_y});
    }
    case AtomKind::Kernel: {
        Expr na = substitute(*d.arg, s);
        switch (d.kernel) {
        case KernelKind::Sin:
            return sin_(na);
        case KernelKind::Cos:
            return cos_(na);
        case KernelKind::Exp:
            return exp_(na);
        case KernelKind::Ln:
            return ln_(na);
        case KernelKind::Atan:
            return atan_(na);
        case KernelKind::PowSum:
            return na;  // value of the atom is the sum itself
        case KernelKind::SymPow:
            return pow(na, substitute(*d.expo, s));
        }
    }
    }
    return from_atom(a);
}

Expr substitute(const Expr& e, const Subst& s) {
    Expr acc = zero();
    for (const auto& t : e.terms) {
        Expr part = rat(t.coef);
        for (const auto& f : t.factors) {
            const AtomData& d = f.atom.data();
            if (d.kind == AtomKind::Kernel && d.kernel == KernelKind::SymPow &&
                s.find(f.atom) == s.end()) {
                // rebuild with substituted base and exponent
                Expr nb = substitute(*d.arg, s);
                Expr nq = substitute(*d.expo, s);
                part = mul(part, pow(pow(nb, nq), f.exp));
            } else {
                part = mul(part, pow(subst_atom(f.atom, s), f.exp));
            }
        }
        acc = add(acc, part);
    }
    return acc;
}

// traversal ----------------------------------------------------------------------

void collect_atoms(const Expr& e, std::set<Atom, AtomLess>& out) {
    for (const auto& t : e.terms)
        for (const auto& f : t.factors) {
            out.insert(f.atom);
            const AtomData& d = f.atom.data();
            if (d.kind == AtomKind::Fn)
                for (const auto& p : d.args) collect_atoms(*p, out);
            if (d.kind == AtomKind::Kernel) {
                collect_atoms(*d.arg, out);
                if (d.expo) collect_atoms(*d.expo, out);
            }
        }
}

void collect_leaves(const Expr& e, std::set<Atom, AtomLess>& out) {
    for (const auto& t : e.terms)
        for (const auto& f : t.factors) {
            const AtomData& d = f.atom.data();
            switch (d.kind) {
            case AtomKind::Symbol:
            case AtomKind::Jet:
                out.insert(f.atom);
                break;
            case AtomKind::Fn:
                out.insert(f.atom);
                for (const auto& p : d.args) collect_leaves(*p, out);
                break;
            case AtomKind::Kernel:
                collect_leaves(*d.arg, out);
                if (d.expo) collect_leaves(*d.expo, out);
                break;
            }
        }
}

bool depends_on(const Expr& e, const Atom& v) {
    return !diff(e, v).zero();
}

bool is_constant_expr(const Expr& e) {
    std::set<Atom, AtomLess> leaves;
    collect_leaves(e, leaves);
    for (const auto& a : leaves)
        if (!(a.data().kind == AtomKind::Symbol && a.data().constant)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

static std::string exp_suffix(const Rational& e) {
    if (e == 1) return "";
    if (denominator(e) == 1 && e > 0) return "^" + to_string(e);
    return "^(" + to_string(e) + ")";
}

std::string to_string(const Atom& a) {
    const AtomData& d = a.data();
    switch (d.kind) {
    case AtomKind::Symbol:
        return d.name;
    case AtomKind::Jet: {
        std::string s = d.name;
        if (midx_order(d.jet) > 0) {
            s += "_";
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < d.jet[i]; ++k) s += kIndep[i];
        }
        return s;
    }
    case AtomKind::Fn: {
        std::string s = d.name;
        bool anyder = false;
        for (int k : d.der) anyder = anyder || k > 0;
        if (anyder) {
            if (d.args.size() == 1) {
                for (int k = 0; k < d.der[0]; ++k) s += "'";
            } else {
                // name the slot by its argument when it is a plain symbol
                std::string suffix;
                bool named = true;
                for (size_t i = 0; i < d.args.size(); ++i) {
                    if (d.der[i] == 0) continue;
                    const Expr& arg = *d.args[i];
                    if (arg.terms.size() == 1 && arg.terms[0].coef == 1 &&
                        arg.terms[0].factors.size() == 1 && arg.terms[0].factors[0].exp == 1 &&
                        arg.terms[0].factors[0].atom.data().kind == AtomKind::Symbol) {
                        for (int k = 0; k < d.der[i]; ++k)
                            suffix += arg.terms[0].factors[0].atom.data().name;
                    } else {
                        named = false;
                    }
                }
                if (named) {
                    s += "_" + suffix;
                } else {
                    s += "[";
                    for (size_t i = 0; i < d.der.size(); ++i) {
                        if (i) s += ",";
                        s += std::to_string(d.der[i]);
                    }
                    s += "]";
                }
            }
        }
        s += "(";
        for (size_t i = 0; i < d.args.size(); ++i) {
            if (i) s += ", ";
            s += to_string(*d.args[i]);
        }
        s += ")";
        return s;
    }
    case AtomKind::Kernel:
        switch (d.kernel) {
        case KernelKind::Sin:
            return "sin(" + to_string(*d.arg) + ")";
        case KernelKind::Cos:
            return "cos(" + to_string(*d.arg) + ")";
        case KernelKind::Exp:
            return "exp(" + to_string(*d.arg) + ")";
        case KernelKind::Ln:
            return "ln(" + to_string(*d.arg) + ")";
        case KernelKind::Atan:
            return "atan(" + to_string(*d.arg) + ")";
        case KernelKind::PowSum:
            return "(" + to_string(*d.arg) + ")";
        case KernelKind::SymPow:
            return "(" + to_string(*d.arg) + ")^(" + to_string(*d.expo) + ")";
        }
    }
    return "?";
}

static std::string term_body(const Term& t, bool with_sign) {
    Rational c = t.coef < 0 ? -t.coef : t.coef;
    std::string s;
    if (with_sign) s += t.coef < 0 ? "- " : "+ ";
    else if (t.coef < 0) s += "-";
    bool need_star = false;
    if (c != 1 || t.factors.empty()) {
        // p/q * rest parses back with the usual left-to-right precedence
        s += to_string(c);
        need_star = true;
    }
    for (const auto& f : t.factors) {
        if (need_star) s += "*";
        s += to_string(f.atom) + exp_suffix(f.exp);
        need_star = true;
    }
    return s;
}

std::string to_string(const Expr& e) {
    if (e.terms.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < e.terms.size(); ++i) {
        if (i) s += " ";
        s += term_body(e.terms[i], i > 0);
    }
    return s;
}

} // namespace liesym
