#include "liesym/equiv.hpp"

#include <array>

namespace liesym {

namespace {

const Atom& at_t() { static Atom a = symbol_atom("t", false); return a; }
const Atom& at_x() { static Atom a = symbol_atom("x", false); return a; }
const Atom& at_y() { static Atom a = symbol_atom("y", false); return a; }

Expr t_() { return from_atom(at_t()); }
Expr x_() { return from_atom(at_x()); }
Expr y_() { return from_atom(at_y()); }

Expr d0(const Expr& e) { return diff(e, "t"); }
Expr d1(const Expr& e) { return diff(e, "x"); }
Expr d2(const Expr& e) { return diff(e, "y"); }

Expr r2() { return x_() * x_() + y_() * y_(); }

const char* kVar[3] = {"t", "x", "y"};

// Dependency scan shared by the member constructors.
void check_member_atoms(const Expr& e, MemberForm form, const char* what) {
    std::set<Atom, AtomLess> atoms;
    collect_atoms(e, atoms);
    for (const auto& a : atoms) {
        const AtomData& d = a.data();
        if (d.kind == AtomKind::Jet) {
            if (d.name == "psi") {
                bool low = d.jet[0] == 0 && midx_order(d.jet) <= 1;
                if (form != MemberForm::General || !low)
                    throw SymbolicError(std::string(what) +
                                        " must not involve psi derivative " +
                                        to_string(a));
            } else if (d.name == "zeta") {
                int ord = midx_order(d.jet);
                bool bad = form == MemberForm::Flux ? ord != 1 : ord > 2;
                if (d.jet[0] != 0 || bad)
                    throw SymbolicError(std::string(what) +
                                        " involves a forbidden zeta derivative " +
                                        to_string(a));
            } else {
                throw SymbolicError(std::string(what) + " involves stray jet " +
                                    to_string(a));
            }
        }
    }
}

Rational factorial(int k) {
    Rational f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// rational in [-3, 3]
Rational small_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<int> num(-24, 24), den(1, 8);
    return Rational(num(g), den(g));
}

Rational small_nonzero(std::mt19937_64& g) {
    for (;;) {
        Rational r = small_rational(g);
        if (r != 0) return r;
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Members
// ---------------------------------------------------------------------------

Expr zeta_jet(const MIdx& idx) { return jet("zeta", idx); }

Expr expand_zeta(const Expr& e) {
    std::set<Atom, AtomLess> atoms;
    collect_atoms(e, atoms);
    Subst s;
    for (const auto& a : atoms) {
        const AtomData& d = a.data();
        if (d.kind == AtomKind::Jet && d.name == "zeta")
            s[a] = zeta_expr(d.jet);
    }
    return s.empty() ? e : substitute(e, s);
}

Expr flux_divergence(const Expr& f1, const Expr& f2) {
    return total_derivative(f1, 1) + total_derivative(f2, 2);
}

ClassMember member_general(Expr F) {
    check_member_atoms(F, MemberForm::General, "general right-hand side");
    return ClassMember{MemberForm::General, std::move(F), zero(), zero()};
}

ClassMember member_transport(Expr H) {
    check_member_atoms(H, MemberForm::Transport, "transport right-hand side");
    return ClassMember{MemberForm::Transport, std::move(H), zero(), zero()};
}

ClassMember member_flux(Expr f1, Expr f2) {
    check_member_atoms(f1, MemberForm::Flux, "flux component");
    check_member_atoms(f2, MemberForm::Flux, "flux component");
    Expr rhs = flux_divergence(f1, f2);
    return ClassMember{MemberForm::Flux, std::move(rhs), std::move(f1),
                       std::move(f2)};
}

Expr transport_rhs_in_psi(const ClassMember& m) {
    if (m.form == MemberForm::General)
        return expand_zeta(m.rhs) + poisson(jet("psi", {0, 0, 0}), zeta_expr());
    return expand_zeta(m.rhs);
}

// ---------------------------------------------------------------------------
// Point transformations
// ---------------------------------------------------------------------------

PointTransformation make_point_transformation(Expr T, Expr Z1, Expr Z2,
                                              Expr Ups, Expr Phi) {
    for (const Expr* e : {&T, &Z1, &Z2, &Ups, &Phi}) {
        std::set<Atom, AtomLess> atoms;
        collect_atoms(*e, atoms);
        for (const auto& a : atoms)
            if (a.data().kind == AtomKind::Jet)
                throw SymbolicError(
                    "transformation components must not involve jets");
    }
    if (depends_on(T, at_x()) || depends_on(T, at_y()) ||
        depends_on(Ups, at_x()) || depends_on(Ups, at_y()))
        throw SymbolicError("time and scaling components may depend on t only");

    PointTransformation tr;
    tr.L = d1(Z1) * d1(Z1) + d2(Z1) * d2(Z1);
    Expr ortho = d1(Z1) * d1(Z2) + d2(Z1) * d2(Z2);
    Expr iso = tr.L - (d1(Z2) * d1(Z2) + d2(Z2) * d2(Z2));
    if (!is_zero(ortho).ok())
        throw SymbolicError("spatial components are not orthogonal: " +
                            to_string(ortho));
    if (!is_zero(iso).ok())
        throw SymbolicError("spatial components scale differently: " +
                            to_string(iso));
    ZeroResult deg = is_zero(d0(T) * Ups * tr.L);
    if (deg.kind != ZeroKind::NonZero)
        throw SymbolicError("degenerate transformation: T_t Ups L not nonzero");
    tr.T = std::move(T);
    tr.Z1 = std::move(Z1);
    tr.Z2 = std::move(Z2);
    tr.Ups = std::move(Ups);
    tr.Phi = std::move(Phi);
    return tr;
}

PointTransformation point_identity() {
    return make_point_transformation(t_(), x_(), y_(), one(), zero());
}

// ---------------------------------------------------------------------------
// Structured transformations
// ---------------------------------------------------------------------------

TransportTransformation transport_identity() {
    TransportTransformation tr;
    tr.tau = t_();
    tr.lam = one();
    tr.beta = zero();
    tr.gamma1 = zero();
    tr.gamma2 = zero();
    tr.sigma = zero();
    tr.delta = zero();
    return tr;
}

void validate(const TransportTransformation& tr) {
    if (tr.eps != 1 && tr.eps != -1)
        throw SymbolicError("reflection sign must be +1 or -1");
    for (const Expr* e : {&tr.tau, &tr.lam, &tr.beta, &tr.gamma1, &tr.gamma2,
                          &tr.sigma})
        if (depends_on(*e, at_x()) || depends_on(*e, at_y()))
            throw SymbolicError("time-dependent parameter involves x or y");
    if (is_zero(d0(tr.tau)).kind != ZeroKind::NonZero)
        throw SymbolicError("time reparameterization is degenerate");
    Expr harm = d1(d1(tr.delta)) + d2(d2(tr.delta));
    if (!is_zero(harm).ok())
        throw SymbolicError("shift component is not harmonic: " + to_string(harm));
}

std::vector<Expr> subgroup_residuals(const TransportTransformation& tr,
                                     TransportSubgroup s) {
    std::vector<Expr> out;
    auto affine_time = [&] { out.push_back(d0(d0(tr.tau))); };
    auto homogeneous = [&] {
        out.push_back(d0(tr.lam));
        out.push_back(tr.sigma);
        out.push_back(d1(d1(tr.delta)));
        out.push_back(d1(d2(tr.delta)));
        out.push_back(d2(d2(tr.delta)));
    };
    switch (s) {
    case TransportSubgroup::Full:
        break;
    case TransportSubgroup::AffineTime:
        affine_time();
        break;
    case TransportSubgroup::SpaceHomogeneous:
        homogeneous();
        break;
    case TransportSubgroup::AffineHomogeneous:
        affine_time();
        homogeneous();
        break;
    case TransportSubgroup::Flux:
        affine_time();
        out.push_back(d0(tr.lam));
        break;
    case TransportSubgroup::SpaceIndependentFlux:
        affine_time();
        out.push_back(d0(tr.lam));
        out.push_back(d0(d0(tr.beta)));
        out.push_back(tr.sigma);
        out.push_back(d1(tr.delta));
        out.push_back(d2(tr.delta));
        break;
    }
    return out;
}

bool in_subgroup(const TransportTransformation& tr, TransportSubgroup s) {
    for (const Expr& r : subgroup_residuals(tr, s))
        if (!is_zero(r).ok()) return false;
    return true;
}

PointTransformation to_point_transformation(const TransportTransformation& tr) {
    validate(tr);
    Expr c = cos_(tr.beta), s = sin_(tr.beta);
    Rational eps(tr.eps);
    Expr rot1 = x_() * c - y_() * s;
    Expr rot2 = x_() * s + y_() * c;
    Expr taut = d0(tr.tau);
    Expr ups = eps * tr.lam * tr.lam * inv(taut);
    Expr phi = eps * tr.lam * inv(taut) *
                   (Rational(1, 2) * tr.lam * d0(tr.beta) * r2() -
                    d0(tr.gamma1) * rot2 + d0(tr.gamma2) * rot1) +
               tr.delta + Rational(1, 2) * tr.sigma * r2();
    return make_point_transformation(tr.tau, tr.lam * rot1 + tr.gamma1,
                                     eps * (tr.lam * rot2 + tr.gamma2), ups,
                                     phi);
}

// ---------------------------------------------------------------------------
// Induced right-hand-side transformations
// ---------------------------------------------------------------------------

ClassMember apply_point(const PointTransformation& tr, const ClassMember& m) {
    if (m.form != MemberForm::General)
        throw SymbolicError("point formula applies to general-form members");
    Expr z = zeta_jet({0, 0, 0});
    Expr zj[2] = {zeta_jet({0, 1, 0}), zeta_jet({0, 0, 1})};
    Expr UL = div(tr.Ups, tr.L);
    Expr PL = div(d1(d1(tr.Phi)) + d2(d2(tr.Phi)), tr.L);
    Expr acc = UL * m.rhs + d0(UL) * z + d0(PL);
    const Expr* Z[2] = {&tr.Z1, &tr.Z2};
    for (int i = 0; i < 2; ++i) {
        Expr Zit = d0(*Z[i]);
        for (int j = 0; j < 2; ++j) {
            Expr Zij = diff(*Z[i], kVar[j + 1]);
            Expr inner = UL * zj[j] + diff(UL, kVar[j + 1]) * z +
                         diff(PL, kVar[j + 1]);
            acc = acc - Zit * Zij * inv(tr.L) * inner;
        }
    }
    return member_general(div(acc, d0(tr.T)));
}

ClassMember apply_transport(const TransportTransformation& tr,
                            const ClassMember& m) {
    if (m.form == MemberForm::General)
        throw SymbolicError("structured formula applies to transport members");
    validate(tr);
    Expr z = zeta_jet({0, 0, 0});
    Expr z1 = zeta_jet({0, 1, 0}), z2 = zeta_jet({0, 0, 1});
    Rational eps(tr.eps);
    Expr taut = d0(tr.tau), tautt = d0(d0(tr.tau));
    Expr ratio = div(tautt, taut);
    Expr inner = m.rhs - ratio * z -
                 div(d0(tr.lam), tr.lam) * (x_() * z1 + y_() * z2) +
                 Rational(2) * d0(d0(tr.beta)) -
                 Rational(2) * ratio * d0(tr.beta);
    Expr il2 = inv(taut * tr.lam * tr.lam);
    Expr h = eps * div(inner, taut * taut) -
             (d2(tr.delta) + tr.sigma * y_()) * il2 * z1 +
             (d1(tr.delta) + tr.sigma * x_()) * il2 * z2 +
             Rational(2) * inv(taut) * d0(div(tr.sigma, tr.lam * tr.lam));
    return member_transport(h);
}

std::pair<Expr, Expr> apply_flux(const TransportTransformation& tr,
                                 const Expr& f1, const Expr& f2,
                                 const Expr& chi, const Expr& rho) {
    validate(tr);
    if (!in_subgroup(tr, TransportSubgroup::Flux))
        throw SymbolicError("flux formula needs affine time and constant scale");
    Expr c = cos_(tr.beta), s = sin_(tr.beta);
    Rational eps(tr.eps);
    Expr z1 = zeta_jet({0, 1, 0}), z2 = zeta_jet({0, 0, 1});
    Expr taut = d0(tr.tau);
    Expr it2 = inv(taut * taut);
    Expr il2 = inv(tr.lam * tr.lam);
    Expr gauge = div(tr.delta, taut * tr.lam) +
                 div(tr.sigma, Rational(2) * taut * tr.lam) * r2() -
                 eps * chi * il2;
    Expr drive = eps * tr.lam * tr.lam * d0(d0(tr.beta)) + taut * d0(tr.sigma);
    Expr rx = d1(rho), ry = d2(rho);
    Expr g1 = eps * tr.lam * (f1 * c - f2 * s) * it2 +
              gauge * (z1 * s + z2 * c) +
              drive * (x_() * c - y_() * s) * it2 * inv(tr.lam) -
              eps * (rx * s + ry * c) * il2;
    Expr g2 = tr.lam * (f1 * s + f2 * c) * it2 -
              eps * gauge * (z1 * c - z2 * s) +
              eps * drive * (x_() * s + y_() * c) * it2 * inv(tr.lam) +
              (rx * c - ry * s) * il2;
    return {g1, g2};
}

Expr transformed_vorticity(const PointTransformation& tr) {
    return div(tr.Ups * zeta_jet({0, 0, 0}) + d1(d1(tr.Phi)) + d2(d2(tr.Phi)),
               tr.L);
}

Expr transformed_vorticity(const TransportTransformation& tr) {
    Rational eps(tr.eps);
    return eps * div(zeta_jet({0, 0, 0}) + Rational(2) * d0(tr.beta),
                     d0(tr.tau)) +
           Rational(2) * div(tr.sigma, tr.lam * tr.lam);
}

// ---------------------------------------------------------------------------
// Jet pushforward
// ---------------------------------------------------------------------------

namespace {

// Run the jet extension with given inverted-Jacobian rows: the operator that
// produces the derivative along the nu-th new variable is sum_mu W[nu][mu] D_mu.
Subst extend_pushforward(const Expr W[3][3], const Expr& t_new,
                         const Expr& x_new, const Expr& y_new,
                         const Expr& e000, int r) {
    std::map<MIdx, Expr> E;
    E[{0, 0, 0}] = e000;
    for (int k = 0; k < r; ++k) {
        // snapshot: extend every order-k entry by one derivative
        std::vector<std::pair<MIdx, Expr>> level;
        for (const auto& [idx, e] : E)
            if (midx_order(idx) == k) level.emplace_back(idx, e);
        for (const auto& [idx, e] : level) {
            Expr grad[3];
            for (int mu = 0; mu < 3; ++mu) grad[mu] = total_derivative(e, mu);
            for (int nu = 0; nu < 3; ++nu) {
                MIdx next = idx;
                next[nu] += 1;
                if (E.count(next)) continue;
                Expr acc = zero();
                for (int mu = 0; mu < 3; ++mu)
                    acc = acc + W[nu][mu] * grad[mu];
                E[next] = acc;
            }
        }
    }

    Subst out;
    out[at_t()] = t_new;
    out[at_x()] = x_new;
    out[at_y()] = y_new;
    for (const auto& [idx, e] : E) out[jet_atom("psi", idx)] = e;
    return out;
}

}  // namespace

Subst pushforward_exprs(const PointTransformation& tr, int r) {
    const Expr* Zt[3] = {&tr.T, &tr.Z1, &tr.Z2};
    Expr M[3][3];
    for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu)
            M[mu][nu] = diff(*Zt[nu], kVar[mu]);

    // adjugate / determinant inverse of the 3x3 Jacobian of total derivatives
    Expr det = zero();
    Expr adj[3][3];
    for (int nu = 0; nu < 3; ++nu) {
        int n1 = (nu + 1) % 3, n2 = (nu + 2) % 3;
        for (int mu = 0; mu < 3; ++mu) {
            int m1 = (mu + 1) % 3, m2 = (mu + 2) % 3;
            adj[nu][mu] = M[m1][n1] * M[m2][n2] - M[m1][n2] * M[m2][n1];
        }
        det = det + M[0][nu] * adj[nu][0];
    }
    Expr idet = inv(det);
    Expr W[3][3];
    for (int nu = 0; nu < 3; ++nu)
        for (int mu = 0; mu < 3; ++mu) W[nu][mu] = adj[nu][mu] * idet;

    return extend_pushforward(W, tr.T, tr.Z1, tr.Z2,
                              tr.Ups * jet("psi", {0, 0, 0}) + tr.Phi, r);
}

Subst pushforward_exprs(const TransportTransformation& tr, int r) {
    PointTransformation pt = to_point_transformation(tr);
    Expr c = cos_(tr.beta), s = sin_(tr.beta);
    Rational eps(tr.eps);
    Expr il = inv(tr.lam);
    Expr itau = inv(d0(tr.tau));

    // The spatial block of the Jacobian is lam * (rotation by beta) composed
    // with a reflection, so its inverse never leaves lam^2 trapped under a
    // full 3x3 determinant.
    Expr W[3][3];
    W[1][0] = zero();
    W[1][1] = c * il;
    W[1][2] = rat(Rational(-1)) * s * il;
    W[2][0] = zero();
    W[2][1] = eps * s * il;
    W[2][2] = eps * c * il;
    Expr z1t = d0(pt.Z1), z2t = d0(pt.Z2);
    W[0][0] = itau;
    for (int mu = 1; mu < 3; ++mu)
        W[0][mu] =
            rat(Rational(-1)) * itau * (z1t * W[1][mu] + z2t * W[2][mu]);

    return extend_pushforward(W, pt.T, pt.Z1, pt.Z2,
                              pt.Ups * jet("psi", {0, 0, 0}) + pt.Phi, r);
}

Env jets_pushforward(const PointTransformation& tr, const Env& point, int r) {
    Subst exprs = pushforward_exprs(tr, r);
    Env out;
    for (const auto& [atom, e] : exprs) out[atom] = eval(e, point);
    return out;
}

Env jets_pushforward(const TransportTransformation& tr, const Env& point,
                     int r) {
    Subst exprs = pushforward_exprs(tr, r);
    Env out;
    for (const auto& [atom, e] : exprs) out[atom] = eval(e, point);
    return out;
}

Expr pushforward_residual(const PointTransformation& tr, const ClassMember& m) {
    if (m.form != MemberForm::General)
        throw SymbolicError("use the structured overload for transport members");
    Subst push = pushforward_exprs(tr, 3);
    Expr lhs_old = substitute(zeta_expr({1, 0, 0}), push);
    Expr display_old = expand_zeta(apply_point(tr, m).rhs);
    SolutionManifold man = vorticity_manifold(transport_rhs_in_psi(m));
    return man.reduce(lhs_old - display_old);
}

Expr pushforward_residual(const TransportTransformation& tr,
                          const ClassMember& m) {
    if (m.form == MemberForm::General)
        throw SymbolicError("use the point overload for general members");
    Subst push = pushforward_exprs(tr, 3);
    Expr lhs_new = zeta_expr({1, 0, 0}) +
                   poisson(jet("psi", {0, 0, 0}), zeta_expr());
    Expr lhs_old = substitute(lhs_new, push);
    Expr display_old = expand_zeta(apply_transport(tr, m).rhs);
    SolutionManifold man = vorticity_manifold(transport_rhs_in_psi(m));
    return man.reduce(lhs_old - display_old);
}

// ---------------------------------------------------------------------------
// Adjoint series
// ---------------------------------------------------------------------------

std::vector<VectorField> adjoint(const VectorField& X, const VectorField& Y,
                                 int N) {
    std::vector<VectorField> out;
    out.reserve(N + 1);
    VectorField iter = Y;
    out.push_back(iter);
    for (int k = 1; k <= N; ++k) {
        iter = commutator(X, iter);
        Rational coef = (k % 2 ? Rational(-1) : Rational(1)) / factorial(k);
        VectorField term = vf_scale(iter, coef);
        term.label = "eps^" + std::to_string(k) + " coefficient";
        out.push_back(std::move(term));
    }
    return out;
}

VectorField series_coefficient(const VectorField& F, const std::string& eps,
                               int k) {
    Atom e = symbol_atom(eps, false);
    Subst at_zero;
    at_zero[e] = zero();
    VectorField out;
    out.label = F.label + " @ eps^" + std::to_string(k);
    for (const auto& [c, expr] : F.coef) {
        Expr d = expr;
        for (int i = 0; i < k; ++i) d = diff(d, e);
        out.set(c, substitute(d, at_zero) * (Rational(1) / factorial(k)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Membership constraints
// ---------------------------------------------------------------------------

std::vector<ConstraintVerdict> class_constraints(const ClassMember& m) {
    if (m.form == MemberForm::General)
        throw SymbolicError("membership constraints expect a transport member");
    const Expr& h = m.rhs;
    std::vector<ConstraintVerdict> out;
    out.push_back({"vorticity-free", is_zero(diff(h, jet_atom("zeta", {0, 0, 0})))});
    out.push_back({"x-free", is_zero(d1(h))});
    out.push_back({"y-free", is_zero(d2(h))});
    out.push_back({"variational", is_zero(euler_operator(h))});
    Expr homog = zero();
    const MIdx second[3] = {{0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    for (const MIdx& idx : second)
        homog = homog + zeta_jet(idx) * diff(h, jet_atom("zeta", idx));
    out.push_back({"second-order-homogeneous", is_zero(homog - h)});
    return out;
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

Expr sample_time_polynomial(std::mt19937_64& g, int deg) {
    Expr acc = rat(small_rational(g));
    Expr p = one();
    for (int k = 1; k <= deg; ++k) {
        p = p * t_();
        acc = acc + small_rational(g) * p;
    }
    return acc;
}

Expr sample_harmonic(std::mt19937_64& g) {
    std::uniform_int_distribution<int> pick(0, 5);
    switch (pick(g)) {
    case 0: return one();
    case 1: return x_();
    case 2: return y_();
    case 3: return x_() * x_() - y_() * y_();
    case 4: return x_() * y_();
    default: return x_() * x_() * x_() - Rational(3) * x_() * y_() * y_();
    }
}

TransportTransformation sample_transport_transformation(std::mt19937_64& g,
                                                        TransportSubgroup s) {
    bool affine_time = s == TransportSubgroup::AffineTime ||
                       s == TransportSubgroup::AffineHomogeneous ||
                       s == TransportSubgroup::Flux ||
                       s == TransportSubgroup::SpaceIndependentFlux;
    bool const_scale = s == TransportSubgroup::SpaceHomogeneous ||
                       s == TransportSubgroup::AffineHomogeneous ||
                       s == TransportSubgroup::Flux ||
                       s == TransportSubgroup::SpaceIndependentFlux;
    bool no_radial = s == TransportSubgroup::SpaceHomogeneous ||
                     s == TransportSubgroup::AffineHomogeneous ||
                     s == TransportSubgroup::SpaceIndependentFlux;
    bool affine_shift = s == TransportSubgroup::SpaceHomogeneous ||
                        s == TransportSubgroup::AffineHomogeneous;
    bool flat_shift = s == TransportSubgroup::SpaceIndependentFlux;

    TransportTransformation tr;
    tr.eps = (g() & 1) ? 1 : -1;
    tr.tau = rat(small_rational(g)) + small_nonzero(g) * t_();
    if (!affine_time) tr.tau = tr.tau + small_rational(g) * t_() * t_();

    if (const_scale) {
        Rational lc = small_nonzero(g);
        tr.lam = rat(lc < 0 ? -lc : lc);
    } else {
        // a square plus a positive constant keeps the scale positive
        Expr p = small_rational(g) * t_() + rat(small_rational(g));
        Rational c = small_nonzero(g);
        tr.lam = p * p + rat(c < 0 ? -c : c);
    }

    tr.beta = sample_time_polynomial(
        g, s == TransportSubgroup::SpaceIndependentFlux ? 1 : 2);
    tr.gamma1 = sample_time_polynomial(g);
    tr.gamma2 = sample_time_polynomial(g);
    tr.sigma = no_radial ? zero() : sample_time_polynomial(g);
    if (flat_shift)
        tr.delta = sample_time_polynomial(g);
    else if (affine_shift)
        tr.delta = sample_time_polynomial(g, 1) +
                   small_rational(g) * x_() + small_rational(g) * y_();
    else
        tr.delta = sample_time_polynomial(g, 1) * sample_harmonic(g);
    return tr;
}

ClassMember sample_transport_member(std::mt19937_64& g) {
    Expr h = rat(small_rational(g)) + small_rational(g) * t_() +
             small_rational(g) * x_() + small_rational(g) * y_();
    const MIdx idxs[6] = {{0, 0, 0}, {0, 1, 0}, {0, 0, 1},
                          {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
    for (const MIdx& idx : idxs) h = h + small_rational(g) * zeta_jet(idx);
    return member_transport(h);
}

std::pair<Expr, Expr> sample_flux_pair(std::mt19937_64& g) {
    auto component = [&g] {
        Expr z1 = zeta_jet({0, 1, 0}), z2 = zeta_jet({0, 0, 1});
        return rat(small_rational(g)) + small_rational(g) * t_() +
               small_rational(g) * x_() + small_rational(g) * y_() +
               small_rational(g) * z1 + small_rational(g) * z2 +
               small_rational(g) * z1 * z2;
    };
    Expr f1 = component(), f2 = component();
    return {f1, f2};
}

} // namespace liesym
