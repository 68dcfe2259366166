#include "liesym/algebras.hpp"

#include <sstream>

namespace liesym {

namespace {

Expr t_() { return sym("t"); }
Expr x_() { return sym("x"); }
Expr y_() { return sym("y"); }
Expr psi_() { return jet("psi", {0, 0, 0}); }
Expr zx_() { return jet("zeta", {0, 1, 0}); }
Expr zy_() { return jet("zeta", {0, 0, 1}); }
Expr f1_() { return sym("f1"); }
Expr f2_() { return sym("f2"); }

Expr r2() { return x_() * x_() + y_() * y_(); }

Expr dt(const Expr& e) { return diff(e, coord_t()); }
Expr dx(const Expr& e) { return diff(e, coord_x()); }
Expr dy(const Expr& e) { return diff(e, coord_y()); }

} // namespace

const Atom& coord_t() {
    static Atom a = symbol_atom("t", false);
    return a;
}
const Atom& coord_x() {
    static Atom a = symbol_atom("x", false);
    return a;
}
const Atom& coord_y() {
    static Atom a = symbol_atom("y", false);
    return a;
}
const Atom& coord_psi() {
    static Atom a = jet_atom("psi", {0, 0, 0});
    return a;
}
const Atom& coord_zx() {
    static Atom a = jet_atom("zeta", {0, 1, 0});
    return a;
}
const Atom& coord_zy() {
    static Atom a = jet_atom("zeta", {0, 0, 1});
    return a;
}
const Atom& coord_f1() {
    static Atom a = symbol_atom("f1", false);
    return a;
}
const Atom& coord_f2() {
    static Atom a = symbol_atom("f2", false);
    return a;
}

Expr param_t(const std::string& name) { return fn(name, {t_()}, {0}); }

Expr param_xy(const std::string& name) {
    return fn(name, {t_(), x_(), y_()}, {0, 0, 0});
}

Expr param_harmonic(const std::string& name) {
    return fn(name, {t_(), x_(), y_()}, {0, 0, 0}, {1, 2});
}

Expr param_xy_only(const std::string& name) {
    return fn(name, {x_(), y_()}, {0, 0});
}

Expr param_harmonic_xy(const std::string& name) {
    return fn(name, {x_(), y_()}, {0, 0}, {0, 1});
}

// ---------------------------------------------------------------------------
// Equivalence-algebra generators
// ---------------------------------------------------------------------------

VectorField eq_D1() {
    VectorField q;
    q.label = "D1";
    q.set(coord_t(), t_());
    q.set(coord_psi(), -psi_());
    q.set(coord_zx(), -zx_());
    q.set(coord_zy(), -zy_());
    q.set(coord_f1(), Rational(-2) * f1_());
    q.set(coord_f2(), Rational(-2) * f2_());
    return q;
}

VectorField eq_Dt() {
    VectorField q;
    q.label = "dt";
    q.set(coord_t(), one());
    return q;
}

VectorField eq_D2() {
    VectorField q;
    q.label = "D2";
    q.set(coord_x(), x_());
    q.set(coord_y(), y_());
    q.set(coord_psi(), Rational(2) * psi_());
    q.set(coord_zx(), -zx_());
    q.set(coord_zy(), -zy_());
    q.set(coord_f1(), f1_());
    q.set(coord_f2(), f2_());
    return q;
}

VectorField eq_J(const Expr& beta) {
    VectorField q;
    q.label = "J(" + to_string(beta) + ")";
    Expr bt = dt(beta), btt = dt(dt(beta));
    q.set(coord_x(), -beta * y_());
    q.set(coord_y(), beta * x_());
    q.set(coord_psi(), Rational(1, 2) * bt * r2());
    q.set(coord_zx(), -beta * zy_());
    q.set(coord_zy(), beta * zx_());
    q.set(coord_f1(), btt * x_() - beta * f2_());
    q.set(coord_f2(), btt * y_() + beta * f1_());
    return q;
}

VectorField eq_X(const Expr& gamma1) {
    VectorField q;
    q.label = "X(" + to_string(gamma1) + ")";
    q.set(coord_x(), gamma1);
    q.set(coord_psi(), -dt(gamma1) * y_());
    return q;
}

VectorField eq_Y(const Expr& gamma2) {
    VectorField q;
    q.label = "Y(" + to_string(gamma2) + ")";
    q.set(coord_y(), gamma2);
    q.set(coord_psi(), dt(gamma2) * x_());
    return q;
}

VectorField eq_R(const Expr& sigma) {
    VectorField q;
    q.label = "R(" + to_string(sigma) + ")";
    Expr half = Rational(1, 2) * sigma * r2();
    q.set(coord_psi(), half);
    q.set(coord_f1(), half * zy_() + dt(sigma) * x_());
    q.set(coord_f2(), -half * zx_() + dt(sigma) * y_());
    return q;
}

VectorField eq_H(const Expr& delta) {
    VectorField q;
    q.label = "H(" + to_string(delta) + ")";
    q.set(coord_psi(), delta);
    q.set(coord_f1(), delta * zy_());
    q.set(coord_f2(), -delta * zx_());
    return q;
}

VectorField eq_G(const Expr& rho) {
    VectorField q;
    q.label = "G(" + to_string(rho) + ")";
    q.set(coord_f1(), -dy(rho));
    q.set(coord_f2(), dx(rho));
    return q;
}

VectorField eq_Z(const Expr& chi) {
    VectorField q;
    q.label = "Z(" + to_string(chi) + ")";
    q.set(coord_psi(), chi);
    return q;
}

VectorField project_point(const VectorField& q) {
    VectorField p;
    p.label = q.label;
    p.set(coord_t(), q.get(coord_t()));
    p.set(coord_x(), q.get(coord_x()));
    p.set(coord_y(), q.get(coord_y()));
    p.set(coord_psi(), q.get(coord_psi()));
    return p;
}

VectorField g0_D1() { return project_point(eq_D1()); }
VectorField g0_Dt() { return project_point(eq_Dt()); }
VectorField g0_D2() { return project_point(eq_D2()); }
VectorField g0_J() { return project_point(eq_J(one())); }
VectorField g0_Jt() { return project_point(eq_J(t_())); }
VectorField g0_Jgen(const Expr& beta) { return project_point(eq_J(beta)); }
VectorField g0_X(const Expr& gamma1) { return project_point(eq_X(gamma1)); }
VectorField g0_Y(const Expr& gamma2) { return project_point(eq_Y(gamma2)); }
VectorField g0_Z(const Expr& chi) { return project_point(eq_Z(chi)); }

std::vector<VectorField> g0_basis() {
    return {g0_D1(),
            g0_Dt(),
            g0_D2(),
            g0_J(),
            g0_Jt(),
            g0_X(param_t("gamma1")),
            g0_Y(param_t("gamma2")),
            g0_Z(param_t("chi"))};
}

// ---------------------------------------------------------------------------
// Generator terms and structure relations
// ---------------------------------------------------------------------------

std::string to_string(const GenTerm& g) {
    std::string head;
    switch (g.kind) {
    case Gen::D1: head = "D1"; break;
    case Gen::D2: head = "D2"; break;
    case Gen::Dt: head = "dt"; break;
    case Gen::J: head = "J(" + to_string(g.arg) + ")"; break;
    case Gen::X: head = "X(" + to_string(g.arg) + ")"; break;
    case Gen::Y: head = "Y(" + to_string(g.arg) + ")"; break;
    case Gen::R: head = "R(" + to_string(g.arg) + ")"; break;
    case Gen::H: head = "H(" + to_string(g.arg) + ")"; break;
    case Gen::G: head = "G(" + to_string(g.arg) + ")"; break;
    case Gen::Z: head = "Z(" + to_string(g.arg) + ")"; break;
    }
    if (g.coef == 1) return head;
    if (g.coef == -1) return "-" + head;
    return to_string(g.coef) + "*" + head;
}

std::string to_string(const GenSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += " + ";
        out += to_string(s[i]);
    }
    return out;
}

VectorField instantiate(const GenSum& s) {
    VectorField out;
    for (const auto& g : s) {
        VectorField v;
        switch (g.kind) {
        case Gen::D1: v = eq_D1(); break;
        case Gen::D2: v = eq_D2(); break;
        case Gen::Dt: v = eq_Dt(); break;
        case Gen::J: v = eq_J(g.arg); break;
        case Gen::X: v = eq_X(g.arg); break;
        case Gen::Y: v = eq_Y(g.arg); break;
        case Gen::R: v = eq_R(g.arg); break;
        case Gen::H: v = eq_H(g.arg); break;
        case Gen::G: v = eq_G(g.arg); break;
        case Gen::Z: v = eq_Z(g.arg); break;
        }
        out = vf_add(out, vf_scale(v, g.coef));
    }
    out.label = to_string(s);
    return out;
}

VectorField instantiate_point(const GenSum& s) {
    VectorField p = project_point(instantiate(s));
    p.label = to_string(s);
    return p;
}

namespace {

int kind_rank(Gen k) {
    switch (k) {
    case Gen::D1: return 0;
    case Gen::D2: return 1;
    case Gen::Dt: return 2;
    case Gen::J: return 3;
    case Gen::X: return 4;
    case Gen::Y: return 5;
    case Gen::R: return 6;
    case Gen::H: return 7;
    case Gen::G: return 8;
    case Gen::Z: return 9;
    }
    return -1;
}

void push(GenSum& s, Gen k, const Rational& c, const Expr& arg) {
    if (c == 0 || (k != Gen::D1 && k != Gen::D2 && k != Gen::Dt && arg.zero()))
        return;
    s.push_back(GenTerm{k, c, arg});
}

} // namespace

GenSum structure_bracket(const GenTerm& a, const GenTerm& b) {
    if (kind_rank(a.kind) > kind_rank(b.kind)) {
        GenSum s = structure_bracket(b, a);
        for (auto& g : s) g.coef = -g.coef;
        return s;
    }
    Rational c = a.coef * b.coef;
    const Expr& A = a.arg;
    const Expr& B = b.arg;
    Expr t = t_(), x = x_(), y = y_();
    GenSum s;
    switch (a.kind) {
    case Gen::D1:
        switch (b.kind) {
        case Gen::Dt: push(s, Gen::Dt, -c, one()); break;
        case Gen::J: push(s, Gen::J, c, t * dt(B)); break;
        case Gen::X: push(s, Gen::X, c, t * dt(B)); break;
        case Gen::Y: push(s, Gen::Y, c, t * dt(B)); break;
        case Gen::R: push(s, Gen::R, c, t * dt(B) + B); break;
        case Gen::H: push(s, Gen::H, c, t * dt(B) + B); break;
        case Gen::G: push(s, Gen::G, c, t * dt(B) + Rational(2) * B); break;
        case Gen::Z: push(s, Gen::Z, c, t * dt(B) + B); break;
        default: break;
        }
        break;
    case Gen::D2:
        switch (b.kind) {
        case Gen::X: push(s, Gen::X, -c, B); break;
        case Gen::Y: push(s, Gen::Y, -c, B); break;
        case Gen::H: push(s, Gen::H, c, x * dx(B) + y * dy(B) - Rational(2) * B); break;
        case Gen::G: push(s, Gen::G, c, x * dx(B) + y * dy(B) - Rational(2) * B); break;
        case Gen::Z: push(s, Gen::Z, Rational(-2) * c, B); break;
        default: break;
        }
        break;
    case Gen::Dt:
        switch (b.kind) {
        case Gen::J: push(s, Gen::J, c, dt(B)); break;
        case Gen::X: push(s, Gen::X, c, dt(B)); break;
        case Gen::Y: push(s, Gen::Y, c, dt(B)); break;
        case Gen::R: push(s, Gen::R, c, dt(B)); break;
        case Gen::H: push(s, Gen::H, c, dt(B)); break;
        case Gen::G: push(s, Gen::G, c, dt(B)); break;
        case Gen::Z: push(s, Gen::Z, c, dt(B)); break;
        default: break;
        }
        break;
    case Gen::J:
        switch (b.kind) {
        case Gen::X:
            push(s, Gen::Y, -c, A * B);
            push(s, Gen::G, c, B * dt(dt(A)) * y);
            break;
        case Gen::Y:
            push(s, Gen::X, c, A * B);
            push(s, Gen::G, -c, B * dt(dt(A)) * x);
            break;
        case Gen::H: push(s, Gen::H, c, A * (x * dy(B) - y * dx(B))); break;
        case Gen::G: push(s, Gen::G, c, A * (x * dy(B) - y * dx(B))); break;
        default: break;
        }
        break;
    case Gen::X:
        switch (b.kind) {
        case Gen::Y: push(s, Gen::Z, c, dt(A * B)); break;
        case Gen::R:
            push(s, Gen::H, c, A * B * x);
            push(s, Gen::G, -c, A * dt(B) * y);
            break;
        case Gen::H: push(s, Gen::H, c, A * dx(B)); break;
        case Gen::G: push(s, Gen::G, c, A * dx(B)); break;
        default: break;
        }
        break;
    case Gen::Y:
        switch (b.kind) {
        case Gen::R:
            push(s, Gen::H, c, A * B * y);
            push(s, Gen::G, c, A * dt(B) * x);
            break;
        case Gen::H: push(s, Gen::H, c, A * dy(B)); break;
        case Gen::G: push(s, Gen::G, c, A * dy(B)); break;
        default: break;
        }
        break;
    default:
        break;  // R, H, G, Z commute among themselves
    }
    return s;
}

// ---------------------------------------------------------------------------
// Recognizer
// ---------------------------------------------------------------------------

namespace {

/// True when e involves none of the space/field coordinates -- i.e. at most
/// t (and named constants / parameter functions of t).
bool only_t(const Expr& e) {
    return !depends_on(e, coord_x()) && !depends_on(e, coord_y()) &&
           !depends_on(e, coord_psi()) && !depends_on(e, coord_zx()) &&
           !depends_on(e, coord_zy()) && !depends_on(e, coord_f1()) &&
           !depends_on(e, coord_f2());
}

bool no_fields(const Expr& e) {
    return !depends_on(e, coord_psi()) && !depends_on(e, coord_zx()) &&
           !depends_on(e, coord_zy()) && !depends_on(e, coord_f1()) &&
           !depends_on(e, coord_f2());
}

bool take_rational(const Expr& e, Rational& out) {
    if (!e.is_rational()) return false;
    out = e.rational_value();
    return true;
}

} // namespace

std::string Recognized::label() const {
    if (!ok) return "<unrecognized: " + why + ">";
    GenSum s;
    if (c1 != 0) s.push_back({Gen::D1, c1, one()});
    if (c0 != 0) s.push_back({Gen::Dt, c0, one()});
    if (c2 != 0) s.push_back({Gen::D2, c2, one()});
    if (!beta.zero()) s.push_back({Gen::J, 1, beta});
    if (!gamma1.zero()) s.push_back({Gen::X, 1, gamma1});
    if (!gamma2.zero()) s.push_back({Gen::Y, 1, gamma2});
    if (!sigma.zero()) s.push_back({Gen::R, 1, sigma});
    if (!delta.zero()) s.push_back({Gen::H, 1, delta});
    if (!chi.zero()) s.push_back({Gen::Z, 1, chi});
    std::string out = to_string(s);
    if (!rho_x.zero() || !rho_y.zero()) {
        if (out == "0")
            out.clear();
        else
            out += " + ";
        out += "G(rho: rho_x=" + to_string(rho_x) + ", rho_y=" + to_string(rho_y) + ")";
    }
    return out;
}

Recognized recognize(const VectorField& q, bool point_space) {
    Recognized r;
    r.beta = r.gamma1 = r.gamma2 = r.sigma = r.delta = r.chi = zero();
    r.rho_x = r.rho_y = zero();
    auto fail = [&](const std::string& why) {
        r.ok = false;
        r.why = why;
        return r;
    };

    Expr t = t_(), x = x_(), y = y_();

    Expr xi0 = q.get(coord_t());
    if (!take_rational(diff(xi0, coord_t()), r.c1))
        return fail("t-coefficient not affine in t");
    if (!take_rational(xi0 - r.c1 * t, r.c0))
        return fail("t-coefficient has a non-constant translation part");

    Expr xi1 = q.get(coord_x());
    Expr xi2 = q.get(coord_y());
    if (!take_rational(diff(xi1, coord_x()), r.c2))
        return fail("x-coefficient not linear in x");
    if (!is_zero(diff(xi2, coord_y()) - rat(r.c2)).symbolic())
        return fail("unequal diagonal scalings in x and y");
    r.beta = diff(xi2, coord_x());
    if (!only_t(r.beta))
        return fail("rotation rate depends on more than t");
    if (!is_zero(diff(xi1, coord_y()) + r.beta).symbolic())
        return fail("antisymmetric part of the spatial block is inconsistent");
    r.gamma1 = xi1 - r.c2 * x + r.beta * y;
    r.gamma2 = xi2 - r.c2 * y - r.beta * x;
    if (!only_t(r.gamma1) || !only_t(r.gamma2))
        return fail("translation parts depend on more than t");

    Expr eta = q.get(coord_psi());
    Expr eta_rem = eta - (Rational(2) * r.c2 - r.c1) * psi_() -
                   Rational(1, 2) * dt(r.beta) * r2() + dt(r.gamma1) * y -
                   dt(r.gamma2) * x;
    r.sigma = Rational(1, 2) *
              (diff(diff(eta_rem, coord_x()), coord_x()) +
               diff(diff(eta_rem, coord_y()), coord_y()));
    if (!only_t(r.sigma))
        return fail("radial source rate depends on more than t");
    Expr kappa = eta_rem - Rational(1, 2) * r.sigma * r2();

    if (point_space) {
        // No zeta/f coefficients to read the H/G parts from; the psi-shift
        // remainder must be a pure time-dependent shift.
        r.chi = kappa;
        if (!only_t(r.chi))
            return fail("residual psi-shift depends on more than t");
        r.ok = true;
        VectorField residual = vf_sub(q, project_point(instantiate(r)));
        for (auto& [c, e] : residual.coef) {
            if (!is_zero(e).symbolic())
                return fail("rebuilt point field differs on coefficient of " +
                            to_string(c));
        }
        return r;
    }

    Expr phi1 = q.get(coord_f1());
    Expr phi2 = q.get(coord_f2());
    Expr phi1_rem = phi1 - ((r.c2 - Rational(2) * r.c1) * f1_() - r.beta * f2_() +
                            Rational(1, 2) * r.sigma * r2() * zy_() +
                            dt(dt(r.beta)) * x + dt(r.sigma) * x);
    Expr phi2_rem = phi2 - (r.beta * f1_() + (r.c2 - Rational(2) * r.c1) * f2_() -
                            Rational(1, 2) * r.sigma * r2() * zx_() +
                            dt(dt(r.beta)) * y + dt(r.sigma) * y);
    r.delta = diff(phi1_rem, coord_zy());
    if (!is_zero(diff(phi2_rem, coord_zx()) + r.delta).symbolic())
        return fail("zeta-gradient couplings in the f-shifts disagree");
    if (!no_fields(r.delta))
        return fail("harmonic part depends on field coordinates");
    Expr lap = diff(diff(r.delta, coord_x()), coord_x()) +
               diff(diff(r.delta, coord_y()), coord_y());
    if (!is_zero(lap).symbolic())
        return fail("psi-shift with zeta coupling is not harmonic");
    r.chi = kappa - r.delta;
    if (!only_t(r.chi))
        return fail("residual psi-shift depends on more than t");

    r.rho_y = r.delta * zy_() - phi1_rem;
    r.rho_x = phi2_rem + r.delta * zx_();
    if (!no_fields(r.rho_x) || !no_fields(r.rho_y))
        return fail("divergence-free f-shift depends on field coordinates");
    if (!is_zero(diff(r.rho_x, coord_y()) - diff(r.rho_y, coord_x())).symbolic())
        return fail("f-shift gradient is not integrable");

    // Everything extracted; the rebuilt field must reproduce q exactly.
    r.ok = true;
    VectorField residual = vf_sub(q, instantiate(r));
    for (auto& [c, e] : residual.coef) {
        if (!is_zero(e).symbolic())
            return fail("rebuilt field differs on coefficient of " + to_string(c));
    }
    return r;
}

VectorField instantiate(const Recognized& r) {
    VectorField out = vf_add(
        vf_add(vf_scale(eq_D1(), r.c1), vf_scale(eq_Dt(), r.c0)),
        vf_scale(eq_D2(), r.c2));
    out = vf_add(out, eq_J(r.beta));
    out = vf_add(out, eq_X(r.gamma1));
    out = vf_add(out, eq_Y(r.gamma2));
    out = vf_add(out, eq_R(r.sigma));
    out = vf_add(out, eq_H(r.delta));
    out = vf_add(out, eq_Z(r.chi));
    VectorField g;
    g.set(coord_f1(), -r.rho_y);
    g.set(coord_f2(), r.rho_x);
    out = vf_add(out, g);
    out.label = r.label();
    return out;
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

namespace {

bool zero_ok(const Expr& e) { return is_zero(e).symbolic(); }

} // namespace

AlgebraPresentation g1_presentation() {
    AlgebraPresentation p;
    p.name = "equivalence";
    p.basis = {{Gen::D1, 1, one()},
               {Gen::D2, 1, one()},
               {Gen::Dt, 1, one()},
               {Gen::J, 1, param_t("beta")},
               {Gen::X, 1, param_t("gamma1")},
               {Gen::Y, 1, param_t("gamma2")},
               {Gen::R, 1, param_t("sigma")},
               {Gen::H, 1, param_harmonic("delta")},
               {Gen::G, 1, param_xy("rho")},
               {Gen::Z, 1, param_t("chi")}};
    p.basis_alt = {{Gen::D1, 1, one()},
                   {Gen::D2, 1, one()},
                   {Gen::Dt, 1, one()},
                   {Gen::J, 1, param_t("betaB")},
                   {Gen::X, 1, param_t("gamma1B")},
                   {Gen::Y, 1, param_t("gamma2B")},
                   {Gen::R, 1, param_t("sigmaB")},
                   {Gen::H, 1, param_harmonic("deltaB")},
                   {Gen::G, 1, param_xy("rhoB")},
                   {Gen::Z, 1, param_t("chiB")}};
    p.member = [](const Recognized& r) { return r.ok; };
    return p;
}

AlgebraPresentation g0_presentation() {
    AlgebraPresentation p;
    p.name = "vorticity-symmetry";
    p.point_space = true;
    p.basis = {{Gen::D1, 1, one()},
               {Gen::Dt, 1, one()},
               {Gen::D2, 1, one()},
               {Gen::J, 1, one()},
               {Gen::J, 1, sym("t")},
               {Gen::X, 1, param_t("gamma1")},
               {Gen::Y, 1, param_t("gamma2")},
               {Gen::Z, 1, param_t("chi")}};
    p.basis_alt = {{Gen::D1, 1, one()},
                   {Gen::Dt, 1, one()},
                   {Gen::D2, 1, one()},
                   {Gen::J, 1, one()},
                   {Gen::J, 1, sym("t")},
                   {Gen::X, 1, param_t("gamma1B")},
                   {Gen::Y, 1, param_t("gamma2B")},
                   {Gen::Z, 1, param_t("chiB")}};
    p.member = [](const Recognized& r) {
        return r.ok && zero_ok(diff(diff(r.beta, coord_t()), coord_t())) &&
               r.sigma.zero() && r.delta.zero() && r.rho_x.zero() &&
               r.rho_y.zero();
    };
    return p;
}

AlgebraPresentation time_independent_presentation() {
    AlgebraPresentation p;
    p.name = "time-independent-subclass";
    p.basis = {{Gen::D1, 1, one()},
               {Gen::Dt, 1, one()},
               {Gen::D2, 1, one()},
               {Gen::J, 1, one()},
               {Gen::X, 1, one()},
               {Gen::Y, 1, one()},
               {Gen::R, 1, one()},
               {Gen::H, 1, param_harmonic_xy("delta")},
               {Gen::G, 1, param_xy_only("rho")},
               {Gen::Z, 1, param_t("chi")}};
    p.basis_alt = {{Gen::D1, 1, one()},
                   {Gen::Dt, 1, one()},
                   {Gen::D2, 1, one()},
                   {Gen::J, 1, one()},
                   {Gen::X, 1, one()},
                   {Gen::Y, 1, one()},
                   {Gen::R, 1, one()},
                   {Gen::H, 1, param_harmonic_xy("deltaB")},
                   {Gen::G, 1, param_xy_only("rhoB")},
                   {Gen::Z, 1, param_t("chiB")}};
    p.member = [](const Recognized& r) {
        return r.ok && zero_ok(diff(r.beta, coord_t())) &&
               zero_ok(diff(r.gamma1, coord_t())) &&
               zero_ok(diff(r.gamma2, coord_t())) &&
               zero_ok(diff(r.sigma, coord_t())) &&
               zero_ok(diff(r.delta, coord_t())) &&
               zero_ok(diff(r.rho_x, coord_t())) &&
               zero_ok(diff(r.rho_y, coord_t()));
    };
    return p;
}

AlgebraPresentation space_independent_presentation() {
    AlgebraPresentation p;
    p.name = "space-independent-subclass";
    Expr rho_lin = fn("rho1", {sym("t")}, {0}) * sym("x") +
                   fn("rho2", {sym("t")}, {0}) * sym("y");
    Expr rho_linB = fn("rho1B", {sym("t")}, {0}) * sym("x") +
                    fn("rho2B", {sym("t")}, {0}) * sym("y");
    p.basis = {{Gen::D1, 1, one()},
               {Gen::Dt, 1, one()},
               {Gen::D2, 1, one()},
               {Gen::J, 1, one()},
               {Gen::J, 1, sym("t")},
               {Gen::X, 1, param_t("gamma1")},
               {Gen::Y, 1, param_t("gamma2")},
               {Gen::H, 1, param_t("delta")},
               {Gen::G, 1, rho_lin},
               {Gen::Z, 1, param_t("chi")}};
    p.basis_alt = {{Gen::D1, 1, one()},
                   {Gen::Dt, 1, one()},
                   {Gen::D2, 1, one()},
                   {Gen::J, 1, one()},
                   {Gen::J, 1, sym("t")},
                   {Gen::X, 1, param_t("gamma1B")},
                   {Gen::Y, 1, param_t("gamma2B")},
                   {Gen::H, 1, param_t("deltaB")},
                   {Gen::G, 1, rho_linB},
                   {Gen::Z, 1, param_t("chiB")}};
    p.member = [](const Recognized& r) {
        return r.ok && zero_ok(diff(diff(r.beta, coord_t()), coord_t())) &&
               r.sigma.zero() && only_t(r.delta) && only_t(r.rho_x) &&
               only_t(r.rho_y);
    };
    return p;
}

AlgebraPresentation autonomous_presentation() {
    AlgebraPresentation p;
    p.name = "autonomous-subclass";
    Expr rho_lin = fn("rho1", {sym("t")}, {0}) * sym("x") +
                   fn("rho2", {sym("t")}, {0}) * sym("y");
    Expr rho_linB = fn("rho1B", {sym("t")}, {0}) * sym("x") +
                    fn("rho2B", {sym("t")}, {0}) * sym("y");
    p.basis = {{Gen::D1, 1, one()},
               {Gen::Dt, 1, one()},
               {Gen::D2, 1, one()},
               {Gen::J, 1, one()},
               {Gen::X, 1, one()},
               {Gen::Y, 1, one()},
               {Gen::H, 1, one()},
               {Gen::G, 1, rho_lin},
               {Gen::Z, 1, param_t("chi")}};
    p.basis_alt = {{Gen::D1, 1, one()},
                   {Gen::Dt, 1, one()},
                   {Gen::D2, 1, one()},
                   {Gen::J, 1, one()},
                   {Gen::X, 1, one()},
                   {Gen::Y, 1, one()},
                   {Gen::H, 1, one()},
                   {Gen::G, 1, rho_linB},
                   {Gen::Z, 1, param_t("chiB")}};
    p.member = [](const Recognized& r) {
        return r.ok && zero_ok(diff(r.beta, coord_t())) &&
               zero_ok(diff(r.gamma1, coord_t())) &&
               zero_ok(diff(r.gamma2, coord_t())) && r.sigma.zero() &&
               zero_ok(diff(r.delta, coord_t())) && only_t(r.rho_x) &&
               only_t(r.rho_y);
    };
    return p;
}

std::vector<TableCell> commutator_table(const AlgebraPresentation& pres) {
    std::vector<TableCell> cells;
    auto inst = [&](const GenTerm& g) {
        GenSum s{g};
        return pres.point_space ? instantiate_point(s) : instantiate(s);
    };
    for (std::size_t i = 0; i < pres.basis.size(); ++i) {
        for (std::size_t j = i; j < pres.basis_alt.size(); ++j) {
            const GenTerm& a = pres.basis[i];
            const GenTerm& b = pres.basis_alt[j];
            TableCell cell;
            cell.left = to_string(a);
            cell.right = to_string(b);
            VectorField comm = commutator(inst(a), inst(b));
            GenSum expected = structure_bracket(a, b);
            cell.label = to_string(expected);
            VectorField want =
                pres.point_space ? instantiate_point(expected) : instantiate(expected);
            cell.matched = vf_is_zero(vf_sub(comm, want));
            Recognized rec = recognize(comm, pres.point_space);
            cell.recognized = rec.ok;
            cell.member = rec.ok && pres.member(rec);
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

} // namespace liesym
