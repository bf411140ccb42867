#include "cyclicity/blowup.hpp"

#include <cmath>

namespace cyclicity {

namespace {

// variables of the ambient family field
enum { X = 0, Y = 1, NU = 2 };

Poly2 px() { return Poly2::var(0); }
Poly2 py() { return Poly2::var(1); }

}  // namespace

std::vector<std::string> QuadraticFamily::validate() const {
    std::vector<std::string> warnings;
    switch (variant) {
        case Variant::Inf:
            if (mu0 != 0 || mu2 != 0 || mu3 != 0 || mu4 != 0 || mu5 != 0)
                throw ParamError("Inf variant requires all mu = 0");
            break;
        case Variant::UnfoldB1:
            if (std::fabs(mu0) > 0.2)
                warnings.push_back("UnfoldB1 is meant for B near 1; |mu0| is large");
            break;
        default:
            break;
    }
    return warnings;
}

PlanarField vector_field(const QuadraticFamily& fam) {
    fam.validate();
    const double B = fam.B;
    PlanarField out;
    Poly2 x = px(), y = py();
    switch (fam.variant) {
        case QuadraticFamily::Variant::Inf:
            out.f = y * -1.0 + x * x * B;
            out.g = x + x * y;
            break;
        case QuadraticFamily::Variant::Unfold:
            out.f = y * -1.0 + x * x * B + y * y * fam.mu2 + x * (fam.mu4 + B * fam.mu5);
            out.g = x + x * y + y * y * fam.mu3 + y * ((1.0 - 2.0 * B) * fam.mu5);
            break;
        case QuadraticFamily::Variant::UnfoldB1: {
            double Beff = 1.0 + fam.mu0;
            out.f = y * -1.0 + x * x * Beff + y * y * fam.mu2 + x * fam.mu5;
            out.g = x + x * x * (fam.mu4 + fam.mu5) + x * y + y * y * fam.mu3;
            break;
        }
        case QuadraticFamily::Variant::UnfoldBis:
            out.f = y * -1.0 + x * x * B + y * y * fam.mu2 + x * fam.mu5;
            out.g = x + x * y + y * y * fam.mu3 + y * fam.mu4;
            break;
    }
    return out;
}

PlanarField localize_at_infinity(const QuadraticFamily& fam) {
    if (fam.variant != QuadraticFamily::Variant::Unfold)
        throw ParamError("localization is defined for the Unfold variant");
    const double B = fam.B;
    PlanarField out;
    out.vars = {"v", "w"};
    Poly2 v = px(), w = py();
    out.f = w + v * v * (1.0 - B) + Poly2::constant(-fam.mu2) + v * (-fam.mu3) +
            v * w * ((3.0 * B - 1.0) * fam.mu5 + fam.mu4) + v * v * w;
    out.g = v * w + w * (-fam.mu3) + w * w * (-(1.0 - 2.0 * B) * fam.mu5) + v * w * w;
    return out;
}

PlanarField family_rescaling_field(std::array<double, 3> mu_bar, double a) {
    PlanarField out;
    out.vars = {"xbar", "ybar"};
    Poly2 x = px(), y = py();
    out.f = y + x * x * a + Poly2::constant(mu_bar[1]);
    out.g = Poly2::constant(mu_bar[0]) + y * mu_bar[2] + x * y;
    return out;
}

PlanarField restricted_rho_xbar_field(double B, double mu_bar2, double mu_bar3) {
    if (!(B > 0.5)) throw DomainError("restricted field: needs B > 1/2");
    PlanarField out;
    out.vars = {"rho", "xbar"};
    Poly2 rho = px(), xb = py();
    out.f = rho * xb * -1.0 + rho * rho * mu_bar3;
    out.g = Poly2::constant(2.0) + xb * xb * (1.0 - 2.0 * B) + rho * rho * (-2.0 * mu_bar2) +
            xb * rho * (-mu_bar3);
    return out;
}

double restricted_beta(double B) {
    if (!(B > 0.5)) throw DomainError("beta: needs B > 1/2");
    return std::sqrt(2.0 / (2.0 * B - 1.0));
}

// ---------------------------------------------------------------------
// blow-up charts

namespace {

// ambient family (xdot, ydot) with the blown-up parameters substituted:
// mu1 = nu^3 m1, mu2 = nu^2 m2, mu3 = nu m3
std::pair<Poly3, Poly3> ambient_family(double a, std::array<double, 3> m) {
    Poly3 x = Poly3::var(X), y = Poly3::var(Y), nu = Poly3::var(NU);
    Poly3 fx = y + x * x * a + nu * nu * m[1];
    Poly3 fy = nu * nu * nu * m[0] + nu * y * m[2] + x * y;
    return {fx, fy};
}

// substitute each ambient variable by a monomial of the chart coordinates
Poly3 subst_chart(const Poly3& p, const std::array<std::pair<double, Poly3::Exps>, 3>& map) {
    Poly3 out;
    for (const auto& [e, v] : p.coeffs()) {
        double coeff = v;
        Poly3::Exps exps{};
        for (int k = 0; k < 3; ++k) {
            for (int i = 0; i < e[k]; ++i) {
                coeff *= map[k].first;
                for (int d = 0; d < 3; ++d) exps[d] += map[k].second[d];
            }
        }
        out.add(exps, coeff);
    }
    return out;
}

}  // namespace

std::array<std::array<double, 3>, 3> Field3::jacobian(std::array<double, 3> p) const {
    std::array<std::array<double, 3>, 3> j{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) j[i][k] = f[i].partial(k).eval(p);
    return j;
}

Field3 blowup_chart_ybar(double a, std::array<double, 3> mu_bar) {
    auto [fx, fy] = ambient_family(a, mu_bar);
    // x = r xbar, y = r^2, nu = r rho ; chart coordinates (r, xbar, rho)
    const std::array<std::pair<double, Poly3::Exps>, 3> map = {{
        {1.0, {1, 1, 0}},  // x -> r xbar
        {1.0, {2, 0, 0}},  // y -> r^2
        {1.0, {1, 0, 1}},  // nu -> r rho
    }};
    Poly3 Xc = subst_chart(fx, map);
    Poly3 Yc = subst_chart(fy, map);

    Poly3 r = Poly3::var(0), xb = Poly3::var(1), rho = Poly3::var(2);
    // y = r^2: rdot = ydot/(2r);  x = r xbar: xbardot = (xdot - xbar rdot)/r;
    // nu = r rho: rhodot = -rho rdot / r; then divide the field by r
    Poly3 rdot_raw = Yc.divided_by_monomial({1, 0, 0}) * 0.5;
    Poly3 xbdot_raw = (Xc - xb * rdot_raw).divided_by_monomial({1, 0, 0});
    Poly3 rhodot_raw = (rho * rdot_raw).divided_by_monomial({1, 0, 0}) * -1.0;

    (void)r;
    Field3 out;
    out.vars = {"r", "xbar", "rho"};
    out.f[0] = rdot_raw.divided_by_monomial({1, 0, 0});
    out.f[1] = xbdot_raw.divided_by_monomial({1, 0, 0});
    out.f[2] = rhodot_raw.divided_by_monomial({1, 0, 0});
    return out;
}

Field3 blowup_chart_xbar(double a, std::array<double, 3> mu_bar, int sign) {
    if (sign != 1 && sign != -1) throw ParamError("chart sign must be +-1");
    auto [fx, fy] = ambient_family(a, mu_bar);
    const double s = sign;
    // x = s r, y = r^2 ybar, nu = r rho ; chart coordinates (r, ybar, rho)
    const std::array<std::pair<double, Poly3::Exps>, 3> map = {{
        {s, {1, 0, 0}},    // x -> s r
        {1.0, {2, 1, 0}},  // y -> r^2 ybar
        {1.0, {1, 0, 1}},  // nu -> r rho
    }};
    Poly3 Xc = subst_chart(fx, map);
    Poly3 Yc = subst_chart(fy, map);

    Poly3 r = Poly3::var(0), yb = Poly3::var(1), rho = Poly3::var(2);
    Poly3 rdot_raw = Xc * s;  // s rdot = xdot
    Poly3 ybdot_raw = (Yc - rdot_raw * yb * 2.0 * r).divided_by_monomial({2, 0, 0});
    Poly3 rhodot_raw = (rho * rdot_raw).divided_by_monomial({1, 0, 0}) * -1.0;

    // divide by r: rdot_raw ~ r^2, ybdot_raw ~ r, rhodot_raw ~ r
    Field3 out;
    out.vars = {"r", "ybar", "rho"};
    out.f[0] = rdot_raw.divided_by_monomial({1, 0, 0});
    out.f[1] = ybdot_raw.divided_by_monomial({1, 0, 0});
    out.f[2] = rhodot_raw.divided_by_monomial({1, 0, 0});
    return out;
}

Poly3 foliation_derivative(const Field3& field) {
    Poly3 r = Poly3::var(0), rho = Poly3::var(2);
    return field.f[0] * rho + field.f[2] * r;
}

std::vector<SingularPointInfo> singular_points_on_blowup(double a) {
    if (a == 0.5) throw DegenerateA("a = 1/2 degenerates the singular points");
    double e = 1.0 - 2.0 * a;
    std::vector<SingularPointInfo> pts;
    pts.push_back({"P1", -1, 0.0, {-a, a, -e}});
    pts.push_back({"P2", +1, 0.0, {a, -a, e}});
    pts.push_back({"P3", +1, 0.5 * e, {0.5, -0.5, -e}});
    pts.push_back({"P4", -1, 0.5 * e, {-0.5, 0.5, e}});
    return pts;
}

double sigma_p34(double a) { return 2.0 * (1.0 - 2.0 * a); }
double sigma_p12(double a) {
    if (a == 0.0) throw DomainError("sigma at P1/P2 needs a != 0");
    return (2.0 * a - 1.0) / a;
}

// ---------------------------------------------------------------------
// invariant curves

std::array<double, 3> invariant_parabola(double B, double mu5) {
    if (B == 0.0) throw DomainError("invariant parabola: needs B != 0");
    double c2 = 0.5 * (2.0 * B - 1.0);
    double c1 = (2.0 * B - 1.0) * mu5;
    double c0 = -1.0 / (2.0 * B) + 0.5 * (2.0 * B - 1.0) * mu5 * mu5;
    return {c2, c1, c0};
}

Poly2 parabola_defect(const QuadraticFamily& fam) {
    PlanarField field = vector_field(fam);
    Poly2 x = px();
    Poly2 parab;
    if (fam.variant == QuadraticFamily::Variant::UnfoldB1) {
        parab = x * x * 0.5 + Poly2::constant(-0.5);
    } else {
        auto [c2, c1, c0] = invariant_parabola(fam.B, fam.mu5);
        parab = x * x * c2 + x * c1 + Poly2::constant(c0);
    }
    Poly2 fx = field.f.subst(1, parab);
    Poly2 fy = field.g.subst(1, parab);
    return fy - parab.partial(0) * fx;
}

double invariant_line_residual(const QuadraticFamily& fam) {
    if (fam.variant != QuadraticFamily::Variant::Unfold)
        throw ParamError("line residual is defined for the Unfold variant");
    return fam.mu3 - (1.0 - 2.0 * fam.B) * fam.mu5;
}

Poly2 line_defect(const QuadraticFamily& fam) {
    PlanarField field = vector_field(fam);
    return field.g.subst(1, Poly2::constant(-1.0));
}

IntegrabilityReport integrability_residuals(const QuadraticFamily& fam) {
    if (fam.variant != QuadraticFamily::Variant::Unfold &&
        fam.variant != QuadraticFamily::Variant::UnfoldB1)
        throw ParamError("integrability residuals need Unfold or UnfoldB1");
    IntegrabilityReport rep;
    rep.residuals = {fam.mu3, fam.mu4, fam.mu5};
    if (fam.mu3 != 0.0 || fam.mu4 != 0.0 || fam.mu5 != 0.0) return rep;
    double B = fam.variant == QuadraticFamily::Variant::UnfoldB1 ? 1.0 + fam.mu0 : fam.B;
    if (B > 1.0)
        rep.graphic_label = "I14_1";
    else if (B == 1.0)
        rep.graphic_label = "DI_2b";
    else if (B > 0.5)
        rep.graphic_label = "I6b_1";
    else if (B > 0.0)
        rep.graphic_label = "H13_3";
    else if (B == 0.0)
        rep.graphic_label = "H14_3";
    return rep;
}

std::vector<std::array<double, 3>> integrate_trajectory(const PlanarField& field,
                                                        std::array<double, 2> ic,
                                                        double t_max, double dt) {
    std::vector<std::array<double, 3>> out;
    std::array<double, 2> p = ic;
    double t = 0.0;
    out.push_back({t, p[0], p[1]});
    auto rhs = [&field](std::array<double, 2> q) { return field.eval(q); };
    while (t < t_max - 0.5 * dt) {
        auto k1 = rhs(p);
        auto k2 = rhs({p[0] + 0.5 * dt * k1[0], p[1] + 0.5 * dt * k1[1]});
        auto k3 = rhs({p[0] + 0.5 * dt * k2[0], p[1] + 0.5 * dt * k2[1]});
        auto k4 = rhs({p[0] + dt * k3[0], p[1] + dt * k3[1]});
        p[0] += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        p[1] += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        t += dt;
        out.push_back({t, p[0], p[1]});
    }
    return out;
}

}  // namespace cyclicity
