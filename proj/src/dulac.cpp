#include "cyclicity/dulac.hpp"

#include <cmath>

#include "cyclicity/compensator.hpp"

namespace cyclicity {

void DulacParams::validate() const {
    if (!(r0 > 0.0) || !(rho0 > 0.0)) throw ParamError("dulac: r0, rho0 must be positive");
    if (std::fabs(alpha - (sigma_bar - sigma_class.value)) > 1e-9)
        throw ParamError("dulac: alpha must equal sigma_bar - sigma_0");
    if (sigma_class.kind != SigmaClass::Kind::Integer && eta != 0.0)
        throw ParamError("dulac: eta must vanish unless sigma_0 is an integer");
}

double dulac_type_I(double Ybar, double nu, const DulacParams& p) {
    if (!(nu > 0.0)) throw DomainError("dulac type I: nu must be positive");
    double xi = nu / p.nu0();
    double base = std::pow(xi, p.sigma_bar);
    double out = base * Ybar;
    if (p.sigma_class.kind == SigmaClass::Kind::Integer && p.eta != 0.0) {
        double rp = std::pow(p.rho0, static_cast<double>(p.sigma_class.p));
        out += p.eta * rp * base * omega(xi, p.alpha);
    }
    return out;
}

double dulac_type_II(double r, double rho, const DulacParams& p) {
    if (!(r > 0.0)) throw DomainError("dulac type II: r must be positive");
    double xi = r / p.r0;
    double base = std::pow(xi, p.sigma_bar);
    double out = base * p.Y0;
    if (p.sigma_class.kind == SigmaClass::Kind::Integer && p.eta != 0.0) {
        double rp = std::pow(rho, static_cast<double>(p.sigma_class.p));
        out += p.eta * rp * base * omega(xi, p.alpha);
    }
    return out;
}

namespace {

// Cash-Karp embedded RK45 with step-size control on the scalar equation
template <typename Rhs>
double rk45(const Rhs& rhs, double t0, double t1, double y0, double tol, int& steps_out) {
    static const double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    static const double b21 = 0.2;
    static const double b31 = 3.0 / 40.0, b32 = 9.0 / 40.0;
    static const double b41 = 0.3, b42 = -0.9, b43 = 1.2;
    static const double b51 = -11.0 / 54.0, b52 = 2.5, b53 = -70.0 / 27.0, b54 = 35.0 / 27.0;
    static const double b61 = 1631.0 / 55296.0, b62 = 175.0 / 512.0, b63 = 575.0 / 13824.0,
                        b64 = 44275.0 / 110592.0, b65 = 253.0 / 4096.0;
    static const double c1 = 37.0 / 378.0, c3 = 250.0 / 621.0, c4 = 125.0 / 594.0,
                        c6 = 512.0 / 1771.0;
    static const double d1 = c1 - 2825.0 / 27648.0, d3 = c3 - 18575.0 / 48384.0,
                        d4 = c4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0,
                        d6 = c6 - 0.25;

    double t = t0, y = y0;
    double dir = (t1 >= t0) ? 1.0 : -1.0;
    double h = dir * std::min(0.1, std::fabs(t1 - t0));
    if (h == 0.0) {
        steps_out = 0;
        return y0;
    }
    int steps = 0;
    const int max_steps = 2'000'000;
    while (dir * (t1 - t) > 1e-15 * (1.0 + std::fabs(t))) {
        if (++steps > max_steps) throw StiffnessError("step budget exceeded");
        if (dir * (t + h - t1) > 0.0) h = t1 - t;
        double k1 = rhs(t, y);
        double k2 = rhs(t + a2 * h, y + h * b21 * k1);
        double k3 = rhs(t + a3 * h, y + h * (b31 * k1 + b32 * k2));
        double k4 = rhs(t + a4 * h, y + h * (b41 * k1 + b42 * k2 + b43 * k3));
        double k5 = rhs(t + a5 * h, y + h * (b51 * k1 + b52 * k2 + b53 * k3 + b54 * k4));
        double k6 =
            rhs(t + a6 * h, y + h * (b61 * k1 + b62 * k2 + b63 * k3 + b64 * k4 + b65 * k5));
        double ynew = y + h * (c1 * k1 + c3 * k3 + c4 * k4 + c6 * k6);
        double err = std::fabs(h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6));
        double scale = tol * (1.0 + std::fabs(y));
        if (err <= scale) {
            t += h;
            y = ynew;
        }
        double f = err > 0.0 ? 0.9 * std::pow(scale / err, 0.2) : 5.0;
        h *= std::min(5.0, std::max(0.2, f));
    }
    steps_out = steps;
    return y;
}

}  // namespace

TransitionSample integrate_transition(const DulacParams& p, double r, double rho, double Y,
                                      Section target) {
    p.validate();
    if (!(r > 0.0) || !(rho > 0.0))
        throw DomainError("integrate_transition: start strictly inside the quadrant");
    // u(t) = r e^t, v(t) = rho e^{-t}; the section crossing time is exact
    double t1 = (target == Section::R0) ? std::log(p.r0 / r) : std::log(rho / p.rho0);
    const double nu = r * rho;
    const double pexp = static_cast<double>(p.sigma_class.p);
    const double qexp = static_cast<double>(p.sigma_class.q);
    const bool rational = p.sigma_class.kind != SigmaClass::Kind::IrrationalLike;

    // integrate Z = e^{sigma_bar t} Y, which stays O(1) across the strong
    // contraction; the linear part drops out of the equation entirely
    auto rhs = [&](double t, double z) {
        double dz = 0.0;
        if (rational) {
            if (!p.Phi.empty()) {
                double w = std::pow(r, pexp) * std::exp(-qexp * p.alpha * t) *
                           std::pow(z, qexp);
                dz += p.Phi.eval({nu, w}) * z;
            }
            if (p.sigma_class.kind == SigmaClass::Kind::Integer && p.eta != 0.0)
                dz += std::exp(p.alpha * t) * std::pow(rho, pexp) * p.eta;
        }
        return dz;
    };
    int steps = 0;
    double zf = rk45(rhs, 0.0, t1, Y, 1e-12, steps);
    double contraction = std::exp(-p.sigma_bar * t1);
    return {contraction * zf, nu, steps};
}

std::function<double(double, double)> compose_boundary_displacement(
    const DulacParams& d3, const DulacParams& d4, RegularTransitionS s,
    RegularTransitionT t) {
    d3.validate();
    d4.validate();
    return [d3, d4, s, t](double r, double rho) {
        double F = s.F(r, rho);
        if (!(F > 0.0)) throw CompositionDomainError("S pushed r to a nonpositive value");
        double rs = r * F;
        double rhos = rho / F;
        if (rs > d4.r0 * (1.0 + 1e-12))
            throw CompositionDomainError("S left the type-II domain r <= r0");
        double forward = dulac_type_II(rs, rhos, d4);
        double backward = t.H(dulac_type_II(r, rho, d3));
        return forward - backward;
    };
}

}  // namespace cyclicity
