#pragma once

// Quadratic families with a triple nilpotent point at infinity, their
// localization, the weighted blow-up (x, y, nu) = (r xbar, r^2 ybar, r rho)
// of the unfolding, singular points with eigenvalues on the blow-up locus,
// and the invariant curves. All chart fields come from exact polynomial
// substitution followed by division by the stated power of r.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cyclicity/errors.hpp"
#include "cyclicity/polynomial.hpp"

namespace cyclicity {

struct QuadraticFamily {
    enum class Variant { Inf, Unfold, UnfoldB1, UnfoldBis };
    Variant variant = Variant::Unfold;
    double B = 1.5;
    double mu0 = 0.0, mu2 = 0.0, mu3 = 0.0, mu4 = 0.0, mu5 = 0.0;

    // hard invariant violations throw ParamError; soft ones come back as text
    std::vector<std::string> validate() const;
};

struct PlanarField {
    Poly2 f, g;
    std::array<std::string, 2> vars{"x", "y"};

    std::array<double, 2> eval(std::array<double, 2> p) const {
        return {f.eval(p), g.eval(p)};
    }
    double divergence_at(std::array<double, 2> p) const {
        return f.partial(0).eval(p) + g.partial(1).eval(p);
    }
};

// the exact polynomial field of the chosen variant
PlanarField vector_field(const QuadraticFamily& fam);

// (v,w) = (-x/y, 1/y) localization of the Unfold variant, multiplied by w
PlanarField localize_at_infinity(const QuadraticFamily& fam);

// chart rho = 1, r = 0 of the blow-up
PlanarField family_rescaling_field(std::array<double, 3> mu_bar, double a);

// planar restriction of the blown-up localized system to r = 0
// (coordinates (rho, xbar)); singular on rho = 0 at xbar = +-beta
PlanarField restricted_rho_xbar_field(double B, double mu_bar2, double mu_bar3);
double restricted_beta(double B);

// --- blown-up 3-D chart fields -----------------------------------------

struct Field3 {
    std::array<Poly3, 3> f;  // components in chart coordinates
    std::array<std::string, 3> vars;

    std::array<double, 3> eval(std::array<double, 3> p) const {
        return {f[0].eval(p), f[1].eval(p), f[2].eval(p)};
    }
    std::array<std::array<double, 3>, 3> jacobian(std::array<double, 3> p) const;
};

// chart ybar = 1, coordinates (r, xbar, rho)
Field3 blowup_chart_ybar(double a, std::array<double, 3> mu_bar);

// chart xbar = sign (+1 or -1), coordinates (r, ybar, rho)
Field3 blowup_chart_xbar(double a, std::array<double, 3> mu_bar, int sign);

// d(r rho)/dt along the chart field; identically zero for every chart
// built here (r is variable 0 and rho is the last variable)
Poly3 foliation_derivative(const Field3& field);

// --- singular points ----------------------------------------------------

struct SingularPointInfo {
    std::string label;                   // P1..P4
    int chart_sign;                      // owning chart xbar = +-1
    double ybar;                         // location on r = rho = 0
    std::array<double, 3> eigenvalues;   // in the (r, rho, y) order
};

// the four points for a != 1/2, eigenvalues as functions of a
std::vector<SingularPointInfo> singular_points_on_blowup(double a);

// hyperbolicity exponents sigma = 2(1-2a) at P3/P4, (2a-1)/a at P1/P2
double sigma_p34(double a);
double sigma_p12(double a);

// --- invariant curves ----------------------------------------------------

// y = c2 x^2 + c1 x + c0 invariant for the Unfold variant when
// mu2 = mu3 = mu4 = 0; returns {c2, c1, c0}
std::array<double, 3> invariant_parabola(double B, double mu5);

// ydot - p'(x) xdot on the parabola, as a polynomial in x (exactly zero
// under the stated parameter conditions)
Poly2 parabola_defect(const QuadraticFamily& fam);

// mu3 - (1-2B) mu5; zero iff the line y = -1 is invariant (Unfold)
double invariant_line_residual(const QuadraticFamily& fam);

// ydot restricted to y = -1, as a polynomial in x
Poly2 line_defect(const QuadraticFamily& fam);

struct IntegrabilityReport {
    std::array<double, 3> residuals;  // (mu3, mu4, mu5)
    std::optional<std::string> graphic_label;
};

IntegrabilityReport integrability_residuals(const QuadraticFamily& fam);

// fixed-step RK4 trajectory (t, x, y) for the portrait output
std::vector<std::array<double, 3>> integrate_trajectory(const PlanarField& field,
                                                        std::array<double, 2> ic,
                                                        double t_max, double dt);

}  // namespace cyclicity
