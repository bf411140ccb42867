#pragma once

// Closed-form transition maps past the blown-up hyperbolic points (type I:
// {rho = rho0} -> {r = r0}; type II: {Ybar = Y0} -> {r = r0}) and their
// validation by direct integration of the normal-form flow
//   Ydot = -sigma_bar Y + Phi(nu, u(t)^p Y^q) Y + v(t)^p eta,
// u(t) = r e^t, v(t) = rho e^{-t}. The second component of every
// transition is nu = r rho, taken verbatim from the input.

#include <functional>

#include "cyclicity/errors.hpp"
#include "cyclicity/normal_form.hpp"
#include "cyclicity/polynomial.hpp"

namespace cyclicity {

struct DulacParams {
    SigmaClass sigma_class;
    double sigma_bar = 1.5;  // sigma + phi(nu), evaluated
    double alpha = 0.0;      // sigma_bar - sigma_0
    double eta = 0.0;        // eta(nu), evaluated; 0 unless Integer
    double r0 = 1.0, rho0 = 1.0, Y0 = 0.0;
    Poly2 Phi;  // Phi(nu, w) with Phi(.,0) = 0, for the integration mode

    double nu0() const { return r0 * rho0; }
    void validate() const;
};

// Ybar-component of the transition from {rho = rho0}, closed form
double dulac_type_I(double Ybar, double nu, const DulacParams& p);

// Ybar-component of the transition from {Ybar = Y0}, closed form
double dulac_type_II(double r, double rho, const DulacParams& p);

enum class Section { R0, Rho0 };

struct TransitionSample {
    double Y;
    double nu;
    int steps;  // accepted integrator steps
};

// integrate the reduced non-autonomous equation from the 3-D start point
// to the target section (local tolerance ~1e-12, adaptive step)
TransitionSample integrate_transition(const DulacParams& p, double r, double rho, double Y,
                                      Section target);

// --- boundary displacement composition ----------------------------------

// S(r,rho) = (r F(r,rho), rho / F(r,rho)); preserves nu = r rho exactly
struct RegularTransitionS {
    std::function<double(double, double)> F;
};

// T(x, nu) = (H(x), nu)
struct RegularTransitionT {
    std::function<double(double)> H;
};

// V(r,rho) = D4(S(r,rho)) - H(D3(r,rho)), all type-II closed forms
std::function<double(double, double)> compose_boundary_displacement(
    const DulacParams& d3, const DulacParams& d4, RegularTransitionS s,
    RegularTransitionT t);

}  // namespace cyclicity
