#pragma once

// Verification integrals backing the small-parameter expansion of the
// displacement map of the quadratic family at infinity: the Melnikov
// integral across the invariant parabola, the divergence integral along
// it, a Gauss hypergeometric evaluator with the z -> 1 connection
// formula, the transition second-derivative formula, and their
// closed-form cross checks.

#include "cyclicity/quadrature.hpp"

namespace cyclicity {

// Lanczos-style Gamma with reflection; 1e-12 on [-20,20] off the poles
double gamma_fn(double x);

struct HypergeometricArgs {
    double a, b, c;
    double z;  // z in (-1, 1)
};

// series for |z| <= 0.5, connection formula with both terms retained for
// z in (0.5, 1)
double gauss_2f1(const HypergeometricArgs& args);

// integral of 8 mu4 x^2/(1+x^2)^3 over the real line; equals pi mu4
double melnikov_parabola(double mu4, const QuadratureOptions& opt = {});

enum class DivergenceVariant { General, B1 };

// divergence integral along the invariant parabola.
//   B1:      quadrature of 2 mu5/(x^2+1) over the line = 2 pi mu5
//   General: symmetric truncation of the div/xdot integral, extrapolated
//            in 1/X0; tends to 4 B^{3/2} (B-1) pi mu5 (1 + O(mu5^2))
double divergence_integral(double B, double mu5, DivergenceVariant variant,
                           const QuadratureOptions& opt = {});

struct I3Comparison {
    double quadrature;
    double closed;
    double diff;
};

// the exponential-weighted integral term of the second-derivative
// formula, by quadrature and by its hypergeometric (or B = 3/4
// logarithmic) closed form, including the prefactor
I3Comparison i3_compare(double B, double mu_bar3, double x0,
                        const QuadratureOptions& opt = {});

// second derivative of the corner transition map along rho = 0, from the
// planar restriction field; linear in mu_bar3 by construction
double s_second_derivative(double B, double mu_bar3, double x0,
                           const QuadratureOptions& opt = {});

}  // namespace cyclicity
