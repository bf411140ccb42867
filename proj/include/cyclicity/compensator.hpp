#pragma once

// Compensator arithmetic: the functions
//
//   kappa(eta)          = (e^eta - 1)/eta                 kappa(0) = 1
//   calK(eta, delta)    = (kappa(eta)-kappa(delta))/(eta-delta)
//   theta(t, alpha)     = t * kappa(alpha t) = (e^{alpha t}-1)/alpha
//   omega(xi, alpha)    = (xi^{-alpha}-1)/alpha           -> -ln xi as alpha -> 0
//   omega_big(xi, a, b) = (omega(xi,a)-omega(xi,b))/(a-b) -> (ln xi)^2/2
//
// omega interpolates between a power and a logarithm; omega_big is its second
// order divided difference. All evaluations are total on the stated domains.

namespace cyclicity {

double kappa(double eta);
double kappa_prime(double eta);
double kappa_second(double eta);

// symmetric divided difference of kappa; calK(e,e) = kappa_prime(e)
double calK(double eta, double delta);

// theta(t,0) = t
double theta(double t, double alpha);

// xi must be positive; omega(1,alpha) = 0
double omega(double xi, double alpha);

// symmetric in (alpha,beta); omega_big(xi,0,0) = ln(xi)^2/2
double omega_big(double xi, double alpha, double beta);

}  // namespace cyclicity
