#pragma once

#include <functional>

namespace cyclicity {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 60;
    long max_evals = 2'000'000;
};

// adaptive Gauss-Kronrod (G7/K15) on a finite interval
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

// integral over the whole real line via the x = tan(theta) substitution
double integrate_real_line(const std::function<double(double)>& f,
                           const QuadratureOptions& opt = {});

// limit of g(X) as X -> infinity, assuming g(X) = L + a1/X + a2/X^2 + ...
// Evaluates on a geometric ladder X0, 2 X0, ..., Neville-extrapolates in 1/X.
double limit_at_infinity(const std::function<double(double)>& g, double x0,
                         int levels = 6);

}  // namespace cyclicity
