#include "cyclicity/quadrature.hpp"

#include <cmath>
#include <vector>

#include "cyclicity/errors.hpp"

namespace cyclicity {

namespace {

// 15-point Kronrod nodes/weights on [-1,1] with the embedded 7-point Gauss rule
const double kron_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
const double kron_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
const double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    evals += 15;
    double resk = kron_w[7] * fc;
    double resg = gauss_w[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kron_x[j];
        double f1 = f(c - x), f2 = f(c + x);
        resk += kron_w[j] * (f1 + f2);
        if (j % 2 == 1) resg += gauss_w[j / 2] * (f1 + f2);
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureOptions& opt, int depth, long& evals, double whole_scale) {
    if (evals > opt.max_evals)
        throw QuadratureFailure("evaluation budget exceeded");
    GkResult r = gk15(f, a, b, evals);
    if (r.error <= opt.abs_tol + opt.rel_tol * std::max(std::fabs(r.value), whole_scale) ||
        depth >= opt.max_depth) {
        if (depth >= opt.max_depth && r.error > 1e6 * (opt.abs_tol + opt.rel_tol * whole_scale))
            throw QuadratureFailure("max depth without convergence");
        return r.value;
    }
    double m = 0.5 * (a + b);
    return adaptive(f, a, m, opt, depth + 1, evals, whole_scale) +
           adaptive(f, m, b, opt, depth + 1, evals, whole_scale);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    long evals = 0;
    GkResult first = gk15(f, a, b, evals);
    if (!std::isfinite(first.value)) throw QuadratureFailure("non-finite integrand");
    return adaptive(f, a, b, opt, 0, evals, std::fabs(first.value));
}

double integrate_real_line(const std::function<double(double)>& f,
                           const QuadratureOptions& opt) {
    auto g = [&f](double t) {
        double c = std::cos(t);
        double x = std::tan(t);
        return f(x) / (c * c);
    };
    const double half_pi = 1.5707963267948966;
    // keep strictly inside the poles of tan
    return integrate(g, -half_pi + 1e-13, half_pi - 1e-13, opt);
}

double limit_at_infinity(const std::function<double(double)>& g, double x0, int levels) {
    std::vector<double> u(levels), v(levels);
    for (int k = 0; k < levels; ++k) {
        double x = x0 * std::pow(2.0, k);
        u[k] = 1.0 / x;
        v[k] = g(x);
    }
    // Neville tableau evaluated at u = 0
    for (int j = 1; j < levels; ++j)
        for (int i = levels - 1; i >= j; --i)
            v[i] = v[i] + (v[i] - v[i - 1]) * (0.0 - u[i]) / (u[i] - u[i - j]);
    return v[levels - 1];
}

}  // namespace cyclicity
