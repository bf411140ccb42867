#include "cyclicity/integrals.hpp"

#include <cmath>

#include "cyclicity/blowup.hpp"
#include "cyclicity/errors.hpp"

namespace cyclicity {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos g = 7, n = 9 coefficient set
const double lanczos_c[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(double x, double eps = 1e-9) {
    if (x > 0.5) return false;
    return std::fabs(x - std::nearbyint(x)) < eps;
}

}  // namespace

double gamma_fn(double x) {
    if (near_nonpositive_integer(x))
        throw PoleError("gamma: argument at or near a non-positive integer");
    if (x < 0.5) {
        // reflection through Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    double z = x - 1.0;
    double a = lanczos_c[0];
    for (int i = 1; i < 9; ++i) a += lanczos_c[i] / (z + i);
    double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

namespace {

double f21_series(double a, double b, double c, double z) {
    if (near_nonpositive_integer(c)) throw PoleError("2F1: c at a non-positive integer");
    double term = 1.0, sum = 1.0;
    for (int n = 0; n < 2000; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) return sum;
    }
    throw QuadratureFailure("2F1 series did not converge");
}

}  // namespace

double gauss_2f1(const HypergeometricArgs& args) {
    const double a = args.a, b = args.b, c = args.c, z = args.z;
    if (!(z > -1.0 && z < 1.0)) throw DomainError("2F1: z must lie in (-1,1)");
    if (near_nonpositive_integer(c)) throw PoleError("2F1: c at a non-positive integer");
    if (std::fabs(z) <= 0.5) return f21_series(a, b, c, z);
    // z in (0.5, 1): connection formula, both hypergeometric terms kept
    double s = c - a - b;
    double t1 = gamma_fn(c) * gamma_fn(s) / (gamma_fn(c - a) * gamma_fn(c - b)) *
                f21_series(a, b, a + b - c + 1.0, 1.0 - z);
    double t2 = std::pow(1.0 - z, s) * gamma_fn(c) * gamma_fn(-s) /
                (gamma_fn(a) * gamma_fn(b)) *
                f21_series(c - a, c - b, c - a - b + 1.0, 1.0 - z);
    return t1 + t2;
}

double melnikov_parabola(double mu4, const QuadratureOptions& opt) {
    auto f = [mu4](double x) {
        double d = 1.0 + x * x;
        return 8.0 * mu4 * x * x / (d * d * d);
    };
    return integrate_real_line(f, opt);
}

double divergence_integral(double B, double mu5, DivergenceVariant variant,
                           const QuadratureOptions& opt) {
    if (variant == DivergenceVariant::B1) {
        auto f = [mu5](double x) { return 2.0 * mu5 / (x * x + 1.0); };
        return integrate_real_line(f, opt);
    }
    if (!(B > 0.5)) throw DomainError("divergence integral: needs B > 1/2");
    // div = (2B+1)x + (1-B)mu5, xdot on the invariant parabola
    auto [c2, c1, c0] = invariant_parabola(B, mu5);
    auto f = [=](double x) {
        double y = (c2 * x + c1) * x + c0;
        double xdot = -y + B * x * x + B * mu5 * x;
        return ((2.0 * B + 1.0) * x + (1.0 - B) * mu5) / xdot;
    };
    auto truncated = [&](double X0) { return integrate(f, -X0, X0, opt); };
    return limit_at_infinity(truncated, 250.0);
}

I3Comparison i3_compare(double B, double mu_bar3, double x0, const QuadratureOptions& opt) {
    if (!(B > 0.5)) throw DomainError("i3: needs B > 1/2");
    double margin = 2.0 + (1.0 - 2.0 * B) * x0 * x0;
    if (margin < 1e-6)
        throw DomainError("i3: x0 too close to the integrand endpoint singularity");
    double E = (8.0 * B - 5.0) / (2.0 * (1.0 - 2.0 * B));
    double pref = 4.0 * mu_bar3 * std::pow(margin, 1.0 / (2.0 * (1.0 - 2.0 * B)));

    auto integrand = [=](double x) {
        return (1.0 - B * x * x) * std::pow(2.0 + (1.0 - 2.0 * B) * x * x, E);
    };
    double quad = pref * integrate(integrand, x0, -x0, opt);

    double closed_core;
    if (std::fabs(B - 0.75) < 1e-12) {
        closed_core = -2.0 * (1.5 * x0 - std::log((2.0 + x0) / (2.0 - x0)));
    } else {
        double bstar = (5.0 - 8.0 * B) / (2.0 * (1.0 - 2.0 * B));
        double z0 = 0.5 * (2.0 * B - 1.0) * x0 * x0;
        double f1 = gauss_2f1({0.5, bstar, 1.5, z0});
        double f2 = gauss_2f1({1.5, bstar, 2.5, z0});
        closed_core = (2.0 / 3.0) * std::pow(2.0, E) * x0 * (-3.0 * f1 + B * x0 * x0 * f2);
    }
    double closed = pref * closed_core;
    return {quad, closed, quad - closed};
}

double s_second_derivative(double B, double mu_bar3, double x0, const QuadratureOptions& opt) {
    if (!(B > 0.5)) throw DomainError("s_second_derivative: needs B > 1/2");
    PlanarField pq = restricted_rho_xbar_field(B, 0.0, mu_bar3);
    // P = rho-component, Q = xbar-component of the restricted field
    auto P_rho = [&](double x) { return pq.f.partial(0).eval({0.0, x}); };
    auto P_rhorho = [&](double x) { return pq.f.partial(0).partial(0).eval({0.0, x}); };
    auto Q0 = [&](double x) { return pq.g.eval({0.0, x}); };
    auto Q_rho = [&](double x) { return pq.g.partial(0).eval({0.0, x}); };

    double f30 = x0, f40 = -x0;
    // boundary contribution 2(I1+I2); the section slopes are
    // mu_bar3/(3-4B) at leading order, and O(mu_bar3 x0) at B = 3/4
    double boundary = 0.0;
    if (std::fabs(B - 0.75) > 1e-12) {
        double fprime = mu_bar3 / (3.0 - 4.0 * B);
        boundary = 2.0 * (fprime * (P_rho(f40) / Q0(f40)) - fprime * (P_rho(f30) / Q0(f30)));
    }

    auto inner = [&](double xbar) {
        auto g = [&](double x) { return P_rho(x) / Q0(x); };
        return integrate(g, f30, xbar, opt);
    };
    auto outer = [&](double xbar) {
        double q = Q0(xbar);
        double val = P_rhorho(xbar) / q - 2.0 * P_rho(xbar) * Q_rho(xbar) / (q * q);
        return val * std::exp(inner(xbar));
    };
    double i3 = integrate(outer, f30, f40, opt);
    return boundary + i3;  // S'(0) = 1
}

}  // namespace cyclicity
