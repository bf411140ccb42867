#include "cyclicity/compensator.hpp"

#include <cmath>

#include "cyclicity/errors.hpp"

namespace cyclicity {

double kappa(double eta) {
    if (eta == 0.0) return 1.0;
    // expm1 keeps the removable singularity stable for tiny eta
    return std::expm1(eta) / eta;
}

double kappa_prime(double eta) {
    // (eta e^eta - e^eta + 1)/eta^2 cancels catastrophically near 0;
    // the series sum_{n>=0} eta^n/(n!(n+2)) converges fast for |eta| < 0.5
    if (std::fabs(eta) < 0.5) {
        double term = 1.0;  // eta^n / n!
        double sum = 0.5;   // n = 0
        for (int n = 1; n < 30; ++n) {
            term *= eta / n;
            double add = term / (n + 2);
            sum += add;
            if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    return ((eta - 1.0) * std::exp(eta) + 1.0) / (eta * eta);
}

double kappa_second(double eta) {
    // ((eta^2 - 2 eta + 2) e^eta - 2)/eta^3; series sum_{m>=0} eta^m/(m!(m+3))
    if (std::fabs(eta) < 0.5) {
        double term = 1.0;       // eta^m / m!
        double sum = 1.0 / 3.0;  // m = 0
        for (int m = 1; m < 30; ++m) {
            term *= eta / m;
            double add = term / (m + 3);
            sum += add;
            if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    double e = std::exp(eta);
    return ((eta * eta - 2.0 * eta + 2.0) * e - 2.0) / (eta * eta * eta);
}

double calK(double eta, double delta) {
    // divided differences lose all digits as the arguments coalesce
    if (std::fabs(eta - delta) < 1e-6 * (1.0 + std::fabs(eta))) {
        return kappa_prime(0.5 * (eta + delta));
    }
    return (kappa(eta) - kappa(delta)) / (eta - delta);
}

double theta(double t, double alpha) { return t * kappa(alpha * t); }

double omega(double xi, double alpha) {
    if (!(xi > 0.0)) throw DomainError("omega: xi must be positive");
    double lx = std::log(xi);
    if (std::fabs(alpha * lx) < 1e-3) {
        // kappa identity avoids the cancellation in xi^{-alpha} - 1
        return -kappa(-alpha * lx) * lx;
    }
    return (std::pow(xi, -alpha) - 1.0) / alpha;
}

double omega_big(double xi, double alpha, double beta) {
    if (!(xi > 0.0)) throw DomainError("omega_big: xi must be positive");
    double lx = std::log(xi);
    return calK(-alpha * lx, -beta * lx) * lx * lx;
}

}  // namespace cyclicity
