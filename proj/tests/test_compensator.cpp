#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclicity/compensator.hpp"
#include "cyclicity/errors.hpp"

using namespace cyclicity;

TEST_CASE("kappa at the removable singularity and nearby") {
    CHECK(kappa(0.0) == 1.0);
    CHECK(kappa(1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(kappa(-1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    // series value at a tiny argument: 1 + eta/2 + eta^2/6
    double eta = 1e-8;
    CHECK(kappa(eta) == doctest::Approx(1.0 + eta / 2.0 + eta * eta / 6.0).epsilon(1e-15));
}

TEST_CASE("kappa_prime values and the growth inequality") {
    CHECK(kappa_prime(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(kappa_prime(1.0) == doctest::Approx(1.0).epsilon(1e-13));  // (e - e + 1)/1
    for (double eta : {5.0, 20.0, 45.0}) {
        CHECK(kappa_prime(eta) < kappa(eta));
        CHECK(kappa(eta) < std::exp(eta));
    }
}

TEST_CASE("kappa positivity, monotonicity, convexity on [-50, 50]") {
    for (int i = 0; i <= 200; ++i) {
        double eta = -50.0 + 0.5 * i;
        CHECK(kappa(eta) > 0.0);
        CHECK(kappa_prime(eta) > 0.0);
        CHECK(kappa_second(eta) > 0.0);
    }
}

TEST_CASE("calK is a symmetric divided difference with kappa_prime diagonal") {
    CHECK(calK(0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(calK(1.0, 0.0) == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-13));
    CHECK(calK(0.7, -0.3) == calK(-0.3, 0.7));
    // near-coalescing arguments switch to the midpoint derivative
    double v = calK(0.4, 0.4 + 1e-9);
    CHECK(v == doctest::Approx(kappa_prime(0.4)).epsilon(1e-9));
}

TEST_CASE("theta cases") {
    CHECK(theta(2.5, 0.0) == 2.5);
    CHECK(theta(1.0, 1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(theta(2.0, -1.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("omega branches, domain, and known values") {
    CHECK(omega(std::exp(-2.0), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(omega(1.0, 0.3) == 0.0);
    CHECK(omega(0.5, 0.1) == doctest::Approx(0.7177346253629313).epsilon(1e-13));
    CHECK_THROWS_AS(omega(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(omega(-0.5, 0.0), DomainError);
    // kappa identity
    for (double xi : {0.9, 0.5, 0.05}) {
        for (double al : {-0.3, -1e-5, 0.0, 1e-5, 0.3}) {
            double idv = -kappa(-al * std::log(xi)) * std::log(xi);
            CHECK(omega(xi, al) == doctest::Approx(idv).epsilon(1e-13));
        }
    }
}

TEST_CASE("omega_big symmetry and special values") {
    CHECK(omega_big(std::exp(-1.0), 0.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(omega_big(0.3, 0.05, -0.05) ==
          doctest::Approx((omega(0.3, 0.05) - omega(0.3, -0.05)) / 0.1).epsilon(1e-12));
    for (double xi : {0.1, 0.6}) {
        CHECK(omega_big(xi, 0.2, -0.1) == omega_big(xi, -0.1, 0.2));
    }
    CHECK_THROWS_AS(omega_big(0.0, 0.1, 0.2), DomainError);
}

TEST_CASE("omega upper bounds from the kappa monotonicity") {
    for (double xi : {0.05, 0.3, 0.8}) {
        for (double al : {-0.4, -0.05, 0.05, 0.4}) {
            double w = omega(xi, al);
            if (al <= 0.0) CHECK(w <= -std::log(xi) + 1e-12);
            if (al >= 0.0) CHECK(w <= -std::pow(xi, -al) * std::log(xi) + 1e-12);
        }
    }
}
