#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclicity/compensator.hpp"
#include "cyclicity/dulac.hpp"

using namespace cyclicity;

namespace {

DulacParams irrational_params(double sigma_bar, double alpha) {
    DulacParams p;
    p.sigma_class = SigmaClass::irrational_like(sigma_bar - alpha);
    p.sigma_bar = sigma_bar;
    p.alpha = alpha;
    p.r0 = 0.5;
    p.rho0 = 0.4;
    return p;
}

DulacParams integer_params(long pp, double alpha, double eta) {
    DulacParams p;
    p.sigma_class = SigmaClass::integer(pp);
    p.sigma_bar = static_cast<double>(pp) + alpha;
    p.alpha = alpha;
    p.eta = eta;
    p.r0 = 0.5;
    p.rho0 = 0.4;
    return p;
}

}  // namespace

TEST_CASE("type I closed form") {
    DulacParams p = integer_params(1, 0.05, 0.3);
    p.rho0 = 0.2;
    // nu = nu0 lands on the section: identity (omega(1, a) = 0)
    CHECK(dulac_type_I(0.37, p.nu0(), p) == doctest::Approx(0.37).epsilon(1e-14));
    // Ybar = 0 with eta = 0 maps to 0
    DulacParams q = irrational_params(1.3, 0.0);
    CHECK(dulac_type_I(0.0, 0.01, q) == 0.0);
    // the eta term: 0.3 * 0.2 * 0.1^{1.05} * omega(0.1, 0.05)
    double xi = 0.1;
    double expected = 0.3 * 0.2 * std::pow(xi, 1.05) * omega(xi, 0.05);
    CHECK(dulac_type_I(0.0, xi * p.nu0(), p) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(dulac_type_I(0.1, 0.0, p), DomainError);
}

TEST_CASE("type II closed form") {
    DulacParams p = irrational_params(1.7, 0.02);
    p.Y0 = 0.45;
    CHECK(dulac_type_II(p.r0, 0.2, p) == doctest::Approx(0.45).epsilon(1e-14));
    p.Y0 = 0.0;
    CHECK(dulac_type_II(0.1, 0.2, p) == 0.0);
    CHECK_THROWS_AS(dulac_type_II(0.0, 0.2, p), DomainError);

    DulacParams pi = integer_params(1, 0.05, 0.3);
    pi.Y0 = 0.2;
    double r = 0.07, rho = 0.3;
    double xi = r / pi.r0;
    double expected =
        0.3 * rho * std::pow(xi, 1.05) * omega(xi, 0.05) + std::pow(xi, 1.05) * 0.2;
    CHECK(dulac_type_II(r, rho, pi) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("params validation") {
    DulacParams p = irrational_params(1.3, 0.0);
    p.alpha = 0.2;  // inconsistent with sigma_bar - sigma_0
    CHECK_THROWS_AS(p.validate(), ParamError);
    DulacParams q = irrational_params(1.3, 0.0);
    q.eta = 0.1;  // eta off the integer class
    CHECK_THROWS_AS(q.validate(), ParamError);
}

TEST_CASE("integration matches the linear closed form to 1e-10") {
    DulacParams p = irrational_params(2.1, -0.03);
    p.Y0 = 0.31;
    for (double r : {0.2, 0.02, 0.002}) {
        auto ts = integrate_transition(p, r, 0.25, p.Y0, Section::R0);
        double closed = dulac_type_II(r, 0.25, p);
        CHECK(ts.nu == r * 0.25);  // bit-exact nu preservation
        CHECK(std::fabs(ts.Y - closed) <= 1e-10 * std::fabs(closed));
    }
}

TEST_CASE("integration matches the inhomogeneous closed form to 1e-9") {
    DulacParams p = integer_params(1, 0.04, -0.37);
    p.Y0 = 0.22;
    for (double r : {0.2, 0.02}) {
        for (double rho : {0.1, 0.35}) {
            auto ts = integrate_transition(p, r, rho, p.Y0, Section::R0);
            double closed = dulac_type_II(r, rho, p);
            double scale = std::pow(r / p.r0, p.sigma_bar) *
                               (std::fabs(p.Y0) +
                                std::fabs(p.eta) * rho * omega(r / p.r0, p.alpha)) +
                           1e-300;
            CHECK(std::fabs(ts.Y - closed) <= 1e-9 * scale);
        }
    }
    // p = 2 exercises the v^p forcing
    DulacParams p2 = integer_params(2, -0.02, 0.4);
    p2.Y0 = -0.1;
    auto ts = integrate_transition(p2, 0.05, 0.3, p2.Y0, Section::R0);
    double closed = dulac_type_II(0.05, 0.3, p2);
    CHECK(std::fabs(ts.Y - closed) <= 1e-9 * std::max(1e-6, std::fabs(closed)));
}

TEST_CASE("transitions to the rho section, forward and backward in time") {
    DulacParams p = irrational_params(1.5, 0.0);
    p.Y0 = 0.3;
    // rho(t) = rho e^{-t}, so Y at the crossing is (rho0/rho)^{sigma} Y0
    auto fwd = integrate_transition(p, 0.2, 0.9, p.Y0, Section::Rho0);
    CHECK(fwd.Y == doctest::Approx(std::pow(p.rho0 / 0.9, p.sigma_bar) * p.Y0).epsilon(1e-10));
    // starting below rho0 runs the clock backwards
    auto bwd = integrate_transition(p, 0.2, 0.2, p.Y0, Section::Rho0);
    CHECK(bwd.Y == doctest::Approx(std::pow(p.rho0 / 0.2, p.sigma_bar) * p.Y0).epsilon(1e-10));
}

TEST_CASE("nonlinear Phi deviation obeys the stated envelope") {
    DulacParams p = integer_params(1, 0.03, 0.2);
    p.Y0 = 0.3;
    p.Phi.add({0, 1}, 0.01);
    double prev_ratio = -1.0;
    for (double r : {1e-4, 1e-3, 1e-2, 1e-1}) {
        auto ts = integrate_transition(p, r, 0.2, p.Y0, Section::R0);
        double closed = dulac_type_II(r, 0.2, p);
        double w = omega(r / p.r0, p.alpha);
        double env = std::pow(r, 1.0 + p.alpha) * w * w * std::fabs(std::log(r));
        double ratio = std::fabs(ts.Y - closed) / env;
        CHECK(ratio < 1.0);  // comfortably inside the envelope at this size
        if (prev_ratio > 0.0) CHECK(ratio / prev_ratio < 50.0);
        prev_ratio = ratio;
    }
}

TEST_CASE("composed boundary displacement") {
    DulacParams d = irrational_params(1.34, 0.04);
    d.Y0 = 0.7;
    d.rho0 = 0.5;
    RegularTransitionS ident_s{[](double, double) { return 1.0; }};
    RegularTransitionT ident_t{[](double x) { return x; }};

    SUBCASE("center configuration is identically zero") {
        auto V = compose_boundary_displacement(d, d, ident_s, ident_t);
        for (double r : {0.05, 0.2, 0.45})
            for (double rho : {0.05, 0.3}) CHECK(std::fabs(V(r, rho)) <= 1e-15);
    }

    SUBCASE("small S-nonlinearity produces the first-order term") {
        const double c = 1e-5;
        RegularTransitionS s{[c](double, double rho) { return 1.0 + c * rho; }};
        auto V = compose_boundary_displacement(d, d, s, ident_t);
        double r = 0.2, rho = 0.3;
        double lead = dulac_type_II(r, rho, d) * d.sigma_bar * c * rho;
        double got = V(r, rho);
        CHECK(got == doctest::Approx(lead).epsilon(1e-3));
        CHECK((got > 0) == (c > 0));
    }

    SUBCASE("domain violation throws") {
        RegularTransitionS s{[](double, double) { return 100.0; }};
        auto V = compose_boundary_displacement(d, d, s, ident_t);
        CHECK_THROWS_AS(V(0.3, 0.2), CompositionDomainError);
    }
}
