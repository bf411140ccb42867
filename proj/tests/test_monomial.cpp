#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclicity/compensator.hpp"
#include "cyclicity/monomial.hpp"
#include "cyclicity/rng.hpp"

using namespace cyclicity;

namespace {

GeneralMonomial r_rho(double a, double b) {
    return GeneralMonomial::power(ExponentPair::constant(a), ExponentPair::constant(b));
}

double lie_eval(const GeneralMonomial& m, double r, double rho) {
    double s = 0.0;
    for (const auto& [c, mm] : lie_monomial(m)) s += c * mm.eval(r, rho);
    return s;
}

double lie_fd(const GeneralMonomial& m, double r, double rho, double h = 1e-6) {
    return (m.eval(r * std::exp(h), rho * std::exp(-h)) -
            m.eval(r * std::exp(-h), rho * std::exp(h))) /
           (2.0 * h);
}

Term simple_term(double coeff, GeneralMonomial m) {
    Term t;
    t.coeff = coeff;
    t.monomial = std::move(m);
    t.remainder = RemainderClass::exact_zero();
    t.concrete = ConcreteRemainder{};
    return t;
}

}  // namespace

TEST_CASE("lie_monomial on the basic rules") {
    // r^2 rho: single term with coefficient a - b = 1
    auto out = lie_monomial(r_rho(2.0, 1.0));
    REQUIRE(out.size() == 1);
    CHECK(out[0].first == 1.0);
    CHECK(out[0].second == r_rho(2.0, 1.0));

    // pure omega factor: -(1 + gamma omega)
    GeneralMonomial w;
    w.omegas.push_back({{0.25, 0.0}, 1.0});
    auto lw = lie_monomial(w);
    REQUIRE(lw.size() == 2);
    double val = 0.0;
    for (const auto& [c, m] : lw) val += c * m.eval(0.3, 0.1);
    CHECK(val == doctest::Approx(-(1.0 + 0.25 * omega(0.3, 0.25))).epsilon(1e-13));

    // r omega_gamma -> (1 - gamma) r omega_gamma - r
    GeneralMonomial rw = r_rho(1.0, 0.0);
    rw.omegas.push_back({{0.25, 0.0}, 1.0});
    auto lrw = lie_monomial(rw);
    REQUIRE(lrw.size() == 2);
    CHECK(lrw[0].first == doctest::Approx(0.75));
    CHECK(lrw[1].first == -1.0);
    CHECK(lrw[1].second == r_rho(1.0, 0.0));
}

TEST_CASE("lie_monomial matches finite differences, omega_big included") {
    CounterRng rng(1234, 0);
    for (int k = 0; k < 30; ++k) {
        GeneralMonomial m;
        m.a = ExponentPair::constant(rng.uniform(-1.0, 2.0));
        m.b = ExponentPair::constant(rng.uniform(-1.0, 2.0));
        if (rng.uniform() < 0.7)
            m.omegas.push_back({{rng.uniform(-0.2, 0.2), 0.0},
                                static_cast<double>(rng.uniform_int(1, 2))});
        if (rng.uniform() < 0.5)
            m.omega_bigs.push_back(
                {{rng.uniform(-0.2, 0.2), 0.0}, {rng.uniform(-0.2, 0.2), 0.0}, 1.0});
        double r = rng.uniform(0.05, 0.9), rho = rng.uniform(0.01, 0.5);
        double sym = lie_eval(m, r, rho);
        double fd = lie_fd(m, r, rho);
        CHECK(std::fabs(sym - fd) <= 1e-6 * std::max(1.0, std::fabs(sym)));
    }
}

TEST_CASE("lie_term divisor and errors") {
    // gamma c enters with a minus sign; the finite difference decides
    GeneralMonomial m = r_rho(1.5, 0.0);
    m.omegas.push_back({{0.1, 0.0}, 1.0});
    Term t = simple_term(2.0, m);
    t.remainder = RemainderClass::small_o();
    Term lt = lie_term(t);
    CHECK(lt.coeff == doctest::Approx(2.0 * (1.5 - 0.1)).epsilon(1e-14));
    CHECK(lt.remainder.kind == RemainderClass::Kind::SmallO_1);

    CHECK_THROWS_AS(lie_term(simple_term(1.0, r_rho(1.0, 1.0))), ResonanceError);

    GeneralMonomial with_big = r_rho(1.0, 0.0);
    with_big.omega_bigs.push_back({{0.1, 0.0}, {0.2, 0.0}, 1.0});
    CHECK_THROWS_AS(lie_term(simple_term(1.0, with_big)), OmegaBigPresent);
}

TEST_CASE("resonance predicate uses the lambda_0 values only") {
    CHECK_FALSE(is_resonant_pair(r_rho(0.0, 0.0),
                                 GeneralMonomial::power({1.42821356, 1.41421356},
                                                        ExponentPair::constant(0.0))));
    // 1 vs r^alpha omega_alpha: both have a0 = b0 = 0
    GeneralMonomial raw = GeneralMonomial::power({0.03, 0.0}, ExponentPair::constant(0.0));
    raw.omegas.push_back({{0.03, 0.0}, 1.0});
    CHECK(is_resonant_pair(GeneralMonomial::one(), raw));
    CHECK_FALSE(is_resonant_pair(r_rho(2.0, 0.0), r_rho(1.0, 0.0)));
}

TEST_CASE("reduce_mod_nu identity") {
    auto [power, reduced] = reduce_mod_nu(r_rho(2.0, 1.0));
    CHECK(power == 1.0);
    CHECK(reduced.a.at_lambda == 1.0);
    CHECK(reduced.b.at_lambda == 0.0);

    auto [p3, red3] = reduce_mod_nu(r_rho(0.0, 3.0));
    CHECK(p3 == 3.0);
    CHECK(red3.a.at_lambda == -3.0);

    // numeric identity M(r, nu/r) = nu^b reduced(r)
    CounterRng rng(77, 0);
    for (int k = 0; k < 20; ++k) {
        GeneralMonomial m;
        m.a = ExponentPair::constant(rng.uniform(-1.0, 2.0));
        m.b = ExponentPair::constant(rng.uniform(0.0, 2.0));
        m.omegas.push_back({{rng.uniform(-0.1, 0.1), 0.0}, 1.0});
        double r = rng.uniform(0.05, 0.9), rho = rng.uniform(0.01, 0.5);
        double nu = r * rho;
        auto [bp, red] = reduce_mod_nu(m);
        double lhs = m.eval(r, rho);
        double rhs = std::pow(nu, bp) * red.eval(r, 1.0);
        CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(lhs));
    }
    // direct numeric example at (r, rho) = (0.2, 0.05)
    CHECK(r_rho(2.0, 1.0).eval(0.2, 0.05) == doctest::Approx(0.01 * 0.2).epsilon(1e-14));
}

TEST_CASE("derivation_division_bound certificate") {
    // {1, r^{s}, r^{s-1}} with s = 1.41421356 + drift
    MonomialSum v;
    double s0 = 1.41421356;
    v.terms.push_back(simple_term(0.3, GeneralMonomial::one()));
    v.terms.push_back(simple_term(-0.7, GeneralMonomial::power({s0 + 0.01, s0},
                                                               ExponentPair::constant(0.0))));
    v.terms.push_back(simple_term(0.2, GeneralMonomial::power({s0 - 0.99, s0 - 1.0},
                                                              ExponentPair::constant(0.0))));
    RootBoundCertificate cert = derivation_division_bound(v);
    CHECK(cert.bound == 2);
    CHECK(cert.theorem == RootBoundCertificate::Theorem::DerDiv);
    REQUIRE(cert.steps.size() == 2);
    CHECK(cert.steps[0].remaining_terms == 2);
    CHECK(cert.steps[1].remaining_terms == 1);
    for (const auto& st : cert.steps) CHECK(st.divisor_value != 0.0);

    MonomialSum single;
    single.terms.push_back(simple_term(1.0, r_rho(0.7, 0.0)));
    CHECK(derivation_division_bound(single).bound == 0);
}

TEST_CASE("derivation_division_bound rejects resonant input") {
    // {1, r^{p+a}, r^{p-1+a}, r^a w_a} with p = 2: resonant pairs appear
    TemplateParams tp;
    tp.p = 2;
    tp.sigma_bar = 2.03;
    tp.sigma0 = 2.0;
    tp.eps0 = 0.1;
    tp.eps1 = 0.2;
    tp.mu_bar3 = 0.3;
    tp.K = 0.4;
    MonomialSum v = make_template(TemplateKind::BoundaryPGeq2, tp);
    CHECK_THROWS_AS(derivation_division_bound(v), ResonanceError);
}

TEST_CASE("boundary shape certificates") {
    TemplateParams tp;
    tp.p = 2;
    tp.sigma_bar = 2.03;
    tp.sigma0 = 2.0;
    tp.eps0 = 0.1;
    tp.eps1 = 0.2;
    tp.mu_bar3 = 0.3;
    tp.K = 0.4;
    MonomialSum v36 = make_template(TemplateKind::BoundaryPGeq2, tp);
    RootBoundCertificate c36 = bound_p_geq_2(v36);
    CHECK(c36.bound == 3);
    CHECK(c36.steps.size() == 3);
    // remaining_terms falls by exactly one per step
    int prev = 4;
    for (const auto& st : c36.steps) {
        CHECK(st.remaining_terms == prev - 1);
        prev = st.remaining_terms;
        CHECK(st.divisor_value != 0.0);
    }
    // K = 0 keeps the (valid, not tight) bound
    tp.K = 0.0;
    CHECK(bound_p_geq_2(make_template(TemplateKind::BoundaryPGeq2, tp)).bound == 3);

    TemplateParams t1;
    t1.p = 1;
    t1.sigma_bar = 1.02;
    t1.sigma0 = 1.0;
    t1.eps0 = 0.1;
    t1.eps1 = 0.2;
    t1.mu_bar3 = 0.3;
    MonomialSum v37 = make_template(TemplateKind::BoundaryP1, t1);
    RootBoundCertificate c37 = bound_p_1(v37);
    CHECK(c37.bound == 2);
    CHECK(c37.steps.size() == 3);
    prev = 4;
    for (const auto& st : c37.steps) {
        CHECK(st.remaining_terms == prev - 1);
        prev = st.remaining_terms;
        CHECK(st.divisor_value != 0.0);
    }

    // p = 1 input to the p >= 2 theorem
    CHECK_THROWS_AS(bound_p_geq_2(v37), PEqualsOne);
    // malformed: missing omega term
    MonomialSum broken = v37;
    broken.terms.pop_back();
    CHECK_THROWS_AS(bound_p_1(broken), ShapeError);
}

TEST_CASE("lie_singular identity record and finite-difference check") {
    SingularLieIdentity id = lie_singular(0.05, 0.5);
    CHECK(id.output_coeff == -1.0);
    CHECK(id.output_monomial.a.at_lambda == 0.05);
    CHECK_THROWS_AS(lie_singular(0.05, 0.0), ParamError);

    // d/dt (r e^t)^a omega_a(r e^t) at t = 0 equals -r^a
    GeneralMonomial m = GeneralMonomial::power({0.05, 0.0}, ExponentPair::constant(0.0));
    m.omegas.push_back({{0.05, 0.0}, 1.0});
    double r = 0.3, rho = 0.1;
    CHECK(std::fabs(lie_fd(m, r, rho) + std::pow(r, 0.05)) <= 1e-6);

    // the o(1) remainder (1 + rho) breaks the identity: L_X picks up
    // an omega rho term that the O(r^delta) calculus would forbid
    double got = lie_fd(m, r, rho) * (1.0 + rho) - m.eval(r, rho) * rho;
    double naive = -std::pow(r, 0.05) * (1.0 + rho);
    CHECK(std::fabs(got - naive) > 1e-3);
}

TEST_CASE("evaluate_sum and count_roots_leaf on explicit polynomials") {
    MonomialSum v;
    v.terms.push_back(simple_term(-1.0, GeneralMonomial::one()));
    v.terms.push_back(simple_term(2.0, r_rho(1.0, 0.0)));
    CHECK(evaluate_sum(v, 0.5, 0.123) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(count_roots_leaf(v, 0.01, 0.1, 0.9).count == 1);

    MonomialSum q;
    q.terms.push_back(simple_term(0.06, GeneralMonomial::one()));
    q.terms.push_back(simple_term(-0.5, r_rho(1.0, 0.0)));
    q.terms.push_back(simple_term(1.0, r_rho(2.0, 0.0)));
    CHECK(evaluate_sum(q, 0.2, 0.4) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(count_roots_leaf(q, 0.01, 0.05, 0.9).count == 2);

    MonomialSum z;
    z.terms.push_back(simple_term(0.0, GeneralMonomial::one()));
    z.terms.push_back(simple_term(0.0, r_rho(1.0, 0.0)));
    RootCount rc = count_roots_leaf(z, 0.01, 0.05, 0.9);
    CHECK(rc.identically_zero);
    CHECK(rc.count == 0);

    CHECK_THROWS_AS(count_roots_leaf(v, 0.2, 0.1, 0.9), DomainError);

    Term missing;
    missing.coeff = 1.0;
    missing.monomial = r_rho(1.0, 0.0);
    missing.remainder = RemainderClass::small_o();
    MonomialSum mv;
    mv.terms.push_back(missing);
    CHECK_THROWS_AS(evaluate_sum(mv, 0.3, 0.1), MissingConcreteRemainder);
}

TEST_CASE("a derivation-division pass wipes out the leading coefficient") {
    // numeric realization: L_X [V / (M1 (1+h1))] does not depend on A1
    TemplateParams tp;
    tp.sigma_bar = 1.3;
    tp.sigma0 = 1.3;
    tp.eps0 = 0.25;
    tp.eps1 = -0.4;
    tp.mu_bar3 = 0.6;
    MonomialSum v = make_template(TemplateKind::BoundaryIrrational, tp);

    auto pass_value = [&v](double a1, double r, double rho) {
        MonomialSum w = v;
        w.terms[0].coeff = a1;
        auto divided = [&w](double rr, double pp) {
            return evaluate_sum(w, rr, pp) / w.terms[0].eval(rr, pp) * w.terms[0].coeff;
        };
        // the perturbed coefficient drops out at any step size; a large h
        // keeps rounding out of the 1e-12 comparison
        const double h = 1e-2;
        return (divided(r * std::exp(h), rho * std::exp(-h)) -
                divided(r * std::exp(-h), rho * std::exp(h))) /
               (2.0 * h);
    };
    double r = 0.3, rho = 0.2;
    double va = pass_value(0.25, r, rho);
    double vb = pass_value(0.12, r, rho);
    CHECK(std::fabs(va - vb) <= 1e-12 * std::max(1.0, std::fabs(va)));
}

TEST_CASE("remainder class algebra") {
    auto z = RemainderClass::exact_zero();
    auto b1 = RemainderClass::big_o(0.5);
    auto b2 = RemainderClass::big_o(0.3);
    auto s = RemainderClass::small_o();
    CHECK(z.join(b1) == b1);
    CHECK(b1.join(b2).delta == 0.3);
    CHECK(b1.join(s).kind == RemainderClass::Kind::SmallO_1);
    CHECK(s.lie().kind == RemainderClass::Kind::SmallO_1);

    ConcreteRemainder ok;
    GeneralMonomial m = r_rho(0.6, 0.0);
    ok.terms.emplace_back(0.05, m);
    CHECK(ok.belongs_to(RemainderClass::big_o(0.5)));
    CHECK(ok.belongs_to(RemainderClass::small_o()));
    CHECK_FALSE(ok.belongs_to(RemainderClass::big_o(0.7)));

    // rho times a log power is not o(1) near the corner
    ConcreteRemainder bad;
    GeneralMonomial mw = r_rho(0.0, 1.0);
    mw.omegas.push_back({{0.02, 0.0}, 1.0});
    bad.terms.emplace_back(0.05, mw);
    CHECK_FALSE(bad.belongs_to(RemainderClass::small_o()));
}

TEST_CASE("templates evaluate to the documented shapes") {
    TemplateParams tp;
    tp.p = 1;
    tp.sigma_bar = 1.05;
    tp.sigma0 = 1.0;
    tp.eps0 = 0.1;
    tp.eps1 = 0.2;
    tp.mu_bar3 = 0.3;
    MonomialSum v = make_template(TemplateKind::BoundaryP1, tp);
    REQUIRE(v.terms.size() == 4);
    CHECK(v.terms[3].monomial.omegas.size() == 1);
    CHECK(v.terms[3].monomial.b.at_lambda == 1.0);
    CHECK(v.terms[2].monomial.a.at_lambda == doctest::Approx(1.05));

    // one-variable intermediate shape {1, x, x^2}
    TemplateParams ti;
    ti.n = 2;
    ti.eps0 = 0.05;
    ti.eps1 = -0.3;
    ti.mu_bar3 = 0.4;
    MonomialSum vi = make_template(TemplateKind::OneVarIntermediate, ti);
    CHECK(vi.mode == MonomialSum::Mode::OneVar);
    REQUIRE(vi.terms.size() == 3);
    CHECK(vi.terms[2].monomial.a.at_lambda == 2.0);
    CHECK(derivation_division_bound(vi).bound == 2);

    // lower-graphic shapes carry the tau compensator
    TemplateParams tl;
    tl.tau = 1.04;
    tl.tau0 = 1.0;
    tl.eps0 = 0.1;
    tl.eps1 = 0.2;
    tl.mu_bar3 = 0.3;
    MonomialSum vl = make_template(TemplateKind::LowerSxhh1, tl);
    CHECK(vl.mode == MonomialSum::Mode::OneVar);
    CHECK(vl.terms[1].monomial.omegas[0].gamma.at_lambda == doctest::Approx(0.04));

    TemplateParams t5;
    t5.tau = 2.6;
    t5.tau0 = 2.6;
    t5.eps0 = 0.1;
    t5.eps1 = 0.2;
    t5.mu_bar3 = 0.3;
    MonomialSum v5 = make_template(TemplateKind::LowerSxhh5, t5);
    CHECK(v5.terms.size() == 4);  // {1, x, x^2, x^tau}
    CHECK(derivation_division_bound(v5).bound == 3);

    CHECK_THROWS_AS(make_template(TemplateKind::BoundaryPGeq2, tp), ParamError);
}

TEST_CASE("bound soundness on a deliberately tight cubic") {
    // three sign changes from a constant + three powers: count must not
    // exceed the certificate bound of 3
    MonomialSum v;
    v.terms.push_back(simple_term(-0.006, GeneralMonomial::one()));
    v.terms.push_back(simple_term(0.11, r_rho(1.0, 0.0)));
    v.terms.push_back(simple_term(-0.6, r_rho(2.0, 0.0)));
    v.terms.push_back(simple_term(1.0, r_rho(3.0, 0.0)));
    RootBoundCertificate cert = derivation_division_bound(v);
    CHECK(cert.bound == 3);
    RootCount rc = count_roots_leaf(v, 1e-3, 0.02, 0.9);
    CHECK(rc.count == 3);  // roots at 0.1, 0.2, 0.3
}
