#pragma once

// Ring of generalized monomials r^a rho^b prod_i omega_{g_i}(r)^{c_i}
// prod_j Omega_{g1_j,g2_j}(r)^{d_j}, the Lie derivative along
// X = r d/dr - rho d/drho, and the derivation-division root-bounding
// machinery with certificates. Exponents are smooth functions of a
// parameter lambda; only their values at lambda and at the reference
// value lambda_0 are stored. Root counting runs along the leaves
// {r rho = nu} of the invariant foliation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclicity/errors.hpp"

namespace cyclicity {

struct ExponentPair {
    double at_lambda = 0.0;
    double at_lambda0 = 0.0;

    ExponentPair() = default;
    ExponentPair(double lam, double lam0) : at_lambda(lam), at_lambda0(lam0) {}
    // exponent that does not depend on the parameter
    static ExponentPair constant(double v) { return {v, v}; }

    ExponentPair operator+(const ExponentPair& o) const {
        return {at_lambda + o.at_lambda, at_lambda0 + o.at_lambda0};
    }
    ExponentPair operator-(const ExponentPair& o) const {
        return {at_lambda - o.at_lambda, at_lambda0 - o.at_lambda0};
    }
    bool operator==(const ExponentPair&) const = default;
};

// omega_gamma(r/r0)^power; gamma vanishes at lambda_0
struct OmegaFactor {
    ExponentPair gamma;
    double power = 1.0;
    bool operator==(const OmegaFactor&) const = default;
};

// Omega_{gamma1,gamma2}(r/r0)^power; both gammas vanish at lambda_0
struct OmegaBigFactor {
    ExponentPair gamma1, gamma2;
    double power = 1.0;
    bool operator==(const OmegaBigFactor&) const = default;
};

struct GeneralMonomial {
    ExponentPair a, b;
    std::vector<OmegaFactor> omegas;
    std::vector<OmegaBigFactor> omega_bigs;
    double r0 = 1.0;  // section scale for the compensators

    static GeneralMonomial one() { return {}; }
    static GeneralMonomial power(ExponentPair a, ExponentPair b) {
        GeneralMonomial m;
        m.a = a;
        m.b = b;
        return m;
    }

    bool has_omega_big() const { return !omega_bigs.empty(); }
    // resonant iff a and b coincide at lambda_0
    bool is_resonant() const { return a.at_lambda0 == b.at_lambda0; }

    // sum_i gamma_i c_i at the current parameter
    double gamma_dot_c() const;

    // finite for r in (0, r0], rho >= 0 (rho > 0 if b < 0)
    double eval(double r, double rho) const;

    bool operator==(const GeneralMonomial&) const = default;
};

// M_j M_i^{-1} resonant at lambda_0, eq-by-eq on the stored values
bool is_resonant_pair(const GeneralMonomial& mi, const GeneralMonomial& mj);

// exact Lie derivative L_X M as a linear combination of general monomials
std::vector<std::pair<double, GeneralMonomial>> lie_monomial(const GeneralMonomial& m);

// view of M through the first integral r rho = nu: M = nu^b * reduced(r)
struct ReducedMonomial {
    double nu_power;  // b at the current parameter
    GeneralMonomial reduced;
};
ReducedMonomial reduce_mod_nu(const GeneralMonomial& m);

// --- remainders -------------------------------------------------------

// order classes ExactZero < BigO_r_delta < SmallO_1, closed under
// sum/product/L_X (a derivation keeps small-o, keeps O(r^delta))
struct RemainderClass {
    enum class Kind { ExactZero, BigO_r_delta, SmallO_1 };
    Kind kind = Kind::ExactZero;
    double delta = 0.0;  // only for BigO_r_delta, > 0

    static RemainderClass exact_zero() { return {Kind::ExactZero, 0.0}; }
    static RemainderClass big_o(double delta) { return {Kind::BigO_r_delta, delta}; }
    static RemainderClass small_o() { return {Kind::SmallO_1, 0.0}; }

    bool is_exact_zero() const { return kind == Kind::ExactZero; }
    bool at_most_big_o() const { return kind != Kind::SmallO_1; }

    RemainderClass join(const RemainderClass& o) const;  // class of h1+h2 (and h1*h2)
    RemainderClass lie() const;                          // class of L_X h

    bool operator==(const RemainderClass&) const = default;
};

// finite explicit C^k-function on monomials, for numeric evaluation
struct ConcreteRemainder {
    std::vector<std::pair<double, GeneralMonomial>> terms;

    double eval(double r, double rho) const;
    bool empty() const { return terms.empty(); }
    // structural membership in the declared order class
    bool belongs_to(const RemainderClass& cls) const;
};

struct Term {
    double coeff = 0.0;  // A_i at the current parameter
    GeneralMonomial monomial;
    RemainderClass remainder = RemainderClass::exact_zero();
    std::optional<ConcreteRemainder> concrete;

    double eval(double r, double rho) const;
};

struct MonomialSum {
    enum class Mode { TwoVar, OneVar };  // OneVar: b == 0, leaf is the r-axis
    std::vector<Term> terms;
    Mode mode = Mode::TwoVar;
};

// L_X applied to A M (1+h), M non-resonant without Omega factor:
// result (a-b-gamma.c) A M (1+g). Throws ResonanceError if the divisor
// is below tolerance, OmegaBigPresent on an Omega factor.
Term lie_term(const Term& t, double divisor_tol = 1e-8);

// the divisor (a-b-gamma.c) at the current parameter
double lie_divisor(const GeneralMonomial& m);

// --- certificates -----------------------------------------------------

struct CertificateStep {
    GeneralMonomial divided_by;
    // minimum-magnitude Lie multiplier among the surviving terms of this
    // pass (or the merge divisor for the p=1 grouping step)
    double divisor_value = 0.0;
    int remaining_terms = 0;
};

struct RootBoundCertificate {
    enum class Theorem { DerDiv, PGeq2, P1 };
    int bound = 0;
    Theorem theorem = Theorem::DerDiv;
    std::vector<CertificateStep> steps;
};

// Rolle/derivation-division bound: l pairwise non-resonant leading
// monomials without Omega factors give at most l-1 roots per leaf.
RootBoundCertificate derivation_division_bound(const MonomialSum& v, double divisor_tol = 1e-8);

// four-term boundary shape with integer exponent p >= 2: bound 3
RootBoundCertificate bound_p_geq_2(const MonomialSum& v, double divisor_tol = 1e-8);

// four-term boundary shape with p = 1: bound 2
RootBoundCertificate bound_p_1(const MonomialSum& v, double divisor_tol = 1e-8);

// record of the singular derivation identity
// L_X[ r^alpha omega_alpha (1 + O(r^delta)) ] = -r^alpha (1 + O(r^delta))
struct SingularLieIdentity {
    double alpha;
    RemainderClass input_remainder;   // must be ExactZero or BigO_r_delta
    double output_coeff;              // always -1
    GeneralMonomial output_monomial;  // r^alpha
    RemainderClass output_remainder;
};
SingularLieIdentity lie_singular(double alpha, double delta);

// --- numeric evaluation and root counting ------------------------------

// sum of A_i M_i (1+h_i); every non-ExactZero remainder needs a concrete
double evaluate_sum(const MonomialSum& v, double r, double rho);

struct RootCount {
    int count = 0;
    bool identically_zero = false;
};

struct LeafScanOptions {
    int grid = 4096;            // log-spaced sample points in r
    double rho_max = 0.5;       // domain rectangle bound for rho = nu/r
    double bisect_tol = 1e-12;  // root localization
    double tangency_eps = 1e-10;
};

// sign changes of r -> V(r, nu/r) on [r_min, r_max], bisection-refined;
// near-tangencies count twice when the curvature test passes
RootCount count_roots_leaf(const MonomialSum& v, double nu, double r_min, double r_max,
                           const LeafScanOptions& opt = {});

// OneVar variant: roots of r -> V(r) on [r_min, r_max]
RootCount count_roots_interval(const MonomialSum& v, double r_min, double r_max,
                               const LeafScanOptions& opt = {});

// --- displacement-map templates ----------------------------------------

enum class TemplateKind {
    BoundaryIrrational,  // -e0 (1+h0) - C3 e1 r^s (1+h1) + c* mu3 r^s rho (1+h2)
    BoundaryPGeq2,       // + K nu^p r^alpha omega_alpha, p >= 2
    BoundaryP1,          // p = 1 shape with the omega_alpha remainder term
    Hemicycle,           // same three-term shape, exponent sigma_2 + tau_l
    OneVarIntermediate,  // e0 + nu^s sum_i e_i x^i (1+O(x))
    LowerSxhh1,          // e0 h0 + mu3 x omega_{tau-1}(x) h3 + e1 x h1
    LowerSxhh5,          // sum e_i x^i h_i + mu3 x^tau h_tau (or omega form)
};

struct TemplateParams {
    double eps0 = 0.0, eps1 = 0.0, mu_bar3 = 0.0;
    double sigma_bar = 1.5;   // exponent at the current parameter
    double sigma0 = 1.5;      // its value at lambda_0
    int p = 0;                // integer sigma_0 class
    double K = 0.0;           // coefficient of the omega term (p >= 2 shape)
    double C3 = 1.0;
    double cstar = 1.0;       // the unspecified nonzero constants
    double tau = 1.0, tau0 = 1.0;
    int n = 2;                // highest power for the one-variable shapes
    double delta = 0.5;       // order of the O(r^delta) remainders
    // concrete remainders for h0..h3 (empty = exactly zero)
    ConcreteRemainder h0, h1, h2, h3;
};

MonomialSum make_template(TemplateKind kind, const TemplateParams& p);

std::string to_string(RootBoundCertificate::Theorem t);

}  // namespace cyclicity
