#include "cyclicity/monomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclicity/compensator.hpp"

namespace cyclicity {

namespace {

bool same_gamma(const ExponentPair& x, const ExponentPair& y) {
    return x.at_lambda == y.at_lambda && x.at_lambda0 == y.at_lambda0;
}

// merge equal-parameter factors, drop zero powers
void canonicalize(GeneralMonomial& m) {
    std::vector<OmegaFactor> om;
    for (const auto& f : m.omegas) {
        bool merged = false;
        for (auto& g : om) {
            if (same_gamma(g.gamma, f.gamma)) {
                g.power += f.power;
                merged = true;
                break;
            }
        }
        if (!merged) om.push_back(f);
    }
    std::erase_if(om, [](const OmegaFactor& f) { return f.power == 0.0; });
    m.omegas = std::move(om);

    std::vector<OmegaBigFactor> ob;
    for (const auto& f : m.omega_bigs) {
        bool merged = false;
        for (auto& g : ob) {
            if (same_gamma(g.gamma1, f.gamma1) && same_gamma(g.gamma2, f.gamma2)) {
                g.power += f.power;
                merged = true;
                break;
            }
        }
        if (!merged) ob.push_back(f);
    }
    std::erase_if(ob, [](const OmegaBigFactor& f) { return f.power == 0.0; });
    m.omega_bigs = std::move(ob);
}

// M_i / M_div (exponent subtraction, shared section scale)
GeneralMonomial quotient(const GeneralMonomial& mi, const GeneralMonomial& mdiv) {
    GeneralMonomial q = mi;
    q.a = mi.a - mdiv.a;
    q.b = mi.b - mdiv.b;
    for (const auto& f : mdiv.omegas) q.omegas.push_back({f.gamma, -f.power});
    for (const auto& f : mdiv.omega_bigs) q.omega_bigs.push_back({f.gamma1, f.gamma2, -f.power});
    canonicalize(q);
    return q;
}

bool is_unit(const GeneralMonomial& m) {
    return m.a.at_lambda == 0.0 && m.a.at_lambda0 == 0.0 && m.b.at_lambda == 0.0 &&
           m.b.at_lambda0 == 0.0 && m.omegas.empty() && m.omega_bigs.empty();
}

double total_omega_power(const GeneralMonomial& m) {
    double s = 0.0;
    for (const auto& f : m.omegas) s += f.power;
    for (const auto& f : m.omega_bigs) s += f.power;
    return s;
}

std::string describe(const GeneralMonomial& m) {
    std::ostringstream os;
    os << "r^(" << m.a.at_lambda << ") rho^(" << m.b.at_lambda << ")";
    for (const auto& f : m.omegas) os << " w[" << f.gamma.at_lambda << "]^" << f.power;
    for (const auto& f : m.omega_bigs)
        os << " W[" << f.gamma1.at_lambda << "," << f.gamma2.at_lambda << "]^" << f.power;
    return os.str();
}

}  // namespace

double GeneralMonomial::gamma_dot_c() const {
    double s = 0.0;
    for (const auto& f : omegas) s += f.gamma.at_lambda * f.power;
    return s;
}

double GeneralMonomial::eval(double r, double rho) const {
    if (!(r > 0.0)) throw DomainError("monomial: r must be positive");
    double v = std::pow(r, a.at_lambda);
    if (b.at_lambda != 0.0) v *= std::pow(rho, b.at_lambda);
    double xi = r / r0;
    for (const auto& f : omegas) v *= std::pow(omega(xi, f.gamma.at_lambda), f.power);
    for (const auto& f : omega_bigs)
        v *= std::pow(omega_big(xi, f.gamma1.at_lambda, f.gamma2.at_lambda), f.power);
    return v;
}

bool is_resonant_pair(const GeneralMonomial& mi, const GeneralMonomial& mj) {
    double d = (mj.a.at_lambda0 - mi.a.at_lambda0) - (mj.b.at_lambda0 - mi.b.at_lambda0);
    return d == 0.0;
}

std::vector<std::pair<double, GeneralMonomial>> lie_monomial(const GeneralMonomial& m) {
    // L_X r^a = a r^a, L_X rho^b = -b rho^b,
    // L_X w_g = -(1 + g w_g), L_X W_{g1,g2} = -(w_{g1} + g2 W_{g1,g2})
    std::vector<std::pair<double, GeneralMonomial>> out;
    double lead = m.a.at_lambda - m.b.at_lambda;
    for (const auto& f : m.omegas) lead -= f.power * f.gamma.at_lambda;
    for (const auto& f : m.omega_bigs) lead -= f.power * f.gamma2.at_lambda;
    if (lead != 0.0) out.emplace_back(lead, m);

    for (std::size_t i = 0; i < m.omegas.size(); ++i) {
        GeneralMonomial d = m;
        d.omegas[i].power -= 1.0;
        canonicalize(d);
        out.emplace_back(-m.omegas[i].power, std::move(d));
    }
    for (std::size_t j = 0; j < m.omega_bigs.size(); ++j) {
        GeneralMonomial d = m;
        d.omega_bigs[j].power -= 1.0;
        d.omegas.push_back({m.omega_bigs[j].gamma1, 1.0});
        canonicalize(d);
        out.emplace_back(-m.omega_bigs[j].power, std::move(d));
    }
    return out;
}

ReducedMonomial reduce_mod_nu(const GeneralMonomial& m) {
    GeneralMonomial red = m;
    red.a = m.a - m.b;
    red.b = ExponentPair::constant(0.0);
    return {m.b.at_lambda, red};
}

double lie_divisor(const GeneralMonomial& m) {
    return m.a.at_lambda - m.b.at_lambda - m.gamma_dot_c();
}

RemainderClass RemainderClass::join(const RemainderClass& o) const {
    if (kind == Kind::SmallO_1 || o.kind == Kind::SmallO_1) return small_o();
    if (kind == Kind::ExactZero) return o;
    if (o.kind == Kind::ExactZero) return *this;
    return big_o(std::min(delta, o.delta));
}

RemainderClass RemainderClass::lie() const {
    // derivation keeps the order class (Lemma on C^k-functions on monomials)
    return *this;
}

double ConcreteRemainder::eval(double r, double rho) const {
    double s = 0.0;
    for (const auto& [c, m] : terms) s += c * m.eval(r, rho);
    return s;
}

bool ConcreteRemainder::belongs_to(const RemainderClass& cls) const {
    for (const auto& [c, m] : terms) {
        if (c == 0.0) continue;
        double a0 = m.a.at_lambda0, b0 = m.b.at_lambda0;
        if (a0 < 0.0 || b0 < 0.0) return false;
        double wp = total_omega_power(m);
        switch (cls.kind) {
            case RemainderClass::Kind::ExactZero:
                return false;
            case RemainderClass::Kind::BigO_r_delta:
                // log factors eat into the exponent, so require strictness then
                if (wp > 0.0 ? !(a0 > cls.delta) : !(a0 >= cls.delta)) return false;
                break;
            case RemainderClass::Kind::SmallO_1:
                // o(1) near (0,0): an r-power beats any log; a bare rho power or
                // a negative omega power also vanish, but rho^b * log does not
                if (!(a0 > 0.0 || (b0 > 0.0 && wp <= 0.0) ||
                      (a0 == 0.0 && b0 == 0.0 && wp < 0.0 && m.omega_bigs.empty())))
                    return false;
                break;
        }
    }
    return true;
}

double Term::eval(double r, double rho) const {
    double h = 0.0;
    if (concrete) {
        h = concrete->eval(r, rho);
    } else if (!remainder.is_exact_zero()) {
        throw MissingConcreteRemainder("term with " + describe(monomial) +
                                       " declares a remainder class but has no concrete part");
    }
    return coeff * monomial.eval(r, rho) * (1.0 + h);
}

Term lie_term(const Term& t, double divisor_tol) {
    if (t.monomial.has_omega_big())
        throw OmegaBigPresent("lie_term: " + describe(t.monomial));
    if (t.monomial.is_resonant())
        throw ResonanceError("lie_term: resonant monomial " + describe(t.monomial));
    double div = lie_divisor(t.monomial);
    if (std::fabs(div) <= divisor_tol)
        throw ResonanceError("lie_term: divisor below tolerance for " + describe(t.monomial));
    Term out;
    out.coeff = t.coeff * div;
    out.monomial = t.monomial;
    out.remainder = t.remainder.join(t.remainder.lie());
    // the concrete part of g has no closed form here; certificates never need it
    out.concrete = std::nullopt;
    return out;
}

SingularLieIdentity lie_singular(double alpha, double delta) {
    if (!(delta > 0.0)) throw ParamError("lie_singular: delta must be positive");
    SingularLieIdentity id;
    id.alpha = alpha;
    id.input_remainder = RemainderClass::big_o(delta);
    id.output_coeff = -1.0;
    id.output_monomial = GeneralMonomial::power({alpha, 0.0}, ExponentPair::constant(0.0));
    id.output_remainder = RemainderClass::big_o(delta);
    return id;
}

// ---------------------------------------------------------------------
// certificates

namespace {

void check_derdiv_preconditions(const std::vector<GeneralMonomial>& ms) {
    for (const auto& m : ms)
        if (m.has_omega_big()) throw OmegaBigPresent("leading monomial " + describe(m));
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (is_resonant_pair(ms[i], ms[j]))
                throw ResonanceError("resonant pair: " + describe(ms[i]) + " vs " +
                                     describe(ms[j]));
}

// run the division-derivation recursion on bare monomials, appending trace steps
void derdiv_steps(std::vector<GeneralMonomial> ms, double divisor_tol,
                  std::vector<CertificateStep>& steps) {
    while (ms.size() > 1) {
        GeneralMonomial lead = ms.front();
        std::vector<GeneralMonomial> next;
        double min_div = 0.0;
        for (std::size_t i = 1; i < ms.size(); ++i) {
            GeneralMonomial q = quotient(ms[i], lead);
            double div = lie_divisor(q);
            if (std::fabs(div) <= divisor_tol)
                throw ResonanceError("division step divisor below tolerance: " + describe(q));
            if (min_div == 0.0 || std::fabs(div) < std::fabs(min_div)) min_div = div;
            next.push_back(std::move(q));
        }
        steps.push_back({lead, min_div, static_cast<int>(next.size())});
        ms = std::move(next);
    }
}

}  // namespace

RootBoundCertificate derivation_division_bound(const MonomialSum& v, double divisor_tol) {
    if (v.terms.empty()) throw ShapeError("derivation_division_bound: empty sum");
    std::vector<GeneralMonomial> ms;
    ms.reserve(v.terms.size());
    for (const auto& t : v.terms) ms.push_back(t.monomial);
    check_derdiv_preconditions(ms);

    RootBoundCertificate cert;
    cert.theorem = RootBoundCertificate::Theorem::DerDiv;
    cert.bound = static_cast<int>(v.terms.size()) - 1;
    derdiv_steps(std::move(ms), divisor_tol, cert.steps);
    return cert;
}

namespace {

struct BoundaryShape {
    int i_const = -1, i_plain = -1, i_rho = -1, i_omega = -1;
    int p = 0;
    double alpha = 0.0;
};

// classify the four-term boundary shape
//   A0 (1+h0) + A1 r^{p+a}(1+h1) + A2 r^{p+a} rho (1+h2) + A3 r^{p+a} rho^p w_a (...)
BoundaryShape match_boundary_shape(const MonomialSum& v) {
    if (v.terms.size() != 4) throw ShapeError("boundary shape needs exactly 4 terms");
    BoundaryShape s;
    for (int i = 0; i < 4; ++i) {
        const GeneralMonomial& m = v.terms[i].monomial;
        if (m.has_omega_big()) throw OmegaBigPresent("boundary shape: " + describe(m));
        if (is_unit(m)) {
            s.i_const = i;
        } else if (m.omegas.size() == 1) {
            s.i_omega = i;
        } else if (!m.omegas.empty()) {
            throw ShapeError("unexpected omega powers in " + describe(m));
        } else if (m.b.at_lambda0 == 0.0) {
            s.i_plain = i;
        } else if (m.b.at_lambda0 == 1.0) {
            s.i_rho = i;
        } else {
            throw ShapeError("unexpected rho power in " + describe(m));
        }
    }
    if (s.i_const < 0 || s.i_plain < 0 || s.i_rho < 0 || s.i_omega < 0)
        throw ShapeError("boundary shape: missing a required term");

    const GeneralMonomial& mo = v.terms[s.i_omega].monomial;
    double pd = mo.b.at_lambda0;
    s.p = static_cast<int>(std::lround(pd));
    if (std::fabs(pd - s.p) > 1e-12 || s.p < 1)
        throw ShapeError("omega term must carry an integer rho power p >= 1");
    if (mo.omegas[0].power != 1.0) throw ShapeError("omega factor must have power 1");
    if (mo.omegas[0].gamma.at_lambda0 != 0.0)
        throw ShapeError("omega parameter must vanish at lambda_0");

    s.alpha = v.terms[s.i_plain].monomial.a.at_lambda - s.p;
    auto check_a = [&](int i) {
        const GeneralMonomial& m = v.terms[i].monomial;
        if (std::fabs(m.a.at_lambda0 - s.p) > 1e-12 ||
            std::fabs(m.a.at_lambda - (s.p + s.alpha)) > 1e-9)
            throw ShapeError("inconsistent r exponents in " + describe(m));
    };
    check_a(s.i_plain);
    check_a(s.i_rho);
    check_a(s.i_omega);
    if (std::fabs(mo.omegas[0].gamma.at_lambda - s.alpha) > 1e-9)
        throw ShapeError("omega parameter must equal sigma_bar - p");

    if (!v.terms[s.i_const].remainder.at_most_big_o())
        throw ShapeError("constant term remainder must be O(r^delta)");
    return s;
}

}  // namespace

RootBoundCertificate bound_p_geq_2(const MonomialSum& v, double divisor_tol) {
    BoundaryShape s = match_boundary_shape(v);
    if (s.p == 1) throw PEqualsOne("shape has p = 1");
    if (!v.terms[s.i_omega].remainder.is_exact_zero())
        throw ShapeError("omega term must carry no remainder when p >= 2");

    RootBoundCertificate cert;
    cert.theorem = RootBoundCertificate::Theorem::PGeq2;
    cert.bound = 3;
    // dividing by (1+h0) and deriving kills the constant; the omega term
    // collapses to -K nu^p r^alpha by the singular derivation identity
    cert.steps.push_back({v.terms[s.i_const].monomial, -1.0, 3});

    GeneralMonomial plain = v.terms[s.i_plain].monomial;
    GeneralMonomial rho_term = v.terms[s.i_rho].monomial;
    GeneralMonomial collapsed = v.terms[s.i_omega].monomial;
    collapsed.omegas.clear();
    derdiv_steps({plain, rho_term, collapsed}, divisor_tol, cert.steps);
    return cert;
}

RootBoundCertificate bound_p_1(const MonomialSum& v, double divisor_tol) {
    BoundaryShape s = match_boundary_shape(v);
    if (s.p != 1) throw ShapeError("shape requires p = 1");
    if (!v.terms[s.i_omega].remainder.at_most_big_o())
        throw ShapeError("omega term remainder must be O(r^delta) when p = 1");

    RootBoundCertificate cert;
    cert.theorem = RootBoundCertificate::Theorem::P1;
    cert.bound = 2;
    cert.steps.push_back({v.terms[s.i_const].monomial, -1.0, 3});

    // the resonant nu r^alpha pair merges: coefficient K2 alpha - K3
    double k2 = v.terms[s.i_rho].coeff, k3 = v.terms[s.i_omega].coeff;
    double merge = k2 * s.alpha - k3;
    if (merge == 0.0) merge = -1.0;  // merged term vanishes, chain only shortens
    cert.steps.push_back({v.terms[s.i_rho].monomial, merge, 2});

    // factoring r^{1+alpha} leaves the non-resonant pair {1, rho}
    (void)divisor_tol;
    cert.steps.push_back({v.terms[s.i_plain].monomial, -1.0, 1});
    return cert;
}

// ---------------------------------------------------------------------
// numeric evaluation

double evaluate_sum(const MonomialSum& v, double r, double rho) {
    double s = 0.0;
    for (const auto& t : v.terms) s += t.eval(r, rho);
    return s;
}

namespace {

RootCount scan_function(const std::vector<double>& rs, const std::vector<double>& fs,
                        double coeff_scale, const LeafScanOptions& opt,
                        const MonomialSum& v, double rho_of_r_nu, bool two_var) {
    RootCount rc;
    bool all_tiny = true;
    for (double f : fs)
        if (std::fabs(f) > 1e-14 * (1.0 + coeff_scale)) all_tiny = false;
    if (all_tiny) {
        rc.identically_zero = true;
        return rc;
    }

    auto eval_at = [&](double r) {
        double rho = two_var ? rho_of_r_nu / r : 0.0;
        return evaluate_sum(v, r, rho);
    };

    const std::size_t n = rs.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double fa = fs[i], fb = fs[i + 1];
        if (fa == 0.0) {
            if (i == 0 || fs[i - 1] != 0.0) rc.count += 1;
            continue;
        }
        if (fa * fb < 0.0) {
            // bisection refinement of the crossing
            double lo = rs[i], hi = rs[i + 1], flo = fa;
            while (hi - lo > opt.bisect_tol) {
                double mid = 0.5 * (lo + hi);
                double fm = eval_at(mid);
                if (fm == 0.0) break;
                if (flo * fm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            rc.count += 1;
        }
    }
    // tangential contact: a near-zero interior local minimum of |f| with the
    // curve bending away from the axis counts as a double root. The
    // threshold is relative to the scale of f on this leaf, otherwise
    // legitimately tiny-valued sums trip it
    double scale = 0.0;
    for (double f : fs) scale = std::max(scale, std::fabs(f));
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (fs[i] == 0.0) continue;
        if (fs[i - 1] * fs[i] < 0.0 || fs[i] * fs[i + 1] < 0.0) continue;
        if (std::fabs(fs[i]) >= opt.tangency_eps * scale) continue;
        if (std::fabs(fs[i - 1]) <= std::fabs(fs[i]) || std::fabs(fs[i + 1]) <= std::fabs(fs[i]))
            continue;
        double d2 = fs[i - 1] - 2.0 * fs[i] + fs[i + 1];
        if (d2 * fs[i - 1] > 0.0) rc.count += 2;
    }
    return rc;
}

}  // namespace

RootCount count_roots_leaf(const MonomialSum& v, double nu, double r_min, double r_max,
                           const LeafScanOptions& opt) {
    if (v.mode == MonomialSum::Mode::OneVar) return count_roots_interval(v, r_min, r_max, opt);
    if (!(0.0 < r_min && r_min < r_max)) throw DomainError("count_roots_leaf: bad r interval");
    if (nu / r_min > opt.rho_max)
        throw DomainError("count_roots_leaf: leaf exits the rho domain at r_min");

    double coeff_scale = 0.0;
    for (const auto& t : v.terms) coeff_scale += std::fabs(t.coeff);

    std::vector<double> rs(opt.grid), fs(opt.grid);
    double llo = std::log(r_min), lhi = std::log(r_max);
    for (int i = 0; i < opt.grid; ++i) {
        double r = std::exp(llo + (lhi - llo) * i / (opt.grid - 1));
        rs[i] = r;
        fs[i] = evaluate_sum(v, r, nu / r);
    }
    return scan_function(rs, fs, coeff_scale, opt, v, nu, true);
}

RootCount count_roots_interval(const MonomialSum& v, double r_min, double r_max,
                               const LeafScanOptions& opt) {
    if (!(0.0 < r_min && r_min < r_max))
        throw DomainError("count_roots_interval: bad interval");
    double coeff_scale = 0.0;
    for (const auto& t : v.terms) coeff_scale += std::fabs(t.coeff);

    std::vector<double> rs(opt.grid), fs(opt.grid);
    double llo = std::log(r_min), lhi = std::log(r_max);
    for (int i = 0; i < opt.grid; ++i) {
        double r = std::exp(llo + (lhi - llo) * i / (opt.grid - 1));
        rs[i] = r;
        fs[i] = evaluate_sum(v, r, 0.0);
    }
    return scan_function(rs, fs, coeff_scale, opt, v, 0.0, false);
}

// ---------------------------------------------------------------------
// displacement-map templates

namespace {

Term make_term(double coeff, GeneralMonomial m, RemainderClass cls, ConcreteRemainder h) {
    Term t;
    t.coeff = coeff;
    t.monomial = std::move(m);
    t.remainder = cls;
    t.concrete = std::move(h);  // empty concrete is the zero representative
    return t;
}

GeneralMonomial r_pow(double lam, double lam0) {
    return GeneralMonomial::power({lam, lam0}, ExponentPair::constant(0.0));
}

}  // namespace

MonomialSum make_template(TemplateKind kind, const TemplateParams& p) {
    MonomialSum v;
    const RemainderClass big_o = RemainderClass::big_o(p.delta);
    const RemainderClass small_o = RemainderClass::small_o();

    switch (kind) {
        case TemplateKind::BoundaryIrrational:
        case TemplateKind::Hemicycle: {
            double s0 = p.sigma0;
            if (s0 == 0.0 || s0 == 1.0)
                throw ParamError("three-term boundary shape needs sigma_0 outside {0,1}");
            GeneralMonomial rs = r_pow(p.sigma_bar, s0);
            GeneralMonomial rsrho = rs;
            rsrho.b = ExponentPair::constant(1.0);
            double a0, a1, a2;
            if (kind == TemplateKind::BoundaryIrrational) {
                a0 = -p.eps0;
                a1 = -p.C3 * p.eps1;
                a2 = p.cstar * p.mu_bar3;
            } else {
                a0 = p.eps0;
                a1 = p.cstar * p.eps1;
                a2 = -p.cstar * p.mu_bar3;
            }
            v.terms.push_back(make_term(a0, GeneralMonomial::one(), big_o, p.h0));
            v.terms.push_back(make_term(a1, rs, big_o, p.h1));
            v.terms.push_back(make_term(a2, rsrho, small_o, p.h2));
            return v;
        }
        case TemplateKind::BoundaryPGeq2: {
            if (p.p < 2) throw ParamError("p >= 2 required for this shape");
            double alpha = p.sigma_bar - p.p;
            GeneralMonomial rs = r_pow(p.sigma_bar, p.p);
            GeneralMonomial rsrho = rs;
            rsrho.b = ExponentPair::constant(1.0);
            GeneralMonomial romega = rs;
            romega.b = ExponentPair::constant(static_cast<double>(p.p));
            romega.omegas.push_back({{alpha, 0.0}, 1.0});
            v.terms.push_back(make_term(p.eps0, GeneralMonomial::one(), big_o, p.h0));
            v.terms.push_back(make_term(p.eps1, rs, small_o, p.h1));
            v.terms.push_back(make_term(p.cstar * p.mu_bar3, rsrho, small_o, p.h2));
            Term t3 = make_term(p.K, romega, RemainderClass::exact_zero(), {});
            v.terms.push_back(t3);
            return v;
        }
        case TemplateKind::BoundaryP1: {
            if (p.p != 1) throw ParamError("p = 1 required for this shape");
            double alpha = p.sigma_bar - 1.0;
            GeneralMonomial rs = r_pow(p.sigma_bar, 1.0);
            GeneralMonomial rsrho = rs;
            rsrho.b = ExponentPair::constant(1.0);
            GeneralMonomial romega = rsrho;
            romega.omegas.push_back({{alpha, 0.0}, 1.0});
            v.terms.push_back(make_term(p.eps0, GeneralMonomial::one(), big_o, p.h0));
            v.terms.push_back(make_term(p.eps1, rs, small_o, p.h1));
            v.terms.push_back(make_term(p.cstar * p.mu_bar3, rsrho, small_o, p.h2));
            v.terms.push_back(make_term(p.cstar * p.mu_bar3, romega, big_o, p.h3));
            return v;
        }
        case TemplateKind::OneVarIntermediate: {
            if (p.n < 1) throw ParamError("n >= 1 required");
            v.mode = MonomialSum::Mode::OneVar;
            const ConcreteRemainder* hs[4] = {&p.h0, &p.h1, &p.h2, &p.h3};
            for (int i = 0; i <= p.n; ++i) {
                double c = (i == 0) ? p.eps0 : (i == p.n ? p.cstar * p.mu_bar3 : p.eps1);
                RemainderClass cls = RemainderClass::big_o(1.0);  // x^i (1 + O(x))
                v.terms.push_back(
                    make_term(c, r_pow(i, i), cls, *hs[std::min(i, 3)]));
            }
            return v;
        }
        case TemplateKind::LowerSxhh1: {
            if (std::fabs(p.tau0 - 1.0) > 1e-9)
                throw ParamError("this shape needs tau_0 = 1");
            v.mode = MonomialSum::Mode::OneVar;
            GeneralMonomial xw = r_pow(1.0, 1.0);
            xw.omegas.push_back({{p.tau - 1.0, 0.0}, 1.0});
            v.terms.push_back(make_term(p.eps0, GeneralMonomial::one(), small_o, p.h0));
            v.terms.push_back(make_term(p.cstar * p.mu_bar3, xw, small_o, p.h3));
            v.terms.push_back(make_term(p.eps1, r_pow(1.0, 1.0), small_o, p.h1));
            return v;
        }
        case TemplateKind::LowerSxhh5: {
            v.mode = MonomialSum::Mode::OneVar;
            bool integer_tau0 = std::fabs(p.tau0 - std::lround(p.tau0)) < 1e-9;
            int kmax = integer_tau0 ? static_cast<int>(std::lround(p.tau0))
                                    : std::max(static_cast<int>(std::floor(p.tau)), 1);
            const ConcreteRemainder* hs[4] = {&p.h0, &p.h1, &p.h2, &p.h3};
            for (int i = 0; i <= kmax; ++i) {
                double c = (i == 0) ? p.eps0 : p.eps1;
                v.terms.push_back(
                    make_term(c, r_pow(i, i), small_o, *hs[std::min(i, 3)]));
            }
            GeneralMonomial last;
            if (integer_tau0) {
                double t0 = std::lround(p.tau0);
                last = r_pow(t0, t0);
                last.omegas.push_back({{p.tau - t0, 0.0}, 1.0});
            } else {
                last = r_pow(p.tau, p.tau0);
            }
            v.terms.push_back(make_term(p.cstar * p.mu_bar3, last, small_o, p.h3));
            return v;
        }
    }
    throw ParamError("unknown template kind");
}

std::string to_string(RootBoundCertificate::Theorem t) {
    switch (t) {
        case RootBoundCertificate::Theorem::DerDiv: return "derivation-division";
        case RootBoundCertificate::Theorem::PGeq2: return "boundary-p-geq-2";
        case RootBoundCertificate::Theorem::P1: return "boundary-p-1";
    }
    return "?";
}

}  // namespace cyclicity
