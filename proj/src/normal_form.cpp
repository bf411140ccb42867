#include "cyclicity/normal_form.hpp"

#include <cmath>
#include <numeric>

namespace cyclicity {

SigmaClass SigmaClass::irrational_like(double value) {
    if (!(value > 0.0)) throw ParamError("sigma_0 must be positive");
    SigmaClass s;
    s.kind = Kind::IrrationalLike;
    s.value = value;
    return s;
}

SigmaClass SigmaClass::rational(long p, long q) {
    if (p <= 0 || q <= 1) throw ParamError("rational sigma_0 needs p > 0, q > 1");
    if (std::gcd(p, q) != 1) throw ParamError("rational sigma_0 needs gcd(p,q) = 1");
    SigmaClass s;
    s.kind = Kind::Rational;
    s.p = p;
    s.q = q;
    s.value = static_cast<double>(p) / static_cast<double>(q);
    return s;
}

SigmaClass SigmaClass::integer(long p) {
    if (p <= 0) throw ParamError("integer sigma_0 must be positive");
    SigmaClass s;
    s.kind = Kind::Integer;
    s.p = p;
    s.q = 1;
    s.value = static_cast<double>(p);
    return s;
}

ResonanceDivisor resonance_divisor(int i, int j, int l, const SigmaClass& sigma0) {
    ResonanceDivisor d;
    if (sigma0.kind == SigmaClass::Kind::IrrationalLike) {
        d.exact = false;
        d.value = (i - j) - sigma0.value * (l - 1);
    } else {
        d.exact = true;
        d.num = (i - j) * sigma0.q - sigma0.p * (l - 1);
        d.den = sigma0.q;
        d.value = static_cast<double>(d.num) / static_cast<double>(d.den);
    }
    return d;
}

std::vector<std::array<int, 3>> resonance_set(const SigmaClass& sigma0, int K) {
    if (K < 2) throw ParamError("resonance_set: K >= 2 required");
    std::vector<std::array<int, 3>> out;
    for (int d = 1; d <= K; ++d)
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) {
                int l = d - i - j;
                if (i == 0 && j == 0 && l == 1) continue;  // the linear part
                if (resonance_divisor(i, j, l, sigma0).is_zero()) out.push_back({i, j, l});
            }
    return out;
}

void QuasiLinearField3::validate() const {
    for (const auto& [e, v] : F.coeffs()) {
        (void)v;
        if (e[0] + e[1] + e[2] < 2)
            throw ParamError("F must have no constant or linear part");
    }
}

bool ResonantNormalForm::eta_is_zero(double tol) const {
    for (const auto& [m, v] : eta) {
        (void)m;
        if (std::fabs(v) > tol) return false;
    }
    return true;
}

namespace {

// ydot RHS written through y = z + P(u,v,z):
//   zdot = [ G(u,v,z+P) - u P_u + v P_v ] * (1 + P_z)^{-1},  G = -sigma y + F
Poly3 transform_rhs(double sigma, const Poly3& F, const Poly3& P, int max_degree) {
    Poly3 z = Poly3::var(2);
    Poly3 y_of_z = z + P;
    Poly3 G = y_of_z * (-sigma) + F.subst(2, y_of_z).truncate(max_degree);
    Poly3 numer = G - Poly3::var(0) * P.partial(0) + Poly3::var(1) * P.partial(1);
    numer = numer.truncate(max_degree);

    // (1 + P_z)^{-1} as a truncated geometric series
    Poly3 pz = P.partial(2).truncate(max_degree);
    Poly3 inv = Poly3::constant(1.0);
    Poly3 pw = Poly3::constant(1.0);
    for (int k = 1; k <= max_degree; ++k) {
        pw = (pw * pz * -1.0).truncate(max_degree);
        if (pw.empty()) break;
        inv += pw;
    }
    return (numer * inv).truncate(max_degree);
}

}  // namespace

QuasiLinearField3 push_forward(const QuasiLinearField3& x, const CoordinateChange& c,
                               int max_degree) {
    if (max_degree > kMaxNormalFormDegree) throw DegreeOverflow("degree above the cap");
    Poly3 rhs = transform_rhs(x.sigma, x.F, c.P, max_degree);
    QuasiLinearField3 out = x;
    out.F = rhs + Poly3::var(2) * x.sigma;  // strip the linear -sigma z back off
    // drop floating dust on the removed linear term
    Poly3 cleaned;
    for (const auto& [e, v] : out.F.coeffs()) {
        if (e[0] + e[1] + e[2] < 2 && std::fabs(v) < 1e-12) continue;
        cleaned.add(e, v);
    }
    out.F = cleaned;
    return out;
}

CoordinateChange CoordinateChange::then(const CoordinateChange& next, int max_degree) const {
    // y = z + P(u,v,z), z = w + Q(u,v,w)  =>  y = w + Q + P(u,v,w+Q)
    Poly3 w_plus_q = Poly3::var(2) + next.P;
    CoordinateChange out;
    out.P = (next.P + P.subst(2, w_plus_q)).truncate(max_degree);
    return out;
}

CoordinateChange CoordinateChange::inverse(int max_degree) const {
    // z = y - P(u,v,z) iterated to the truncation order
    Poly3 y = Poly3::var(2);
    Poly3 Q;  // z = y + Q(u,v,y)
    for (int it = 0; it <= max_degree; ++it) {
        Poly3 z_of_y = y + Q;
        Q = (P.subst(2, z_of_y) * -1.0).truncate(max_degree);
    }
    CoordinateChange out;
    out.P = Q;
    return out;
}

std::pair<ResonantNormalForm, CoordinateChange> normalize(const QuasiLinearField3& x, int K) {
    if (K > kMaxNormalFormDegree) throw DegreeOverflow("K above the cap");
    if (K < 2) throw ParamError("normalize: K >= 2 required");
    x.validate();

    QuasiLinearField3 cur = x;
    CoordinateChange total;
    for (int d = 2; d <= K; ++d) {
        Poly3 Pd;
        for (const auto& [e, coeff] : cur.F.coeffs()) {
            if (e[0] + e[1] + e[2] != d) continue;
            ResonanceDivisor div = resonance_divisor(e[0], e[1], e[2], x.sigma0);
            if (div.is_zero()) continue;
            // the change coefficient a transforms c -> c - a * (i - j - sigma (l-1))
            double denom = (e[0] - e[1]) - cur.sigma * (e[2] - 1);
            if (std::fabs(denom) < 1e-9)
                throw ResonanceError("near-resonant divisor at the working sigma");
            Pd.add(e, coeff / denom);
        }
        if (!Pd.empty()) {
            CoordinateChange step;
            step.P = Pd;
            cur = push_forward(cur, step, K);
            total = total.then(step, K);
        }
    }

    ResonantNormalForm nf;
    nf.degree = K;
    const long p = x.sigma0.p, q = x.sigma0.q;
    for (const auto& [e, coeff] : cur.F.coeffs()) {
        if (e[0] + e[1] + e[2] > K) continue;
        if (!resonance_divisor(e[0], e[1], e[2], x.sigma0).is_zero()) continue;
        if (e[2] == 1 && e[0] == e[1]) {
            nf.phi[e[0]] = -coeff;  // Ydot = -(sigma + phi(nu)) Y + ...
            continue;
        }
        if (x.sigma0.kind != SigmaClass::Kind::IrrationalLike) {
            if (e[2] == 0 && q == 1 && e[1] - e[0] == p) {
                nf.eta[e[0]] = coeff;  // v^p eta(nu)
                continue;
            }
            if (e[2] >= 1 && (e[2] - 1) % q == 0) {
                int s = (e[2] - 1) / static_cast<int>(q);
                int m = e[0] - static_cast<int>(p) * s;
                if (s >= 1 && m >= 0 && m == e[1]) {
                    nf.Phi[{m, s}] = coeff;  // Phi(nu, u^p Y^q) Y
                    continue;
                }
            }
        }
        throw ResonanceError("resonant coefficient outside the normal-form families");
    }
    return {nf, total};
}

double max_nonresonant_coeff(const QuasiLinearField3& x, int K) {
    double m = 0.0;
    for (const auto& [e, v] : x.F.coeffs()) {
        if (e[0] + e[1] + e[2] > K) continue;
        if (resonance_divisor(e[0], e[1], e[2], x.sigma0).is_zero()) continue;
        m = std::max(m, std::fabs(v));
    }
    return m;
}

}  // namespace cyclicity
