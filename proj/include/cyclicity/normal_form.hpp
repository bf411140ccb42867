#pragma once

// Resonant polynomial normal form for 3-D quasi-linear fields
//   udot = u, vdot = -v, ydot = -sigma y + F(u,v,y),  F = O(|.|^2),
// by order-by-order elimination of non-resonant terms. The surviving
// resonant part groups into
//   Ydot = -(sigma + phi(nu)) Y + Phi(nu, u^p Y^q) Y + v^p eta(nu),
// nu = uv, with eta = 0 unless sigma_0 is a positive integer.

#include <map>
#include <utility>
#include <vector>

#include "cyclicity/errors.hpp"
#include "cyclicity/polynomial.hpp"

namespace cyclicity {

struct SigmaClass {
    enum class Kind { IrrationalLike, Rational, Integer };
    Kind kind = Kind::IrrationalLike;
    long p = 0, q = 1;   // sigma_0 = p/q for Rational (gcd 1, q > 1), p for Integer
    double value = 0.0;  // numeric sigma_0 (caller-declared for IrrationalLike)

    static SigmaClass irrational_like(double value);
    static SigmaClass rational(long p, long q);
    static SigmaClass integer(long p);
};

// exact when the class is Rational/Integer, floating otherwise
struct ResonanceDivisor {
    bool exact;
    long num = 0, den = 1;  // exact value num/den
    double value = 0.0;

    bool is_zero(double guard = 1e-9) const {
        return exact ? num == 0 : std::fabs(value) < guard;
    }
};

// delta = i - j - sigma_0 (l - 1); a term u^i v^j y^l is resonant iff 0
ResonanceDivisor resonance_divisor(int i, int j, int l, const SigmaClass& sigma0);

// all resonant (i,j,l) with 1 <= i+j+l <= K, excluding the linear (0,0,1)
std::vector<std::array<int, 3>> resonance_set(const SigmaClass& sigma0, int K);

struct QuasiLinearField3 {
    double sigma = 1.0;
    SigmaClass sigma0;
    Poly3 F;  // ydot = -sigma y + F, variables (u, v, y); no terms below degree 2

    void validate() const;
};

struct ResonantNormalForm {
    std::map<int, double> phi;                  // phi_m nu^m, m >= 1
    std::map<std::pair<int, int>, double> Phi;  // Phi_{m,s} nu^m w^s, s >= 1
    std::map<int, double> eta;                  // eta_m nu^m (Integer class only)
    int degree = 0;

    bool eta_is_zero(double tol = 0.0) const;
};

// y = z + P(u,v,z), tangent to the identity (P has no terms below degree 2)
struct CoordinateChange {
    Poly3 P;

    CoordinateChange inverse(int max_degree) const;        // truncated series inverse
    CoordinateChange then(const CoordinateChange& next,    // composition, truncated
                          int max_degree) const;
};

inline constexpr int kMaxNormalFormDegree = 10;

// order-by-order normal form through degree K; deterministic
std::pair<ResonantNormalForm, CoordinateChange> normalize(const QuasiLinearField3& x, int K);

// the ydot component rewritten through the change, truncated at max_degree;
// the verification oracle for normalize
QuasiLinearField3 push_forward(const QuasiLinearField3& x, const CoordinateChange& c,
                               int max_degree);

// largest |coefficient| among non-resonant terms of degree <= K
double max_nonresonant_coeff(const QuasiLinearField3& x, int K);

}  // namespace cyclicity
