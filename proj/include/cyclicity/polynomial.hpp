#pragma once

// Small sparse multivariate polynomials with double coefficients, used for
// exact field substitutions (blow-up charts, normal-form changes). Degrees
// stay tiny, so a map keyed by the exponent tuple is plenty.

#include <array>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclicity {

template <int N>
class Poly {
  public:
    using Exps = std::array<int, N>;
    using Map = std::map<Exps, double>;

    Poly() = default;

    static Poly constant(double v) {
        Poly p;
        if (v != 0.0) p.c_[Exps{}] = v;
        return p;
    }
    static Poly var(int k, int power = 1) {
        Poly p;
        Exps e{};
        e[k] = power;
        p.c_[e] = 1.0;
        return p;
    }
    static Poly monomial(double coeff, Exps e) {
        Poly p;
        if (coeff != 0.0) p.c_[e] = coeff;
        return p;
    }

    const Map& coeffs() const { return c_; }
    bool empty() const { return c_.empty(); }

    double coeff(Exps e) const {
        auto it = c_.find(e);
        return it == c_.end() ? 0.0 : it->second;
    }

    void set(Exps e, double v) {
        if (v == 0.0)
            c_.erase(e);
        else
            c_[e] = v;
    }

    void add(Exps e, double v) { set(e, coeff(e) + v); }

    Poly& operator+=(const Poly& o) {
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, v] : o.c_) add(e, -v);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator*(const Poly& o) const {
        Poly out;
        for (const auto& [e1, v1] : c_)
            for (const auto& [e2, v2] : o.c_) {
                Exps e;
                for (int k = 0; k < N; ++k) e[k] = e1[k] + e2[k];
                out.add(e, v1 * v2);
            }
        return out;
    }

    Poly operator*(double s) const {
        Poly out;
        if (s == 0.0) return out;
        for (const auto& [e, v] : c_) out.c_[e] = v * s;
        return out;
    }

    double eval(const std::array<double, N>& x) const {
        double s = 0.0;
        for (const auto& [e, v] : c_) {
            double t = v;
            for (int k = 0; k < N; ++k)
                for (int i = 0; i < e[k]; ++i) t *= x[k];
            s += t;
        }
        return s;
    }

    Poly partial(int k) const {
        Poly out;
        for (const auto& [e, v] : c_) {
            if (e[k] == 0) continue;
            Exps d = e;
            d[k] -= 1;
            out.add(d, v * e[k]);
        }
        return out;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, v] : c_) {
            (void)v;
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        }
        return d;
    }

    Poly truncate(int max_degree) const {
        Poly out;
        for (const auto& [e, v] : c_)
            if (std::accumulate(e.begin(), e.end(), 0) <= max_degree) out.c_[e] = v;
        return out;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [e, v] : c_) {
            (void)e;
            m = std::max(m, std::fabs(v));
        }
        return m;
    }

    // substitute variable k by a polynomial (degrees stay small here)
    Poly subst(int k, const Poly& repl) const {
        Poly out;
        for (const auto& [e, v] : c_) {
            Exps base = e;
            base[k] = 0;
            Poly term = Poly::monomial(v, base);
            for (int i = 0; i < e[k]; ++i) term = term * repl;
            out += term;
        }
        return out;
    }

    // exact division by the monomial with exponents `div`
    Poly divided_by_monomial(Exps div) const {
        Poly out;
        for (const auto& [e, v] : c_) {
            Exps q;
            for (int k = 0; k < N; ++k) {
                if (e[k] < div[k]) throw std::logic_error("polynomial not divisible");
                q[k] = e[k] - div[k];
            }
            out.c_[q] = v;
        }
        return out;
    }

  private:
    Map c_;
};

using Poly1 = Poly<1>;
using Poly2 = Poly<2>;
using Poly3 = Poly<3>;

}  // namespace cyclicity
