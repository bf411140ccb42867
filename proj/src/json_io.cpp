#include "cyclicity/json_io.hpp"

#include <cmath>

namespace cyclicity {

using nlohmann::json;

namespace {

double need_number(const json& j, const std::string& ptr, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw SchemaError(ptr + "/" + key, "expected a number");
    return j[key].get<double>();
}

double opt_number(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j[key].get<double>();
}

json exp_to_json(const ExponentPair& e) {
    return json{{"lam", e.at_lambda}, {"lam0", e.at_lambda0}};
}

ExponentPair exp_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object()) throw SchemaError(ptr, "expected {lam, lam0}");
    return {need_number(j, ptr, "lam"), need_number(j, ptr, "lam0")};
}

json monomial_to_json(const GeneralMonomial& m) {
    json j{{"a", exp_to_json(m.a)}, {"b", exp_to_json(m.b)}};
    j["omegas"] = json::array();
    for (const auto& f : m.omegas)
        j["omegas"].push_back({{"gamma", exp_to_json(f.gamma)}, {"power", f.power}});
    j["omega_bigs"] = json::array();
    for (const auto& f : m.omega_bigs)
        j["omega_bigs"].push_back({{"gamma1", exp_to_json(f.gamma1)},
                                   {"gamma2", exp_to_json(f.gamma2)},
                                   {"power", f.power}});
    if (m.r0 != 1.0) j["r0"] = m.r0;
    return j;
}

GeneralMonomial monomial_from_json(const json& j, const std::string& ptr,
                                   std::vector<std::string>* warnings) {
    GeneralMonomial m;
    m.a = exp_from_json(j.at("a"), ptr + "/a");
    m.b = exp_from_json(j.at("b"), ptr + "/b");
    m.r0 = opt_number(j, "r0", 1.0);
    if (!(m.r0 > 0.0)) throw SchemaError(ptr + "/r0", "section scale must be positive");
    if (j.contains("omegas")) {
        int i = 0;
        for (const auto& f : j["omegas"]) {
            std::string fp = ptr + "/omegas/" + std::to_string(i++);
            OmegaFactor of;
            of.gamma = exp_from_json(f.at("gamma"), fp + "/gamma");
            of.power = need_number(f, fp, "power");
            if (of.gamma.at_lambda0 != 0.0)
                throw SchemaError(fp + "/gamma/lam0",
                                  "compensator parameter must vanish at lambda_0");
            m.omegas.push_back(of);
        }
    }
    if (j.contains("omega_bigs")) {
        int i = 0;
        for (const auto& f : j["omega_bigs"]) {
            std::string fp = ptr + "/omega_bigs/" + std::to_string(i++);
            OmegaBigFactor ob;
            ob.gamma1 = exp_from_json(f.at("gamma1"), fp + "/gamma1");
            ob.gamma2 = exp_from_json(f.at("gamma2"), fp + "/gamma2");
            ob.power = need_number(f, fp, "power");
            if (ob.gamma1.at_lambda0 != 0.0 || ob.gamma2.at_lambda0 != 0.0)
                throw SchemaError(fp, "compensator parameters must vanish at lambda_0");
            m.omega_bigs.push_back(ob);
        }
    }
    if (warnings) {
        const double radius = 0.5;
        auto drift = [&](const ExponentPair& e, const char* what) {
            if (std::fabs(e.at_lambda - e.at_lambda0) > radius)
                warnings->push_back(ptr + ": exponent " + what +
                                    " drifted beyond the neighborhood radius");
        };
        drift(m.a, "a");
        drift(m.b, "b");
    }
    return m;
}

const char* remainder_kind_name(RemainderClass::Kind k) {
    switch (k) {
        case RemainderClass::Kind::ExactZero: return "exact_zero";
        case RemainderClass::Kind::BigO_r_delta: return "big_o_r_delta";
        case RemainderClass::Kind::SmallO_1: return "small_o_1";
    }
    return "?";
}

}  // namespace

json to_json(const SigmaClass& s) {
    json j;
    switch (s.kind) {
        case SigmaClass::Kind::IrrationalLike:
            j["kind"] = "irrational";
            j["value"] = s.value;
            break;
        case SigmaClass::Kind::Rational:
            j["kind"] = "rational";
            j["p"] = s.p;
            j["q"] = s.q;
            break;
        case SigmaClass::Kind::Integer:
            j["kind"] = "integer";
            j["p"] = s.p;
            break;
    }
    return j;
}

SigmaClass sigma_class_from_json(const json& j, const std::string& ptr) {
    if (!j.is_object() || !j.contains("kind"))
        throw SchemaError(ptr, "expected {kind, ...}");
    std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "irrational") return SigmaClass::irrational_like(need_number(j, ptr, "value"));
        if (kind == "rational")
            return SigmaClass::rational(j.at("p").get<long>(), j.at("q").get<long>());
        if (kind == "integer") return SigmaClass::integer(j.at("p").get<long>());
    } catch (const ParamError& e) {
        throw SchemaError(ptr, e.what());
    }
    throw SchemaError(ptr + "/kind", "one of irrational|rational|integer");
}

json to_json(const DisplacementSpec& spec) {
    json j;
    j["mode"] = spec.sum.mode == MonomialSum::Mode::OneVar ? "one_var" : "two_var";
    j["sigma_class"] = to_json(spec.sigma_class);
    j["terms"] = json::array();
    for (const auto& t : spec.sum.terms) {
        json jt = monomial_to_json(t.monomial);
        jt["coeff"] = t.coeff;
        json rem{{"kind", remainder_kind_name(t.remainder.kind)}};
        if (t.remainder.kind == RemainderClass::Kind::BigO_r_delta)
            rem["delta"] = t.remainder.delta;
        if (t.concrete) {
            json cc = json::array();
            for (const auto& [c, m] : t.concrete->terms) {
                json jm = monomial_to_json(m);
                jm["coeff"] = c;
                cc.push_back(jm);
            }
            rem["concrete"] = cc;
        }
        jt["remainder"] = rem;
        j["terms"].push_back(jt);
    }
    j["domain"] = {{"r_min", spec.domain.r_min},
                   {"r_max", spec.domain.r_max},
                   {"rho_max", spec.domain.rho_max},
                   {"nu_list", spec.domain.nu_list}};
    return j;
}

DisplacementSpec displacement_from_json(const json& j) {
    DisplacementSpec spec;
    std::string mode = j.value("mode", "two_var");
    if (mode == "one_var")
        spec.sum.mode = MonomialSum::Mode::OneVar;
    else if (mode == "two_var")
        spec.sum.mode = MonomialSum::Mode::TwoVar;
    else
        throw SchemaError("/mode", "one of one_var|two_var");
    spec.sigma_class = sigma_class_from_json(j.at("sigma_class"), "/sigma_class");

    if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty())
        throw SchemaError("/terms", "expected a nonempty array");
    int i = 0;
    for (const auto& jt : j["terms"]) {
        std::string ptr = "/terms/" + std::to_string(i++);
        Term t;
        t.coeff = need_number(jt, ptr, "coeff");
        t.monomial = monomial_from_json(jt, ptr, &spec.warnings);
        if (jt.contains("remainder")) {
            const json& rem = jt["remainder"];
            std::string kind = rem.value("kind", "exact_zero");
            if (kind == "exact_zero") {
                t.remainder = RemainderClass::exact_zero();
            } else if (kind == "big_o_r_delta") {
                double delta = need_number(rem, ptr + "/remainder", "delta");
                if (!(delta > 0.0))
                    throw SchemaError(ptr + "/remainder/delta", "delta must be positive");
                t.remainder = RemainderClass::big_o(delta);
            } else if (kind == "small_o_1") {
                t.remainder = RemainderClass::small_o();
            } else {
                throw SchemaError(ptr + "/remainder/kind",
                                  "one of exact_zero|big_o_r_delta|small_o_1");
            }
            if (rem.contains("concrete")) {
                ConcreteRemainder cc;
                int k = 0;
                for (const auto& jm : rem["concrete"]) {
                    std::string cp = ptr + "/remainder/concrete/" + std::to_string(k++);
                    double c = need_number(jm, cp, "coeff");
                    cc.terms.emplace_back(c, monomial_from_json(jm, cp, nullptr));
                }
                if (!cc.belongs_to(t.remainder))
                    throw SchemaError(ptr + "/remainder/concrete",
                                      "concrete part does not belong to the declared class");
                t.concrete = std::move(cc);
            }
        }
        if (spec.sum.mode == MonomialSum::Mode::OneVar &&
            (t.monomial.b.at_lambda != 0.0 || t.monomial.b.at_lambda0 != 0.0))
            throw SchemaError(ptr + "/b", "one_var mode requires b = 0");
        spec.sum.terms.push_back(std::move(t));
    }

    if (j.contains("domain")) {
        const json& d = j["domain"];
        spec.domain.r_min = opt_number(d, "r_min", spec.domain.r_min);
        spec.domain.r_max = opt_number(d, "r_max", spec.domain.r_max);
        spec.domain.rho_max = opt_number(d, "rho_max", spec.domain.rho_max);
        if (d.contains("nu_list"))
            spec.domain.nu_list = d["nu_list"].get<std::vector<double>>();
        if (!(spec.domain.r_min > 0.0 && spec.domain.r_min < spec.domain.r_max))
            throw SchemaError("/domain", "need 0 < r_min < r_max");
    }
    return spec;
}

json to_json(const QuadraticFamily& fam) {
    const char* v = nullptr;
    switch (fam.variant) {
        case QuadraticFamily::Variant::Inf: v = "Inf"; break;
        case QuadraticFamily::Variant::Unfold: v = "Unfold"; break;
        case QuadraticFamily::Variant::UnfoldB1: v = "UnfoldB1"; break;
        case QuadraticFamily::Variant::UnfoldBis: v = "UnfoldBis"; break;
    }
    return json{{"variant", v},
                {"B", fam.B},
                {"mu", {fam.mu0, fam.mu2, fam.mu3, fam.mu4, fam.mu5}}};
}

QuadraticFamily family_from_json(const json& j) {
    QuadraticFamily fam;
    std::string v = j.value("variant", "Unfold");
    if (v == "Inf")
        fam.variant = QuadraticFamily::Variant::Inf;
    else if (v == "Unfold")
        fam.variant = QuadraticFamily::Variant::Unfold;
    else if (v == "UnfoldB1")
        fam.variant = QuadraticFamily::Variant::UnfoldB1;
    else if (v == "UnfoldBis")
        fam.variant = QuadraticFamily::Variant::UnfoldBis;
    else
        throw SchemaError("/variant", "one of Inf|Unfold|UnfoldB1|UnfoldBis");
    fam.B = need_number(j, "", "B");
    if (j.contains("mu")) {
        auto mu = j["mu"].get<std::vector<double>>();
        if (mu.size() != 5) throw SchemaError("/mu", "expected [mu0, mu2, mu3, mu4, mu5]");
        fam.mu0 = mu[0];
        fam.mu2 = mu[1];
        fam.mu3 = mu[2];
        fam.mu4 = mu[3];
        fam.mu5 = mu[4];
    }
    try {
        fam.validate();
    } catch (const ParamError& e) {
        throw SchemaError("/mu", e.what());
    }
    return fam;
}

json to_json(const DulacParams& p) {
    json jphi = json::object();
    for (const auto& [e, v] : p.Phi.coeffs())
        jphi[std::to_string(e[0]) + "," + std::to_string(e[1])] = v;
    return json{{"sigma_class", to_json(p.sigma_class)},
                {"sigma_bar", p.sigma_bar},
                {"alpha", p.alpha},
                {"eta", p.eta},
                {"r0", p.r0},
                {"rho0", p.rho0},
                {"Y0", p.Y0},
                {"Phi", jphi}};
}

DulacParams dulac_from_json(const json& j) {
    DulacParams p;
    p.sigma_class = sigma_class_from_json(j.at("sigma_class"), "/sigma_class");
    p.sigma_bar = need_number(j, "", "sigma_bar");
    p.alpha = opt_number(j, "alpha", p.sigma_bar - p.sigma_class.value);
    p.eta = opt_number(j, "eta", 0.0);
    p.r0 = opt_number(j, "r0", 1.0);
    p.rho0 = opt_number(j, "rho0", 1.0);
    p.Y0 = opt_number(j, "Y0", 0.0);
    if (j.contains("Phi")) {
        for (const auto& [key, val] : j["Phi"].items()) {
            int m = 0, s = 0;
            if (std::sscanf(key.c_str(), "%d,%d", &m, &s) != 2 || m < 0 || s < 1)
                throw SchemaError("/Phi/" + key, "expected keys m,s with s >= 1");
            p.Phi.add({m, s}, val.get<double>());
        }
    }
    try {
        p.validate();
    } catch (const ParamError& e) {
        throw SchemaError("", e.what());
    }
    return p;
}

json to_json(const QuasiLinearField3& x) {
    json jf = json::object();
    for (const auto& [e, v] : x.F.coeffs())
        jf[std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2])] = v;
    return json{{"sigma", x.sigma}, {"sigma0", to_json(x.sigma0)}, {"F", jf}};
}

QuasiLinearField3 field3_from_json(const json& j) {
    QuasiLinearField3 x;
    x.sigma = need_number(j, "", "sigma");
    x.sigma0 = sigma_class_from_json(j.at("sigma0"), "/sigma0");
    if (j.contains("F")) {
        for (const auto& [key, val] : j["F"].items()) {
            int a = 0, b = 0, c = 0;
            if (std::sscanf(key.c_str(), "%d,%d,%d", &a, &b, &c) != 3 || a < 0 || b < 0 || c < 0)
                throw SchemaError("/F/" + key, "expected keys i,j,l");
            x.F.add({a, b, c}, val.get<double>());
        }
    }
    try {
        x.validate();
    } catch (const ParamError& e) {
        throw SchemaError("/F", e.what());
    }
    return x;
}

json to_json(const RootBoundCertificate& cert) {
    json steps = json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"divided_by", monomial_to_json(s.divided_by)},
                         {"divisor_value", s.divisor_value},
                         {"remaining_terms", s.remaining_terms}});
    return json{{"theorem", to_string(cert.theorem)}, {"bound", cert.bound}, {"steps", steps}};
}

}  // namespace cyclicity
