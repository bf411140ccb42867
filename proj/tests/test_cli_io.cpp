#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "cyclicity/json_io.hpp"
#include "cyclicity/suite.hpp"

using namespace cyclicity;
using nlohmann::json;

namespace {

#ifdef CLI_BINARY_PATH
int run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string write_temp(const std::string& name, const json& j) {
    std::string path = std::string("cli_io_") + name + ".json";
    std::ofstream out(path);
    out << j.dump(2);
    return path;
}
#endif

json minimal_two_term_spec() {
    return json::parse(R"({
      "mode": "two_var",
      "sigma_class": {"kind": "irrational", "value": 1.41421356},
      "terms": [
        {"coeff": -1.0, "a": {"lam": 0.0, "lam0": 0.0}, "b": {"lam": 0.0, "lam0": 0.0},
         "remainder": {"kind": "exact_zero"}},
        {"coeff": 2.0, "a": {"lam": 1.0, "lam0": 1.0}, "b": {"lam": 0.0, "lam0": 0.0},
         "remainder": {"kind": "exact_zero"}}
      ],
      "domain": {"r_min": 0.05, "r_max": 0.9, "rho_max": 0.5, "nu_list": [0.01]}
    })");
}

}  // namespace

TEST_CASE("displacement spec: parse, validate, round-trip") {
    DisplacementSpec spec = displacement_from_json(minimal_two_term_spec());
    CHECK(spec.sum.terms.size() == 2);
    CHECK(spec.warnings.empty());

    json j = to_json(spec);
    DisplacementSpec again = displacement_from_json(j);
    CHECK(to_json(again) == j);

    // gamma(lambda_0) != 0 violates the compensator-factor invariant
    json bad = minimal_two_term_spec();
    bad["terms"][1]["omegas"] = json::array(
        {{{"gamma", {{"lam", 0.1}, {"lam0", 0.1}}}, {"power", 1.0}}});
    CHECK_THROWS_AS(displacement_from_json(bad), SchemaError);
    try {
        displacement_from_json(bad);
    } catch (const SchemaError& e) {
        CHECK(e.pointer == "/terms/1/omegas/0/gamma/lam0");
    }

    // concrete part must belong to its declared class
    json mismatch = minimal_two_term_spec();
    mismatch["terms"][0]["remainder"] = {
        {"kind", "big_o_r_delta"},
        {"delta", 0.5},
        {"concrete",
         json::array({{{"coeff", 0.05},
                       {"a", {{"lam", 0.1}, {"lam0", 0.1}}},
                       {"b", {{"lam", 0.0}, {"lam0", 0.0}}}}})}};
    CHECK_THROWS_AS(displacement_from_json(mismatch), SchemaError);

    // exponent drift beyond the neighborhood radius is a warning, not an error
    json drifted = minimal_two_term_spec();
    drifted["terms"][1]["a"] = {{"lam", 1.8}, {"lam0", 1.0}};
    DisplacementSpec warned = displacement_from_json(drifted);
    CHECK(warned.warnings.size() == 1);
}

TEST_CASE("family and dulac specs round-trip") {
    json fam_j{{"variant", "Unfold"}, {"B", 1.5}, {"mu", {0.0, 0.0, 0.0, 0.0, 0.0}}};
    QuadraticFamily fam = family_from_json(fam_j);
    CHECK(fam.B == 1.5);
    CHECK(integrability_residuals(fam).graphic_label == "I14_1");
    CHECK(to_json(family_from_json(to_json(fam))) == to_json(fam));

    json dj{{"sigma_class", {{"kind", "integer"}, {"p", 1}}},
            {"sigma_bar", 1.05},
            {"eta", 0.3},
            {"r0", 0.5},
            {"rho0", 0.4},
            {"Y0", 0.2},
            {"Phi", {{"0,1", 0.01}}}};
    DulacParams p = dulac_from_json(dj);
    CHECK(p.alpha == doctest::Approx(0.05));
    CHECK(to_json(dulac_from_json(to_json(p))) == to_json(p));

    json xj{{"sigma", 1.5},
            {"sigma0", {{"kind", "rational"}, {"p", 3}, {"q", 2}}},
            {"F", {{"2,0,0", 1.0}, {"1,1,1", 0.5}}}};
    QuasiLinearField3 x = field3_from_json(xj);
    CHECK(x.F.coeff({2, 0, 0}) == 1.0);
    CHECK(to_json(field3_from_json(to_json(x))) == to_json(x));

    CHECK_THROWS_AS(family_from_json(json{{"variant", "bogus"}, {"B", 1.0}}), SchemaError);
}

TEST_CASE("suite report serialization is deterministic") {
    SuiteConfig cfg;
    cfg.seed = 7;
    // a small deterministic slice is enough for the serialization contract
    SuiteReport rep;
    rep.config = cfg;
    for (auto& c : check_compensators(cfg)) rep.checks.push_back(c);
    rep.all_pass = true;
    std::string a = report_to_json_string(rep);
    SuiteReport rep2;
    rep2.config = cfg;
    for (auto& c : check_compensators(cfg)) rep2.checks.push_back(c);
    rep2.all_pass = true;
    std::string b = report_to_json_string(rep2);
    CHECK(a == b);
    CHECK(a.find("\"seed\": 7") != std::string::npos);
}

#ifdef CLI_BINARY_PATH
TEST_CASE("exit-code contract of the binary") {
    // usage error
    CHECK(run_cli("definitely-not-a-subcommand") == 2);
    CHECK(run_cli("bound") == 2);  // missing required --spec

    // all-pass path: certificate for the minimal spec
    std::string spec = write_temp("ok", minimal_two_term_spec());
    CHECK(run_cli("bound --spec " + spec) == 0);
    CHECK(run_cli("verify-bound --spec " + spec + " --nu 0.01,0.001 --grid 512") == 0);

    // schema error in the file
    json bad = minimal_two_term_spec();
    bad["terms"] = json::array();
    std::string bad_path = write_temp("bad", bad);
    CHECK(run_cli("bound --spec " + bad_path) == 2);

    std::remove(spec.c_str());
    std::remove(bad_path.c_str());
}

TEST_CASE("compensator eval and appendix3 subcommands run clean") {
    CHECK(run_cli("compensator eval --xi 0.5 --alpha 0.1") == 0);
}
#endif
