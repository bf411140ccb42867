// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run the same seeded batteries as the `suite`
// subcommand, plus the wall-clock and byte-identity contracts.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "cyclicity/suite.hpp"

using namespace cyclicity;

namespace {

struct Criterion {
    std::string label;
    bool pass = true;
    std::string detail;
};

bool all_pass(const std::vector<CheckRecord>& checks, std::string& detail) {
    bool ok = true;
    for (const auto& c : checks) {
        if (!c.pass) {
            ok = false;
            detail += " [" + c.name + " computed=" + std::to_string(c.computed) + "]";
        }
    }
    return ok;
}

}  // namespace

int main() {
    SuiteConfig cfg;
    cfg.seed = 42;
    std::vector<Criterion> results;

    {
        Criterion c{"criterion 1: bound soundness sweep (500 sums x 5 leaves, < 60 s)"};
        auto t0 = std::chrono::steady_clock::now();
        c.pass = all_pass(check_bound_soundness(cfg), c.detail);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs >= 60.0) {
            c.pass = false;
            c.detail += " [runtime " + std::to_string(secs) + " s]";
        }
        results.push_back(c);
    }
    {
        Criterion c{"criterion 2: boundary templates (counts <= 3 / <= 2, zero flag)"};
        c.pass = all_pass(check_boundary_templates(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 3: compensator suite (Lie FD, kappa bounds, branches)"};
        c.pass = all_pass(check_compensators(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 4: normal form (non-resonant residual <= 1e-10, eta)"};
        c.pass = all_pass(check_normal_form(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 5: Dulac closed form vs integration"};
        c.pass = all_pass(check_dulac(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 6: Table-1 eigenvalues and exact foliation invariance"};
        c.pass = all_pass(check_blowup_eigenvalues(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 7: invariant parabola / line defects vanish"};
        c.pass = all_pass(check_invariant_curves(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 8: verification integrals (Melnikov, divergence, 2F1, I3, S'')"};
        c.pass = all_pass(check_integrals(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 9: center consistency of the composed displacement"};
        c.pass = all_pass(check_center_consistency(cfg), c.detail);
        results.push_back(c);
    }
    {
        Criterion c{"criterion 10: suite determinism (byte-identical reports)"};
        std::string a = report_to_json_string(run_suite(cfg));
        std::string b = report_to_json_string(run_suite(cfg));
        c.pass = (a == b) && !a.empty();
        if (!c.pass) c.detail = " [reports differ]";
        results.push_back(c);
    }

    int failures = 0;
    for (const auto& c : results) {
        std::printf("[%s] %s%s\n", c.pass ? "PASS" : "FAIL", c.label.c_str(),
                    c.detail.c_str());
        if (!c.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
