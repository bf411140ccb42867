#pragma once

// The deterministic check battery behind the `suite` subcommand and the
// acceptance run: seeded property sweeps plus the desk-scale numeric
// identities. Every tolerance is pinned here.

#include <cstdint>
#include <string>
#include <vector>

namespace cyclicity {

struct CheckRecord {
    std::string name;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    int bound_instances = 500;     // randomized derivation-division sweeps
    int leaves_per_instance = 5;   // leaves scanned per instance
    int template_instances = 100;  // per boundary shape
    int normal_form_fields = 50;   // per sigma class kind
    int grid = 4096;               // leaf scan resolution
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    bool all_pass = false;
};

// individual criterion batteries (names match the report)
std::vector<CheckRecord> check_bound_soundness(const SuiteConfig& cfg);
std::vector<CheckRecord> check_boundary_templates(const SuiteConfig& cfg);
std::vector<CheckRecord> check_compensators(const SuiteConfig& cfg);
std::vector<CheckRecord> check_normal_form(const SuiteConfig& cfg);
std::vector<CheckRecord> check_dulac(const SuiteConfig& cfg);
std::vector<CheckRecord> check_blowup_eigenvalues(const SuiteConfig& cfg);
std::vector<CheckRecord> check_invariant_curves(const SuiteConfig& cfg);
std::vector<CheckRecord> check_integrals(const SuiteConfig& cfg);
std::vector<CheckRecord> check_center_consistency(const SuiteConfig& cfg);

SuiteReport run_suite(const SuiteConfig& cfg);

// deterministic serialization (used for the byte-identity contract)
std::string report_to_json_string(const SuiteReport& report);

}  // namespace cyclicity
