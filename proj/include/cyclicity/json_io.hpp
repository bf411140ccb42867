#pragma once

// JSON (de)serialization for the spec and report files. Schema errors
// carry the JSON-pointer path of the offending field. Loading validates
// all structural invariants; soft invariants come back as warnings.

#include <string>
#include <vector>

#include "cyclicity/blowup.hpp"
#include "cyclicity/dulac.hpp"
#include "cyclicity/monomial.hpp"
#include "cyclicity/normal_form.hpp"

#include <json.hpp>

namespace cyclicity {

struct LeafDomain {
    double r_min = 1e-4;
    double r_max = 0.9;
    double rho_max = 0.5;
    std::vector<double> nu_list;
};

// a monomial sum plus the data the CLI needs to bound/count it
struct DisplacementSpec {
    MonomialSum sum;
    SigmaClass sigma_class;
    LeafDomain domain;
    std::vector<std::string> warnings;  // soft invariant violations at load
};

nlohmann::json to_json(const DisplacementSpec& spec);
DisplacementSpec displacement_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuadraticFamily& fam);
QuadraticFamily family_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DulacParams& p);
DulacParams dulac_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuasiLinearField3& x);
QuasiLinearField3 field3_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RootBoundCertificate& cert);

nlohmann::json to_json(const SigmaClass& s);
SigmaClass sigma_class_from_json(const nlohmann::json& j, const std::string& ptr);

}  // namespace cyclicity
