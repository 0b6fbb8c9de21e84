#pragma once

#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "kuga/filtration.hpp"
#include "kuga/higgs.hpp"

namespace kuga {

// Top-level input for the certifier: one factor profile plus the weight-one
// summands to check against it.
struct FamilyDescription {
  FactorProfile profile;
  std::vector<HiggsData> summands;
  std::map<std::string, std::string> metadata;
};

// All file formats carry "schema_version": 1 and serialize rationals as
// "p/q" strings (integers permitted as shorthand on input). Factor indices
// are 1-based on disk. Parsing enumerates every schema violation in the
// thrown Error message instead of stopping at the first; syntax errors are
// reported with line and column.

FamilyDescription family_from_json_text(const std::string& text);
FamilyDescription family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const FamilyDescription& family);

SubobjectLattice lattice_from_json_text(const std::string& text);
SubobjectLattice lattice_from_json(const nlohmann::json& j);
nlohmann::json lattice_to_json(const SubobjectLattice& lattice);

nlohmann::json profile_to_json(const FactorProfile& profile);
nlohmann::json higgs_to_json(const HiggsData& v);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json filtration_to_json(const FiltrationResult& result);

std::string read_file(const std::string& path);

} // namespace kuga
