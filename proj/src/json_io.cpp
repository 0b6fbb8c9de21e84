#include "kuga/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kuga {

using nlohmann::json;

namespace {

// Collects every violation before failing, so a malformed file reports all
// of its problems in one pass.
class SchemaErrors {
public:
  void add(const std::string& path, const std::string& what) {
    errors_.push_back(path + ": " + what);
  }
  bool ok() const { return errors_.empty(); }
  void raise_if_any() const {
    if (errors_.empty()) return;
    std::string joined = "schema violations:";
    for (const std::string& e : errors_) joined += "\n  " + e;
    fail(errc::parse, joined);
  }

private:
  std::vector<std::string> errors_;
};

Rat rat_from_json(const json& j, const std::string& path, SchemaErrors& errs) {
  try {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    errs.add(path, e.what());
    return Rat(0);
  }
  errs.add(path, "expected a rational (\"p/q\" string or integer)");
  return Rat(0);
}

json rat_to_json(const Rat& q) { return rat_str(q); }

void check_schema_version(const json& j, SchemaErrors& errs) {
  if (!j.contains("schema_version")) {
    errs.add("schema_version", "missing");
    return;
  }
  if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != 1)
    errs.add("schema_version", "unsupported version, expected 1");
}

long long_at(const json& j, const std::string& key, const std::string& path, SchemaErrors& errs,
             long fallback = 0) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    errs.add(path + "." + key, "expected an integer");
    return fallback;
  }
  return static_cast<long>(j[key].get<long long>());
}

[[noreturn]] void syntax_error_with_position(const std::string& text,
                                             const json::parse_error& e) {
  std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  fail(errc::parse, "syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(col) + ": " + e.what());
}

FactorProfile profile_from_json(const json& j, SchemaErrors& errs) {
  FactorProfile profile;
  if (!j.is_object()) {
    errs.add("profile", "expected an object");
    return profile;
  }
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
    errs.add("profile.dims", "expected a nonempty array of positive integers");
  } else {
    for (std::size_t i = 0; i < j["dims"].size(); ++i) {
      const json& d = j["dims"][i];
      if (!d.is_number_integer() || d.get<long long>() < 1)
        errs.add("profile.dims[" + std::to_string(i) + "]", "expected a positive integer");
      else
        profile.dims.push_back(d.get<int>());
    }
  }
  if (!j.contains("types") || !j["types"].is_array()) {
    errs.add("profile.types", "expected an array of \"A\"/\"B\"/\"C\"");
  } else {
    for (std::size_t i = 0; i < j["types"].size(); ++i) {
      const json& t = j["types"][i];
      std::string s = t.is_string() ? t.get<std::string>() : "";
      if (s.size() != 1 || (s[0] != 'A' && s[0] != 'B' && s[0] != 'C'))
        errs.add("profile.types[" + std::to_string(i) + "]", "expected \"A\", \"B\" or \"C\"");
      else
        profile.types.push_back(factor_type_from_char(s[0]));
    }
  }
  if (j.contains("c2_ratios")) {
    if (!j["c2_ratios"].is_object()) {
      errs.add("profile.c2_ratios", "expected an object keyed by 1-based factor index");
    } else {
      for (const auto& [key, val] : j["c2_ratios"].items()) {
        int idx = 0;
        try {
          idx = std::stoi(key);
        } catch (...) {
          errs.add("profile.c2_ratios." + key, "key must be a 1-based factor index");
          continue;
        }
        profile.c2_ratios[idx - 1] = rat_from_json(val, "profile.c2_ratios." + key, errs);
      }
    }
  }
  if (errs.ok()) {
    try {
      profile.validate();
    } catch (const Error& e) {
      errs.add("profile", e.what());
    }
  }
  return profile;
}

HodgePiece piece_from_json(const json& j, const std::string& path, SchemaErrors& errs) {
  HodgePiece piece;
  if (!j.is_object()) {
    errs.add(path, "expected an object with rank and c1");
    return piece;
  }
  piece.rank = static_cast<int>(long_at(j, "rank", path, errs));
  if (!j.contains("c1") || !j["c1"].is_array()) {
    errs.add(path + ".c1", "expected an array of rationals");
  } else {
    for (std::size_t i = 0; i < j["c1"].size(); ++i)
      piece.c1.coeffs.push_back(
          rat_from_json(j["c1"][i], path + ".c1[" + std::to_string(i) + "]", errs));
  }
  return piece;
}

HiggsData higgs_from_json(const json& j, const std::string& path, SchemaErrors& errs) {
  HiggsData v;
  if (!j.is_object()) {
    errs.add(path, "expected an object");
    return v;
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) errs.add(path + ".label", "expected a string");
    else v.label = j["label"].get<std::string>();
  }
  if (!j.contains("p10") || !j.contains("p01")) {
    errs.add(path, "missing p10/p01 Hodge pieces");
  } else {
    v.p10 = piece_from_json(j["p10"], path + ".p10", errs);
    v.p01 = piece_from_json(j["p01"], path + ".p01", errs);
  }
  if (!j.contains("support") || !j["support"].is_array()) {
    errs.add(path + ".support", "expected an array of 1-based factor indices");
  } else {
    for (std::size_t i = 0; i < j["support"].size(); ++i) {
      const json& s = j["support"][i];
      if (!s.is_number_integer())
        errs.add(path + ".support[" + std::to_string(i) + "]", "expected an integer");
      else
        v.support.push_back(s.get<int>() - 1);
    }
  }
  if (!j.contains("unitary") || !j["unitary"].is_boolean())
    errs.add(path + ".unitary", "expected a boolean");
  else
    v.unitary = j["unitary"].get<bool>();
  if (j.contains("observed_length")) {
    if (!j["observed_length"].is_number_integer())
      errs.add(path + ".observed_length", "expected an integer");
    else
      v.observed_length = static_cast<long>(j["observed_length"].get<long long>());
  }
  return v;
}

} // namespace

FamilyDescription family_from_json(const json& j) {
  SchemaErrors errs;
  FamilyDescription family;
  if (!j.is_object()) fail(errc::parse, "top level: expected an object");
  check_schema_version(j, errs);
  if (!j.contains("profile")) errs.add("profile", "missing");
  else family.profile = profile_from_json(j["profile"], errs);
  if (!j.contains("summands") || !j["summands"].is_array()) {
    errs.add("summands", "expected an array");
  } else {
    for (std::size_t i = 0; i < j["summands"].size(); ++i)
      family.summands.push_back(
          higgs_from_json(j["summands"][i], "summands[" + std::to_string(i) + "]", errs));
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) {
      errs.add("metadata", "expected an object of strings");
    } else {
      for (const auto& [key, val] : j["metadata"].items()) {
        if (!val.is_string()) errs.add("metadata." + key, "expected a string");
        else family.metadata[key] = val.get<std::string>();
      }
    }
  }
  errs.raise_if_any();
  return family;
}

FamilyDescription family_from_json_text(const std::string& text) {
  try {
    return family_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    syntax_error_with_position(text, e);
  }
}

json profile_to_json(const FactorProfile& profile) {
  json j;
  j["dims"] = profile.dims;
  json types = json::array();
  for (FactorType t : profile.types) types.push_back(std::string(1, factor_type_char(t)));
  j["types"] = std::move(types);
  if (!profile.c2_ratios.empty()) {
    json ratios = json::object();
    for (const auto& [i, q] : profile.c2_ratios) ratios[std::to_string(i + 1)] = rat_to_json(q);
    j["c2_ratios"] = std::move(ratios);
  }
  return j;
}

json higgs_to_json(const HiggsData& v) {
  json j;
  if (!v.label.empty()) j["label"] = v.label;
  auto piece = [](const HodgePiece& p) {
    json pj;
    pj["rank"] = p.rank;
    json c1 = json::array();
    for (const Rat& a : p.c1.coeffs) c1.push_back(rat_to_json(a));
    pj["c1"] = std::move(c1);
    return pj;
  };
  j["p10"] = piece(v.p10);
  j["p01"] = piece(v.p01);
  json support = json::array();
  for (int i : v.support) support.push_back(i + 1);
  j["support"] = std::move(support);
  j["unitary"] = v.unitary;
  if (v.observed_length) j["observed_length"] = *v.observed_length;
  return j;
}

json family_to_json(const FamilyDescription& family) {
  json j;
  j["schema_version"] = 1;
  j["profile"] = profile_to_json(family.profile);
  json summands = json::array();
  for (const HiggsData& v : family.summands) summands.push_back(higgs_to_json(v));
  j["summands"] = std::move(summands);
  if (!family.metadata.empty()) {
    json meta = json::object();
    for (const auto& [k, v] : family.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j;
}

SubobjectLattice lattice_from_json(const json& j) {
  SchemaErrors errs;
  if (!j.is_object()) fail(errc::parse, "top level: expected an object");
  check_schema_version(j, errs);
  std::vector<LatticeNode> nodes;
  if (!j.contains("nodes") || !j["nodes"].is_array() || j["nodes"].empty()) {
    errs.add("nodes", "expected a nonempty array");
  } else {
    for (std::size_t i = 0; i < j["nodes"].size(); ++i) {
      const json& nj = j["nodes"][i];
      std::string path = "nodes[" + std::to_string(i) + "]";
      LatticeNode n;
      if (!nj.is_object()) {
        errs.add(path, "expected an object");
        continue;
      }
      n.id = static_cast<int>(long_at(nj, "id", path, errs));
      n.rank = static_cast<int>(long_at(nj, "rank", path, errs));
      if (!nj.contains("degrees") || !nj["degrees"].is_array()) {
        errs.add(path + ".degrees", "expected an array of rationals");
      } else {
        for (std::size_t d = 0; d < nj["degrees"].size(); ++d)
          n.degrees.push_back(
              rat_from_json(nj["degrees"][d], path + ".degrees[" + std::to_string(d) + "]", errs));
      }
      nodes.push_back(std::move(n));
    }
  }
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) {
      errs.add("edges", "expected an array of [sub, super] pairs");
    } else {
      for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const json& ej = j["edges"][i];
        if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer() ||
            !ej[1].is_number_integer()) {
          errs.add("edges[" + std::to_string(i) + "]", "expected [sub, super] integers");
          continue;
        }
        edges.emplace_back(ej[0].get<int>(), ej[1].get<int>());
      }
    }
  }
  int top = 0;
  if (!j.contains("top") || !j["top"].is_number_integer()) errs.add("top", "expected a node id");
  else top = j["top"].get<int>();
  auto matrix = [&](const char* key) {
    std::vector<std::vector<Rat>> rows;
    if (!j.contains(key)) return rows;
    if (!j[key].is_array()) {
      errs.add(key, "expected an array of rational rows");
      return rows;
    }
    for (std::size_t r = 0; r < j[key].size(); ++r) {
      const json& rj = j[key][r];
      std::string path = std::string(key) + "[" + std::to_string(r) + "]";
      if (!rj.is_array()) {
        errs.add(path, "expected an array of rationals");
        continue;
      }
      std::vector<Rat> row;
      for (std::size_t c = 0; c < rj.size(); ++c)
        row.push_back(rat_from_json(rj[c], path + "[" + std::to_string(c) + "]", errs));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  std::vector<std::vector<Rat>> functionals = matrix("functionals");
  std::optional<PerturbationSpec> perturbation;
  if (j.contains("perturbation")) perturbation = PerturbationSpec{matrix("perturbation")};
  errs.raise_if_any();
  try {
    return SubobjectLattice::build(std::move(nodes), std::move(edges), top,
                                   std::move(functionals), std::move(perturbation));
  } catch (const Error& e) {
    fail(errc::parse, std::string("lattice: ") + e.what());
  }
}

SubobjectLattice lattice_from_json_text(const std::string& text) {
  try {
    return lattice_from_json(json::parse(text));
  } catch (const json::parse_error& e) {
    syntax_error_with_position(text, e);
  }
}

json lattice_to_json(const SubobjectLattice& lattice) {
  json j;
  j["schema_version"] = 1;
  json nodes = json::array();
  for (const LatticeNode& n : lattice.nodes()) {
    json nj;
    nj["id"] = n.id;
    nj["rank"] = n.rank;
    json degs = json::array();
    for (const Rat& d : n.degrees) degs.push_back(rat_to_json(d));
    nj["degrees"] = std::move(degs);
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [sub, super] : lattice.edges()) edges.push_back(json::array({sub, super}));
  j["edges"] = std::move(edges);
  j["top"] = lattice.top();
  json functionals = json::array();
  for (const auto& row : lattice.functionals()) {
    json rj = json::array();
    for (const Rat& a : row) rj.push_back(rat_to_json(a));
    functionals.push_back(std::move(rj));
  }
  j["functionals"] = std::move(functionals);
  json perturbation = json::array();
  for (const auto& row : lattice.default_perturbation().rows) {
    json rj = json::array();
    for (const Rat& a : row) rj.push_back(rat_to_json(a));
    perturbation.push_back(std::move(rj));
  }
  j["perturbation"] = std::move(perturbation);
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["schema_version"] = 1;
  json summands = json::array();
  for (const SummandCertificate& s : cert.summands) {
    json sj;
    if (!s.label.empty()) sj["label"] = s.label;
    sj["unitary"] = s.unitary;
    if (s.defect) sj["arakelov_defect"] = rat_to_json(*s.defect);
    if (s.purity_index) {
      sj["purity_index"] = *s.purity_index + 1;
      sj["purity_type"] = std::string(1, factor_type_char(*s.purity_type));
    }
    sj["condition1"] = s.cond1;
    sj["condition2"] = cond2_status_str(s.cond2);
    sj["condition2_pass"] = s.cond2_pass();
    if (s.bound) sj["length_bound"] = rat_to_json(*s.bound);
    if (s.observed_length) sj["observed_length"] = *s.observed_length;
    if (!s.notes.empty()) sj["notes"] = s.notes;
    if (!s.diagnostics.empty()) sj["diagnostics"] = s.diagnostics;
    sj["pass"] = s.pass();
    summands.push_back(std::move(sj));
  }
  j["summands"] = std::move(summands);
  j["condition1_all"] = cert.cond1_all;
  j["condition2_all"] = cert.cond2_all;
  j["has_diagnostics"] = cert.has_diagnostics;
  j["pass"] = cert.pass();
  return j;
}

json filtration_to_json(const FiltrationResult& result) {
  json j;
  j["schema_version"] = 1;
  j["kind"] = result.kind == FiltrationKind::harder_narasimhan ? "harder-narasimhan"
                                                               : "weak-jordan-hoelder";
  j["chain"] = result.chain;
  json slopes = json::array();
  for (const SlopePolynomial& q : result.quotient_slopes) {
    json coeffs = json::array();
    for (const Rat& c : q.coeffs()) coeffs.push_back(rat_to_json(c));
    slopes.push_back(std::move(coeffs));
  }
  j["quotient_slopes"] = std::move(slopes);
  j["epsilon0"] = rat_to_json(result.epsilon0);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace kuga
