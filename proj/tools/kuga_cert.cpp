#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kuga/json_io.hpp"
#include "kuga/random_lattice.hpp"
#include "kuga/repcat.hpp"
#include "kuga/report.hpp"

namespace {

using namespace kuga;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitUsage = 64;

bool use_color() {
  const char* env = std::getenv("KUGA_CERT_COLOR");
  if (env && std::string(env) == "never") return false;
  return isatty(STDOUT_FILENO) != 0;
}

enum class Format { markdown, csv };

Format parse_format(const std::string& s) {
  if (s == "md") return Format::markdown;
  if (s == "csv") return Format::csv;
  fail(errc::invalid_input, "unknown format '" + s + "' (expected md or csv)");
}

// Minimal table writer: markdown or CSV rows from the same cells.
class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }
  void print(Format format) const {
    if (format == Format::csv) {
      print_line(header_, ",");
      for (const auto& r : rows_) print_line(r, ",");
      return;
    }
    print_line(header_, " | ", "| ", " |");
    std::vector<std::string> rule(header_.size(), "---");
    print_line(rule, " | ", "| ", " |");
    for (const auto& r : rows_) print_line(r, " | ", "| ", " |");
  }

private:
  static void print_line(const std::vector<std::string>& cells, const std::string& sep,
                         const std::string& lead = "", const std::string& tail = "") {
    std::cout << lead;
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? sep : "") << cells[i];
    std::cout << tail << "\n";
  }
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

int cmd_certify(const std::string& path, bool as_json, bool strict) {
  FamilyDescription family = family_from_json_text(read_file(path));
  Certificate cert = certify(family.profile, family.summands);
  if (as_json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
  } else {
    std::cout << render_certificate(cert, family, use_color());
  }
  return certificate_exit_code(cert, strict);
}

int cmd_hn(const std::string& path, bool weak, bool as_json, const std::string& eps_text,
           long random_nodes, std::uint64_t seed) {
  std::optional<SubobjectLattice> lattice;
  if (random_nodes > 0) {
    lattice = random_coherent_lattice(seed, static_cast<int>(random_nodes));
    if (!as_json) {
      std::cout << "generated lattice (seed " << seed << "):\n"
                << lattice_to_json(*lattice).dump(2) << "\n";
    }
  } else {
    if (path.empty()) fail(errc::invalid_input, "need a lattice file or --random");
    lattice = lattice_from_json_text(read_file(path));
  }

  Outcome<FiltrationResult> result = weak ? weak_jh(*lattice) : hn_filtration(*lattice);
  if (!is_ok(result)) {
    std::cerr << "diagnostic: " << diagnostic(result).message << "\n";
    return kExitInconsistent;
  }
  const FiltrationResult& f = value(result);
  if (as_json) {
    nlohmann::json j = filtration_to_json(f);
    if (random_nodes > 0) j["lattice"] = lattice_to_json(*lattice);
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  Rat eps = eps_text.empty() ? Rat(f.epsilon0 / 2) : parse_rat(eps_text);
  if (eps <= 0) fail(errc::invalid_input, "--epsilon must be positive");
  std::cout << (weak ? "weak Jordan-Hoelder filtration" : "Harder-Narasimhan filtration")
            << "\n";
  std::cout << "epsilon0: " << rat_str(f.epsilon0) << "\n";
  std::cout << "chain: 0";
  for (int id : f.chain) std::cout << " < " << id;
  std::cout << "\n";
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    std::cout << "step " << i + 1 << ": node " << f.chain[i] << ", quotient slope "
              << f.quotient_slopes[i].str() << " [at eps=" << rat_str(eps) << ": "
              << rat_str(f.quotient_slopes[i].eval(eps)) << "]\n";
  }
  return kExitPass;
}

int cmd_enumerate(const std::string& family, long p, long q, long n, Format format) {
  DomainFactor factor;
  Family fam = family_from_str(family);
  switch (fam) {
    case Family::a: factor = DomainFactor::a(static_cast<int>(p), static_cast<int>(q)); break;
    case Family::b: factor = DomainFactor::b(static_cast<int>(n)); break;
    case Family::c: factor = DomainFactor::c(static_cast<int>(n)); break;
    case Family::d_fork: factor = DomainFactor::d_fork(static_cast<int>(n)); break;
    case Family::d_end: factor = DomainFactor::d_end(static_cast<int>(n)); break;
  }
  Table table({"factor", "rep", "l", "l'", "predicted_length", "notes"});
  for (const RepEntry& e : admissible_reps(factor)) {
    std::string notes;
    if (e.dims_derived) notes = "dimensions derived, not tabulated";
    if (!e.convention.empty()) notes += (notes.empty() ? "" : "; ") + e.convention;
    table.row({factor.str(), e.label, e.l.get_str(), e.lp.get_str(),
               e.predicted_length ? e.predicted_length->get_str() : "-", notes});
  }
  table.print(format);
  return kExitPass;
}

int cmd_diophantine(long l, long sigma, Format format) {
  DiophantineSolutions sols = diophantine_solutions(l, sigma);
  if (sols.parametric) {
    std::cout << "parametric family: (l', n) = (" << l << "n, n) for every n >= 1\n";
    return kExitPass;
  }
  Table table({"l'", "n", "wedge-rank check", "verdict"});
  for (auto [lp, n] : sols.pairs) {
    std::string check = "-";
    std::string verdict = "viable";
    if (sigma > std::min(l, lp)) {
      verdict = "excluded (length above min(l, l'))";
    } else {
      for (long m = 1; m <= sigma; ++m) {
        Int need = binomial(n + m - 1, m);
        Int have = binomial(l, m) * binomial(lp, m);
        if (need > have) {
          check = need.get_str() + " > " + have.get_str();
          verdict = "excluded (rank obstruction at m = " + std::to_string(m) + ")";
          break;
        }
        check = need.get_str() + " <= " + have.get_str();
      }
    }
    table.row({std::to_string(lp), std::to_string(n), check, verdict});
  }
  table.print(format);
  return kExitPass;
}

int cmd_length(long l, long lp, long n) {
  std::cout << rat_str(length_bound(l, lp, n)) << "\n";
  return kExitPass;
}

// Feasibility of the length condition at the bound: integral, within
// min(l, l'), and no rank obstruction at or below it.
std::string bound_feasibility(long l, long lp, long n) {
  Rat bound = length_bound(l, lp, n);
  if (!is_integral(bound)) return "no (bound not an integer)";
  long cap = std::min(l, lp);
  if (bound < 1 || bound > Rat(cap)) return "no (bound outside [1, min(l, l')])";
  long b = static_cast<long>(rat_floor(bound).get_si());
  for (long m = 1; m <= b; ++m)
    if (theta_injectivity_obstruction(l, lp, n, m))
      return "no (rank obstruction at m = " + std::to_string(m) + ")";
  return "yes";
}

int cmd_low_rank(long max_l, long max_lp, long max_n, Format format) {
  Table table({"l", "l'", "n", "verdict", "length_bound", "feasible"});
  for (long l = 1; l <= max_l; ++l)
    for (long lp = l; lp <= max_lp; ++lp)
      for (long n = 1; n <= max_n; ++n)
        table.row({std::to_string(l), std::to_string(lp), std::to_string(n),
                   low_rank_verdict_str(low_rank_verdict(l, lp, n)),
                   rat_str(length_bound(l, lp, n)), bound_feasibility(l, lp, n)});
  table.print(format);
  return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slope calculus and certification for weight-one Higgs summands"};
  app.require_subcommand(1);

  std::string path, family = "a", format_text = "md", eps_text;
  bool as_json = false, strict = false, weak = false;
  long p = 1, q = 1, n = 1, l = 1, lp = 1, sigma = 1;
  long max_l = 3, max_lp = 20, max_n = 20, random_nodes = 0;
  std::uint64_t seed = 1;

  CLI::App* certify_cmd = app.add_subcommand("certify", "check a family description file");
  certify_cmd->add_option("file", path)->required();
  certify_cmd->add_flag("--json", as_json, "machine-readable certificate");
  certify_cmd->add_flag("--strict", strict, "treat diagnostics as failures");

  CLI::App* hn_cmd = app.add_subcommand("hn-filtration", "filtration of a subobject lattice");
  hn_cmd->add_option("file", path);
  hn_cmd->add_option("--epsilon", eps_text, "report slope values at this epsilon");
  hn_cmd->add_flag("--weak-jh", weak, "weak Jordan-Hoelder filtration");
  hn_cmd->add_flag("--json", as_json);
  hn_cmd->add_option("--random", random_nodes, "generate a random coherent lattice");
  hn_cmd->add_option("--seed", seed, "seed for --random");

  CLI::App* enum_cmd = app.add_subcommand("enumerate-reps", "admissible weight-one catalogue");
  enum_cmd->add_option("--family", family, "a, b, c, d_fork or d_end")->required();
  enum_cmd->add_option("--p", p);
  enum_cmd->add_option("--q", q);
  enum_cmd->add_option("--n", n);
  enum_cmd->add_option("--format", format_text, "md or csv");

  CLI::App* dio_cmd = app.add_subcommand("diophantine", "solve the length equation");
  dio_cmd->add_option("--l", l)->required();
  dio_cmd->add_option("--sigma", sigma)->required();
  dio_cmd->add_option("--format", format_text, "md or csv");

  CLI::App* len_cmd = app.add_subcommand("length", "length bound for (l, l', n)");
  len_cmd->add_option("--l", l)->required();
  len_cmd->add_option("--lp", lp)->required();
  len_cmd->add_option("--n", n)->required();

  CLI::App* lr_cmd = app.add_subcommand("low-rank-table", "length-condition status table");
  lr_cmd->add_option("--max-l", max_l);
  lr_cmd->add_option("--max-lp", max_lp);
  lr_cmd->add_option("--max-n", max_n);
  lr_cmd->add_option("--format", format_text, "md or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (certify_cmd->parsed()) return cmd_certify(path, as_json, strict);
    if (hn_cmd->parsed()) return cmd_hn(path, weak, as_json, eps_text, random_nodes, seed);
    if (enum_cmd->parsed()) return cmd_enumerate(family, p, q, n, parse_format(format_text));
    if (dio_cmd->parsed()) return cmd_diophantine(l, sigma, parse_format(format_text));
    if (len_cmd->parsed()) return cmd_length(l, lp, n);
    if (lr_cmd->parsed()) return cmd_low_rank(max_l, max_lp, max_n, parse_format(format_text));
  } catch (const kuga::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitUsage;
}
