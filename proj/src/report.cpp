#include "kuga/report.hpp"

#include <sstream>

namespace kuga {

namespace {

std::string paint(const std::string& text, const char* code, bool color) {
  if (!color) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_word(bool pass, bool color) {
  return pass ? paint("PASS", "32", color) : paint("FAIL", "31", color);
}

} // namespace

std::string render_certificate(const Certificate& cert, const FamilyDescription& family,
                               bool color) {
  std::ostringstream out;
  const FactorProfile& profile = family.profile;
  out << "profile: dims=(";
  for (std::size_t i = 0; i < profile.dims.size(); ++i)
    out << (i ? "," : "") << profile.dims[i];
  out << ") types=(";
  for (std::size_t i = 0; i < profile.types.size(); ++i)
    out << (i ? "," : "") << factor_type_char(profile.types[i]);
  out << ")\n";
  auto meta = family.metadata.find("name");
  if (meta != family.metadata.end()) out << "family: " << meta->second << "\n";
  out << "\n";

  for (std::size_t i = 0; i < cert.summands.size(); ++i) {
    const SummandCertificate& s = cert.summands[i];
    out << "summand " << i + 1;
    if (!s.label.empty()) out << " [" << s.label << "]";
    out << ":\n";
    if (!s.diagnostics.empty()) {
      for (const std::string& d : s.diagnostics)
        out << "  diagnostic: " << d << "\n";
    }
    if (s.unitary) {
      out << "  unitary summand\n";
      out << "  condition 1: " << verdict_word(true, color) << " (unitary)\n";
      out << "  condition 2: " << cond2_status_str(s.cond2) << "\n";
      continue;
    }
    if (s.defect) out << "  arakelov defect: " << rat_str(*s.defect) << "\n";
    out << "  condition 1: " << verdict_word(s.cond1, color) << "\n";
    if (s.purity_index)
      out << "  purity: factor " << *s.purity_index + 1 << " (type "
          << factor_type_char(*s.purity_type) << ")\n";
    if (s.bound) out << "  length bound: " << rat_str(*s.bound) << "\n";
    if (s.observed_length) out << "  observed length: " << *s.observed_length << "\n";
    if (s.cond2 == Cond2Status::pass || s.cond2 == Cond2Status::fail)
      out << "  condition 2: " << verdict_word(s.cond2 == Cond2Status::pass, color) << "\n";
    else
      out << "  condition 2: " << cond2_status_str(s.cond2) << "\n";
    for (const std::string& n : s.notes) out << "    " << n << "\n";
  }

  out << "\n";
  if (cert.has_diagnostics)
    out << "overall: INCONSISTENT INPUT (see diagnostics)\n";
  else if (cert.pass())
    out << "overall: " << verdict_word(true, color) << " (conditions 1 and 2)\n";
  else {
    out << "overall: " << verdict_word(false, color);
    std::string which;
    if (!cert.cond1_all) which = "condition 1";
    if (!cert.cond2_all) which += which.empty() ? "condition 2" : " and condition 2";
    out << " (" << which << ")\n";
  }
  return out.str();
}

int certificate_exit_code(const Certificate& cert, bool strict) {
  if (cert.has_diagnostics) return strict ? 1 : 2;
  return cert.pass() ? 0 : 1;
}

} // namespace kuga
