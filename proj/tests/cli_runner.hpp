#pragma once

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace kuga_test {

struct CliResult {
  int exit_code = -1;
  std::string output; // stdout only
};

inline CliResult run_cli(const std::string& args) {
  std::string cmd = "KUGA_CERT_COLOR=never " KUGA_CERT_BIN " " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::string fixture(const std::string& name) {
  return std::string(KUGA_FIXTURE_DIR) + "/" + name;
}

} // namespace kuga_test
