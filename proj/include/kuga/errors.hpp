#pragma once

#include <stdexcept>
#include <string>

namespace kuga {

enum class errc {
  invalid_input,
  data_missing,
  not_applicable,
  precondition,
  out_of_range,
  unknown_node,
  parse,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace kuga
