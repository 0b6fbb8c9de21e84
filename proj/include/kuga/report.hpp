#pragma once

#include <string>

#include "kuga/higgs.hpp"
#include "kuga/json_io.hpp"

namespace kuga {

// Plain-text certificate: one block per summand in input order, then the
// overall verdict. Color adds ANSI highlighting to the verdict words only.
std::string render_certificate(const Certificate& cert, const FamilyDescription& family,
                               bool color);

// Exit status contract: 0 pass, 1 fail, 2 inconsistent input.
// With strict=true diagnostics count as failures.
int certificate_exit_code(const Certificate& cert, bool strict);

} // namespace kuga
