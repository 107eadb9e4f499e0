#pragma once

#include <iosfwd>

namespace cmperiods {

/// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or domain
/// error, 3 precision failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmperiods
