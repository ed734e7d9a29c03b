#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace splicecli {

/// Exit codes: 0 success, 1 usage or parse error, 2 invalid diagram,
/// 3 no certificate or witness applicable, 4 internal search exhausted.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace splicecli
