#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvsteg::cli {

// Exit codes: 0 success, 1 domain failure (capacity, no payload, corrupt
// payload, ...), 2 usage or input-parse failure. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvsteg::cli
