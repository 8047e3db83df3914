#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neoramsey::cli {

// Exit codes: 0 success (and, for verify, a valid certificate), 1 failed
// verification, 2 usage or input error, 3 search cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neoramsey::cli
