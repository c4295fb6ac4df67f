#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cnum::cli {

// Exit codes: 0 success, 1 law suite failure, 2 lex/parse error,
// 3 evaluation error. CLI11 usage errors keep CLI11's own codes.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cnum::cli
