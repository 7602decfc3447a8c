#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ontoq::cli {

// Runs one `ontoq` invocation; args[0] is the program name.
// Exit codes: 0 success, 1 data errors (parse, cycle, unknown term),
// 2 usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontoq::cli
