#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperspec {

// Runs the hyperspec command line on the given argument list (without the
// program name).  "-" reads stdin / writes stdout via the given streams.
// Exit codes: 0 success or verdict match/not-applicable, 1 usage or input
// error, 2 verification mismatch.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace hyperspec
