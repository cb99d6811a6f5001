#pragma once

// Command-line driver, separated from main() so tests can run it
// in-process against string streams.
//
// Exit codes: 0 success; 1 usage or parse error; 2 search budget
// exhausted without a certificate; 3 verification failure (including a
// class-number cross-check disagreement or a failed ell condition).

#include <iosfwd>
#include <string>
#include <vector>

namespace iwcert {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace iwcert
