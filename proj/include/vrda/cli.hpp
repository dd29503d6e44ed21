#ifndef VRDA_CLI_HPP
#define VRDA_CLI_HPP

#include <string>
#include <vector>

namespace vrda::cli {

/// Entry point behind the vrda binary; callable in-process for tests.
/// `args` excludes the program name. Exit codes: 0 success, 1 usage or
/// configuration error, 2 IO or parse error, 3 bound violation.
int run(const std::vector<std::string>& args);

}  // namespace vrda::cli

#endif
