#ifndef WORDREP_TOOLS_CLI_HPP
#define WORDREP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/infinite.hpp"

namespace wordrep::cli {

enum ExitCode : int { kSuccess = 0, kAnalysisError = 1, kUsageError = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Builds a generator from its CLI name and a `key=value;key=value` parameter
/// string. Names: periodic (v), thue-morse, fibonacci, morphic (g, seed),
/// big-acei (n, base), optimal-binary (n, k, m, base).
GeneratorPtr make_generator(std::string_view name, std::string_view params);

}  // namespace wordrep::cli

#endif  // WORDREP_TOOLS_CLI_HPP
