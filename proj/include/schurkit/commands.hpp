#ifndef SCHURKIT_COMMANDS_HPP
#define SCHURKIT_COMMANDS_HPP

#include <stdexcept>
#include <string>

namespace schurkit {

// Malformed user input or an out-of-bounds request; maps to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CommandLimits {
  int max_n = 7;
  int max_k = 40;
};

// set_spec: sn | conj:<parts> | invk:<k> | imajk:<k> | invdes:<set> |
// uroot:<d> | caterpillars. Returns the JSON payload (sorted keys).
std::string cmd_schur_expand(const std::string& set_spec, int n, const CommandLimits& limits);

// family: invk | invdes | powerset | interval | chain | conj | uroot, with
// parameters given as a small JSON object (see docs/schemas.md).
std::string cmd_cde_check(const std::string& family, const std::string& params_json,
                          const CommandLimits& limits);

// Runs a verification suite; *failures receives the number of failed checks.
std::string cmd_verify(const std::string& suite, const CommandLimits& limits, int* failures);

// {"edges": [[a,b],...], "n": n} -> Graphviz text.
std::string cmd_tree_dot(const std::string& tree_json);

}  // namespace schurkit

#endif
