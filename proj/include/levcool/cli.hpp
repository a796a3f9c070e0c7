#ifndef LEVCOOL_CLI_HPP
#define LEVCOOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace levcool::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_checks_failed = 1;  // selftest only
inline constexpr int exit_validation = 2;
inline constexpr int exit_numeric = 3;

// args excludes the program name. CSV goes to --out when given, otherwise to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levcool::cli

#endif  // LEVCOOL_CLI_HPP
