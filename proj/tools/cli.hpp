#ifndef KONVEX_TOOLS_CLI_HPP_
#define KONVEX_TOOLS_CLI_HPP_

#include <iosfwd>  // for ostream
#include <string>  // for string
#include <vector>  // for vector

namespace konvex::cli {

  inline constexpr int exit_ok        = 0;
  inline constexpr int exit_usage     = 2;  // bad input or unsupported request
  inline constexpr int exit_violation = 3;  // a guaranteed property failed

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace konvex::cli

#endif  // KONVEX_TOOLS_CLI_HPP_
