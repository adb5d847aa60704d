#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace starmon::cli {

  inline constexpr char const* version = "starmon 0.1.0";

  enum ExitCode : int {
    success = 0,
    refuted = 1,
    usage   = 2,
    budget  = 3,
  };

  // args excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace starmon::cli
