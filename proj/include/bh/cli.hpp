#ifndef BH_CLI_HPP_
#define BH_CLI_HPP_

#include <string>
#include <vector>

namespace bh::cli {

  struct Outcome {
    int         exit_code = 0;
    std::string out;
    std::string err;
  };

  // args excludes the program name. Exit codes: 0 success, 1 input or usage
  // error, 2 domain error (a JSON error object is written to out).
  [[nodiscard]] Outcome execute(std::vector<std::string> const& args);

}  // namespace bh::cli

#endif  // BH_CLI_HPP_
