#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigirth::cli {

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Exit codes: 0 success / positive answer, 1 negative answer, 2 usage or
/// data error. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, Streams io);

}  // namespace trigirth::cli
