#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rebel::cli {

// Exit codes besides 0 and CLI11's own parse codes.
inline constexpr int kInputError = 1;
inline constexpr int kGuaranteeFailed = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rebel::cli
