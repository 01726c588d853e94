#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsft::cli {

/// Process exit statuses.
namespace exit_code {
inline constexpr int irreducible = 0;
inline constexpr int not_irreducible = 1;
inline constexpr int empty = 2;
inline constexpr int disagreement = 3;
inline constexpr int usage = 64;
inline constexpr int data = 65;
inline constexpr int io = 74;
}  // namespace exit_code

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsft::cli
