#pragma once

#include <array>
#include <string_view>

#include "tsft/ext_graph.hpp"
#include "tsft/shift.hpp"

namespace fixtures {

using tsft::AllowableSet;
using Triple = std::array<std::string_view, 3>;

// V={0,1,2}, E_c={(0,1),(1,2),(2,1)}, E_d={(0,1,2)}.
inline AllowableSet one_fork() {
  static constexpr Triple blocks[] = {{"0", "1", "1"}, {"1", "2", "2"}, {"2", "1", "1"}, {"0", "1", "2"}};
  return AllowableSet::from_labels({"0", "1", "2"}, blocks);
}

inline AllowableSet crossing() {
  static constexpr Triple blocks[] = {{"0", "1", "1"}, {"0", "1", "2"}, {"1", "2", "2"},
                                      {"2", "0", "0"}, {"2", "4", "4"}, {"3", "4", "4"},
                                      {"3", "5", "5"}, {"4", "3", "3"}, {"5", "1", "2"}};
  return AllowableSet::from_labels({"0", "1", "2", "3", "4", "5"}, blocks);
}

inline AllowableSet single_loop() {
  static constexpr Triple blocks[] = {{"a", "a", "a"}};
  return AllowableSet::from_labels({"a"}, blocks);
}

inline constexpr std::string_view one_fork_text =
    "symbols: 0 1 2\nblock: 0 1 1\nblock: 1 2 2\nblock: 2 1 1\nblock: 0 1 2\n";

inline constexpr std::string_view crossing_text =
    "# two SCC-crossing divergent edges\n"
    "symbols: 0 1 2 3 4 5\n"
    "block: 0 1 1\nblock: 0 1 2\nblock: 1 2 2\nblock: 2 0 0\nblock: 2 4 4\n"
    "block: 3 4 4\nblock: 3 5 5\nblock: 4 3 3\nblock: 5 1 2\n";

}  // namespace fixtures
