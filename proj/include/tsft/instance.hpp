#pragma once

// Text instance files and random instances.
//
//   # comment
//   symbols: a b c
//   mode: allowable | forbidden      (optional, default allowable)
//   block: a b c                     (parent left right)
//
// `symbols:` must be the first directive. In forbidden mode the listed blocks
// are removed from A^3.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tsft/shift.hpp"

namespace tsft {

enum class BlockMode { allowable, forbidden };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct InstanceFile {
  AllowableSet allowed;
  BlockMode mode = BlockMode::allowable;
  /// Non-fatal diagnostics (duplicate blocks), already deduplicated.
  std::vector<std::string> warnings;
};

/// Throws ParseError.
InstanceFile parse_instance_file(std::string_view text);
AllowableSet parse_instance(std::string_view text);

/// Allowable-mode text, blocks in canonical order.
std::string format_instance(const AllowableSet& allowed);

/// Uniform double in [0, 1) from the top 53 bits; stable across platforms.
double unit_interval(std::mt19937_64& rng);

/// Symbols "0".."n-1"; each of the n^3 blocks, in canonical order, is kept
/// with probability `density`.
AllowableSet random_instance(std::size_t symbols, double density, std::mt19937_64& rng);
AllowableSet random_instance(std::size_t symbols, double density, std::uint64_t seed);

/// Symbols "0".."n-1".
Alphabet numbered_alphabet(std::size_t symbols);

/// The allowable set over n symbols whose blocks are the set bits of `mask`
/// (bit i is the i-th block of A^3 in canonical order). Requires n^3 <= 64.
AllowableSet instance_from_mask(std::size_t symbols, std::uint64_t mask);

}  // namespace tsft
