#pragma once

// Finite words over the two-letter alphabet {s1, s2}, prefix codes and
// complete prefix codes (CPCs).
//
// A word names a node of the infinite dyadic tree: the empty word is the
// root and appending s1 / s2 moves to the left / right child. Words are
// serialized as strings over '1' and '2'; the empty word is "" on its own
// and "ε" inside whitespace-separated lists.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tsft {

enum class Branch : std::uint8_t { s1 = 1, s2 = 2 };

class Word {
 public:
  Word() = default;

  /// Parses "121" style text. Accepts "" and "ε" for the empty word.
  static Word parse(std::string_view text);

  static Word of(std::initializer_list<Branch> branches);

  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }
  [[nodiscard]] Branch at(std::size_t i) const {
    return symbols_[i] == '1' ? Branch::s1 : Branch::s2;
  }

  [[nodiscard]] Word child(Branch b) const;
  /// Drops the last symbol. Precondition: !empty().
  [[nodiscard]] Word parent() const { return Word{symbols_.substr(0, symbols_.size() - 1)}; }
  [[nodiscard]] Word operator+(const Word& tail) const;

  /// True iff *this is a (not necessarily proper) prefix of `other`.
  [[nodiscard]] bool is_prefix_of(const Word& other) const;

  /// The h with prefix·h == *this, if `prefix` is a prefix of *this.
  [[nodiscard]] std::optional<Word> strip_prefix(const Word& prefix) const;

  /// Proper prefixes, shortest first (ε first).
  [[nodiscard]] std::vector<Word> proper_prefixes() const;

  /// '1'/'2' characters; "" for ε.
  [[nodiscard]] const std::string& str() const { return symbols_; }
  /// Like str() but renders ε as "ε".
  [[nodiscard]] std::string token() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Canonical order: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::string symbols) : symbols_(std::move(symbols)) {}
  std::string symbols_;
};

/// Sets iterate in canonical (length-lex) word order.
using WordSet = std::set<Word>;
/// A WordSet expected to be prefix-free.
using PrefixCode = WordSet;
/// A WordSet expected to be prefix-closed.
using TreeRegion = WordSet;

using Rational = boost::multiprecision::cpp_rational;

bool is_prefix(const Word& g, const Word& h);
bool is_prefix_code(const WordSet& words);

/// Definitional completeness test: prefix-free and every word of the
/// maximal length has a prefix in the set. The empty set is not a CPC.
bool is_cpc(const WordSet& words);

/// Sum of 2^-|g| over the set, computed exactly.
Rational kraft_sum(const WordSet& words);

bool is_prefix_closed(const WordSet& words);

/// All prefixes of members (members included).
TreeRegion region_of(const PrefixCode& code);

/// Members with no child in the region.
WordSet boundary(const TreeRegion& region);

/// The CPC {h : anchor·h ∈ R(code)} restricted to its boundary.
/// Throws std::invalid_argument when anchor ∉ R(code).
PrefixCode localize(const PrefixCode& code, const Word& anchor);

/// Replaces everything below `anchor` in `outer` by anchor·inner.
/// Throws std::invalid_argument when anchor ∉ R(outer).
PrefixCode substitute(const PrefixCode& outer, const Word& anchor,
                      const PrefixCode& inner);

/// (R(outer) minus the anchor subtree) ∪ anchor·R(inner).
/// Throws std::invalid_argument when anchor ∉ R(outer).
TreeRegion graft_region(const PrefixCode& outer, const Word& anchor,
                        const PrefixCode& inner);

/// {g·h : g ∈ head, h ∈ tail}.
PrefixCode concatenate(const PrefixCode& head, const PrefixCode& tail);

inline constexpr int kMaxCpcStreamDepth = 5;
inline constexpr int kMaxCpcCollectDepth = 4;

/// Visits every CPC of depth <= max_depth exactly once. Order: {ε} first,
/// then s1·C1 ∪ s2·C2 with (C1, C2) in lexicographic order of their own
/// visit order. Throws std::invalid_argument past kMaxCpcStreamDepth.
void for_each_cpc(int max_depth, const std::function<void(const PrefixCode&)>& visit);

/// Collects for_each_cpc into a vector (bounded by kMaxCpcCollectDepth).
std::vector<PrefixCode> enumerate_cpcs(int max_depth);

/// Space-separated canonical-order list, ε rendered as "ε".
std::string format_words(const WordSet& words);
WordSet parse_words(std::string_view text);

}  // namespace tsft
