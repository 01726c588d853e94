#pragma once

// One-step tree shifts of finite type: alphabets, 1-blocks (α; β, γ),
// allowable sets, finite patterns and the constructive operations on them.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tsft/words.hpp"

namespace tsft {

/// Index of a label inside its Alphabet. Order follows declaration order.
struct Symbol {
  std::uint32_t id = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

class Alphabet {
 public:
  Alphabet() = default;
  /// Throws std::invalid_argument on duplicate, empty or whitespace-bearing labels.
  explicit Alphabet(std::vector<std::string> labels);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] bool empty() const { return labels_.empty(); }
  [[nodiscard]] const std::string& label(Symbol s) const { return labels_.at(s.id); }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::optional<Symbol> find(std::string_view label) const;
  /// Throws std::invalid_argument for unknown labels.
  [[nodiscard]] Symbol at(std::string_view label) const;
  [[nodiscard]] bool contains(Symbol s) const { return s.id < labels_.size(); }
  [[nodiscard]] std::vector<Symbol> symbols() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// The labeling (parent; left, right) of the 1-block Δ₁.
struct OneBlock {
  Symbol parent;
  Symbol left;
  Symbol right;
  friend auto operator<=>(const OneBlock&, const OneBlock&) = default;
  [[nodiscard]] bool convergent() const { return left == right; }
};

class AllowableSet {
 public:
  AllowableSet() = default;
  /// Throws std::invalid_argument if a block mentions a symbol outside the alphabet.
  AllowableSet(Alphabet alphabet, std::set<OneBlock> blocks);

  /// Convenience constructor from labels; throws on unknown labels.
  static AllowableSet from_labels(
      std::vector<std::string> labels,
      std::span<const std::array<std::string_view, 3>> blocks);

  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] const std::set<OneBlock>& blocks() const { return blocks_; }
  [[nodiscard]] bool contains(const OneBlock& b) const { return blocks_.contains(b); }
  [[nodiscard]] std::size_t size() const { return blocks_.size(); }
  [[nodiscard]] bool empty() const { return blocks_.empty(); }

  /// Blocks whose parent is `s`, in canonical order.
  [[nodiscard]] std::vector<OneBlock> outgoing(Symbol s) const;
  /// True iff every symbol of the alphabet has an outgoing block.
  [[nodiscard]] bool is_essential() const;

  [[nodiscard]] std::string format(const OneBlock& b) const;

  friend bool operator==(const AllowableSet&, const AllowableSet&) = default;

 private:
  Alphabet alphabet_;
  std::set<OneBlock> blocks_;
};

enum class Verdict { cpc_irreducible, not_cpc_irreducible, empty };

/// "CPC-IRREDUCIBLE", "NOT-CPC-IRREDUCIBLE" or "EMPTY".
std::string_view to_string(Verdict v);

/// A labeling of a finite prefix-closed set of nodes.
class Pattern {
 public:
  Pattern() = default;
  /// Throws std::invalid_argument unless the support is prefix-closed.
  explicit Pattern(std::map<Word, Symbol> labels);
  static Pattern single(Symbol root);

  [[nodiscard]] const std::map<Word, Symbol>& labels() const { return labels_; }
  [[nodiscard]] TreeRegion support() const;
  [[nodiscard]] bool contains(const Word& node) const { return labels_.contains(node); }
  [[nodiscard]] Symbol at(const Word& node) const { return labels_.at(node); }
  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  /// Length of the longest node word.
  [[nodiscard]] std::size_t depth() const;

  /// Restriction to a prefix-closed subset of the support.
  [[nodiscard]] Pattern restrict_to(const TreeRegion& region) const;

  /// One `node-word label` line per node, canonical node order, ε as "ε".
  [[nodiscard]] std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::map<Word, Symbol> labels_;
};

/// All |A|³ blocks minus `forbidden`. Throws on symbols outside the alphabet.
AllowableSet from_forbidden(const Alphabet& alphabet, std::span<const OneBlock> forbidden);

/// Complement of `allowed` within all |A|³ blocks.
std::set<OneBlock> forbidden_of(const AllowableSet& allowed);

struct Essentialization {
  AllowableSet result;
  /// Labels removed, round by round, canonical order within a round.
  std::vector<std::string> eliminated;
};

/// Iteratively drops symbols with no outgoing block (and blocks mentioning
/// them) until every remaining symbol has one. Surviving symbols keep their
/// relative order.
Essentialization essentialize_traced(const AllowableSet& allowed);
AllowableSet essentialize(const AllowableSet& allowed);

/// Boundary of the support is a CPC and every complete Δ₁ inside the
/// support carries a block of `allowed`.
bool pattern_is_locally_allowable(const Pattern& pattern, const AllowableSet& allowed);

/// True iff some complete Δ₁ inside the support carries a block outside `allowed`.
bool contains_forbidden_block(const Pattern& pattern, const AllowableSet& allowed);

/// Grows `seed` by `levels` generations: every boundary node receives the
/// children of the first outgoing block in canonical order. Throws
/// std::invalid_argument for a non-allowable seed or a non-essential set.
Pattern extend_pattern(const Pattern& seed, const AllowableSet& allowed, int levels);

enum class Keep { left, right };

/// Replaces divergent block d = (α; β, γ) by (α; γ, γ) (keep right) or
/// (α; β, β) (keep left). Throws if d ∉ allowed or d is convergent.
AllowableSet replace_block(const AllowableSet& allowed, const OneBlock& d, Keep keep);

inline constexpr int kMaxNBlockLevels = 4;

/// Every labeling of Δ_n whose interior 1-blocks all lie in `allowed`.
/// Requires an essential set; throws past kMaxNBlockLevels.
std::vector<Pattern> enumerate_nblocks(const AllowableSet& allowed, int n);

}  // namespace tsft
