#pragma once

// CPC-connectedness decided straight from the pattern semantics, without the
// graph representation.
//
// For a target β, T[α] holds iff α roots a locally allowable pattern of
// depth ≥ 1 whose boundary is a CPC labelled β everywhere. It is the least
// fixed point of
//
//   T[α] = ∃ (α; δ₁, δ₂) ∈ B : U[δ₁] ∧ U[δ₂],   U[δ] = (δ = β) ∨ T[δ],
//
// computed in synchronous rounds so that the round in which T[α] first holds
// equals the minimal witness depth.

#include <optional>
#include <vector>

#include "tsft/shift.hpp"

namespace tsft {

class ConnTable {
 public:
  /// Requires a nonempty essential set; throws std::invalid_argument otherwise.
  ConnTable(const AllowableSet& allowed, Symbol target);

  [[nodiscard]] Symbol target() const { return target_; }
  /// T[α].
  [[nodiscard]] bool connected(Symbol from) const { return round_.at(from.id) > 0; }
  /// U[α].
  [[nodiscard]] bool settled(Symbol s) const { return s == target_ || connected(s); }
  /// Round in which T[α] became true (1-based), 0 if never.
  [[nodiscard]] int round(Symbol from) const { return round_.at(from.id); }
  /// Number of rounds that set at least one entry.
  [[nodiscard]] int rounds_fired() const { return rounds_fired_; }

  /// Minimal-depth witness pattern rooted at `from`, if T[from].
  [[nodiscard]] std::optional<Pattern> witness(Symbol from) const;

 private:
  Symbol target_;
  std::vector<int> round_;
  // Justifying block for each connected symbol (children settled earlier).
  std::vector<std::optional<OneBlock>> via_;
  int rounds_fired_ = 0;
};

/// Throws std::invalid_argument on a non-essential set or unknown symbols.
bool cpc_connected(const AllowableSet& allowed, Symbol from, Symbol to);
std::optional<Pattern> cpc_witness(const AllowableSet& allowed, Symbol from, Symbol to);

/// Essentializes, then checks every ordered pair of surviving symbols.
Verdict decide_oracle(const AllowableSet& allowed);

enum class BruteResult { connected, unknown };

inline constexpr int kMaxBruteDepth = 6;

/// Exhaustive depth-bounded search over locally allowable patterns rooted at
/// `from` whose boundary is a CPC of words of length ≤ depth, all labelled
/// `to`. Throws std::invalid_argument past kMaxBruteDepth.
BruteResult brute_connected(const AllowableSet& allowed, Symbol from, Symbol to, int depth);

}  // namespace tsft
