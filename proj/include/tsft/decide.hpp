#pragma once

// Top-level decision of CPC-irreducibility with checkable certificates.
//
// Both routes essentialize first. The direct route reduces graph_of(B) to its
// (d,c)-fixpoint and tests strong connectivity of the intrinsic graph; the
// grouped route alternates SCC grouping with single reduction steps.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsft/reduction.hpp"
#include "tsft/shift.hpp"

namespace tsft {

enum class Route { direct, grouped };

std::string_view to_string(Route r);

/// Spanning in- and out-trees rooted at `root` in the final intrinsic graph.
/// out_parent[v] -> v and v -> in_parent[v] are edges for every v != root.
struct StrongWitness {
  Vertex root = 0;
  std::vector<Vertex> out_parent;
  std::vector<Vertex> in_parent;

  friend bool operator==(const StrongWitness&, const StrongWitness&) = default;
};

/// No path from -> to in the final intrinsic graph.
struct DisconnectedPair {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const DisconnectedPair&, const DisconnectedPair&) = default;
};

/// Labels removed by essentialization, in removal order.
struct EliminationOrder {
  std::vector<std::string> labels;

  friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

using Evidence = std::variant<StrongWitness, DisconnectedPair, EliminationOrder>;

/// One grouping round: the partition of the current graph's vertices (in
/// grouped-vertex order) and the reduction applied to the grouped graph.
struct GroupingRecord {
  std::vector<std::vector<Vertex>> members;
  std::optional<ReductionStep> step;

  friend bool operator==(const GroupingRecord&, const GroupingRecord&) = default;
};

struct Certificate {
  Verdict verdict = Verdict::empty;
  Route route = Route::direct;
  /// Labels of the essential alphabet; vertex i is vertices[i].
  std::vector<std::string> vertices;
  /// Direct route: reduction steps on graph_of(essentialize(B)).
  std::vector<ReductionStep> steps;
  /// Grouped route: one record per round.
  std::vector<GroupingRecord> rounds;
  Evidence evidence;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

Certificate decide_direct(const AllowableSet& allowed);
Certificate decide_grouped(const AllowableSet& allowed);
Certificate decide(const AllowableSet& allowed, Route route);

/// Replays the certificate with its own closure computations and checks the
/// evidence against the final graph. Never throws.
bool check_certificate(const AllowableSet& allowed, const Certificate& cert);

/// `key: value` lines followed by an indented trace block.
std::string format_certificate(const Certificate& cert);

}  // namespace tsft
