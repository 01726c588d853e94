#pragma once

// (d,c)-reduction of extended directed graphs.
//
// A divergent edge (α, β, γ) together with a path β ⇝ γ in the intrinsic
// graph licenses the convergent edge (α, γ) (symmetrically γ ⇝ β licenses
// (α, β)). Plain reduction adds that edge; the enhanced variant also drops
// the divergent edge. Grouping collapses the strongly connected components
// of the intrinsic graph into single vertices.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsft/ext_graph.hpp"

namespace tsft {

enum class Orientation {
  left_to_right,  // path left ⇝ right, adds (parent, right)
  right_to_left,  // path right ⇝ left, adds (parent, left)
};

struct ReductionStep {
  Fork divergent;
  Orientation orientation = Orientation::left_to_right;
  Arc added;
  /// Convergent-edge path from the source child to the target child.
  std::vector<Vertex> path;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Which orientations license a step. `forward` only uses paths from the left
/// child to the right child, which is the definition read literally;
/// `symmetric` also uses right-to-left paths.
enum class Rule { symmetric, forward };

/// Candidate (divergent edge, orientation) pairs; the scan order of a fixpoint run.
struct ScanCandidate {
  Fork divergent;
  Orientation orientation = Orientation::left_to_right;
};

/// Canonical order: E_d ascending, left-to-right before right-to-left.
/// Under Rule::forward only left-to-right candidates are listed.
std::vector<ScanCandidate> canonical_scan(const ExtGraph& graph, Rule rule = Rule::symmetric);

/// First applicable step in canonical scan order, or nullopt when the graph
/// is (d,c)-irreducible.
std::optional<ReductionStep> find_dc_reduction(const ExtGraph& graph);
std::optional<ReductionStep> find_dc_reduction(const ExtGraph& graph,
                                               std::span<const ScanCandidate> order);

/// Checks that `step` is valid for `graph`; returns a reason when it is not.
std::optional<std::string> step_error(const ExtGraph& graph, const ReductionStep& step);

/// Adds step.added to E_c. Throws std::invalid_argument for invalid steps.
ExtGraph dc_reduce_step(const ExtGraph& graph, const ReductionStep& step);
/// Adds step.added to E_c and removes step.divergent from E_d.
ExtGraph enhanced_reduce_step(const ExtGraph& graph, const ReductionStep& step);

struct Fixpoint {
  ExtGraph graph;
  std::vector<ReductionStep> steps;
};

/// Applies plain reduction until none applies.
Fixpoint dc_fixpoint(const ExtGraph& graph, Rule rule = Rule::symmetric);
/// Same, scanning candidates in the given order (candidates naming edges
/// absent from the graph are skipped).
Fixpoint dc_fixpoint(const ExtGraph& graph, std::span<const ScanCandidate> order);
/// Applies enhanced reduction until none applies.
Fixpoint enhanced_fixpoint(const ExtGraph& graph);

struct GroupedGraph {
  /// Vertices V1, V2, ... are the components in scc() order.
  ExtGraph graph;
  /// Component of each input vertex.
  std::vector<Vertex> component_of;
  /// Input vertices of each component, sorted.
  std::vector<std::vector<Vertex>> members;
};

/// Throws std::invalid_argument on an empty graph.
GroupedGraph grouping(const ExtGraph& graph);

struct GroupedRound {
  GroupedGraph grouped;
  /// Reduction applied to grouped.graph, absent in the final round.
  std::optional<ReductionStep> step;
};

struct GroupedFixpoint {
  std::vector<GroupedRound> rounds;
  /// Final grouped vertex -> original vertices, sorted.
  std::vector<std::vector<Vertex>> original_members;

  [[nodiscard]] const GroupedGraph& final_grouped() const { return rounds.back().grouped; }
};

/// Alternates grouping and one reduction step until the grouped graph is
/// (d,c)-irreducible. Throws std::invalid_argument on an empty graph.
GroupedFixpoint grouped_fixpoint(const ExtGraph& graph);

/// `add (α,γ) from divergent (α,β,γ) via path β→…→γ`
std::string format_step(const ExtGraph& graph, const ReductionStep& step);

}  // namespace tsft
