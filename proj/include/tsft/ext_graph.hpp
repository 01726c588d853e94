#pragma once

// Extended directed graphs (V, E_c, E_d): a convergent edge (α, β) stands
// for the block (α; β, β), a divergent edge (α, β, γ) with β ≠ γ for the
// block (α; β, γ). The intrinsic graph is the ordinary digraph (V, E_c).

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tsft/shift.hpp"

namespace tsft {

using Vertex = std::uint32_t;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Divergent edge parent → (left, right); left ≠ right. Ordered: (α,β,γ)
/// and (α,γ,β) are distinct edges.
struct Fork {
  Vertex parent = 0;
  Vertex left = 0;
  Vertex right = 0;
  friend auto operator<=>(const Fork&, const Fork&) = default;
};

class IntrinsicGraph {
 public:
  IntrinsicGraph() = default;
  IntrinsicGraph(std::size_t vertex_count, const std::set<Arc>& edges);

  [[nodiscard]] std::size_t vertex_count() const { return successors_.size(); }
  /// Sorted successor list.
  [[nodiscard]] const std::vector<Vertex>& successors(Vertex v) const { return successors_.at(v); }
  [[nodiscard]] bool has_edge(Vertex from, Vertex to) const;

 private:
  std::vector<std::vector<Vertex>> successors_;
};

class ExtGraph {
 public:
  ExtGraph() = default;
  /// Throws std::invalid_argument on out-of-range endpoints, duplicate
  /// names or a divergent edge with equal children.
  ExtGraph(std::vector<std::string> names, std::set<Arc> convergent, std::set<Fork> divergent);

  [[nodiscard]] std::size_t vertex_count() const { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] const std::string& name(Vertex v) const { return names_.at(v); }
  [[nodiscard]] std::optional<Vertex> find(const std::string& name) const;
  [[nodiscard]] const std::set<Arc>& convergent() const { return convergent_; }
  [[nodiscard]] const std::set<Fork>& divergent() const { return divergent_; }

  [[nodiscard]] IntrinsicGraph intrinsic() const { return {names_.size(), convergent_}; }

  [[nodiscard]] ExtGraph with_convergent(Arc arc) const;
  [[nodiscard]] ExtGraph without_divergent(const Fork& fork) const;

  [[nodiscard]] std::string format(const Arc& a) const;
  [[nodiscard]] std::string format(const Fork& f) const;

  friend bool operator==(const ExtGraph&, const ExtGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::set<Arc> convergent_;
  std::set<Fork> divergent_;
};

/// Vertices are the symbols (same order, labels as names).
ExtGraph graph_of(const AllowableSet& allowed);

/// Inverse of graph_of.
AllowableSet shift_of(const ExtGraph& graph);

/// Reflexive reachability: from == to is always reachable. Throws
/// std::out_of_range for unknown vertices.
bool reachable(const IntrinsicGraph& graph, Vertex from, Vertex to);

/// Breadth-first shortest path (successors in ascending order), both
/// endpoints included; {from} when from == to.
std::optional<std::vector<Vertex>> shortest_path(const IntrinsicGraph& graph, Vertex from,
                                                 Vertex to);

/// Reflexive transitive closure, row r = vertices reachable from r.
std::vector<std::vector<bool>> reachability(const IntrinsicGraph& graph);

/// Maximal strongly connected components in a topological order of the
/// condensation (sources first). Members are sorted; ties between
/// independent components go to the one with the smallest member.
std::vector<std::vector<Vertex>> scc(const IntrinsicGraph& graph);

/// Throws std::invalid_argument on an empty graph.
bool is_strongly_connected(const IntrinsicGraph& graph);

/// DOT digraph: convergent edges solid, each divergent edge as two dashed
/// edges sharing a `label="dK"` group tag.
std::string to_dot(const ExtGraph& graph);

}  // namespace tsft
