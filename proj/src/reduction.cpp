#include "tsft/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsft {

namespace {

struct Endpoints {
  Vertex source;
  Vertex target;
};

Endpoints endpoints(const Fork& f, Orientation o) {
  return o == Orientation::left_to_right ? Endpoints{f.left, f.right}
                                         : Endpoints{f.right, f.left};
}

ExtGraph apply_checked(const ExtGraph& graph, const ReductionStep& step, bool enhanced) {
  if (auto err = step_error(graph, step)) {
    throw std::invalid_argument("invalid reduction step: " + *err);
  }
  ExtGraph next = graph.with_convergent(step.added);
  return enhanced ? next.without_divergent(step.divergent) : next;
}

Fixpoint run_fixpoint(const ExtGraph& graph, std::span<const ScanCandidate> order, bool enhanced) {
  Fixpoint out{graph, {}};
  // Plain reduction never shrinks E_d, so one scan order serves every round.
  std::vector<ScanCandidate> canonical;
  for (;;) {
    if (enhanced) {
      canonical = canonical_scan(out.graph);
      order = canonical;
    }
    auto step = find_dc_reduction(out.graph, order);
    if (!step) return out;
    out.graph = apply_checked(out.graph, *step, enhanced);
    out.steps.push_back(std::move(*step));
  }
}

}  // namespace

std::vector<ScanCandidate> canonical_scan(const ExtGraph& graph, Rule rule) {
  std::vector<ScanCandidate> out;
  out.reserve(2 * graph.divergent().size());
  for (const Fork& f : graph.divergent()) {
    out.push_back({f, Orientation::left_to_right});
    if (rule == Rule::symmetric) out.push_back({f, Orientation::right_to_left});
  }
  return out;
}

std::optional<ReductionStep> find_dc_reduction(const ExtGraph& graph) {
  return find_dc_reduction(graph, canonical_scan(graph));
}

std::optional<ReductionStep> find_dc_reduction(const ExtGraph& graph,
                                               std::span<const ScanCandidate> order) {
  if (graph.divergent().empty()) return std::nullopt;
  const IntrinsicGraph intrinsic = graph.intrinsic();
  const auto closure = reachability(intrinsic);
  for (const ScanCandidate& c : order) {
    if (!graph.divergent().contains(c.divergent)) continue;
    const auto [source, target] = endpoints(c.divergent, c.orientation);
    const Arc added{c.divergent.parent, target};
    if (graph.convergent().contains(added) || !closure[source][target]) continue;
    return ReductionStep{c.divergent, c.orientation, added,
                         *shortest_path(intrinsic, source, target)};
  }
  return std::nullopt;
}

std::optional<std::string> step_error(const ExtGraph& graph, const ReductionStep& step) {
  const std::size_t n = graph.vertex_count();
  const Fork& f = step.divergent;
  if (f.parent >= n || f.left >= n || f.right >= n) return "divergent edge out of range";
  if (!graph.divergent().contains(f)) return "divergent edge " + graph.format(f) + " is absent";
  const auto [source, target] = endpoints(f, step.orientation);
  if (step.added != Arc{f.parent, target}) return "added edge does not match the orientation";
  if (graph.convergent().contains(step.added)) {
    return "convergent edge " + graph.format(step.added) + " is already present";
  }
  if (step.path.size() < 2 || step.path.front() != source || step.path.back() != target) {
    return "witness path does not join the divergent children";
  }
  for (std::size_t i = 0; i + 1 < step.path.size(); ++i) {
    const Arc hop{step.path[i], step.path[i + 1]};
    if (hop.from >= n || hop.to >= n || !graph.convergent().contains(hop)) {
      return "witness path uses a missing convergent edge";
    }
  }
  return std::nullopt;
}

ExtGraph dc_reduce_step(const ExtGraph& graph, const ReductionStep& step) {
  return apply_checked(graph, step, false);
}

ExtGraph enhanced_reduce_step(const ExtGraph& graph, const ReductionStep& step) {
  return apply_checked(graph, step, true);
}

Fixpoint dc_fixpoint(const ExtGraph& graph, Rule rule) {
  const auto order = canonical_scan(graph, rule);
  return run_fixpoint(graph, order, false);
}

Fixpoint dc_fixpoint(const ExtGraph& graph, std::span<const ScanCandidate> order) {
  return run_fixpoint(graph, order, false);
}

Fixpoint enhanced_fixpoint(const ExtGraph& graph) { return run_fixpoint(graph, {}, true); }

GroupedGraph grouping(const ExtGraph& graph) {
  if (graph.vertex_count() == 0) throw std::invalid_argument("grouping of an empty graph");
  GroupedGraph out;
  out.members = scc(graph.intrinsic());
  out.component_of.assign(graph.vertex_count(), 0);
  for (Vertex c = 0; c < out.members.size(); ++c) {
    for (Vertex v : out.members[c]) out.component_of[v] = c;
  }
  const auto& comp = out.component_of;

  std::set<Arc> convergent;
  std::set<Fork> divergent;
  for (const Arc& a : graph.convergent()) convergent.insert(Arc{comp[a.from], comp[a.to]});
  for (const Fork& f : graph.divergent()) {
    if (comp[f.left] == comp[f.right]) {
      convergent.insert(Arc{comp[f.parent], comp[f.left]});
    } else {
      divergent.insert(Fork{comp[f.parent], comp[f.left], comp[f.right]});
    }
  }
  std::vector<std::string> names;
  for (std::size_t c = 0; c < out.members.size(); ++c) names.push_back("V" + std::to_string(c + 1));
  out.graph = ExtGraph(std::move(names), std::move(convergent), std::move(divergent));
  return out;
}

GroupedFixpoint grouped_fixpoint(const ExtGraph& graph) {
  if (graph.vertex_count() == 0) throw std::invalid_argument("grouping of an empty graph");
  GroupedFixpoint out;
  // Current vertex -> original vertices.
  std::vector<std::vector<Vertex>> origin(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) origin[v] = {v};

  ExtGraph current = graph;
  for (;;) {
    GroupedGraph grouped = grouping(current);
    std::vector<std::vector<Vertex>> next_origin(grouped.members.size());
    for (std::size_t c = 0; c < grouped.members.size(); ++c) {
      for (Vertex v : grouped.members[c]) {
        next_origin[c].insert(next_origin[c].end(), origin[v].begin(), origin[v].end());
      }
      std::sort(next_origin[c].begin(), next_origin[c].end());
    }
    origin = std::move(next_origin);

    auto step = find_dc_reduction(grouped.graph);
    if (!step) {
      out.rounds.push_back({std::move(grouped), std::nullopt});
      break;
    }
    current = dc_reduce_step(grouped.graph, *step);
    out.rounds.push_back({std::move(grouped), std::move(step)});
  }
  out.original_members = std::move(origin);
  return out;
}

std::string format_step(const ExtGraph& graph, const ReductionStep& step) {
  std::string path;
  for (std::size_t i = 0; i < step.path.size(); ++i) {
    if (i > 0) path += "→";
    path += graph.name(step.path[i]);
  }
  return "add " + graph.format(step.added) + " from divergent " + graph.format(step.divergent) +
         " via path " + path;
}

}  // namespace tsft
