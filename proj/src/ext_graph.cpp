#include "tsft/ext_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tsft {

namespace {

void check_vertex(const IntrinsicGraph& graph, Vertex v) {
  if (v >= graph.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " is not in the graph");
  }
}

std::string dot_id(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Iterative Tarjan; components come out sinks first.
std::vector<std::vector<Vertex>> tarjan(const IntrinsicGraph& graph) {
  const std::size_t n = graph.vertex_count();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> out;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> calls{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!calls.empty()) {
      Frame& f = calls.back();
      const auto& succ = graph.successors(f.v);
      if (f.next < succ.size()) {
        Vertex w = succ[f.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().v] = std::min(low[calls.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  return out;
}

}  // namespace

IntrinsicGraph::IntrinsicGraph(std::size_t vertex_count, const std::set<Arc>& edges)
    : successors_(vertex_count) {
  for (const Arc& a : edges) {
    if (a.from >= vertex_count || a.to >= vertex_count) {
      throw std::invalid_argument("edge endpoint outside the vertex set");
    }
    // std::set<Arc> iterates by (from, to): successor lists come out sorted.
    successors_[a.from].push_back(a.to);
  }
}

bool IntrinsicGraph::has_edge(Vertex from, Vertex to) const {
  const auto& s = successors_.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

ExtGraph::ExtGraph(std::vector<std::string> names, std::set<Arc> convergent,
                   std::set<Fork> divergent)
    : names_(std::move(names)), convergent_(std::move(convergent)), divergent_(std::move(divergent)) {
  const std::size_t n = names_.size();
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate vertex '" + name + "'");
  }
  for (const Arc& a : convergent_) {
    if (a.from >= n || a.to >= n) throw std::invalid_argument("convergent edge endpoint out of range");
  }
  for (const Fork& f : divergent_) {
    if (f.parent >= n || f.left >= n || f.right >= n) {
      throw std::invalid_argument("divergent edge endpoint out of range");
    }
    if (f.left == f.right) throw std::invalid_argument("divergent edge with equal children");
  }
}

std::optional<Vertex> ExtGraph::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

ExtGraph ExtGraph::with_convergent(Arc arc) const {
  ExtGraph g = *this;
  if (arc.from >= names_.size() || arc.to >= names_.size()) {
    throw std::invalid_argument("convergent edge endpoint out of range");
  }
  g.convergent_.insert(arc);
  return g;
}

ExtGraph ExtGraph::without_divergent(const Fork& fork) const {
  ExtGraph g = *this;
  g.divergent_.erase(fork);
  return g;
}

std::string ExtGraph::format(const Arc& a) const {
  return "(" + name(a.from) + "," + name(a.to) + ")";
}

std::string ExtGraph::format(const Fork& f) const {
  return "(" + name(f.parent) + "," + name(f.left) + "," + name(f.right) + ")";
}

ExtGraph graph_of(const AllowableSet& allowed) {
  std::set<Arc> convergent;
  std::set<Fork> divergent;
  for (const OneBlock& b : allowed.blocks()) {
    if (b.convergent()) {
      convergent.insert(Arc{b.parent.id, b.left.id});
    } else {
      divergent.insert(Fork{b.parent.id, b.left.id, b.right.id});
    }
  }
  return ExtGraph(allowed.alphabet().labels(), std::move(convergent), std::move(divergent));
}

AllowableSet shift_of(const ExtGraph& graph) {
  std::set<OneBlock> blocks;
  for (const Arc& a : graph.convergent()) {
    blocks.insert(OneBlock{Symbol{a.from}, Symbol{a.to}, Symbol{a.to}});
  }
  for (const Fork& f : graph.divergent()) {
    blocks.insert(OneBlock{Symbol{f.parent}, Symbol{f.left}, Symbol{f.right}});
  }
  return AllowableSet(Alphabet(graph.names()), std::move(blocks));
}

bool reachable(const IntrinsicGraph& graph, Vertex from, Vertex to) {
  check_vertex(graph, from);
  check_vertex(graph, to);
  return shortest_path(graph, from, to).has_value();
}

std::optional<std::vector<Vertex>> shortest_path(const IntrinsicGraph& graph, Vertex from,
                                                 Vertex to) {
  check_vertex(graph, from);
  check_vertex(graph, to);
  if (from == to) return std::vector<Vertex>{from};
  const std::size_t n = graph.vertex_count();
  std::vector<Vertex> parent(n, static_cast<Vertex>(n));
  std::vector<bool> seen(n, false);
  std::queue<Vertex> queue;
  seen[from] = true;
  queue.push(from);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : graph.successors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      if (w == to) {
        std::vector<Vertex> path{to};
        while (path.back() != from) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push(w);
    }
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> reachability(const IntrinsicGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (Vertex s = 0; s < n; ++s) {
    auto& row = closure[s];
    std::vector<Vertex> stack{s};
    row[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : graph.successors(v)) {
        if (!row[w]) {
          row[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return closure;
}

std::vector<std::vector<Vertex>> scc(const IntrinsicGraph& graph) {
  std::vector<std::vector<Vertex>> comps = tarjan(graph);
  const std::size_t k = comps.size();
  std::vector<std::size_t> comp_of(graph.vertex_count());
  for (std::size_t c = 0; c < k; ++c) {
    for (Vertex v : comps[c]) comp_of[v] = c;
  }
  // Kahn's algorithm on the condensation, smallest leading member first.
  std::vector<std::set<std::size_t>> succ(k);
  std::vector<std::size_t> indegree(k, 0);
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    for (Vertex w : graph.successors(v)) {
      const std::size_t a = comp_of[v], b = comp_of[w];
      if (a != b && succ[a].insert(b).second) ++indegree[b];
    }
  }
  auto later = [&](std::size_t a, std::size_t b) { return comps[a].front() > comps[b].front(); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t c = 0; c < k; ++c) {
    if (indegree[c] == 0) ready.push(c);
  }
  std::vector<std::vector<Vertex>> ordered;
  ordered.reserve(k);
  while (!ready.empty()) {
    std::size_t c = ready.top();
    ready.pop();
    ordered.push_back(comps[c]);
    for (std::size_t d : succ[c]) {
      if (--indegree[d] == 0) ready.push(d);
    }
  }
  return ordered;
}

bool is_strongly_connected(const IntrinsicGraph& graph) {
  if (graph.vertex_count() == 0) {
    throw std::invalid_argument("strong connectivity of an empty graph is undefined");
  }
  return scc(graph).size() == 1;
}

std::string to_dot(const ExtGraph& graph) {
  std::string out = "digraph tsft {\n";
  for (const auto& name : graph.names()) out += "  " + dot_id(name) + ";\n";
  for (const Arc& a : graph.convergent()) {
    out += "  " + dot_id(graph.name(a.from)) + " -> " + dot_id(graph.name(a.to)) + ";\n";
  }
  std::size_t k = 0;
  for (const Fork& f : graph.divergent()) {
    const std::string tag = "[style=dashed, label=\"d" + std::to_string(k++) + "\"]";
    out += "  " + dot_id(graph.name(f.parent)) + " -> " + dot_id(graph.name(f.left)) + " " +
           tag + ";\n";
    out += "  " + dot_id(graph.name(f.parent)) + " -> " + dot_id(graph.name(f.right)) + " " +
           tag + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace tsft
