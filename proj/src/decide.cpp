#include "tsft/decide.hpp"

#include <algorithm>
#include <deque>
#include <exception>
#include <set>
#include <tuple>

namespace tsft {

namespace {

std::vector<std::string> grouped_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < k; ++c) out.push_back("V" + std::to_string(c + 1));
  return out;
}

// BFS tree over `adj` from root; parent[root] = root. Every vertex must be hit.
std::vector<Vertex> bfs_tree(const std::vector<std::vector<Vertex>>& adj, Vertex root) {
  std::vector<Vertex> parent(adj.size(), root);
  std::vector<bool> seen(adj.size(), false);
  std::deque<Vertex> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return parent;
}

std::pair<Verdict, Evidence> judge(const IntrinsicGraph& g) {
  const std::size_t n = g.vertex_count();
  if (is_strongly_connected(g)) {
    std::vector<std::vector<Vertex>> forward(n);
    std::vector<std::vector<Vertex>> backward(n);
    for (Vertex v = 0; v < n; ++v) {
      forward[v] = g.successors(v);
      for (Vertex w : g.successors(v)) backward[w].push_back(v);
    }
    return {Verdict::cpc_irreducible, StrongWitness{0, bfs_tree(forward, 0), bfs_tree(backward, 0)}};
  }
  const auto closure = reachability(g);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (!closure[a][b]) return {Verdict::not_cpc_irreducible, DisconnectedPair{a, b}};
    }
  }
  return {Verdict::cpc_irreducible, StrongWitness{}};  // unreachable
}

Certificate empty_certificate(Route route, Essentialization& ess) {
  Certificate cert;
  cert.verdict = Verdict::empty;
  cert.route = route;
  cert.evidence = EliminationOrder{std::move(ess.eliminated)};
  return cert;
}

// ---- independent replay used by check_certificate ----

struct PlainGraph {
  std::size_t n = 0;
  std::set<std::pair<Vertex, Vertex>> conv;
  std::set<std::tuple<Vertex, Vertex, Vertex>> div;
};

using Closure = std::vector<std::vector<char>>;

Closure warshall(const PlainGraph& g) {
  Closure r(g.n, std::vector<char>(g.n, 0));
  for (Vertex v = 0; v < g.n; ++v) r[v][v] = 1;
  for (const auto& [a, b] : g.conv) r[a][b] = 1;
  for (std::size_t k = 0; k < g.n; ++k) {
    for (std::size_t i = 0; i < g.n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < g.n; ++j) {
        if (r[k][j]) r[i][j] = 1;
      }
    }
  }
  return r;
}

bool apply_step(PlainGraph& g, const ReductionStep& s) {
  const Fork& f = s.divergent;
  if (!g.div.contains({f.parent, f.left, f.right})) return false;
  const bool l2r = s.orientation == Orientation::left_to_right;
  const Vertex source = l2r ? f.left : f.right;
  const Vertex target = l2r ? f.right : f.left;
  if (s.added.from != f.parent || s.added.to != target) return false;
  if (g.conv.contains({s.added.from, s.added.to})) return false;
  if (s.path.size() < 2 || s.path.front() != source || s.path.back() != target) return false;
  for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
    if (!g.conv.contains({s.path[i], s.path[i + 1]})) return false;
  }
  g.conv.insert({s.added.from, s.added.to});
  return true;
}

bool irreducible(const PlainGraph& g, const Closure& r) {
  for (const auto& [p, l, rr] : g.div) {
    if (r[l][rr] && !g.conv.contains({p, rr})) return false;
    if (r[rr][l] && !g.conv.contains({p, l})) return false;
  }
  return true;
}

bool tree_ok(const PlainGraph& g, const std::vector<Vertex>& parent, Vertex root, bool inward) {
  if (parent.size() != g.n) return false;
  for (Vertex v = 0; v < g.n; ++v) {
    if (parent[v] >= g.n) return false;
    if (v == root) continue;
    const auto edge = inward ? std::pair{v, parent[v]} : std::pair{parent[v], v};
    if (!g.conv.contains(edge)) return false;
    // Following parents must reach the root.
    Vertex u = v;
    std::size_t hops = 0;
    while (u != root && hops++ <= g.n) u = parent[u];
    if (u != root) return false;
  }
  return true;
}

bool evidence_ok(const PlainGraph& g, Verdict verdict, const Evidence& evidence) {
  const Closure r = warshall(g);
  if (!irreducible(g, r)) return false;
  if (verdict == Verdict::cpc_irreducible) {
    const auto* w = std::get_if<StrongWitness>(&evidence);
    return w != nullptr && w->root < g.n && tree_ok(g, w->out_parent, w->root, false) &&
           tree_ok(g, w->in_parent, w->root, true);
  }
  if (verdict == Verdict::not_cpc_irreducible) {
    const auto* d = std::get_if<DisconnectedPair>(&evidence);
    return d != nullptr && d->from < g.n && d->to < g.n && !r[d->from][d->to];
  }
  return false;
}

bool elimination_ok(const AllowableSet& allowed, const std::vector<std::string>& order) {
  const std::size_t n = allowed.alphabet().size();
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  for (const std::string& label : order) {
    auto s = allowed.alphabet().find(label);
    if (!s || !alive[s->id]) return false;
    for (const OneBlock& b : allowed.outgoing(*s)) {
      if (alive[b.left.id] && alive[b.right.id]) return false;
    }
    alive[s->id] = false;
    --remaining;
  }
  return remaining == 0;
}

PlainGraph graph_from_blocks(const AllowableSet& essential) {
  PlainGraph g;
  g.n = essential.alphabet().size();
  for (const OneBlock& b : essential.blocks()) {
    if (b.left == b.right) {
      g.conv.insert({b.parent.id, b.left.id});
    } else {
      g.div.insert({b.parent.id, b.left.id, b.right.id});
    }
  }
  return g;
}

// Validates `members` as the SCC partition of g and returns the quotient.
std::optional<PlainGraph> quotient(const PlainGraph& g, const std::vector<std::vector<Vertex>>& members) {
  const Closure r = warshall(g);
  std::vector<Vertex> comp(g.n, static_cast<Vertex>(-1));
  for (Vertex c = 0; c < members.size(); ++c) {
    if (members[c].empty()) return std::nullopt;
    for (Vertex v : members[c]) {
      if (v >= g.n || comp[v] != static_cast<Vertex>(-1)) return std::nullopt;
      comp[v] = c;
    }
  }
  for (Vertex u = 0; u < g.n; ++u) {
    if (comp[u] == static_cast<Vertex>(-1)) return std::nullopt;
    for (Vertex v = 0; v < g.n; ++v) {
      const bool mutual = r[u][v] && r[v][u];
      if (mutual != (comp[u] == comp[v])) return std::nullopt;
    }
  }
  PlainGraph q;
  q.n = members.size();
  for (const auto& [a, b] : g.conv) q.conv.insert({comp[a], comp[b]});
  for (const auto& [p, l, rr] : g.div) {
    if (comp[l] == comp[rr]) {
      q.conv.insert({comp[p], comp[l]});
    } else {
      q.div.insert({comp[p], comp[l], comp[rr]});
    }
  }
  return q;
}

bool check_unsafe(const AllowableSet& allowed, const Certificate& cert) {
  const AllowableSet essential = essentialize(allowed);
  if (cert.verdict == Verdict::empty) {
    const auto* e = std::get_if<EliminationOrder>(&cert.evidence);
    return e != nullptr && cert.vertices.empty() && cert.steps.empty() && cert.rounds.empty() &&
           elimination_ok(allowed, e->labels);
  }
  if (essential.alphabet().empty() || cert.vertices != essential.alphabet().labels()) return false;

  PlainGraph g = graph_from_blocks(essential);
  if (cert.route == Route::direct) {
    if (!cert.rounds.empty()) return false;
    for (const ReductionStep& s : cert.steps) {
      if (!apply_step(g, s)) return false;
    }
    return evidence_ok(g, cert.verdict, cert.evidence);
  }

  if (!cert.steps.empty() || cert.rounds.empty()) return false;
  for (std::size_t i = 0; i < cert.rounds.size(); ++i) {
    const GroupingRecord& round = cert.rounds[i];
    const bool last = i + 1 == cert.rounds.size();
    if (round.step.has_value() == last) return false;
    auto q = quotient(g, round.members);
    if (!q) return false;
    g = std::move(*q);
    if (round.step && !apply_step(g, *round.step)) return false;
  }
  return evidence_ok(g, cert.verdict, cert.evidence);
}

std::string join_names(const std::vector<std::string>& names, const std::vector<Vertex>& vs,
                       const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += sep;
    out += names.at(vs[i]);
  }
  return out;
}

std::string step_line(const std::vector<std::string>& names, const ReductionStep& s) {
  const Fork& f = s.divergent;
  return "add (" + names.at(s.added.from) + "," + names.at(s.added.to) + ") from divergent (" +
         names.at(f.parent) + "," + names.at(f.left) + "," + names.at(f.right) + ") via path " +
         join_names(names, s.path, "→");
}

std::string tree_line(const std::vector<std::string>& names, const std::vector<Vertex>& parent,
                      Vertex root, bool inward) {
  std::string out;
  for (Vertex v = 0; v < parent.size(); ++v) {
    if (v == root) continue;
    if (!out.empty()) out += ' ';
    out += inward ? names.at(v) + "→" + names.at(parent[v]) : names.at(parent[v]) + "→" + names.at(v);
  }
  return out;
}

}  // namespace

std::string_view to_string(Route r) { return r == Route::direct ? "direct" : "grouped"; }

Certificate decide_direct(const AllowableSet& allowed) {
  Essentialization ess = essentialize_traced(allowed);
  if (ess.result.alphabet().empty()) return empty_certificate(Route::direct, ess);

  Fixpoint fix = dc_fixpoint(graph_of(ess.result));
  auto [verdict, evidence] = judge(fix.graph.intrinsic());
  Certificate cert;
  cert.verdict = verdict;
  cert.route = Route::direct;
  cert.vertices = ess.result.alphabet().labels();
  cert.steps = std::move(fix.steps);
  cert.evidence = std::move(evidence);
  return cert;
}

Certificate decide_grouped(const AllowableSet& allowed) {
  Essentialization ess = essentialize_traced(allowed);
  if (ess.result.alphabet().empty()) return empty_certificate(Route::grouped, ess);

  GroupedFixpoint fix = grouped_fixpoint(graph_of(ess.result));
  auto [verdict, evidence] = judge(fix.final_grouped().graph.intrinsic());
  Certificate cert;
  cert.verdict = verdict;
  cert.route = Route::grouped;
  cert.vertices = ess.result.alphabet().labels();
  for (GroupedRound& round : fix.rounds) {
    cert.rounds.push_back({std::move(round.grouped.members), std::move(round.step)});
  }
  cert.evidence = std::move(evidence);
  return cert;
}

Certificate decide(const AllowableSet& allowed, Route route) {
  return route == Route::direct ? decide_direct(allowed) : decide_grouped(allowed);
}

bool check_certificate(const AllowableSet& allowed, const Certificate& cert) {
  try {
    return check_unsafe(allowed, cert);
  } catch (const std::exception&) {
    return false;
  }
}

std::string format_certificate(const Certificate& cert) {
  std::string out;
  out += "verdict: " + std::string(to_string(cert.verdict)) + "\n";
  out += "route: " + std::string(to_string(cert.route)) + "\n";
  out += "vertices:";
  for (const auto& v : cert.vertices) out += " " + v;
  out += "\n";

  std::vector<std::string> trace;
  std::vector<std::string> final_names = cert.vertices;
  if (cert.route == Route::direct) {
    out += "steps: " + std::to_string(cert.steps.size()) + "\n";
    for (const auto& s : cert.steps) trace.push_back(step_line(cert.vertices, s));
  } else {
    std::size_t steps = 0;
    std::vector<std::string> names = cert.vertices;
    for (std::size_t i = 0; i < cert.rounds.size(); ++i) {
      const GroupingRecord& round = cert.rounds[i];
      const auto grouped = grouped_names(round.members.size());
      std::string line = "round " + std::to_string(i + 1) + ":";
      for (std::size_t c = 0; c < round.members.size(); ++c) {
        line += " " + grouped[c] + "={" + join_names(names, round.members[c], ",") + "}";
      }
      trace.push_back(line);
      if (round.step) {
        ++steps;
        trace.push_back("round " + std::to_string(i + 1) + ": " + step_line(grouped, *round.step));
      }
      names = grouped;
    }
    final_names = names;
    out += "rounds: " + std::to_string(cert.rounds.size()) + "\n";
    out += "steps: " + std::to_string(steps) + "\n";
  }

  if (const auto* w = std::get_if<StrongWitness>(&cert.evidence)) {
    out += "evidence: strongly-connected\n";
    out += "root: " + final_names.at(w->root) + "\n";
    out += "out-tree: " + tree_line(final_names, w->out_parent, w->root, false) + "\n";
    out += "in-tree: " + tree_line(final_names, w->in_parent, w->root, true) + "\n";
  } else if (const auto* d = std::get_if<DisconnectedPair>(&cert.evidence)) {
    out += "evidence: disconnected (" + final_names.at(d->from) + "," + final_names.at(d->to) + ")\n";
  } else if (const auto* e = std::get_if<EliminationOrder>(&cert.evidence)) {
    out += "evidence: eliminated";
    for (const auto& l : e->labels) out += " " + l;
    out += "\n";
  }

  out += "trace:\n";
  for (const auto& line : trace) out += "  " + line + "\n";
  return out;
}

}  // namespace tsft
