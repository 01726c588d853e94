// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tsft/cli.hpp"
#include "tsft/decide.hpp"
#include "tsft/instance.hpp"
#include "tsft/oracle.hpp"
#include "tsft/reduction.hpp"

using namespace tsft;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::set<Arc> added_edges(const ExtGraph& before, const ExtGraph& after) {
  std::set<Arc> out;
  for (const Arc& a : after.convergent())
    if (!before.convergent().contains(a)) out.insert(a);
  return out;
}

std::string format_arcs(const std::set<Arc>& arcs) {
  std::string s = "{";
  for (const Arc& a : arcs) s += (s.size() > 1 ? "," : "") + std::string("(") + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
  return s + "}";
}

bool three_way(const AllowableSet& b, std::string& why) {
  const Certificate d = decide_direct(b);
  const Certificate g = decide_grouped(b);
  const Verdict o = decide_oracle(b);
  if (d.verdict == g.verdict && d.verdict == o && check_certificate(b, d) && check_certificate(b, g)) return true;
  why = "disagreement on\n" + format_instance(b);
  return false;
}

Outcome one_fork_example() {
  Outcome r;
  const AllowableSet b = fixtures::one_fork();
  const ExtGraph g = graph_of(b);
  const Fixpoint fix = dc_fixpoint(g);
  const auto added = added_edges(g, fix.graph);
  r.require(added == std::set<Arc>{{0, 2}}, "added " + format_arcs(added));
  r.require(!find_dc_reduction(fix.graph).has_value(), "fixpoint still reducible");
  for (Route route : {Route::direct, Route::grouped}) {
    const Certificate c = decide(b, route);
    r.require(c.verdict == Verdict::not_cpc_irreducible, "verdict " + std::string(to_string(c.verdict)));
    r.require(check_certificate(b, c), "certificate rejected");
  }
  const Certificate c = decide_direct(b);
  const auto* pair = std::get_if<DisconnectedPair>(&c.evidence);
  r.require(pair && pair->to == 0, "disconnected pair does not end at 0");
  if (r.pass) r.detail = "adds {(0,2)}, disconnected (1,0)";
  return r;
}

Outcome crossing_example() {
  Outcome r;
  const AllowableSet b = fixtures::crossing();
  const ExtGraph g = graph_of(b);
  // The literal rule uses paths from the left child to the right child only.
  const Fixpoint forward = dc_fixpoint(g, Rule::forward);
  const auto added = added_edges(g, forward.graph);
  r.require(added == std::set<Arc>{{0, 2}, {5, 2}}, "forward rule added " + format_arcs(added));
  r.require(is_strongly_connected(forward.graph.intrinsic()), "forward fixpoint not strongly connected");
  const Fixpoint symmetric = dc_fixpoint(g);
  r.require(is_strongly_connected(symmetric.graph.intrinsic()), "symmetric fixpoint not strongly connected");
  for (Route route : {Route::direct, Route::grouped}) {
    const Certificate c = decide(b, route);
    r.require(c.verdict == Verdict::cpc_irreducible, "verdict " + std::string(to_string(c.verdict)));
    r.require(check_certificate(b, c), "certificate rejected");
  }
  if (r.pass)
    r.detail = "forward adds " + format_arcs(added) + "; default symmetric rule adds " +
               format_arcs(added_edges(g, symmetric.graph));
  return r;
}

Outcome grouping_example() {
  Outcome r;
  const AllowableSet b = fixtures::crossing();
  const GroupedGraph gg = grouping(graph_of(b));
  r.require(gg.members == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}, {5}}, "partition differs");
  r.require(gg.graph.convergent().contains(Arc{2, 0}), "(V3,V1) is not convergent");
  r.require(decide_grouped(b).verdict == decide_direct(b).verdict, "routes disagree");
  if (r.pass) r.detail = "V1={0,1,2} V2={3,4} V3={5}, (V3,V1) convergent";
  return r;
}

Outcome exhaustive_two() {
  Outcome r;
  for (std::uint64_t mask = 0; mask < 256 && r.pass; ++mask) {
    std::string why;
    r.require(three_way(instance_from_mask(2, mask), why), why);
  }
  if (r.pass) r.detail = "256/256 agree";
  return r;
}

Outcome sampled() {
  Outcome r;
  std::mt19937_64 rng(2024);
  std::ostringstream summary;
  for (std::size_t n : {3, 4, 5}) {
    int counts[3] = {0, 0, 0};
    for (int t = 0; t < 10000 && r.pass; ++t) {
      const AllowableSet b = random_instance(n, unit_interval(rng), rng);
      std::string why;
      r.require(three_way(b, why), why);
      ++counts[static_cast<int>(decide_direct(b).verdict)];
    }
    summary << " |A|=" << n << ":" << counts[0] << "/" << counts[1] << "/" << counts[2];
  }
  if (r.pass) r.detail = "3x10000 agree (irreducible/not/empty)" + summary.str();
  return r;
}

Outcome confluence() {
  Outcome r;
  std::mt19937_64 rng(6);
  std::size_t steps = 0;
  for (int t = 0; t < 100 && r.pass; ++t) {
    const ExtGraph g = oracles::random_graph(rng, 3 + rng() % 6, 0.15, 0.12);
    const Fixpoint reference = dc_fixpoint(g);
    steps += reference.steps.size();
    auto order = canonical_scan(g);
    for (int k = 0; k < 10; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      r.require(dc_fixpoint(g, order).graph.convergent() == reference.graph.convergent(),
                "order-dependent fixpoint");
    }
  }
  if (r.pass) r.detail = "100 graphs x 10 orders, " + std::to_string(steps) + " reference steps";
  return r;
}

Outcome replacement_invariance() {
  Outcome r;
  std::mt19937_64 rng(7);
  int right = 0;
  int left = 0;
  for (int t = 0; t < 100000 && r.pass && (right < 1000 || left < 1000); ++t) {
    const AllowableSet b = oracles::random_essential(rng, 2 + rng() % 4);
    const Verdict before = decide_direct(b).verdict;
    for (const OneBlock& d : b.blocks()) {
      if (d.left == d.right) continue;
      if (cpc_connected(b, d.left, d.right)) {
        r.require(decide_direct(replace_block(b, d, Keep::right)).verdict == before,
                  "keep=right changed the verdict of\n" + format_instance(b));
        ++right;
      }
      if (cpc_connected(b, d.right, d.left)) {
        r.require(decide_direct(replace_block(b, d, Keep::left)).verdict == before,
                  "keep=left changed the verdict of\n" + format_instance(b));
        ++left;
      }
    }
  }
  r.require(right >= 1000 && left >= 1000, "too few applicable pairs");
  if (r.pass) r.detail = std::to_string(right) + " keep=right, " + std::to_string(left) + " keep=left";
  return r;
}

void check_prefix_ops(Outcome& r, const PrefixCode& s1, const PrefixCode& s2) {
  for (const Word& g0 : region_of(s1)) {
    const PrefixCode loc = localize(s1, g0);
    r.require(is_cpc(loc), "localize lost completeness");
    const PrefixCode sub = substitute(s1, g0, s2);
    r.require(is_cpc(sub) && localize(sub, g0) == s2, "substitute postcondition");
    const TreeRegion p = graft_region(s1, g0, s2);
    r.require(is_prefix_closed(p) && is_cpc(boundary(p)) && region_of(sub) == p, "graft_region postcondition");
  }
  const PrefixCode cat = concatenate(s1, s2);
  r.require(is_cpc(cat) && cat.size() == s1.size() * s2.size(), "concatenate postcondition");
}

Outcome prefix_codes() {
  Outcome r;
  const auto all = enumerate_cpcs(4);
  const auto small = enumerate_cpcs(2);
  for (const auto& s1 : all) {
    r.require(is_prefix_code(s1) && kraft_sum(s1) == 1, "enumerated set is not complete");
    for (const auto& s2 : small) check_prefix_ops(r, s1, s2);
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) check_prefix_ops(r, oracles::random_cpc(rng, 6), oracles::random_cpc(rng, 6));

  // is_cpc against Kraft on every prefix-free subset of words of length <= 4.
  std::vector<Word> words;
  for (int len = 0; len <= 4; ++len)
    for (unsigned bits = 0; bits < (1U << len); ++bits) {
      std::string digits;
      for (int i = len - 1; i >= 0; --i) digits += (bits >> i) & 1U ? '2' : '1';
      words.push_back(Word::parse(digits));
    }
  std::size_t sets = 0;
  WordSet cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == words.size()) {
      ++sets;
      r.require(is_cpc(cur) == (kraft_sum(cur) == 1), "is_cpc disagrees with Kraft on " + format_words(cur));
      return;
    }
    go(i + 1);
    for (const Word& c : cur)
      if (c.is_prefix_of(words[i]) || words[i].is_prefix_of(c)) return;
    cur.insert(words[i]);
    go(i + 1);
    cur.erase(words[i]);
  };
  go(0);
  if (r.pass)
    r.detail = std::to_string(all.size()) + " CPCs, 2000 random pairs, " + std::to_string(sets) + " prefix-free sets";
  return r;
}

Outcome extension() {
  Outcome r;
  std::mt19937_64 rng(9);
  for (int t = 0; t < 1000 && r.pass; ++t) {
    const AllowableSet b = oracles::random_essential(rng, 1 + rng() % 5);
    const PrefixCode shape = oracles::random_cpc(rng, 3);
    std::map<Word, Symbol> labels{{Word{}, Symbol{static_cast<std::uint32_t>(rng() % b.alphabet().size())}}};
    for (const Word& node : region_of(shape)) {
      if (shape.contains(node)) continue;
      const auto out = b.outgoing(labels.at(node));
      const OneBlock& blk = out[rng() % out.size()];
      labels[node.child(Branch::s1)] = blk.left;
      labels[node.child(Branch::s2)] = blk.right;
    }
    const Pattern seed(std::move(labels));
    const int levels = static_cast<int>(rng() % 5);
    const Pattern ext = extend_pattern(seed, b, levels);
    r.require(!contains_forbidden_block(ext, b), "extension contains a forbidden block");
    r.require(pattern_is_locally_allowable(ext, b), "extension not locally allowable");
    r.require(ext.restrict_to(seed.support()) == seed, "extension does not restrict to the seed");
  }
  if (r.pass) r.detail = "1000 seeds extended";
  return r;
}

Outcome termination() {
  Outcome r;
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run({"bench", "--sizes", "10,30,100,300,1000", "--seed", "1"}, out, err);
  r.require(status == 0, "bench exited " + std::to_string(status) + ": " + err.str());
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  r.require(line == "vertices,conv_edges,div_edges,steps,micros", "bad CSV header");
  std::ostringstream info;
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::size_t v = 0, c = 0, m = 0, steps = 0;
    long long micros = 0;
    char sep = 0;
    fields >> v >> sep >> c >> sep >> m >> sep >> steps >> sep >> micros;
    r.require(static_cast<bool>(fields), "unparsable row " + line);
    r.require(steps <= v * v, "steps exceed |V|^2 in row " + line);
    const double cube = static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(m);
    char ratio[64];
    std::snprintf(ratio, sizeof ratio, "%.2e", static_cast<double>(micros) / cube);
    info << " m=" << m << ":" << steps << " steps/" << micros << "us (us/m^3 " << ratio << ")";
    ++rows;
  }
  r.require(rows == 5, "expected 5 rows");
  if (r.pass) r.detail = "steps <= |V|^2;" + info.str();
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
    double limit_ms;  // 0: no limit
  };
  const Criterion criteria[] = {
      {1, "worked example: one divergent edge", one_fork_example, 10},
      {2, "worked example: two crossing divergent edges", crossing_example, 10},
      {3, "SCC grouping", grouping_example, 0},
      {4, "exhaustive agreement, 2 symbols", exhaustive_two, 1000},
      {5, "sampled agreement, 3-5 symbols", sampled, 60000},
      {6, "confluence of the reduction", confluence, 0},
      {7, "block replacement invariance", replacement_invariance, 0},
      {8, "prefix-code properties", prefix_codes, 0},
      {9, "pattern extension", extension, 0},
      {10, "termination and step bound", termination, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.limit_ms > 0 && ms > c.limit_ms) {
      o.pass = false;
      o.detail = "took longer than " + std::to_string(static_cast<int>(c.limit_ms)) + " ms";
    }
    failed += o.pass ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f ms", ms);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << timing << "): " << o.detail
              << "\n";
  }
  return failed == 0 ? 0 : 1;
}
