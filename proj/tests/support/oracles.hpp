#pragma once

// Test-side reference implementations. Each one is deliberately naive and
// shares no code with the library routine it checks.

#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tsft/ext_graph.hpp"
#include "tsft/instance.hpp"
#include "tsft/shift.hpp"
#include "tsft/words.hpp"

namespace oracles {

using Matrix = std::vector<std::vector<int>>;

// Reflexive transitive closure by repeated boolean squaring of (I + A).
inline Matrix closure_by_squaring(std::size_t n, const std::set<tsft::Arc>& edges) {
  Matrix r(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (const auto& e : edges) r[e.from][e.to] = 1;
  for (;;) {
    Matrix sq(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j) sq[i][j] |= r[k][j];
    if (sq == r) return r;
    r = std::move(sq);
  }
}

inline tsft::ExtGraph random_graph(std::mt19937_64& rng, std::size_t n, double p_conv,
                                   double p_div) {
  std::bernoulli_distribution conv(p_conv), div(p_div);
  std::set<tsft::Arc> c;
  std::set<tsft::Fork> d;
  for (tsft::Vertex a = 0; a < n; ++a)
    for (tsft::Vertex b = 0; b < n; ++b) {
      if (conv(rng)) c.insert({a, b});
      for (tsft::Vertex g = 0; g < n; ++g)
        if (b != g && div(rng)) d.insert({a, b, g});
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return tsft::ExtGraph(std::move(names), std::move(c), std::move(d));
}

// Random instance that survives essentialization, returned essentialized.
inline tsft::AllowableSet random_essential(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    const double density = 0.1 + 0.6 * tsft::unit_interval(rng);
    auto e = tsft::essentialize(tsft::random_instance(n, density, rng));
    if (!e.alphabet().empty()) return e;
  }
}

// Random CPC: split each open node with probability p until max_depth.
inline tsft::PrefixCode random_cpc(std::mt19937_64& rng, int max_depth, double p = 0.55) {
  tsft::PrefixCode out;
  std::function<void(const tsft::Word&)> grow = [&](const tsft::Word& w) {
    if (static_cast<int>(w.size()) < max_depth && std::bernoulli_distribution(p)(rng)) {
      grow(w.child(tsft::Branch::s1));
      grow(w.child(tsft::Branch::s2));
    } else {
      out.insert(w);
    }
  };
  grow(tsft::Word{});
  return out;
}

// Shape-first search: for every CPC S ≠ {ε} of depth ≤ max_depth, try to label
// R(S) with root `from`, boundary `to` and every interior 1-block in B.
inline bool naive_connected(const tsft::AllowableSet& b, tsft::Symbol from, tsft::Symbol to,
                            int max_depth) {
  bool found = false;
  tsft::for_each_cpc(max_depth, [&](const tsft::PrefixCode& s) {
    if (found || s.contains(tsft::Word{})) return;
    std::function<bool(const tsft::Word&, tsft::Symbol)> fits = [&](const tsft::Word& node,
                                                                     tsft::Symbol label) {
      if (s.contains(node)) return label == to;
      for (const auto& blk : b.blocks()) {
        if (blk.parent != label) continue;
        if (fits(node.child(tsft::Branch::s1), blk.left) &&
            fits(node.child(tsft::Branch::s2), blk.right))
          return true;
      }
      return false;
    };
    found = fits(tsft::Word{}, from);
  });
  return found;
}

// Minimal DOT reader: digraph ID { (ID [-> ID] [attrs] ;)* }.
struct DotSummary {
  bool ok = false;
  std::size_t nodes = 0;
  std::size_t solid = 0;
  std::size_t dashed = 0;
};

inline DotSummary parse_dot(const std::string& text) {
  std::vector<std::string> toks;
  std::size_t i = 0;
  auto fail = [] { return DotSummary{}; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '"') {
      std::string t = "\"";
      ++i;
      while (i < text.size() && text[i] != '"') {
        if (text[i] == '\\' && i + 1 < text.size()) t += text[i++];
        t += text[i++];
      }
      if (i >= text.size()) return fail();
      ++i;
      toks.push_back(t + "\"");
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      toks.push_back("->");
      i += 2;
    } else if (std::string("{};[]=,").find(c) != std::string::npos) {
      toks.push_back(std::string(1, c));
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        t += text[i++];
      toks.push_back(t);
    } else {
      return fail();
    }
  }
  auto is_id = [](const std::string& t) {
    return !t.empty() && (t[0] == '"' || std::isalnum(static_cast<unsigned char>(t[0])) || t[0] == '_');
  };
  std::size_t p = 0;
  auto at = [&](std::size_t k) -> std::string { return k < toks.size() ? toks[k] : ""; };
  DotSummary out;
  if (at(p++) != "digraph" || !is_id(at(p++)) || at(p++) != "{") return fail();
  while (at(p) != "}") {
    if (!is_id(at(p))) return fail();
    ++p;
    bool edge = false;
    if (at(p) == "->") {
      ++p;
      if (!is_id(at(p++))) return fail();
      edge = true;
    }
    bool dashed = false;
    if (at(p) == "[") {
      ++p;
      while (at(p) != "]") {
        std::string key = at(p++);
        if (!is_id(key) || at(p++) != "=" || !is_id(at(p))) return fail();
        if (key == "style" && at(p) == "dashed") dashed = true;
        ++p;
        if (at(p) == ",") ++p;
      }
      ++p;
    }
    if (at(p++) != ";") return fail();
    if (!edge) ++out.nodes;
    else if (dashed) ++out.dashed;
    else ++out.solid;
  }
  if (p + 1 != toks.size()) return fail();
  out.ok = true;
  return out;
}

}  // namespace oracles
