#include "tsft/shift.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tsft {

namespace {

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == '#';
  });
}

// Nodes g of the support with both g·s1 and g·s2 present.
template <typename F>
void for_each_interior(const Pattern& pattern, F&& f) {
  for (const auto& [node, label] : pattern.labels()) {
    auto l = pattern.labels().find(node.child(Branch::s1));
    auto r = pattern.labels().find(node.child(Branch::s2));
    if (l != pattern.labels().end() && r != pattern.labels().end()) {
      f(node, OneBlock{label, l->second, r->second});
    }
  }
}

void require_essential(const AllowableSet& allowed, const char* what) {
  if (allowed.empty() || !allowed.is_essential()) {
    throw std::invalid_argument(std::string(what) +
                                ": allowable set must be nonempty and essential");
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::uint32_t i = 0; i < labels_.size(); ++i) {
    if (!valid_label(labels_[i])) {
      throw std::invalid_argument("invalid symbol label '" + labels_[i] + "'");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate symbol '" + labels_[i] + "'");
    }
  }
}

std::optional<Symbol> Alphabet::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return Symbol{it->second};
}

Symbol Alphabet::at(std::string_view label) const {
  if (auto s = find(label)) return *s;
  throw std::invalid_argument("unknown symbol '" + std::string(label) + "'");
}

std::vector<Symbol> Alphabet::symbols() const {
  std::vector<Symbol> out(labels_.size());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Symbol{i};
  return out;
}

AllowableSet::AllowableSet(Alphabet alphabet, std::set<OneBlock> blocks)
    : alphabet_(std::move(alphabet)), blocks_(std::move(blocks)) {
  for (const OneBlock& b : blocks_) {
    if (!alphabet_.contains(b.parent) || !alphabet_.contains(b.left) ||
        !alphabet_.contains(b.right)) {
      throw std::invalid_argument("block mentions a symbol outside the alphabet");
    }
  }
}

AllowableSet AllowableSet::from_labels(std::vector<std::string> labels,
                                       std::span<const std::array<std::string_view, 3>> blocks) {
  Alphabet alphabet(std::move(labels));
  std::set<OneBlock> out;
  for (const auto& [p, l, r] : blocks) {
    out.insert(OneBlock{alphabet.at(p), alphabet.at(l), alphabet.at(r)});
  }
  return AllowableSet(std::move(alphabet), std::move(out));
}

std::vector<OneBlock> AllowableSet::outgoing(Symbol s) const {
  std::vector<OneBlock> out;
  auto it = blocks_.lower_bound(OneBlock{s, Symbol{0}, Symbol{0}});
  for (; it != blocks_.end() && it->parent == s; ++it) out.push_back(*it);
  return out;
}

bool AllowableSet::is_essential() const {
  std::vector<bool> has(alphabet_.size(), false);
  for (const OneBlock& b : blocks_) has[b.parent.id] = true;
  return std::all_of(has.begin(), has.end(), [](bool x) { return x; });
}

std::string AllowableSet::format(const OneBlock& b) const {
  return "(" + alphabet_.label(b.parent) + ";" + alphabet_.label(b.left) + "," +
         alphabet_.label(b.right) + ")";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::cpc_irreducible: return "CPC-IRREDUCIBLE";
    case Verdict::not_cpc_irreducible: return "NOT-CPC-IRREDUCIBLE";
    case Verdict::empty: return "EMPTY";
  }
  return "?";
}

Pattern::Pattern(std::map<Word, Symbol> labels) : labels_(std::move(labels)) {
  for (const auto& [node, label] : labels_) {
    if (!node.empty() && !labels_.contains(node.parent())) {
      throw std::invalid_argument("pattern support is not prefix-closed at node '" +
                                  node.token() + "'");
    }
  }
}

Pattern Pattern::single(Symbol root) { return Pattern({{Word{}, root}}); }

TreeRegion Pattern::support() const {
  TreeRegion out;
  for (const auto& [node, label] : labels_) out.insert(out.end(), node);
  return out;
}

std::size_t Pattern::depth() const {
  return labels_.empty() ? 0 : labels_.rbegin()->first.size();
}

Pattern Pattern::restrict_to(const TreeRegion& region) const {
  std::map<Word, Symbol> out;
  for (const Word& node : region) out.emplace(node, labels_.at(node));
  return Pattern(std::move(out));
}

std::string Pattern::format(const Alphabet& alphabet) const {
  std::string out;
  for (const auto& [node, label] : labels_) {
    out += node.token();
    out += ' ';
    out += alphabet.label(label);
    out += '\n';
  }
  return out;
}

AllowableSet from_forbidden(const Alphabet& alphabet, std::span<const OneBlock> forbidden) {
  std::set<OneBlock> banned;
  for (const OneBlock& b : forbidden) {
    if (!alphabet.contains(b.parent) || !alphabet.contains(b.left) ||
        !alphabet.contains(b.right)) {
      throw std::invalid_argument("forbidden block mentions a symbol outside the alphabet");
    }
    banned.insert(b);
  }
  std::set<OneBlock> blocks;
  for (Symbol p : alphabet.symbols()) {
    for (Symbol l : alphabet.symbols()) {
      for (Symbol r : alphabet.symbols()) {
        OneBlock b{p, l, r};
        if (!banned.contains(b)) blocks.insert(blocks.end(), b);
      }
    }
  }
  return AllowableSet(alphabet, std::move(blocks));
}

std::set<OneBlock> forbidden_of(const AllowableSet& allowed) {
  std::set<OneBlock> out;
  const auto symbols = allowed.alphabet().symbols();
  for (Symbol p : symbols) {
    for (Symbol l : symbols) {
      for (Symbol r : symbols) {
        OneBlock b{p, l, r};
        if (!allowed.contains(b)) out.insert(out.end(), b);
      }
    }
  }
  return out;
}

Essentialization essentialize_traced(const AllowableSet& allowed) {
  const std::size_t n = allowed.alphabet().size();
  std::vector<bool> alive(n, true);
  std::set<OneBlock> blocks = allowed.blocks();
  std::vector<std::string> eliminated;

  for (;;) {
    std::vector<bool> has_out(n, false);
    for (const OneBlock& b : blocks) has_out[b.parent.id] = true;
    std::vector<std::uint32_t> dead;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (alive[i] && !has_out[i]) dead.push_back(i);
    }
    if (dead.empty()) break;
    for (std::uint32_t i : dead) {
      alive[i] = false;
      eliminated.push_back(allowed.alphabet().labels()[i]);
    }
    std::erase_if(blocks, [&](const OneBlock& b) {
      return !alive[b.parent.id] || !alive[b.left.id] || !alive[b.right.id];
    });
  }

  std::vector<std::string> labels;
  std::vector<std::uint32_t> remap(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!alive[i]) continue;
    remap[i] = static_cast<std::uint32_t>(labels.size());
    labels.push_back(allowed.alphabet().labels()[i]);
  }
  std::set<OneBlock> renumbered;
  for (const OneBlock& b : blocks) {
    renumbered.insert(OneBlock{Symbol{remap[b.parent.id]}, Symbol{remap[b.left.id]},
                               Symbol{remap[b.right.id]}});
  }
  return {AllowableSet(Alphabet(std::move(labels)), std::move(renumbered)),
          std::move(eliminated)};
}

AllowableSet essentialize(const AllowableSet& allowed) {
  return essentialize_traced(allowed).result;
}

bool contains_forbidden_block(const Pattern& pattern, const AllowableSet& allowed) {
  bool found = false;
  for_each_interior(pattern, [&](const Word&, const OneBlock& b) {
    if (!allowed.contains(b)) found = true;
  });
  return found;
}

bool pattern_is_locally_allowable(const Pattern& pattern, const AllowableSet& allowed) {
  for (const auto& [node, label] : pattern.labels()) {
    if (!allowed.alphabet().contains(label)) return false;
  }
  return is_cpc(boundary(pattern.support())) && !contains_forbidden_block(pattern, allowed);
}

Pattern extend_pattern(const Pattern& seed, const AllowableSet& allowed, int levels) {
  if (levels < 0) throw std::invalid_argument("extend_pattern: negative level count");
  require_essential(allowed, "extend_pattern");
  if (!pattern_is_locally_allowable(seed, allowed)) {
    throw std::invalid_argument("extend_pattern: seed pattern is not locally allowable");
  }
  std::map<Word, Symbol> labels = seed.labels();
  WordSet frontier = boundary(seed.support());
  for (int level = 0; level < levels; ++level) {
    WordSet next;
    for (const Word& g : frontier) {
      const OneBlock b = allowed.outgoing(labels.at(g)).front();
      Word l = g.child(Branch::s1);
      Word r = g.child(Branch::s2);
      labels.emplace(l, b.left);
      labels.emplace(r, b.right);
      next.insert(std::move(l));
      next.insert(std::move(r));
    }
    frontier = std::move(next);
  }
  return Pattern(std::move(labels));
}

AllowableSet replace_block(const AllowableSet& allowed, const OneBlock& d, Keep keep) {
  if (!allowed.contains(d)) {
    throw std::invalid_argument("replace_block: block is not in the allowable set");
  }
  if (d.convergent()) {
    throw std::invalid_argument("replace_block: block children coincide");
  }
  std::set<OneBlock> blocks = allowed.blocks();
  blocks.erase(d);
  const Symbol kept = keep == Keep::right ? d.right : d.left;
  blocks.insert(OneBlock{d.parent, kept, kept});
  return AllowableSet(allowed.alphabet(), std::move(blocks));
}

std::vector<Pattern> enumerate_nblocks(const AllowableSet& allowed, int n) {
  if (n < 0 || n > kMaxNBlockLevels) {
    throw std::invalid_argument("enumerate_nblocks: level count must lie in [0, " +
                                std::to_string(kMaxNBlockLevels) + "]");
  }
  require_essential(allowed, "enumerate_nblocks");

  std::vector<std::map<Word, Symbol>> layer;
  for (Symbol s : allowed.alphabet().symbols()) layer.push_back({{Word{}, s}});

  for (int level = 0; level < n; ++level) {
    std::vector<std::map<Word, Symbol>> next;
    for (const auto& partial : layer) {
      std::vector<Word> leaves;
      for (const auto& [node, label] : partial) {
        if (node.size() == static_cast<std::size_t>(level)) leaves.push_back(node);
      }
      // Cartesian product over the leaves' outgoing blocks.
      std::vector<std::map<Word, Symbol>> acc{partial};
      for (const Word& leaf : leaves) {
        std::vector<std::map<Word, Symbol>> grown;
        for (const auto& p : acc) {
          for (const OneBlock& b : allowed.outgoing(p.at(leaf))) {
            auto q = p;
            q.emplace(leaf.child(Branch::s1), b.left);
            q.emplace(leaf.child(Branch::s2), b.right);
            grown.push_back(std::move(q));
          }
        }
        acc = std::move(grown);
      }
      for (auto& p : acc) next.push_back(std::move(p));
    }
    layer = std::move(next);
  }

  std::vector<Pattern> out;
  out.reserve(layer.size());
  for (auto& p : layer) out.emplace_back(std::move(p));
  return out;
}

}  // namespace tsft
