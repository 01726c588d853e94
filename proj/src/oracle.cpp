#include "tsft/oracle.hpp"

#include <stdexcept>

namespace tsft {

namespace {

void require_symbol(const AllowableSet& allowed, Symbol s) {
  if (!allowed.alphabet().contains(s)) {
    throw std::invalid_argument("symbol index " + std::to_string(s.id) +
                                " is outside the alphabet");
  }
}

}  // namespace

ConnTable::ConnTable(const AllowableSet& allowed, Symbol target)
    : target_(target),
      round_(allowed.alphabet().size(), 0),
      via_(allowed.alphabet().size()) {
  if (allowed.empty() || !allowed.is_essential()) {
    throw std::invalid_argument("CPC-connectedness needs a nonempty essential allowable set");
  }
  require_symbol(allowed, target);

  // Round r only reads entries settled in rounds < r.
  for (int r = 1;; ++r) {
    std::vector<std::uint32_t> fresh;
    for (const OneBlock& b : allowed.blocks()) {
      if (round_[b.parent.id] > 0 || via_[b.parent.id]) continue;
      auto ready = [&](Symbol s) {
        return s == target_ || (round_[s.id] > 0 && round_[s.id] < r);
      };
      if (ready(b.left) && ready(b.right)) {
        via_[b.parent.id] = b;
        fresh.push_back(b.parent.id);
      }
    }
    if (fresh.empty()) break;
    for (std::uint32_t a : fresh) round_[a] = r;
    rounds_fired_ = r;
  }
}

std::optional<Pattern> ConnTable::witness(Symbol from) const {
  if (!connected(from)) return std::nullopt;
  std::map<Word, Symbol> labels{{Word{}, from}};
  std::vector<Word> open{Word{}};
  while (!open.empty()) {
    Word node = std::move(open.back());
    open.pop_back();
    const OneBlock& b = *via_[labels.at(node).id];
    for (auto [branch, child] : {std::pair{Branch::s1, b.left}, std::pair{Branch::s2, b.right}}) {
      Word w = node.child(branch);
      labels.emplace(w, child);
      if (child != target_) open.push_back(std::move(w));
    }
  }
  return Pattern(std::move(labels));
}

bool cpc_connected(const AllowableSet& allowed, Symbol from, Symbol to) {
  require_symbol(allowed, from);
  return ConnTable(allowed, to).connected(from);
}

std::optional<Pattern> cpc_witness(const AllowableSet& allowed, Symbol from, Symbol to) {
  require_symbol(allowed, from);
  return ConnTable(allowed, to).witness(from);
}

Verdict decide_oracle(const AllowableSet& allowed) {
  const AllowableSet essential = essentialize(allowed);
  if (essential.alphabet().empty()) return Verdict::empty;
  for (Symbol target : essential.alphabet().symbols()) {
    ConnTable table(essential, target);
    for (Symbol from : essential.alphabet().symbols()) {
      if (!table.connected(from)) return Verdict::not_cpc_irreducible;
    }
  }
  return Verdict::cpc_irreducible;
}

BruteResult brute_connected(const AllowableSet& allowed, Symbol from, Symbol to, int depth) {
  if (depth < 0 || depth > kMaxBruteDepth) {
    throw std::invalid_argument("brute_connected: depth must lie in [0, " +
                                std::to_string(kMaxBruteDepth) + "]");
  }
  require_symbol(allowed, from);
  require_symbol(allowed, to);

  const std::size_t n = allowed.alphabet().size();
  // memo[s][k]: -1 unknown, 0 no, 1 yes -- "s roots a witness using at most k levels".
  std::vector<std::vector<int>> memo(n, std::vector<int>(static_cast<std::size_t>(depth) + 1, -1));

  auto search = [&](auto&& self, Symbol root, int levels) -> bool {
    if (levels <= 0) return false;
    int& slot = memo[root.id][static_cast<std::size_t>(levels)];
    if (slot >= 0) return slot == 1;
    auto leaf_or_subtree = [&](Symbol child) {
      return child == to || self(self, child, levels - 1);
    };
    bool found = false;
    for (const OneBlock& b : allowed.outgoing(root)) {
      if (leaf_or_subtree(b.left) && leaf_or_subtree(b.right)) {
        found = true;
        break;
      }
    }
    slot = found ? 1 : 0;
    return found;
  };
  return search(search, from, depth) ? BruteResult::connected : BruteResult::unknown;
}

}  // namespace tsft
