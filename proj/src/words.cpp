#include "tsft/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tsft {

namespace {

constexpr std::string_view kEpsilon = "ε";

void require_in_region(const PrefixCode& code, const Word& anchor, const char* what) {
  for (const Word& g : code) {
    if (anchor.is_prefix_of(g)) return;
  }
  throw std::invalid_argument(std::string(what) + ": word '" + anchor.str() +
                              "' is not a node of the code's region");
}

// Every length-`depth` extension of `node` has a prefix in `code`.
bool covered(const WordSet& code, const TreeRegion& region, const Word& node,
             std::size_t depth) {
  if (code.contains(node)) return true;
  if (node.size() >= depth || !region.contains(node)) return false;
  return covered(code, region, node.child(Branch::s1), depth) &&
         covered(code, region, node.child(Branch::s2), depth);
}

PrefixCode split(const PrefixCode& left, const PrefixCode& right) {
  PrefixCode out;
  const Word l = Word::of({Branch::s1});
  const Word r = Word::of({Branch::s2});
  for (const Word& g : left) out.insert(l + g);
  for (const Word& g : right) out.insert(r + g);
  return out;
}

void visit_cpcs(int depth, const std::function<void(const PrefixCode&)>& visit) {
  visit(PrefixCode{Word{}});
  if (depth == 0) return;
  visit_cpcs(depth - 1, [&](const PrefixCode& left) {
    visit_cpcs(depth - 1, [&](const PrefixCode& right) { visit(split(left, right)); });
  });
}

}  // namespace

Word Word::parse(std::string_view text) {
  if (text == kEpsilon) return Word{};
  for (char c : text) {
    if (c != '1' && c != '2') {
      throw std::invalid_argument("word '" + std::string(text) +
                                  "' contains a character other than '1' or '2'");
    }
  }
  return Word{std::string(text)};
}

Word Word::of(std::initializer_list<Branch> branches) {
  std::string s;
  for (Branch b : branches) s.push_back(b == Branch::s1 ? '1' : '2');
  return Word{std::move(s)};
}

Word Word::child(Branch b) const {
  std::string s = symbols_;
  s.push_back(b == Branch::s1 ? '1' : '2');
  return Word{std::move(s)};
}

Word Word::operator+(const Word& tail) const { return Word{symbols_ + tail.symbols_}; }

bool Word::is_prefix_of(const Word& other) const {
  return other.symbols_.starts_with(symbols_);
}

std::optional<Word> Word::strip_prefix(const Word& prefix) const {
  if (!prefix.is_prefix_of(*this)) return std::nullopt;
  return Word{symbols_.substr(prefix.size())};
}

std::vector<Word> Word::proper_prefixes() const {
  std::vector<Word> out;
  out.reserve(symbols_.size());
  for (std::size_t n = 0; n < symbols_.size(); ++n) out.push_back(Word{symbols_.substr(0, n)});
  return out;
}

std::string Word::token() const { return empty() ? std::string(kEpsilon) : symbols_; }

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.symbols_.compare(b.symbols_) <=> 0;
}

bool is_prefix(const Word& g, const Word& h) { return g.is_prefix_of(h); }

bool is_prefix_code(const WordSet& words) {
  // Canonical order puts every proper prefix before its extensions.
  for (auto it = words.begin(); it != words.end(); ++it) {
    for (auto jt = std::next(it); jt != words.end(); ++jt) {
      if (it->size() < jt->size() && it->is_prefix_of(*jt)) return false;
    }
  }
  return true;
}

bool is_cpc(const WordSet& words) {
  if (words.empty() || !is_prefix_code(words)) return false;
  const std::size_t depth = words.rbegin()->size();
  return covered(words, region_of(words), Word{}, depth);
}

Rational kraft_sum(const WordSet& words) {
  Rational sum = 0;
  for (const Word& g : words) {
    boost::multiprecision::cpp_int denom = 1;
    denom <<= static_cast<unsigned>(g.size());
    sum += Rational(1, denom);
  }
  return sum;
}

bool is_prefix_closed(const WordSet& words) {
  for (const Word& g : words) {
    if (g.empty()) continue;
    if (!words.contains(g.parent())) return false;
  }
  return true;
}

TreeRegion region_of(const PrefixCode& code) {
  TreeRegion region;
  for (const Word& g : code) {
    region.insert(g);
    for (Word& p : g.proper_prefixes()) region.insert(std::move(p));
  }
  return region;
}

WordSet boundary(const TreeRegion& region) {
  WordSet out;
  for (const Word& g : region) {
    if (!region.contains(g.child(Branch::s1)) && !region.contains(g.child(Branch::s2))) {
      out.insert(g);
    }
  }
  return out;
}

PrefixCode localize(const PrefixCode& code, const Word& anchor) {
  require_in_region(code, anchor, "localize");
  TreeRegion below;
  for (const Word& g : region_of(code)) {
    if (auto h = g.strip_prefix(anchor)) below.insert(std::move(*h));
  }
  return boundary(below);
}

PrefixCode substitute(const PrefixCode& outer, const Word& anchor, const PrefixCode& inner) {
  require_in_region(outer, anchor, "substitute");
  PrefixCode out;
  for (const Word& g : outer) {
    if (!anchor.is_prefix_of(g)) out.insert(g);
  }
  for (const Word& h : inner) out.insert(anchor + h);
  return out;
}

TreeRegion graft_region(const PrefixCode& outer, const Word& anchor, const PrefixCode& inner) {
  require_in_region(outer, anchor, "graft_region");
  TreeRegion out;
  for (const Word& g : region_of(outer)) {
    if (!anchor.is_prefix_of(g)) out.insert(g);
  }
  for (const Word& h : region_of(inner)) out.insert(anchor + h);
  return out;
}

PrefixCode concatenate(const PrefixCode& head, const PrefixCode& tail) {
  PrefixCode out;
  for (const Word& g : head) {
    for (const Word& h : tail) out.insert(g + h);
  }
  return out;
}

void for_each_cpc(int max_depth, const std::function<void(const PrefixCode&)>& visit) {
  if (max_depth < 0 || max_depth > kMaxCpcStreamDepth) {
    throw std::invalid_argument("CPC enumeration depth must lie in [0, " +
                                std::to_string(kMaxCpcStreamDepth) + "]");
  }
  visit_cpcs(max_depth, visit);
}

std::vector<PrefixCode> enumerate_cpcs(int max_depth) {
  if (max_depth < 0 || max_depth > kMaxCpcCollectDepth) {
    throw std::invalid_argument("collected CPC enumeration depth must lie in [0, " +
                                std::to_string(kMaxCpcCollectDepth) + "]");
  }
  std::vector<PrefixCode> out;
  visit_cpcs(max_depth, [&](const PrefixCode& c) { out.push_back(c); });
  return out;
}

std::string format_words(const WordSet& words) {
  std::string out;
  for (const Word& g : words) {
    if (!out.empty()) out.push_back(' ');
    out += g.token();
  }
  return out;
}

WordSet parse_words(std::string_view text) {
  WordSet out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.insert(Word::parse(tok));
  return out;
}

}  // namespace tsft
