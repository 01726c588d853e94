#include "tsft/instance.hpp"

#include <optional>
#include <set>
#include <sstream>

namespace tsft {

namespace {

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<BlockMode> mode;
  std::set<OneBlock> listed;
  std::vector<std::string> warnings;

  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const std::string_view line = strip_comment(raw);
    const auto colon = line.find(':');
    const auto words = tokens(line.substr(0, colon == std::string_view::npos ? line.size() : colon));
    if (words.empty() && colon == std::string_view::npos) continue;  // blank
    if (colon == std::string_view::npos || words.size() != 1) {
      throw ParseError(lineno, "expected '<directive>: ...'");
    }
    const std::string& key = words.front();
    const auto args = tokens(line.substr(colon + 1));

    if (key == "symbols") {
      if (alphabet) throw ParseError(lineno, "duplicate 'symbols' directive");
      if (args.empty()) throw ParseError(lineno, "'symbols' needs at least one symbol");
      try {
        alphabet.emplace(args);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    if (!alphabet) throw ParseError(lineno, "'symbols' must come before '" + key + "'");

    if (key == "mode") {
      if (mode) throw ParseError(lineno, "duplicate 'mode' directive");
      if (args.size() != 1) throw ParseError(lineno, "'mode' takes one value");
      if (args[0] == "allowable") {
        mode = BlockMode::allowable;
      } else if (args[0] == "forbidden") {
        mode = BlockMode::forbidden;
      } else {
        throw ParseError(lineno, "unknown mode '" + args[0] + "'");
      }
    } else if (key == "block") {
      if (args.size() != 3) throw ParseError(lineno, "'block' takes parent, left and right");
      OneBlock b{};
      Symbol* slots[] = {&b.parent, &b.left, &b.right};
      for (std::size_t i = 0; i < 3; ++i) {
        auto s = alphabet->find(args[i]);
        if (!s) throw ParseError(lineno, "undeclared symbol '" + args[i] + "'");
        *slots[i] = *s;
      }
      if (!listed.insert(b).second) {
        warnings.push_back("line " + std::to_string(lineno) + ": duplicate block (" + args[0] +
                           ";" + args[1] + "," + args[2] + ") ignored");
      }
    } else {
      throw ParseError(lineno, "unknown directive '" + key + "'");
    }
  }

  if (!alphabet) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'symbols' directive");
  const BlockMode m = mode.value_or(BlockMode::allowable);
  if (m == BlockMode::forbidden) {
    std::vector<OneBlock> banned(listed.begin(), listed.end());
    return {from_forbidden(*alphabet, banned), m, std::move(warnings)};
  }
  return {AllowableSet(std::move(*alphabet), std::move(listed)), m, std::move(warnings)};
}

AllowableSet parse_instance(std::string_view text) { return parse_instance_file(text).allowed; }

std::string format_instance(const AllowableSet& allowed) {
  const Alphabet& a = allowed.alphabet();
  std::string out = "symbols:";
  for (const auto& l : a.labels()) out += " " + l;
  out += "\n";
  for (const OneBlock& b : allowed.blocks()) {
    out += "block: " + a.label(b.parent) + " " + a.label(b.left) + " " + a.label(b.right) + "\n";
  }
  return out;
}

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Alphabet numbered_alphabet(std::size_t symbols) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < symbols; ++i) labels.push_back(std::to_string(i));
  return Alphabet(std::move(labels));
}

AllowableSet random_instance(std::size_t symbols, double density, std::mt19937_64& rng) {
  Alphabet alphabet = numbered_alphabet(symbols);
  std::set<OneBlock> blocks;
  for (Symbol p : alphabet.symbols()) {
    for (Symbol l : alphabet.symbols()) {
      for (Symbol r : alphabet.symbols()) {
        if (unit_interval(rng) < density) blocks.insert(blocks.end(), OneBlock{p, l, r});
      }
    }
  }
  return AllowableSet(std::move(alphabet), std::move(blocks));
}

AllowableSet random_instance(std::size_t symbols, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_instance(symbols, density, rng);
}

AllowableSet instance_from_mask(std::size_t symbols, std::uint64_t mask) {
  if (symbols * symbols * symbols > 64) {
    throw std::invalid_argument("instance_from_mask: at most 64 blocks");
  }
  Alphabet alphabet = numbered_alphabet(symbols);
  std::set<OneBlock> blocks;
  unsigned bit = 0;
  for (Symbol p : alphabet.symbols()) {
    for (Symbol l : alphabet.symbols()) {
      for (Symbol r : alphabet.symbols()) {
        if ((mask >> bit++) & 1U) blocks.insert(blocks.end(), OneBlock{p, l, r});
      }
    }
  }
  return AllowableSet(std::move(alphabet), std::move(blocks));
}

}  // namespace tsft
