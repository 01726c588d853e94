#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tsft/instance.hpp"

using namespace tsft;

namespace {

std::size_t error_line(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse the reference instances") {
  CHECK(parse_instance(fixtures::one_fork_text) == fixtures::one_fork());
  CHECK(parse_instance(fixtures::crossing_text) == fixtures::crossing());

  const InstanceFile f = parse_instance_file("symbols: a\nmode: forbidden\n");
  CHECK(f.mode == BlockMode::forbidden);
  CHECK(f.allowed == fixtures::single_loop());
  CHECK(f.warnings.empty());

  CHECK(parse_instance("  # header\n\nsymbols: a   # one symbol\nblock: a a a\n") == fixtures::single_loop());
  CHECK(parse_instance("symbols: a\nmode: allowable\n").empty());
  CHECK(parse_instance("symbols:a b\nblock:a b b\n").size() == 1);
}

TEST_CASE("forbidden mode takes the complement") {
  const AllowableSet b = parse_instance("symbols: 0 1\nmode: forbidden\nblock: 0 0 0\nblock: 1 1 1\n");
  CHECK(b.size() == 6);
  CHECK_FALSE(b.contains(OneBlock{Symbol{0}, Symbol{0}, Symbol{0}}));
  CHECK(b.contains(OneBlock{Symbol{0}, Symbol{0}, Symbol{1}}));
  // Mode may follow the blocks.
  CHECK(parse_instance("symbols: 0 1\nblock: 0 0 0\nblock: 1 1 1\nmode: forbidden\n") == b);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("block: x y z\nsymbols: x y z\n") == 1);
  CHECK(error_line("symbols: a b\n\nblock: a b c\n") == 3);
  CHECK(error_line("symbols: a b\nblock: a b\n") == 2);
  CHECK(error_line("symbols: a a\n") == 1);
  CHECK(error_line("symbols:\n") == 1);
  CHECK(error_line("symbols: a\nsymbols: a\n") == 2);
  CHECK(error_line("symbols: a\nmode: sideways\n") == 2);
  CHECK(error_line("symbols: a\nmode: forbidden\nmode: forbidden\n") == 3);
  CHECK(error_line("symbols: a\nblocks: a a a\n") == 2);
  CHECK(error_line("symbols: a\njust words\n") == 2);
  CHECK(error_line("# nothing\n") >= 1);
  CHECK(error_line("") == 1);
  CHECK_THROWS_WITH_AS(parse_instance("symbols: a\nblock: a a b\n"), "line 2: undeclared symbol 'b'", ParseError);
}

TEST_CASE("duplicate blocks warn once each and are deduplicated") {
  const InstanceFile f = parse_instance_file("symbols: a\nblock: a a a\nblock: a a a\nblock: a a a\n");
  CHECK(f.allowed == fixtures::single_loop());
  REQUIRE(f.warnings.size() == 2);
  CHECK(f.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("format_instance round-trips") {
  CHECK(format_instance(fixtures::one_fork()) ==
        "symbols: 0 1 2\nblock: 0 1 1\nblock: 0 1 2\nblock: 1 2 2\nblock: 2 1 1\n");
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const AllowableSet b = random_instance(1 + rng() % 6, unit_interval(rng), rng);
    REQUIRE(parse_instance(format_instance(b)) == b);
  }
}

TEST_CASE("random instances are deterministic") {
  CHECK(random_instance(4, 0.3, 99) == random_instance(4, 0.3, 99));
  CHECK(random_instance(3, 1.0, 1).size() == 27);
  CHECK(random_instance(3, 0.0, 1).empty());
  CHECK(numbered_alphabet(3).labels() == std::vector<std::string>{"0", "1", "2"});
  // The first draw is fixed by the generator and the 53-bit mapping.
  std::mt19937_64 rng(1);
  const double u = unit_interval(rng);
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  std::mt19937_64 again(1);
  CHECK(u == static_cast<double>(again() >> 11) / 9007199254740992.0);
}

TEST_CASE("instance_from_mask") {
  CHECK(instance_from_mask(2, 0).empty());
  CHECK(instance_from_mask(2, 255).size() == 8);
  CHECK(instance_from_mask(2, 1).blocks() == std::set<OneBlock>{{Symbol{0}, Symbol{0}, Symbol{0}}});
  CHECK(instance_from_mask(2, 128).blocks() == std::set<OneBlock>{{Symbol{1}, Symbol{1}, Symbol{1}}});
  CHECK(instance_from_mask(4, ~std::uint64_t{0}).size() == 64);
  CHECK_THROWS_AS(instance_from_mask(5, 1), std::invalid_argument);
}
