#include <doctest.h>

#include <string>
#include <vector>

#include "bowvar/diagram.hpp"
#include "bowvar/error.hpp"

namespace {

using namespace bowvar;

// The running example used throughout the tests: six NS5 and five D5 branes
// in mixed order, with every interior multiplicity explicit.
constexpr const char* kMixed = "/2\\2/2\\4/3/3/4\\3/2\\2\\";

bool throws_kind(const char* text, ErrorKind kind) {
  try {
    (void)parse_diagram(text);
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("diagram: parse and format round-trip the canonical form") {
  const BraneDiagram d = parse_diagram(kMixed);
  CHECK(format_diagram(d) == kMixed);
  CHECK(d.total() == 11);
  CHECK(d.ns5_count() == 6);
  CHECK(d.d5_count() == 5);
  CHECK(d.kind_at(1) == BraneKind::NS5);
  CHECK(d.kind_at(2) == BraneKind::D5);
  CHECK(d.kind_at(11) == BraneKind::D5);
  // Outer segments are implicit zeros; interior ones match the text.
  CHECK(d.mult_at(0) == 0);
  CHECK(d.mult_at(1) == 2);
  CHECK(d.mult_at(5) == 3);
  CHECK(d.mult_at(11) == 0);
  // Ordinal -> position lookups cover both brane families.
  CHECK(d.ns5_position(1) == 1);
  CHECK(d.ns5_position(4) == 6);
  CHECK(d.d5_position(1) == 2);
  CHECK(d.d5_position(5) == 11);
  // Reparsing the formatted text yields the identical value.
  CHECK(parse_diagram(format_diagram(d)) == d);
}

TEST_CASE("diagram: whitespace and the s/b alphabet are accepted") {
  const BraneDiagram canonical = parse_diagram("/2\\2/1\\");
  CHECK(parse_diagram(" / 2 \\ 2 / 1 \\ ") == canonical);
  CHECK(parse_diagram("s2b2s1b") == canonical);
  CHECK(parse_diagram("s 2 b2s1 b") == canonical);
  // Formatting never uses the alias alphabet.
  CHECK(format_diagram(canonical) == "/2\\2/1\\");
  // Multi-digit multiplicities survive the round trip.
  const BraneDiagram wide = parse_diagram("/10/2\\12\\");
  CHECK(wide.mult_at(1) == 10);
  CHECK(wide.mult_at(3) == 12);
  CHECK(format_diagram(wide) == "/10/2\\12\\");
}

TEST_CASE("diagram: malformed inputs are rejected with MalformedDiagram") {
  CHECK(throws_kind("", ErrorKind::MalformedDiagram));
  CHECK(throws_kind("   ", ErrorKind::MalformedDiagram));
  CHECK(throws_kind("2/2\\", ErrorKind::MalformedDiagram));   // leading integer
  CHECK(throws_kind("/2\\2", ErrorKind::MalformedDiagram));   // trailing integer
  CHECK(throws_kind("//", ErrorKind::MalformedDiagram));      // missing multiplicity
  CHECK(throws_kind("/2 3\\", ErrorKind::MalformedDiagram));  // two integers in one gap
  CHECK(throws_kind("/2x\\", ErrorKind::MalformedDiagram));   // illegal character
  CHECK(throws_kind("/-1\\", ErrorKind::MalformedDiagram));   // sign is not part of the grammar
  CHECK(throws_kind("3", ErrorKind::MalformedDiagram));
}

TEST_CASE("diagram: charges of the running example") {
  const Margins m = charges(parse_diagram(kMixed));
  CHECK(m.row == std::vector<i64>{2, 1, 1, 2, 3, 2});
  CHECK(m.col == std::vector<i64>{5, 2, 2, 0, 2});
}

TEST_CASE("diagram: charge bookkeeping on tiny diagrams") {
  // A lone brane is a legal diagram: there is no gap, hence no multiplicity.
  const Margins lone = charges(parse_diagram("/"));
  CHECK(lone.row == std::vector<i64>{0});
  CHECK(lone.col.empty());

  // A single NS5 next to a single D5, no D3 branes anywhere.
  const Margins trivial = charges(parse_diagram("/0\\"));
  CHECK(trivial.row == std::vector<i64>{0});
  CHECK(trivial.col == std::vector<i64>{0});

  // A separated chain: each NS5 charge is a multiplicity difference, each D5
  // charge additionally counts nothing (no NS5 sits to its right).
  const Margins sep = charges(parse_diagram("/1/2/3/4/5\\2\\"));
  CHECK(sep.row == std::vector<i64>{1, 1, 1, 1, 1});
  CHECK(sep.col == std::vector<i64>{3, 2});

  // An anti-separated pair: the D5 charge counts the NS5 to its right and the
  // NS5 charge counts the D5 to its left, so both pick up +1 here.
  const Margins anti = charges(parse_diagram("\\0/"));
  CHECK(anti.row == std::vector<i64>{1});
  CHECK(anti.col == std::vector<i64>{1});

  // With D3 branes in the middle the difference terms go negative.
  const Margins neg = charges(parse_diagram("\\2/"));
  CHECK(neg.row == std::vector<i64>{-1});
  CHECK(neg.col == std::vector<i64>{-1});
}

TEST_CASE("diagram: a transition preserves both charge vectors") {
  const BraneDiagram d = parse_diagram(kMixed);
  const Margins before = charges(d);
  for (int k = 1; k < d.total(); ++k) {
    if (d.kind_at(k) == d.kind_at(k + 1)) continue;
    const BraneDiagram moved = hw_step(d, k);
    CHECK(charges(moved) == before);
    // The move is an involution: applying it again restores the diagram.
    CHECK(hw_step(moved, k) == d);
  }
}

TEST_CASE("diagram: transition multiplicity arithmetic") {
  // Swapping '/2\' reads d1 + d3 + 1 - d2 on the new middle segment.
  const BraneDiagram d = parse_diagram("/2\\2/1\\");
  const BraneDiagram moved = hw_step(d, 1);
  CHECK(format_diagram(moved) == "\\1/2/1\\");

  CHECK_THROWS_AS((void)hw_step(parse_diagram("/2/3\\"), 1), Error);
  try {
    (void)hw_step(parse_diagram("/2/3\\"), 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SameKind);
  }
  // '\2/' would need multiplicity 0 + 0 + 1 - 2 = -1 between the swapped pair.
  try {
    (void)hw_step(parse_diagram("\\2/"), 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeMultiplicity);
  }
}

TEST_CASE("diagram: separation of the running example") {
  const BraneDiagram d = parse_diagram(kMixed);
  CHECK_FALSE(is_separated(d));

  const HwTrace trace = separate(d);
  CHECK(is_separated(trace.separated));
  CHECK(format_diagram(trace.separated) == "/2/3/4/6/9/11\\6\\4\\2\\2\\");
  CHECK(trace.sigma == std::vector<int>{5, 4, 1, 0, 0});
  // Charges are preserved by the whole separation sequence.
  CHECK(charges(trace.separated) == charges(d));
  // Replaying the recorded steps one at a time reproduces the result.
  BraneDiagram replay = d;
  for (const HwStepRecord& s : trace.steps) {
    CHECK(replay.mult_at(s.position) == s.old_mult);
    replay = hw_step(replay, s.position);
    CHECK(replay.mult_at(s.position) == s.new_mult);
  }
  CHECK(replay == trace.separated);
}

TEST_CASE("diagram: separating an already separated diagram is a no-op") {
  const BraneDiagram d = parse_diagram("/1/2/3/4/5\\2\\");
  CHECK(is_separated(d));
  const HwTrace trace = separate(d);
  CHECK(trace.separated == d);
  CHECK(trace.steps.empty());
  CHECK(trace.sigma == std::vector<int>{0, 0});
}

TEST_CASE("diagram: separated multiplicities are the charge partial sums") {
  // After separation the segments under the NS5 block carry running sums of
  // row charges, and the D5 block steps back down by the column charges.
  const HwTrace trace = separate(parse_diagram(kMixed));
  const Margins m = charges(trace.separated);
  const BraneDiagram& s = trace.separated;
  i64 run = 0;
  for (int i = 1; i <= s.ns5_count(); ++i) {
    run += m.row[static_cast<size_t>(i - 1)];
    CHECK(s.mult_at(i) == run);
  }
  for (int j = 1; j <= s.d5_count(); ++j) {
    run -= m.col[static_cast<size_t>(j - 1)];
    CHECK(s.mult_at(s.ns5_count() + j) == run);
  }
  CHECK(run == 0);
}
