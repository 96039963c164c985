#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "bowvar/butterfly.hpp"
#include "bowvar/diagram.hpp"
#include "bowvar/error.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/tangent.hpp"
#include "bowvar/weights.hpp"

namespace {

using namespace bowvar;

constexpr const char* kMixed = "/2\\2/2\\4/3/3/4\\3/2\\2\\";

Bct reference_point() {
  Bct b = Bct::zero(6, 5);
  const int flat[30] = {1, 1, 0, 0, 0,  //
                        1, 0, 0, 0, 0,  //
                        0, 0, 1, 0, 0,  //
                        1, 0, 1, 0, 0,  //
                        1, 1, 0, 0, 1,  //
                        1, 0, 0, 0, 1};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 5; ++j) b.set(i, j, static_cast<std::uint8_t>(flat[i * 5 + j]));
  }
  return b;
}

Weight monomial(int m, int j_num, int j_den, i64 h) {
  Weight w = Weight::one(m);
  w.u[static_cast<size_t>(j_num - 1)] += 1;
  w.u[static_cast<size_t>(j_den - 1)] -= 1;
  w.h = h;
  return w;
}

}  // namespace

TEST_CASE("tangent: pair table of the reference point") {
  const PairTable pt = pair_table(reference_point());
  CHECK(pt.pairs01.size() == 8);
  CHECK(pt.pairs10.size() == 24);
  // Column 4 is empty, so no pair holds its 1 there: a 01 pair keeps the 1 in
  // col_big, a 10 pair in col_small.  (The 0 of a pair may well sit in it.)
  for (const KlPair& p : pt.pairs01) CHECK(p.col_big != 4);
  for (const KlPair& p : pt.pairs10) CHECK(p.col_small != 4);
  // Prefix sums: s[i][j] counts 1s in column j among the first i rows.
  CHECK(pt.s[0][1] == 0);
  CHECK(pt.s[6][1] == 5);
  CHECK(pt.s[4][3] == 2);
  CHECK(pt.s[3][2] == 1);
  // A 10 pair: row 2 has entries (1, 0) in columns (1, 3).
  const KlPair row2{2, 1, 3, false};
  CHECK(std::count(pt.pairs10.begin(), pt.pairs10.end(), row2) == 1);
}

TEST_CASE("tangent: one pair's dual weight couple") {
  // Row 3 holds (0, 1) in columns (1, 3): a 01 pair whose h exponent is
  // s[3][3] - s[3][1] = 1 - 2 = -1 in separated coordinates.
  const Bct b = reference_point();
  const PairTable pt = pair_table(b);
  const KlPair target{3, 1, 3, true};
  REQUIRE(std::count(pt.pairs01.begin(), pt.pairs01.end(), target) == 1);

  const i64 delta = pt.s[3][3] - pt.s[3][1];
  const Weight first = monomial(5, 1, 3, delta);
  const Weight second = first.symplectic_dual();
  const std::vector<Weight> all = tangent_weights(b);
  CHECK(std::count(all.begin(), all.end(), first) >= 1);
  CHECK(std::count(all.begin(), all.end(), second) >= 1);
}

TEST_CASE("tangent: twisted weights at the reference point match the display") {
  const BraneDiagram d = parse_diagram(kMixed);
  const std::vector<Weight> got = tangent_weights_general(d, reference_point());

  // The printed list of this example has 15 entries; the pairing w <-> h/w
  // forces the sixteenth, u5/u3.
  std::vector<Weight> expected = {
      monomial(5, 2, 5, 4), monomial(5, 2, 3, 4), monomial(5, 1, 3, 3), monomial(5, 2, 3, 3),
      monomial(5, 4, 5, 2), monomial(5, 3, 5, 1), monomial(5, 4, 5, 1), monomial(5, 5, 3, 1),
      monomial(5, 3, 5, 0), monomial(5, 5, 4, 0), monomial(5, 5, 4, -1), monomial(5, 3, 2, -2),
      monomial(5, 3, 1, -2), monomial(5, 3, 2, -3), monomial(5, 5, 2, -3),
      monomial(5, 5, 3, 0),
  };
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  CHECK(check_self_dual(got));
}

TEST_CASE("tangent: weights agree with the ground-truth character expansion") {
  const BraneDiagram d = parse_diagram(kMixed);
  const FixedPointSet fps = enumerate_fixed_points(charges(d));
  const std::vector<int> sigma = separate(d).sigma;
  // Spot-check a spread of fixed points against the butterfly oracle.
  for (std::size_t idx : {std::size_t{0}, std::size_t{41}, std::size_t{107}, std::size_t{122}}) {
    const Bct& b = fps.points[idx];
    const ButterflyDiagram bd = build_butterfly_diagram(bct_to_ties(d, b));
    CHECK(weights_of(tangent_class_oracle(bd)) == tangent_weights_twisted(b, sigma));
  }
}

TEST_CASE("tangent: margin formula counts pairs for every point") {
  const BraneDiagram d = parse_diagram(kMixed);
  const Margins m = charges(d);
  const i64 predicted = pair_count_from_margins(m);
  CHECK(predicted == 8);
  for (const Bct& b : enumerate_fixed_points(m).points) {
    CHECK(static_cast<i64>(pair_table(b).pairs01.size()) == predicted);
    CHECK(static_cast<i64>(tangent_weights(b).size()) == 2 * predicted);
  }
}

TEST_CASE("tangent: general entry point validates margins") {
  const BraneDiagram d = parse_diagram(kMixed);
  try {
    (void)tangent_weights_general(d, Bct::zero(6, 5));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MarginMismatch);
  }
}

TEST_CASE("tangent: twist length is checked") {
  CHECK_THROWS_AS((void)tangent_weights_twisted(reference_point(), {1, 2, 3}), Error);
}

TEST_CASE("tangent: batch computation preserves order") {
  const BraneDiagram d = parse_diagram(kMixed);
  const FixedPointSet fps = enumerate_fixed_points(charges(d));
  const std::vector<int> sigma = separate(d).sigma;
  const auto batch = tangent_weights_batch(fps.points, sigma, ExecutionPolicy::Serial);
  REQUIRE(batch.size() == fps.points.size());
  for (std::size_t i = 0; i < fps.points.size(); ++i) {
    CHECK(batch[i] == tangent_weights_twisted(fps.points[i], sigma));
  }
}
