#include <doctest.h>

#include <algorithm>
#include <map>
#include <variant>
#include <vector>

#include "bowvar/curves.hpp"
#include "bowvar/diagram.hpp"
#include "bowvar/error.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/tangent.hpp"
#include "bowvar/weights.hpp"

namespace {

using namespace bowvar;

Bct table_from(int rows, int cols, const std::vector<int>& flat) {
  Bct b = Bct::zero(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      b.set(i, j, static_cast<std::uint8_t>(flat[static_cast<size_t>(i * cols + j)]));
    }
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

// Fixed point {1,3} of the five-unit-row diagram with column margins (3, 2).
Bct point13() { return table_from(5, 2, {0, 1, 1, 0, 0, 1, 1, 0, 1, 0}); }

int count_type(const ClassifiedCurves& cc, CurveType t) {
  int n = 0;
  for (const Curve& c : cc.curves) {
    if (c.type == t) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("curves: site connectivity counts closed-square components") {
  CHECK(count_components({}) == 0);
  CHECK(count_components({{1, 0}}) == 1);
  // Horizontally and vertically adjacent squares touch.
  CHECK(count_components({{1, 0}, {1, 1}, {2, 1}}) == 1);
  // Diagonal contact also counts as touching.
  CHECK(count_components({{1, 0}, {2, 1}}) == 1);
  CHECK(count_components({{1, 0}, {3, 0}}) == 2);
  CHECK(count_components({{1, 0}, {2, 2}}) == 2);
}

TEST_CASE("curves: surgery data at the subset point 13") {
  const Bct b = point13();

  // 01 pair in row 1: matched block over rows 1..2, one box, lands at 23.
  const Surgery s1 = surgery_for_pair(b, KlPair{1, 1, 2, true});
  CHECK(s1.matched);
  CHECK(s1.block_end == 2);
  CHECK(s1.site == std::vector<Box>{{1, 4}});
  CHECK(s1.delta_y == 0);
  CHECK(s1.zero_offset_boxes == 0);
  CHECK(s1.components == 1);

  // 01 pair in row 3: matched block over rows 3..4.
  const Surgery s3 = surgery_for_pair(b, KlPair{3, 1, 2, true});
  CHECK(s3.matched);
  CHECK(s3.block_end == 4);

  // 10 pair in row 2: matched, moves a box one row up (delta_y = -1).
  const Surgery s2 = surgery_for_pair(b, KlPair{2, 1, 2, false});
  CHECK(s2.matched);
  CHECK(s2.site == std::vector<Box>{{1, 3}});
  CHECK(s2.delta_y == -1);

  // 10 pair in row 4: the walk never closes, so the block runs to the bottom
  // and the site keeps a leftmost-column box: a botched (noncompact) surgery.
  const Surgery s4 = surgery_for_pair(b, KlPair{4, 1, 2, false});
  CHECK_FALSE(s4.matched);
  CHECK(s4.block_end == 5);
  CHECK(s4.zero_offset_boxes > 0);

  // 10 pair in row 5: the site holds one rightmost-column box, the constraint
  // c_1 - c_2 + 1 = 2 demands two.
  const auto blocked = try_surgery_for_pair(b, KlPair{5, 1, 2, false});
  REQUIRE(std::holds_alternative<Blocked>(blocked));
  CHECK(std::get<Blocked>(blocked).available == 1);
  CHECK(std::get<Blocked>(blocked).required == 2);
  try {
    (void)surgery_for_pair(b, KlPair{5, 1, 2, false});
    CHECK(false);
  } catch (const BlockedError& e) {
    CHECK(e.available() == 1);
    CHECK(e.required() == 2);
  }
}

TEST_CASE("curves: surgery rejects a non-pair") {
  CHECK_THROWS_AS((void)surgery_for_pair(point13(), KlPair{1, 1, 2, false}), Error);
  try {
    (void)surgery_for_pair(point13(), KlPair{9, 1, 2, true});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPair);
  }
}

TEST_CASE("curves: classification at the subset point 13") {
  const FixedPointSet fps = enumerate_fixed_points(Margins{{1, 1, 1, 1, 1}, {3, 2}});
  const Bct b = point13();
  REQUIRE(locate(fps.points, b) == 1);
  const ClassifiedCurves cc = classify_curves(b, &fps.points);

  REQUIRE(cc.curves.size() == 4);
  CHECK(count_type(cc, CurveType::I) == 3);
  CHECK(count_type(cc, CurveType::II) == 1);
  CHECK(count_type(cc, CurveType::III) == 0);

  // The compact curves land at the subset points 23, 14, and 12.
  std::vector<std::string> endpoints;
  for (const Curve& c : cc.curves) {
    CHECK((c.type == CurveType::I) == c.compact);
    if (c.endpoint) endpoints.push_back(*subset_label(fps.points[*c.endpoint]));
  }
  std::sort(endpoints.begin(), endpoints.end());
  CHECK(endpoints == std::vector<std::string>{"12", "14", "23"});

  // Pencils: two compact curves share weight u2/u1; the curve to 12 shares
  // its weight u1/u2*h with the botched surgery.
  std::map<Weight, int> by_weight;
  for (const Curve& c : cc.curves) ++by_weight[c.weight];
  CHECK(by_weight[monomial(2, 2, 1, 0)] == 2);
  CHECK(by_weight[monomial(2, 1, 2, 1)] == 2);

  REQUIRE(cc.blocked.size() == 1);
  CHECK(cc.blocked[0].pair == KlPair{5, 1, 2, false});
  CHECK(cc.blocked[0].available == 1);
  CHECK(cc.blocked[0].required == 2);
}

TEST_CASE("curves: classification weights exhaust the tangent space") {
  const FixedPointSet fps = enumerate_fixed_points(Margins{{1, 1, 1, 1, 1}, {3, 2}});
  for (const Bct& b : fps.points) {
    const ClassifiedCurves cc = classify_curves(b, &fps.points);
    std::vector<Weight> curve_weights;
    for (const Curve& c : cc.curves) curve_weights.push_back(c.weight);
    std::sort(curve_weights.begin(), curve_weights.end());
    CHECK(curve_weights == tangent_weights(b));
  }
}

TEST_CASE("curves: the three-column example point 3") {
  const BraneDiagram d = parse_diagram("/2/3/5\\3\\2\\");
  const FixedPointSet fps = enumerate_fixed_points(charges(d));
  REQUIRE(fps.points.size() == 5);
  const Bct& b = fps.points[2];
  const ClassifiedCurves cc = classify_curves(b, &fps.points);

  REQUIRE(cc.curves.size() == 6);
  CHECK(count_type(cc, CurveType::I) == 4);
  CHECK(count_type(cc, CurveType::II) == 1);
  CHECK(count_type(cc, CurveType::III) == 1);

  // Surgeries split 2 / 3 / 0 across the column pairs (1,2), (2,3), (1,3).
  std::map<std::pair<int, int>, int> per_pair;
  for (const Curve& c : cc.curves) {
    if (!c.surgery) continue;
    const auto cols = std::minmax(c.surgery->source_col, c.surgery->target_col);
    ++per_pair[{cols.first, cols.second}];
  }
  CHECK(per_pair[{1, 2}] == 2);
  CHECK(per_pair[{2, 3}] == 3);
  CHECK(per_pair[{1, 3}] == 0);

  // The lone type III curve steps once between columns 2 and 3.
  for (const Curve& c : cc.curves) {
    if (c.type != CurveType::III) continue;
    CHECK(c.weight == monomial(3, 2, 3, 1));
    CHECK(c.type3_col_small == 2);
    CHECK(c.type3_col_big == 3);
    CHECK(c.type3_step == 1);
    CHECK_FALSE(c.compact);
  }

  // Mixed pencils: I+II at u3/u2 and I+III at u2/u3*h.
  std::map<Weight, std::vector<CurveType>> pencils;
  for (const Curve& c : cc.curves) pencils[c.weight].push_back(c.type);
  for (auto& [w, types] : pencils) std::sort(types.begin(), types.end());
  CHECK(pencils[monomial(3, 3, 2, 0)] == std::vector<CurveType>{CurveType::I, CurveType::II});
  CHECK(pencils[monomial(3, 2, 3, 1)] == std::vector<CurveType>{CurveType::I, CurveType::III});

  REQUIRE(cc.blocked.size() == 1);
  CHECK(cc.blocked[0].pair == KlPair{3, 1, 2, false});
  CHECK(cc.blocked[0].available == 1);
  CHECK(cc.blocked[0].required == 2);
}

TEST_CASE("curves: type III counts come from column margins alone") {
  // Columns (2, 5, 3): pair (1,2) contributes 3 curves, (1,3) one, (2,3) none.
  const std::vector<Curve> extra = nonsurgery_curves(Margins{{1, 1}, {2, 5, 3}});
  CHECK(extra.size() == 4);
  std::map<std::pair<int, int>, std::vector<i64>> steps;
  for (const Curve& c : extra) {
    CHECK(c.type == CurveType::III);
    CHECK_FALSE(c.compact);
    steps[{c.type3_col_small, c.type3_col_big}].push_back(c.type3_step);
  }
  CHECK(steps[{1, 2}] == std::vector<i64>{1, 2, 3});
  CHECK(steps[{1, 3}] == std::vector<i64>{1});
  CHECK(steps.count({2, 3}) == 0);
  // Each step t carries weight u_j/u_j' * h^t.
  for (const Curve& c : extra) {
    CHECK(c.weight == monomial(3, c.type3_col_small, c.type3_col_big, c.type3_step));
  }
}

TEST_CASE("curves: a matched block swap produces the endpoint table") {
  // The 2x2 identity matrix swaps into the anti-identity.
  const Bct id = table_from(2, 2, {1, 0, 0, 1});
  const std::vector<BlockSwap> swaps = block_swaps(id);
  REQUIRE(swaps.size() == 1);
  CHECK(swaps[0].top_row == 1);
  CHECK(swaps[0].bottom_row == 2);
  CHECK(swaps[0].result == table_from(2, 2, {0, 1, 1, 0}));

  // Every type I curve's endpoint equals its block swap's result.
  const FixedPointSet fps = enumerate_fixed_points(Margins{{1, 1, 1, 1, 1}, {3, 2}});
  for (const Bct& b : fps.points) {
    const ClassifiedCurves cc = classify_curves(b, &fps.points);
    const std::vector<BlockSwap> bs = block_swaps(b);
    for (const Curve& c : cc.curves) {
      if (c.type != CurveType::I) continue;
      REQUIRE(c.endpoint.has_value());
      const Bct& landed = fps.points[*c.endpoint];
      CHECK(std::count_if(bs.begin(), bs.end(),
                          [&](const BlockSwap& s) { return s.result == landed; }) >= 1);
    }
  }
}

TEST_CASE("curves: reciprocity at the endpoint") {
  const FixedPointSet fps = enumerate_fixed_points(Margins{{1, 1, 1, 1, 1}, {3, 2}});
  for (const Bct& b : fps.points) {
    const std::size_t here = *locate(fps.points, b);
    for (const Curve& c : classify_curves(b, &fps.points).curves) {
      if (c.type != CurveType::I) continue;
      // The same curve seen from the other end carries the reciprocal weight
      // and points back here.
      const ClassifiedCurves there = classify_curves(fps.points[*c.endpoint], &fps.points);
      const bool found = std::any_of(
          there.curves.begin(), there.curves.end(), [&](const Curve& mirror) {
            return mirror.type == CurveType::I && mirror.endpoint == here &&
                   mirror.weight == c.weight.reciprocal();
          });
      CHECK(found);
    }
  }
}
