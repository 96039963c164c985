#include "bowvar/selftest.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bowvar/butterfly.hpp"
#include "bowvar/curves.hpp"
#include "bowvar/diagram.hpp"
#include "bowvar/error.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/rng.hpp"
#include "bowvar/tangent.hpp"
#include "bowvar/weights.hpp"

namespace bowvar {
namespace {

// Heavy per-point suites look at a prefix of the enumeration so the corpus
// can stay large without the runtime exploding.
constexpr std::size_t kMaxPointsPerDiagram = 64;

struct CorpusEntry {
  Margins margins;
  BraneDiagram separated;
  BraneDiagram scrambled;
};

class Checker {
 public:
  explicit Checker(SuiteResult& result) : result_(result) {}
  bool check(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.ok) {
      result_.ok = false;
      result_.message = what;
    }
    return ok;
  }

 private:
  SuiteResult& result_;
};

BraneDiagram assemble_separated(const Margins& margins) {
  BraneDiagram d;
  const int n = static_cast<int>(margins.row.size());
  const int m = static_cast<int>(margins.col.size());
  d.branes.reserve(static_cast<size_t>(n + m));
  for (int i = 0; i < n; ++i) d.branes.push_back(BraneKind::NS5);
  for (int j = 0; j < m; ++j) d.branes.push_back(BraneKind::D5);
  d.mult.assign(static_cast<size_t>(n + m) + 1, 0);
  i64 running = 0;
  for (int i = 0; i < n; ++i) {
    running += margins.row[static_cast<size_t>(i)];
    d.mult[static_cast<size_t>(i) + 1] = running;
  }
  for (int j = 0; j < m; ++j) {
    running -= margins.col[static_cast<size_t>(j)];
    d.mult[static_cast<size_t>(n + j) + 1] = running;
  }
  return d;
}

BraneDiagram scramble(const BraneDiagram& separated, DetRng& rng) {
  BraneDiagram d = separated;
  const int total = d.total();
  for (int attempt = 0; attempt < 3 * total; ++attempt) {
    const int k = 1 + rng.below_int(total - 1);
    if (d.kind_at(k) == d.kind_at(k + 1)) continue;
    const i64 replacement = d.mult_at(k - 1) + d.mult_at(k + 1) + 1 - d.mult_at(k);
    if (replacement < 0) continue;
    d = hw_step(d, k);
  }
  return d;
}

CorpusEntry random_entry(DetRng& rng, int max_total) {
  for (;;) {
    const int n = 1 + rng.below_int(max_total - 1);
    const int m = 1 + rng.below_int(max_total - n);
    Margins margins;
    margins.row.assign(static_cast<size_t>(n), 0);
    margins.col.assign(static_cast<size_t>(m), 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if (rng.below(5) < 2) {
          ++margins.row[static_cast<size_t>(i)];
          ++margins.col[static_cast<size_t>(j)];
        }
      }
    }
    const auto over_cap = [](i64 v) { return v > 4; };
    if (std::any_of(margins.row.begin(), margins.row.end(), over_cap) ||
        std::any_of(margins.col.begin(), margins.col.end(), over_cap)) {
      continue;
    }
    CorpusEntry entry;
    entry.margins = margins;
    entry.separated = assemble_separated(margins);
    entry.scrambled = scramble(entry.separated, rng);
    return entry;
  }
}

void suite_diagram(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const std::string text = format_diagram(e.scrambled);
    c.check(parse_diagram(text) == e.scrambled, "parse(format) changed " + text);
    c.check(charges(e.scrambled) == e.margins, "charges drifted under transitions: " + text);
    c.check(charges(e.separated) == e.margins, "assembled separated diagram has wrong charges");
    const HwTrace trace = separate(e.scrambled);
    c.check(trace.separated == e.separated,
            "separation missed the canonical arrangement: " + text);
    c.check(is_separated(trace.separated), "separate() result is not separated");
    const int m = e.scrambled.d5_count();
    bool sigma_ok = static_cast<int>(trace.sigma.size()) == m;
    for (int j = 1; sigma_ok && j <= m; ++j) {
      int count = 0;
      for (int p = e.scrambled.d5_position(j) + 1; p <= e.scrambled.total(); ++p) {
        if (e.scrambled.kind_at(p) == BraneKind::NS5) ++count;
      }
      sigma_ok = trace.sigma[static_cast<size_t>(j - 1)] == count;
    }
    c.check(sigma_ok, "sigma disagrees with the direct count: " + text);
    const HwTrace idle = separate(e.separated);
    c.check(idle.steps.empty() &&
                std::all_of(idle.sigma.begin(), idle.sigma.end(), [](int s) { return s == 0; }),
            "separated diagram should separate trivially");
  }
}

void suite_weights(DetRng& rng, SuiteResult& out) {
  Checker c(out);
  constexpr int m = 3;
  auto random_weight = [&rng]() {
    Weight w = Weight::one(m);
    for (int j = 0; j < m; ++j) {
      w.u[static_cast<size_t>(j)] = static_cast<i64>(rng.below(7)) - 3;
    }
    w.h = static_cast<i64>(rng.below(7)) - 3;
    return w;
  };
  for (int round = 0; round < 50; ++round) {
    const Weight a = random_weight();
    const Weight b = random_weight();
    const Weight d = random_weight();
    c.check(a.times(b) == b.times(a), "weight product is not commutative");
    c.check(a.times(b.times(d)) == a.times(b).times(d), "weight product is not associative");
    c.check(a.times(a.reciprocal()) == Weight::one(m), "reciprocal is not an inverse");
    c.check(a.symplectic_dual().symplectic_dual() == a, "dual pairing is not an involution");
    const std::vector<int> sigma = {rng.below_int(4), rng.below_int(4), rng.below_int(4)};
    c.check(apply_twist(a.times(b), sigma) == apply_twist(a, sigma).times(apply_twist(b, sigma)),
            "coordinate twist is not multiplicative");
    const KClass x = KClass::from_weight(a).plus(KClass::from_weight(b, 2));
    const KClass y = KClass::from_weight(d);
    c.check(x.plus(y) == y.plus(x), "class sum is not commutative");
    c.check(x.times(y.plus(y)) == x.times(y).scaled(2), "class product is not bilinear");
    c.check(x.dual().dual() == x, "class dual is not an involution");
    c.check(hom(x, y).rank() == x.rank() * y.rank(), "hom rank mismatch");
    c.check(static_cast<i64>(weights_of(x).size()) == x.rank(), "weight expansion size mismatch");
    c.check(check_self_dual({a, a.symplectic_dual()}), "a dual pair was not recognized");
    c.check(!check_self_dual({a}), "a singleton cannot pair with itself");
    bool reported = false;
    try {
      weights_of(KClass(m).minus(KClass::from_weight(a)));
    } catch (const Error& err) {
      reported = err.kind() == ErrorKind::NegativeCoefficient;
    }
    c.check(reported, "a negative class must be reported, not truncated");
  }
}

void suite_enumeration(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const FixedPointSet fps = enumerate_fixed_points(e.margins);
    c.check(!fps.diagnostic.has_value(), "feasible margins produced a diagnostic");
    c.check(std::is_sorted(fps.points.begin(), fps.points.end()) &&
                std::adjacent_find(fps.points.begin(), fps.points.end()) == fps.points.end(),
            "enumeration is not strictly sorted");
    bool margins_ok = true;
    bool locate_ok = true;
    bool pairs_ok = true;
    const i64 expected_pairs = pair_count_from_margins(e.margins);
    for (std::size_t i = 0; i < fps.points.size(); ++i) {
      margins_ok = margins_ok && margins_of(fps.points[i]) == e.margins;
      const auto found = locate(fps.points, fps.points[i]);
      locate_ok = locate_ok && found.has_value() && *found == i;
      if (i < kMaxPointsPerDiagram) {
        pairs_ok = pairs_ok &&
                   static_cast<i64>(pair_table(fps.points[i]).pairs01.size()) == expected_pairs;
      }
    }
    c.check(margins_ok, "an enumerated table has wrong margins");
    c.check(locate_ok, "locate failed to round-trip");
    c.check(pairs_ok, "01-pair count disagrees with the margin formula");
    const int n = static_cast<int>(e.margins.row.size());
    const int m = static_cast<int>(e.margins.col.size());
    if (n * m <= 16) {
      std::size_t brute = 0;
      for (std::uint32_t mask = 0; mask < (1u << (n * m)); ++mask) {
        Bct b = Bct::zero(n, m);
        for (int bit = 0; bit < n * m; ++bit) {
          if (mask & (1u << bit)) b.bits[static_cast<size_t>(bit)] = 1;
        }
        if (margins_of(b) == e.margins) ++brute;
      }
      c.check(brute == fps.points.size(), "enumeration count disagrees with an exhaustive scan");
    }
  }
}

void suite_ties(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const std::vector<Bct> points = enumerate_fixed_points(e.margins).points;
    int swap_pos = 0;
    for (int k = 1; k < e.scrambled.total(); ++k) {
      if (e.scrambled.kind_at(k) == e.scrambled.kind_at(k + 1)) continue;
      const i64 replacement =
          e.scrambled.mult_at(k - 1) + e.scrambled.mult_at(k + 1) + 1 - e.scrambled.mult_at(k);
      if (replacement >= 0) {
        swap_pos = k;
        break;
      }
    }
    const std::size_t limit = std::min(points.size(), kMaxPointsPerDiagram);
    for (std::size_t i = 0; i < limit; ++i) {
      const TieDiagram ties = bct_to_ties(e.scrambled, points[i]);
      c.check(ties_to_bct(ties) == points[i], "tie encoding does not invert");
      if (swap_pos != 0) {
        const TieDiagram moved = hw_fixed_point(ties, swap_pos);
        c.check(moved.diagram == hw_step(e.scrambled, swap_pos),
                "transported ties sit on the wrong diagram");
        c.check(ties_to_bct(moved) == points[i], "a transition changed the underlying table");
      }
    }
  }
}

void suite_oracle(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const std::vector<Bct> points = enumerate_fixed_points(e.margins).points;
    const std::vector<int> sigma = separate(e.scrambled).sigma;
    const std::size_t limit = std::min(points.size(), kMaxPointsPerDiagram);
    for (std::size_t i = 0; i < limit; ++i) {
      const ButterflyDiagram bd = build_butterfly_diagram(bct_to_ties(e.scrambled, points[i]));
      const std::vector<KClass> xi = taut_restrictions(bd);
      bool ranks_ok = true;
      for (int k = 0; k <= e.scrambled.total(); ++k) {
        ranks_ok = ranks_ok && xi[static_cast<size_t>(k)].rank() == e.scrambled.mult_at(k);
      }
      c.check(ranks_ok, "restriction ranks disagree with segment multiplicities");
      const std::vector<Weight> via_butterfly = weights_of(tangent_class_oracle(bd));
      const std::vector<Weight> via_pairs = tangent_weights_twisted(points[i], sigma);
      c.check(via_butterfly == via_pairs,
              "butterfly tangent class disagrees with the pair formula at " +
                  format_diagram(e.scrambled) + " point " + std::to_string(i + 1));
    }
  }
}

void suite_curves(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const std::vector<Bct> points = enumerate_fixed_points(e.margins).points;
    const int m = static_cast<int>(e.margins.col.size());
    i64 type3_expected = 0;
    for (int j = 0; j < m; ++j) {
      for (int jp = j + 1; jp < m; ++jp) {
        type3_expected += std::max<i64>(
            0, e.margins.col[static_cast<size_t>(jp)] - e.margins.col[static_cast<size_t>(j)]);
      }
    }
    const std::size_t limit = std::min(points.size(), kMaxPointsPerDiagram);
    for (std::size_t i = 0; i < limit; ++i) {
      const PairTable table = pair_table(points[i]);
      const ClassifiedCurves cc = classify_curves(points[i]);
      c.check(cc.curves.size() == 2 * table.pairs01.size(),
              "curve census is not twice the 01-pair count");
      std::vector<Weight> curve_weights;
      curve_weights.reserve(cc.curves.size());
      for (const Curve& curve : cc.curves) curve_weights.push_back(curve.weight);
      std::sort(curve_weights.begin(), curve_weights.end());
      c.check(curve_weights == tangent_weights(points[i]),
              "curve weights do not exhaust the tangent space");
      bool structure_ok = true;
      i64 type3_seen = 0;
      for (const Curve& curve : cc.curves) {
        if (curve.type == CurveType::III) {
          ++type3_seen;
          structure_ok = structure_ok && !curve.compact && !curve.surgery.has_value();
          continue;
        }
        if (!curve.surgery.has_value()) {
          structure_ok = false;
          continue;
        }
        const Surgery& s = *curve.surgery;
        structure_ok = structure_ok && s.components == 1 && !s.site.empty();
        structure_ok = structure_ok && (s.matched == (s.zero_offset_boxes == 0));
        structure_ok = structure_ok && ((curve.type == CurveType::I) == s.matched);
        structure_ok = structure_ok && (curve.compact == s.matched);
      }
      c.check(structure_ok, "curve structure invariant failed");
      c.check(type3_seen == type3_expected, "margin-only curve count is wrong");
      bool blocked_ok = true;
      for (const BlockedRecord& b : cc.blocked) {
        blocked_ok = blocked_ok && !b.pair.one_in_big && b.available < b.required;
      }
      c.check(blocked_ok, "a blocked record is inconsistent");
    }
  }
}

void suite_reciprocity(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const std::vector<Bct> points = enumerate_fixed_points(e.margins).points;
    if (points.empty()) continue;
    std::vector<ClassifiedCurves> classified(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      classified[i] = classify_curves(points[i], &points);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<Bct> endpoint_tables;
      for (const Curve& curve : classified[i].curves) {
        if (curve.type != CurveType::I) continue;
        bool found = curve.endpoint.has_value();
        if (found) {
          endpoint_tables.push_back(points[*curve.endpoint]);
          found = false;
          for (const Curve& back : classified[*curve.endpoint].curves) {
            if (back.type == CurveType::I && back.endpoint.has_value() &&
                *back.endpoint == i && back.weight == curve.weight.reciprocal()) {
              found = true;
              break;
            }
          }
        }
        c.check(found, "no reciprocal curve at the far endpoint");
      }
      std::vector<Bct> swap_tables;
      for (const BlockSwap& swap : block_swaps(points[i])) swap_tables.push_back(swap.result);
      std::sort(endpoint_tables.begin(), endpoint_tables.end());
      std::sort(swap_tables.begin(), swap_tables.end());
      c.check(endpoint_tables == swap_tables,
              "block swaps do not match the compact curve endpoints");
    }
  }
}

// ---- Exhaustive two-column surgery oracle (small tables) -------------------
//
// Independently of the pair walk, a legal move of boxes from one column's
// Young diagram to the other's is characterized geometrically: the moved set
// takes a suffix of each of its rows, leaves the source diagram valid in
// place (strictly decreasing, no empty row above a filled one), is connected
// (corner contact counts), and admits a vertical shift landing it disjointly
// onto the target so the union is again a valid top-anchored diagram.  The
// oracle enumerates every subset and shift, and the engine's pair-derived
// surgeries must reproduce the result exactly.

struct MoveKey {
  int source = 0;
  int target = 0;
  std::vector<Box> site;
  i64 delta_y = 0;

  friend auto operator<=>(const MoveKey&, const MoveKey&) = default;
};

bool removal_valid(const std::vector<i64>& parts, const std::set<std::pair<i64, i64>>& site) {
  std::vector<i64> remaining;
  remaining.reserve(parts.size());
  for (std::size_t r = 0; r < parts.size(); ++r) {
    i64 removed = 0;
    i64 min_off = parts[r];
    for (i64 o = 0; o < parts[r]; ++o) {
      if (site.count({static_cast<i64>(r) + 1, o}) != 0) {
        ++removed;
        min_off = std::min(min_off, o);
      }
    }
    if (removed > 0 && min_off != parts[r] - removed) return false;  // not a suffix
    remaining.push_back(parts[r] - removed);
  }
  bool seen_zero = false;
  for (std::size_t r = 0; r < remaining.size(); ++r) {
    if (remaining[r] == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;  // an emptied row above a filled one
    if (r + 1 < remaining.size() && remaining[r + 1] > 0 && remaining[r] <= remaining[r + 1]) {
      return false;  // strictness lost in place
    }
  }
  return true;
}

bool landing_valid(const std::vector<i64>& target_parts,
                   const std::set<std::pair<i64, i64>>& site, i64 delta_y) {
  std::map<i64, std::set<i64>> rows;
  for (std::size_t r = 0; r < target_parts.size(); ++r) {
    for (i64 o = 0; o < target_parts[r]; ++o) rows[static_cast<i64>(r) + 1].insert(o);
  }
  for (const auto& [r, o] : site) {
    const i64 landed_row = r - delta_y;
    if (landed_row < 1) return false;
    if (!rows[landed_row].insert(o).second) return false;  // overlap
  }
  i64 prev_row = 0;
  i64 prev_len = -1;
  for (const auto& [r, offsets] : rows) {
    if (r != prev_row + 1) return false;  // gap, or not anchored at the top
    const i64 len = static_cast<i64>(offsets.size());
    if (*offsets.begin() != 0 || *offsets.rbegin() != len - 1) return false;  // not a prefix
    if (prev_len != -1 && len >= prev_len) return false;  // not strictly decreasing
    prev_row = r;
    prev_len = len;
  }
  return true;
}

std::set<MoveKey> brute_moves(const Bct& bct, int source, int target, bool* ambiguous) {
  const YoungTuple yt = young_diagrams(bct);
  const std::vector<i64>& source_parts = yt.columns[static_cast<size_t>(source - 1)];
  const std::vector<i64>& target_parts = yt.columns[static_cast<size_t>(target - 1)];
  std::vector<Box> boxes;
  for (std::size_t r = 0; r < source_parts.size(); ++r) {
    for (i64 o = 0; o < source_parts[r]; ++o) boxes.push_back({static_cast<i64>(r) + 1, o});
  }
  std::set<MoveKey> out;
  const int nboxes = static_cast<int>(boxes.size());
  for (std::uint32_t mask = 1; mask < (1u << nboxes); ++mask) {
    std::set<std::pair<i64, i64>> site;
    std::vector<Box> site_vec;
    for (int b = 0; b < nboxes; ++b) {
      if (mask & (1u << b)) {
        site.insert({boxes[static_cast<size_t>(b)].row, boxes[static_cast<size_t>(b)].offset});
        site_vec.push_back(boxes[static_cast<size_t>(b)]);
      }
    }
    if (!removal_valid(source_parts, site)) continue;
    if (count_components(site_vec) != 1) continue;
    int hits = 0;
    i64 found_dy = 0;
    for (i64 dy = -(bct.rows + 2); dy <= bct.rows + 2; ++dy) {
      if (landing_valid(target_parts, site, dy)) {
        ++hits;
        found_dy = dy;
      }
    }
    if (hits == 0) continue;
    if (hits > 1) *ambiguous = true;
    std::sort(site_vec.begin(), site_vec.end());
    out.insert({source, target, std::move(site_vec), found_dy});
  }
  return out;
}

// Pair-derived moves in the same orientation, blocked candidates included;
// the second set is the blocked subset.
std::pair<std::set<MoveKey>, std::set<MoveKey>> pair_moves(const Bct& bct, int source,
                                                           int target) {
  const PairTable table = pair_table(bct);
  std::pair<std::set<MoveKey>, std::set<MoveKey>> out;
  auto consider = [&](const KlPair& pair) {
    const int a = pair.one_in_big ? pair.col_big : pair.col_small;
    const int t = pair.one_in_big ? pair.col_small : pair.col_big;
    if (a != source || t != target) return;
    const auto result = try_surgery_for_pair(bct, pair);
    const bool blocked = std::holds_alternative<Blocked>(result);
    const Surgery& s =
        blocked ? std::get<Blocked>(result).attempt : std::get<Surgery>(result);
    MoveKey key{a, t, s.site, s.delta_y};
    if (blocked) out.second.insert(key);
    out.first.insert(std::move(key));
  };
  for (const KlPair& p : table.pairs01) consider(p);
  for (const KlPair& p : table.pairs10) consider(p);
  return out;
}

bool margin_blocks(const Bct& bct, const MoveKey& mv) {
  if (mv.source >= mv.target) return false;
  i64 zero_boxes = 0;
  for (const Box& b : mv.site) {
    if (b.offset == 0) ++zero_boxes;
  }
  if (zero_boxes < 1) return false;
  const Margins margins = margins_of(bct);
  const i64 required = margins.col[static_cast<size_t>(mv.source - 1)] -
                       margins.col[static_cast<size_t>(mv.target - 1)] + 1;
  return zero_boxes < required;
}

std::string describe_table(const Bct& b) {
  std::string s;
  for (int i = 0; i < b.rows; ++i) {
    if (i > 0) s += '|';
    for (int j = 0; j < b.cols; ++j) s += static_cast<char>('0' + b.at(i, j));
  }
  return s;
}

void suite_surgery_oracle(SuiteResult& out) {
  Checker c(out);
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
      Bct b = Bct::zero(n, 2);
      for (int bit = 0; bit < 2 * n; ++bit) {
        if (mask & (1u << bit)) b.bits[static_cast<size_t>(bit)] = 1;
      }
      const std::string label = describe_table(b);
      for (const auto& [source, target] : {std::pair<int, int>{1, 2}, std::pair<int, int>{2, 1}}) {
        bool ambiguous = false;
        const std::set<MoveKey> brute = brute_moves(b, source, target, &ambiguous);
        const auto [derived, derived_blocked] = pair_moves(b, source, target);
        c.check(!ambiguous, "a site admits two landing shifts at " + label);
        c.check(brute == derived, "surgery sets disagree with the exhaustive oracle at " + label);
        std::set<MoveKey> brute_blocked;
        for (const MoveKey& mv : brute) {
          if (margin_blocks(b, mv)) brute_blocked.insert(mv);
        }
        c.check(brute_blocked == derived_blocked,
                "blocked subsets disagree with the exhaustive oracle at " + label);
      }
    }
  }
}

void suite_skeleton_invariance(const std::vector<CorpusEntry>& corpus, SuiteResult& out,
                               ExecutionPolicy policy) {
  Checker c(out);
  auto untwisted = [](Skeleton sk) {
    std::vector<int> neg(sk.sigma.size());
    for (std::size_t j = 0; j < sk.sigma.size(); ++j) neg[j] = -sk.sigma[j];
    for (SkeletonEdge& edge : sk.edges) {
      edge.w1 = apply_twist(edge.w1, neg);
      edge.w2 = apply_twist(edge.w2, neg);
    }
    for (SkeletonRay& ray : sk.rays) ray.w = apply_twist(ray.w, neg);
    sk.sigma.assign(sk.sigma.size(), 0);
    sk.original = sk.separated;  // drop the frame-dependent parts
    return sk;
  };
  for (const CorpusEntry& e : corpus) {
    const Skeleton base = untwisted(skeleton(e.scrambled, policy));
    int pairs_done = 0;
    for (int k = 1; k <= e.scrambled.total() - 1 && pairs_done < 3; ++k) {
      if (e.scrambled.kind_at(k) == e.scrambled.kind_at(k + 1)) continue;
      const i64 replacement =
          e.scrambled.mult_at(k - 1) + e.scrambled.mult_at(k + 1) + 1 - e.scrambled.mult_at(k);
      if (replacement < 0) continue;
      ++pairs_done;
      const Skeleton moved = untwisted(skeleton(hw_step(e.scrambled, k), policy));
      c.check(base == moved, "skeleton changed under the transition at position " +
                                 std::to_string(k) + " of " + format_diagram(e.scrambled));
    }
  }
}

void suite_self_duality(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  for (const CorpusEntry& e : corpus) {
    const std::vector<Bct> points = enumerate_fixed_points(e.margins).points;
    const std::vector<int> sigma = separate(e.scrambled).sigma;
    const std::size_t limit = std::min(points.size(), kMaxPointsPerDiagram);
    for (std::size_t i = 0; i < limit; ++i) {
      c.check(check_self_dual(tangent_weights_twisted(points[i], sigma)),
              "tangent weights fail the dual pairing at point " + std::to_string(i + 1) +
                  " of " + format_diagram(e.scrambled));
    }
  }
}

void suite_parallel(const std::vector<CorpusEntry>& corpus, SuiteResult& out) {
  Checker c(out);
  std::size_t done = 0;
  for (const CorpusEntry& e : corpus) {
    if (++done > 10) break;
    c.check(skeleton(e.scrambled, ExecutionPolicy::Serial) ==
                skeleton(e.scrambled, ExecutionPolicy::Parallel),
            "parallel skeleton differs from serial");
    const std::vector<Bct> points = enumerate_fixed_points(e.margins).points;
    const std::vector<int> sigma = separate(e.scrambled).sigma;
    c.check(tangent_weights_batch(points, sigma, ExecutionPolicy::Serial) ==
                tangent_weights_batch(points, sigma, ExecutionPolicy::Parallel),
            "parallel weight batch differs from serial");
  }
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  DetRng rng(options.seed);
  const int max_total = std::max(2, options.max_total);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(static_cast<size_t>(std::max(0, options.diagrams)));
  for (int i = 0; i < options.diagrams; ++i) corpus.push_back(random_entry(rng, max_total));
  report.diagrams_generated = static_cast<int>(corpus.size());

  auto run = [&report](const std::string& name, auto&& body) {
    SuiteResult result;
    result.name = name;
    try {
      body(result);
    } catch (const std::exception& ex) {
      result.ok = false;
      result.message = std::string("exception: ") + ex.what();
    }
    report.suites.push_back(std::move(result));
  };

  run("diagram_transitions", [&](SuiteResult& r) { suite_diagram(corpus, r); });
  run("weight_algebra", [&](SuiteResult& r) { suite_weights(rng, r); });
  run("fixed_point_enumeration", [&](SuiteResult& r) { suite_enumeration(corpus, r); });
  run("tie_encoding", [&](SuiteResult& r) { suite_ties(corpus, r); });
  run("butterfly_oracle", [&](SuiteResult& r) { suite_oracle(corpus, r); });
  run("curve_completeness", [&](SuiteResult& r) { suite_curves(corpus, r); });
  run("curve_reciprocity", [&](SuiteResult& r) { suite_reciprocity(corpus, r); });
  if (options.include_surgery_oracle) {
    run("surgery_oracle", [](SuiteResult& r) { suite_surgery_oracle(r); });
  }
  run("skeleton_invariance",
      [&](SuiteResult& r) { suite_skeleton_invariance(corpus, r, options.policy); });
  run("tangent_self_duality", [&](SuiteResult& r) { suite_self_duality(corpus, r); });
  run("parallel_consistency", [&](SuiteResult& r) { suite_parallel(corpus, r); });

  for (const SuiteResult& s : report.suites) {
    report.ok = report.ok && s.ok;
    report.total_cases += s.cases;
  }
  return report;
}

}  // namespace bowvar
