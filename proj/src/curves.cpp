#include "bowvar/curves.hpp"

#include <algorithm>
#include <map>

#include "bowvar/error.hpp"

namespace bowvar {

int count_components(const std::vector<Box>& site) {
  const size_t n = site.size();
  std::vector<int> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  auto find = [&parent](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const i64 dr = site[i].row - site[j].row;
      const i64 dc = site[i].offset - site[j].offset;
      if (dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1) {
        parent[static_cast<size_t>(find(static_cast<int>(j)))] = find(static_cast<int>(i));
      }
    }
  }
  int components = 0;
  for (size_t i = 0; i < n; ++i) {
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++components;
  }
  return components;
}

std::variant<Surgery, Blocked> try_surgery_for_pair(const Bct& bct, const KlPair& pair) {
  const int n = bct.rows;
  const int m = bct.cols;
  if (pair.row < 1 || pair.row > n || pair.col_small < 1 || pair.col_big <= pair.col_small ||
      pair.col_big > m) {
    throw Error(ErrorKind::NotAPair, "pair indices out of range");
  }
  const auto small_bit = bct.at(pair.row - 1, pair.col_small - 1);
  const auto big_bit = bct.at(pair.row - 1, pair.col_big - 1);
  if (small_bit == big_bit || (big_bit == 1) != pair.one_in_big) {
    throw Error(ErrorKind::NotAPair, "table entries do not form the stated pair");
  }
  const int a = pair.one_in_big ? pair.col_big : pair.col_small;  // source: has the 1
  const int t = pair.one_in_big ? pair.col_small : pair.col_big;  // target: has the 0

  Surgery s;
  s.source_col = a;
  s.target_col = t;
  s.pair_row = pair.row;

  // Walk the running difference of the two columns downward from the pair row;
  // the block closes at the first return to zero.
  i64 delta = 0;
  int block_end = n;
  bool matched = false;
  for (int k = pair.row; k <= n; ++k) {
    delta += static_cast<i64>(bct.at(k - 1, a - 1)) - static_cast<i64>(bct.at(k - 1, t - 1));
    if (delta == 0) {
      block_end = k;
      matched = true;
      break;
    }
  }
  s.block_end = block_end;
  s.matched = matched;

  std::vector<int> source_rows, target_rows;
  for (int k = pair.row; k <= block_end; ++k) {
    if (bct.at(k - 1, a - 1)) source_rows.push_back(k);
    if (bct.at(k - 1, t - 1)) target_rows.push_back(k);
  }

  // Column prefix sums up to the pair row and per-source-row, for the vertical
  // shift and the site rows.
  auto prefix = [&bct](int upto_row, int col) {
    i64 c = 0;
    for (int k = 1; k <= upto_row; ++k) c += bct.at(k - 1, col - 1);
    return c;
  };
  s.delta_y = prefix(pair.row, a) - prefix(pair.row, t) - 1;

  // Site: the t-th source part shrinks to the t-th target part; leftover
  // source parts are removed whole.
  for (size_t idx = 0; idx < source_rows.size(); ++idx) {
    const int k = source_rows[idx];
    const i64 lam_row = prefix(k, a);
    const i64 part = static_cast<i64>(n) - k + 1;
    const i64 start =
        (idx < target_rows.size()) ? (static_cast<i64>(n) - target_rows[idx] + 1) : 0;
    for (i64 off = start; off < part; ++off) {
      s.site.push_back({lam_row, off});
    }
  }
  std::sort(s.site.begin(), s.site.end());
  s.zero_offset_boxes = static_cast<i64>(
      std::count_if(s.site.begin(), s.site.end(), [](const Box& b) { return b.offset == 0; }));
  s.components = count_components(s.site);

  if (a < t && s.zero_offset_boxes >= 1) {
    const Margins margins = margins_of(bct);
    const i64 required =
        margins.col[static_cast<size_t>(a - 1)] - margins.col[static_cast<size_t>(t - 1)] + 1;
    if (s.zero_offset_boxes < required) {
      const i64 available = s.zero_offset_boxes;
      return Blocked{std::move(s), available, required};
    }
  }
  return s;
}

Surgery surgery_for_pair(const Bct& bct, const KlPair& pair) {
  auto result = try_surgery_for_pair(bct, pair);
  if (std::holds_alternative<Blocked>(result)) {
    const Blocked& b = std::get<Blocked>(result);
    throw BlockedError(b.available, b.required);
  }
  return std::get<Surgery>(std::move(result));
}

const char* to_string(CurveType t) {
  switch (t) {
    case CurveType::I:
      return "I";
    case CurveType::II:
      return "II";
    case CurveType::III:
      return "III";
  }
  return "?";
}

std::vector<Curve> nonsurgery_curves(const Margins& margins) {
  const int m = static_cast<int>(margins.col.size());
  std::vector<Curve> out;
  for (int j = 1; j <= m; ++j) {
    for (int jp = j + 1; jp <= m; ++jp) {
      const i64 count = margins.col[static_cast<size_t>(jp - 1)] -
                        margins.col[static_cast<size_t>(j - 1)];
      for (i64 step = 1; step <= count; ++step) {
        Curve c;
        c.type = CurveType::III;
        c.compact = false;
        c.weight = Weight::one(m);
        c.weight.u[static_cast<size_t>(j - 1)] = 1;
        c.weight.u[static_cast<size_t>(jp - 1)] = -1;
        c.weight.h = step;
        c.type3_col_small = j;
        c.type3_col_big = jp;
        c.type3_step = step;
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

namespace {

Bct swap_block(const Bct& bct, int col_a, int col_b, int row_first, int row_last) {
  Bct out = bct;
  for (int k = row_first; k <= row_last; ++k) {
    const auto va = out.at(k - 1, col_a - 1);
    const auto vb = out.at(k - 1, col_b - 1);
    out.set(k - 1, col_a - 1, vb);
    out.set(k - 1, col_b - 1, va);
  }
  return out;
}

Weight pair_weight(const Surgery& s, int m) {
  Weight w = Weight::one(m);
  w.u[static_cast<size_t>(s.source_col - 1)] = 1;
  w.u[static_cast<size_t>(s.target_col - 1)] = -1;
  w.h = -s.delta_y;
  return w;
}

}  // namespace

ClassifiedCurves classify_curves(const Bct& bct, const std::vector<Bct>* universe) {
  const PairTable table = pair_table(bct);
  const int m = bct.cols;
  ClassifiedCurves out;

  auto handle_pair = [&](const KlPair& pair) {
    auto result = try_surgery_for_pair(bct, pair);
    if (std::holds_alternative<Blocked>(result)) {
      const Blocked& b = std::get<Blocked>(result);
      out.blocked.push_back({pair, b.available, b.required});
      return;
    }
    Surgery s = std::get<Surgery>(std::move(result));
    Curve c;
    c.weight = pair_weight(s, m);
    c.type = s.matched ? CurveType::I : CurveType::II;
    c.compact = s.matched;
    if (s.matched && universe != nullptr) {
      const Bct other = swap_block(bct, s.source_col, s.target_col, s.pair_row, s.block_end);
      c.endpoint = locate(*universe, other);
    }
    c.surgery = std::move(s);
    out.curves.push_back(std::move(c));
  };
  for (const KlPair& pair : table.pairs01) handle_pair(pair);
  for (const KlPair& pair : table.pairs10) handle_pair(pair);

  for (Curve& c : nonsurgery_curves(margins_of(bct))) out.curves.push_back(std::move(c));
  return out;
}

std::vector<BlockSwap> block_swaps(const Bct& bct) {
  const PairTable table = pair_table(bct);
  std::vector<BlockSwap> out;
  auto handle_pair = [&](const KlPair& pair) {
    auto result = try_surgery_for_pair(bct, pair);
    if (!std::holds_alternative<Surgery>(result)) return;
    const Surgery& s = std::get<Surgery>(result);
    if (!s.matched) return;
    BlockSwap swap;
    swap.top_row = s.pair_row;
    swap.bottom_row = s.block_end;
    swap.col_small = pair.col_small;
    swap.col_big = pair.col_big;
    swap.result = swap_block(bct, pair.col_small, pair.col_big, s.pair_row, s.block_end);
    out.push_back(std::move(swap));
  };
  for (const KlPair& pair : table.pairs01) handle_pair(pair);
  for (const KlPair& pair : table.pairs10) handle_pair(pair);
  return out;
}

Skeleton skeleton(const BraneDiagram& d, ExecutionPolicy policy) {
  Skeleton sk;
  sk.original = d;
  HwTrace trace = separate(d);
  sk.separated = trace.separated;
  sk.sigma = trace.sigma;

  FixedPointSet fps = enumerate_fixed_points(charges(sk.separated));
  sk.fixed_points = std::move(fps.points);

  std::vector<ClassifiedCurves> per_point(sk.fixed_points.size());
  for_each_index(policy, sk.fixed_points.size(), [&](std::size_t i) {
    per_point[i] = classify_curves(sk.fixed_points[i], &sk.fixed_points);
  });

  for (std::size_t i = 0; i < sk.fixed_points.size(); ++i) {
    // Pencils: curves through this point grouped by weight.
    std::map<Weight, std::vector<const Curve*>> pencils;
    for (const Curve& c : per_point[i].curves) pencils[c.weight].push_back(&c);

    for (const auto& [w, members] : pencils) {
      const i64 dim = static_cast<i64>(members.size());
      const Weight tw = apply_twist(w, sk.sigma);
      bool has_noncompact = false;
      std::vector<CurveType> types;
      for (const Curve* c : members) {
        if (!c->compact) has_noncompact = true;
        if (std::find(types.begin(), types.end(), c->type) == types.end()) {
          types.push_back(c->type);
        }
        if (c->type == CurveType::I && c->endpoint && *c->endpoint > i) {
          sk.edges.push_back({i, *c->endpoint, dim, tw, tw.reciprocal()});
        }
      }
      if (has_noncompact) {
        std::sort(types.begin(), types.end());
        sk.rays.push_back({i, dim, tw, std::move(types)});
      }
    }
  }
  std::sort(sk.edges.begin(), sk.edges.end(), [](const SkeletonEdge& a, const SkeletonEdge& b) {
    if (a.p1 != b.p1) return a.p1 < b.p1;
    if (a.p2 != b.p2) return a.p2 < b.p2;
    return a.w1 < b.w1;
  });
  std::sort(sk.rays.begin(), sk.rays.end(), [](const SkeletonRay& a, const SkeletonRay& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.w < b.w;
  });
  return sk;
}

}  // namespace bowvar
