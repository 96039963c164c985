#include "bowvar/tangent.hpp"

#include <algorithm>

#include "bowvar/error.hpp"

namespace bowvar {

PairTable pair_table(const Bct& bct) {
  PairTable t;
  t.bct = bct;
  const int n = bct.rows;
  const int m = bct.cols;
  t.s.assign(static_cast<size_t>(n) + 1, std::vector<i64>(static_cast<size_t>(m) + 1, 0));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      t.s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          t.s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + bct.at(i - 1, j - 1);
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j0 = 1; j0 <= m; ++j0) {
      for (int j1 = j0 + 1; j1 <= m; ++j1) {
        const auto a = bct.at(i - 1, j0 - 1);
        const auto b = bct.at(i - 1, j1 - 1);
        if (a == b) continue;
        if (b) {
          t.pairs01.push_back({i, j0, j1, true});
        } else {
          t.pairs10.push_back({i, j0, j1, false});
        }
      }
    }
  }
  return t;
}

std::vector<Weight> tangent_weights(const Bct& bct) {
  const PairTable t = pair_table(bct);
  const int m = bct.cols;
  std::vector<Weight> out;
  out.reserve(2 * t.pairs01.size());
  for (const KlPair& p : t.pairs01) {
    Weight w = Weight::one(m);
    w.u[static_cast<size_t>(p.col_small - 1)] = 1;
    w.u[static_cast<size_t>(p.col_big - 1)] = -1;
    w.h = t.s[static_cast<size_t>(p.row)][static_cast<size_t>(p.col_big)] -
          t.s[static_cast<size_t>(p.row)][static_cast<size_t>(p.col_small)];
    out.push_back(w);
    out.push_back(w.symplectic_dual());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> tangent_weights_twisted(const Bct& bct, const std::vector<int>& sigma) {
  std::vector<Weight> out = tangent_weights(bct);
  for (Weight& w : out) w = apply_twist(w, sigma);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> tangent_weights_general(const BraneDiagram& d, const Bct& bct) {
  if (margins_of(bct) != charges(d)) {
    throw Error(ErrorKind::MarginMismatch,
                "table margins do not match the diagram's charges");
  }
  return tangent_weights_twisted(bct, separate(d).sigma);
}

i64 pair_count_from_margins(const Margins& margins) {
  i64 total = 0;
  for (size_t j = 0; j < margins.col.size(); ++j) {
    total = checked_add(total, checked_mul(static_cast<i64>(j), margins.col[j]));
  }
  for (const i64 r : margins.row) {
    total = checked_sub(total, checked_mul(r, r - 1) / 2);
  }
  return total;
}

std::vector<std::vector<Weight>> tangent_weights_batch(const std::vector<Bct>& points,
                                                       const std::vector<int>& sigma,
                                                       ExecutionPolicy policy) {
  std::vector<std::vector<Weight>> out(points.size());
  for_each_index(policy, points.size(), [&](std::size_t i) {
    out[i] = tangent_weights_twisted(points[i], sigma);
  });
  return out;
}

}  // namespace bowvar
