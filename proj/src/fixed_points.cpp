#include "bowvar/fixed_points.hpp"

#include <algorithm>
#include <numeric>

#include "bowvar/error.hpp"

namespace bowvar {

Margins margins_of(const Bct& b) {
  Margins m;
  m.row.assign(static_cast<size_t>(b.rows), 0);
  m.col.assign(static_cast<size_t>(b.cols), 0);
  for (int i = 0; i < b.rows; ++i) {
    for (int j = 0; j < b.cols; ++j) {
      if (b.at(i, j)) {
        ++m.row[static_cast<size_t>(i)];
        ++m.col[static_cast<size_t>(j)];
      }
    }
  }
  return m;
}

namespace {

// Gale-Ryser feasibility: with column sums sorted decreasingly, every prefix
// must be dominated by the conjugate of the row sums.
bool realizable(const std::vector<i64>& row_sums, std::vector<i64> col_sums) {
  i64 row_total = 0;
  for (i64 r : row_sums) row_total += r;
  i64 col_total = 0;
  for (i64 c : col_sums) {
    if (c < 0) return false;
    col_total += c;
  }
  if (row_total != col_total) return false;
  std::sort(col_sums.begin(), col_sums.end(), std::greater<>());
  i64 prefix = 0;
  for (size_t k = 0; k < col_sums.size(); ++k) {
    prefix += col_sums[k];
    i64 capacity = 0;
    for (i64 r : row_sums) capacity += std::min<i64>(r, static_cast<i64>(k) + 1);
    if (prefix > capacity) return false;
  }
  return true;
}

struct Enumerator {
  int n, m;
  std::vector<i64> row_target;
  std::vector<i64> col_remaining;
  Bct working;
  std::vector<Bct>* out;

  void fill_row(int i, int j, i64 still_needed) {
    if (j == m) {
      if (still_needed != 0) return;
      descend(i + 1);
      return;
    }
    // Not enough columns left to place the required 1s: dead branch.
    if (still_needed > m - j) return;
    // Trying 0 before 1 generates tables in ascending lexicographic order.
    working.set(i, j, 0);
    fill_row(i, j + 1, still_needed);
    if (still_needed > 0 && col_remaining[static_cast<size_t>(j)] > 0) {
      working.set(i, j, 1);
      --col_remaining[static_cast<size_t>(j)];
      fill_row(i, j + 1, still_needed - 1);
      ++col_remaining[static_cast<size_t>(j)];
      working.set(i, j, 0);
    }
  }

  void descend(int i) {
    if (i == n) {
      for (i64 c : col_remaining) {
        if (c != 0) return;
      }
      out->push_back(working);
      return;
    }
    // Prune whole subtrees whose remaining margins are unrealizable.
    std::vector<i64> rest(row_target.begin() + i, row_target.end());
    if (!realizable(rest, col_remaining)) return;
    fill_row(i, 0, row_target[static_cast<size_t>(i)]);
  }
};

}  // namespace

FixedPointSet enumerate_fixed_points(const Margins& margins) {
  FixedPointSet result;
  const int n = static_cast<int>(margins.row.size());
  const int m = static_cast<int>(margins.col.size());
  for (i64 r : margins.row) {
    if (r < 0 || r > m) {
      result.diagnostic = std::string(to_string(ErrorKind::NegativeMargin)) + ": row margin " +
                          std::to_string(r) + " outside [0, " + std::to_string(m) + "]";
      return result;
    }
  }
  for (i64 c : margins.col) {
    if (c < 0 || c > n) {
      result.diagnostic = std::string(to_string(ErrorKind::NegativeMargin)) + ": column margin " +
                          std::to_string(c) + " outside [0, " + std::to_string(n) + "]";
      return result;
    }
  }
  if (!realizable(margins.row, margins.col)) {
    result.diagnostic = "no binary table satisfies the requested margins";
    return result;
  }
  Enumerator e{n, m, margins.row, margins.col, Bct::zero(n, m), &result.points};
  e.descend(0);
  return result;
}

std::optional<std::size_t> locate(const std::vector<Bct>& points, const Bct& b) {
  auto it = std::lower_bound(points.begin(), points.end(), b);
  if (it == points.end() || !(*it == b)) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

TieDiagram bct_to_ties(const BraneDiagram& d, const Bct& b) {
  const Margins expected = charges(d);
  if (margins_of(b) != expected) {
    throw Error(ErrorKind::MarginMismatch, "table margins do not match the diagram's charges");
  }
  TieDiagram t;
  t.diagram = d;
  const int n = d.ns5_count();
  const int m = d.d5_count();
  for (int i = 1; i <= n; ++i) {
    const int p = d.ns5_position(i);
    for (int j = 1; j <= m; ++j) {
      const int q = d.d5_position(j);
      const bool entry = b.at(i - 1, j - 1) != 0;
      // Left of the D5 brane a tie records a 1; right of it, a 0.
      const bool tied = (p < q) ? entry : !entry;
      if (tied) t.ties.emplace_back(i, j);
    }
  }
  return t;
}

Bct ties_to_bct(const TieDiagram& t) {
  const BraneDiagram& d = t.diagram;
  const int n = d.ns5_count();
  const int m = d.d5_count();
  std::vector<std::vector<bool>> tied(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(m), false));
  for (const auto& [i, j] : t.ties) {
    if (i < 1 || i > n || j < 1 || j > m) {
      throw Error(ErrorKind::InvalidTies,
                  "tie (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
    if (tied[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]) {
      throw Error(ErrorKind::InvalidTies,
                  "duplicate tie (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    tied[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = true;
  }
  // Each interior segment must be covered by exactly its multiplicity.
  std::vector<i64> cover(static_cast<size_t>(d.total()) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int p = d.ns5_position(i);
    for (int j = 1; j <= m; ++j) {
      if (!tied[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]) continue;
      const int q = d.d5_position(j);
      for (int k = std::min(p, q); k < std::max(p, q); ++k) ++cover[static_cast<size_t>(k)];
    }
  }
  for (int k = 1; k < d.total(); ++k) {
    if (cover[static_cast<size_t>(k)] != d.mult_at(k)) {
      throw Error(ErrorKind::InvalidTies, "segment " + std::to_string(k) + " covered " +
                                              std::to_string(cover[static_cast<size_t>(k)]) +
                                              " times, multiplicity is " +
                                              std::to_string(d.mult_at(k)));
    }
  }
  Bct b = Bct::zero(n, m);
  for (int i = 1; i <= n; ++i) {
    const int p = d.ns5_position(i);
    for (int j = 1; j <= m; ++j) {
      const int q = d.d5_position(j);
      const bool is_tied = tied[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      b.set(i - 1, j - 1, ((p < q) ? is_tied : !is_tied) ? 1 : 0);
    }
  }
  return b;
}

TableWithMargins table_with_margins(const BraneDiagram& d, const Bct& b) {
  TableWithMargins out;
  out.table = b;
  out.margins = charges(d);
  for (int p = 1; p <= d.total(); ++p) {
    out.line.push_back(d.kind_at(p) == BraneKind::NS5 ? 'D' : 'R');
  }
  return out;
}

TieDiagram hw_fixed_point(const TieDiagram& t, int k) {
  const BraneDiagram& d = t.diagram;
  TieDiagram out;
  out.diagram = hw_step(d, k);  // validates the position and that the pair is of unlike kinds
  // Ordinals survive the swap because branes of equal kind never cross.
  auto ordinal_of = [&d](int position) {
    int count = 0;
    for (int p = 1; p <= position; ++p) {
      if (d.kind_at(p) == d.kind_at(position)) ++count;
    }
    return count;
  };
  const int left_ordinal = ordinal_of(k);
  const int right_ordinal = ordinal_of(k + 1);
  const bool left_is_ns5 = d.kind_at(k) == BraneKind::NS5;
  const int ns5_ordinal = left_is_ns5 ? left_ordinal : right_ordinal;
  const int d5_ordinal = left_is_ns5 ? right_ordinal : left_ordinal;
  out.ties = t.ties;
  const std::pair<int, int> toggled{ns5_ordinal, d5_ordinal};
  auto it = std::find(out.ties.begin(), out.ties.end(), toggled);
  if (it != out.ties.end()) {
    out.ties.erase(it);
  } else {
    out.ties.push_back(toggled);
    std::sort(out.ties.begin(), out.ties.end());
  }
  return out;
}

YoungTuple young_diagrams(const Bct& b) {
  YoungTuple out;
  out.columns.assign(static_cast<size_t>(b.cols), {});
  for (int j = 0; j < b.cols; ++j) {
    for (int i = 0; i < b.rows; ++i) {
      if (b.at(i, j)) out.columns[static_cast<size_t>(j)].push_back(static_cast<i64>(b.rows - i));
    }
  }
  return out;
}

std::optional<std::string> subset_label(const Bct& b) {
  if (b.cols != 2 || b.rows > 9) return std::nullopt;
  std::string label;
  for (int i = 0; i < b.rows; ++i) {
    if (b.at(i, 0) + b.at(i, 1) != 1) return std::nullopt;
    if (b.at(i, 1)) label += static_cast<char>('1' + i);
  }
  return label;
}

}  // namespace bowvar
