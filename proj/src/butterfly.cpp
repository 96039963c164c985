#include "bowvar/butterfly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bowvar/error.hpp"

namespace bowvar {

bool Butterfly::empty() const { return hi < lo; }

namespace {

Butterfly build_butterfly(const TieDiagram& t, int j) {
  const BraneDiagram& d = t.diagram;
  const int total = d.total();
  Butterfly bf;
  bf.d5_ordinal = j;
  bf.brane_position = d.d5_position(j);
  bf.count.assign(static_cast<size_t>(total) + 1, 0);
  bf.top_row.assign(static_cast<size_t>(total) + 1, 0);
  bf.top_height.assign(static_cast<size_t>(total) + 1, 0);

  const int q = bf.brane_position;
  for (const auto& [i, tj] : t.ties) {
    if (tj != j) continue;
    const int p = t.diagram.ns5_position(i);
    for (int k = std::min(p, q); k < std::max(p, q); ++k) ++bf.count[static_cast<size_t>(k)];
  }
  int lo = 0, hi = -1;
  for (int k = 0; k <= total; ++k) {
    if (bf.count[static_cast<size_t>(k)] > 0) {
      if (hi < lo) lo = k;
      hi = k;
    }
  }
  bf.lo = lo;
  bf.hi = hi;
  if (bf.empty()) return bf;

  // Tie coverage makes the nonzero columns one contiguous interval touching
  // the brane; anything else means the tie data is corrupt.
  for (int k = lo; k <= hi; ++k) {
    if (bf.count[static_cast<size_t>(k)] == 0) {
      throw std::logic_error("butterfly columns are not contiguous");
    }
  }

  // Vertical alignment of adjacent columns, driven by the brane between them.
  for (int k = lo + 1; k <= hi; ++k) {
    const i64 prev_top = bf.top_row[static_cast<size_t>(k - 1)];
    const i64 prev_count = bf.count[static_cast<size_t>(k - 1)];
    const i64 here_count = bf.count[static_cast<size_t>(k)];
    i64 top = 0;
    if (d.kind_at(k) == BraneKind::D5) {
      top = prev_top + prev_count - here_count;  // align bottoms
    } else if (k - 1 >= q) {
      top = prev_top;  // right of the brane: align tops
    } else {
      top = prev_top - 1;  // left of the brane: left column's top sits one lower
    }
    bf.top_row[static_cast<size_t>(k)] = top;
  }

  // Anchor heights.  The framing edge into the column left of the brane pins
  // its top at height 0; the framing edge out of the right column pins its
  // distinguished vertex at height 1.  When both exist they agree.
  const i64 d_minus = bf.count[static_cast<size_t>(q - 1)];
  const i64 d_plus = bf.count[static_cast<size_t>(q)];
  i64 anchor_row = 0;
  i64 anchor_height = 0;
  if (d_minus > 0) {
    anchor_row = bf.top_row[static_cast<size_t>(q - 1)];
    anchor_height = 0;
  } else {
    // d_plus > 0 here, otherwise the butterfly would be empty.
    anchor_row = bf.top_row[static_cast<size_t>(q)] + (d_plus - d_minus - 1);
    anchor_height = 1;
  }
  for (int k = lo; k <= hi; ++k) {
    bf.top_height[static_cast<size_t>(k)] =
        anchor_height + (anchor_row - bf.top_row[static_cast<size_t>(k)]);
  }
  if (d_minus > 0 && d_plus > d_minus) {
    const i64 tail_height = bf.height_at(q, static_cast<int>(d_plus - d_minus - 1));
    if (tail_height != 1) {
      throw std::logic_error("butterfly anchors disagree");
    }
  }

  // Edges.
  auto has_vertex_at_row = [&bf](int k, i64 row, int* slot) {
    if (k < bf.lo || k > bf.hi) return false;
    const i64 top = bf.top_row[static_cast<size_t>(k)];
    if (row < top || row >= top + bf.count[static_cast<size_t>(k)]) return false;
    *slot = static_cast<int>(row - top);
    return true;
  };
  for (int k = lo; k <= hi; ++k) {
    const bool next_to_d5 =
        d.kind_at(k) == BraneKind::D5 || (k + 1 <= total && d.kind_at(k + 1) == BraneKind::D5);
    if (next_to_d5) {
      for (int s = 0; s + 1 < bf.count[static_cast<size_t>(k)]; ++s) {
        bf.edges.push_back({EdgeType::Down, {k, s}, {k, s + 1}});
      }
    }
  }
  for (int k = lo + 1; k <= hi; ++k) {
    const i64 top = bf.top_row[static_cast<size_t>(k)];
    for (int s = 0; s < bf.count[static_cast<size_t>(k)]; ++s) {
      const i64 row = top + s;
      int left_slot = 0;
      if (d.kind_at(k) == BraneKind::D5) {
        if (has_vertex_at_row(k - 1, row, &left_slot)) {
          bf.edges.push_back({EdgeType::Left, {k, s}, {k - 1, left_slot}});
        }
      } else {
        if (has_vertex_at_row(k - 1, row, &left_slot)) {
          bf.edges.push_back({EdgeType::Right, {k - 1, left_slot}, {k, s}});
        }
        if (has_vertex_at_row(k - 1, row + 1, &left_slot)) {
          bf.edges.push_back({EdgeType::DownLeft, {k, s}, {k - 1, left_slot}});
        }
      }
    }
  }
  if (d_minus > 0) {
    bf.edges.push_back({EdgeType::FrameIn, {-1, 0}, {q - 1, 0}});
  }
  if (d_plus > d_minus) {
    bf.edges.push_back({EdgeType::FrameOut, {q, static_cast<int>(d_plus - d_minus - 1)}, {-1, 0}});
  }
  std::sort(bf.edges.begin(), bf.edges.end());
  return bf;
}

}  // namespace

ButterflyDiagram build_butterfly_diagram(const TieDiagram& t) {
  // Validating the ties up front (coverage, ranges) keeps the geometric code
  // free of input checking.
  (void)ties_to_bct(t);
  ButterflyDiagram bd;
  bd.source = t;
  const int m = t.diagram.d5_count();
  for (int j = 1; j <= m; ++j) {
    bd.butterflies.push_back(build_butterfly(t, j));
  }
  return bd;
}

std::vector<KClass> taut_restrictions(const ButterflyDiagram& bd) {
  const int m = bd.source.diagram.d5_count();
  const int total = bd.source.diagram.total();
  std::vector<KClass> out(static_cast<size_t>(total) + 1, KClass(m));
  for (const Butterfly& bf : bd.butterflies) {
    for (int k = bf.lo; k <= bf.hi && !bf.empty(); ++k) {
      for (int s = 0; s < bf.count[static_cast<size_t>(k)]; ++s) {
        Weight w = Weight::u_var(m, bf.d5_ordinal);
        w.h = bf.height_at(k, s);
        out[static_cast<size_t>(k)].add(w, 1);
      }
    }
  }
  return out;
}

KClass tangent_class_oracle(const ButterflyDiagram& bd) {
  const BraneDiagram& d = bd.source.diagram;
  const int m = d.d5_count();
  const std::vector<KClass> xi = taut_restrictions(bd);
  const KClass h = KClass::from_weight(Weight::h_var(m));
  const KClass one = KClass::from_weight(Weight::one(m));

  KClass tangent(m);
  for (int p = 1; p <= d.total(); ++p) {
    const KClass& left = xi[static_cast<size_t>(p - 1)];
    const KClass& right = xi[static_cast<size_t>(p)];
    if (d.kind_at(p) == BraneKind::D5) {
      int j = 0;
      for (int q = 1; q <= p; ++q) j += (d.kind_at(q) == BraneKind::D5) ? 1 : 0;
      const KClass frame = KClass::from_weight(Weight::u_var(m, j));
      // Triangle part: one-way map, two framing maps, two endomorphism twists.
      tangent = tangent.plus(hom(right, left));
      tangent = tangent.plus(h.times(hom(right, frame)));
      tangent = tangent.plus(hom(frame, left));
      tangent = tangent.plus(h.times(hom(left, left)));
      tangent = tangent.plus(h.times(hom(right, right)));
      // Moment-map directions at the D5 brane.
      tangent = tangent.minus(h.times(hom(right, left)));
    } else {
      // Two-way maps at an NS5 brane.
      tangent = tangent.plus(h.times(hom(right, left)));
      tangent = tangent.plus(hom(left, right));
    }
  }
  // Gauge directions: one copy plain and one h-twisted per segment.
  for (int k = 0; k <= d.total(); ++k) {
    const KClass& xi_k = xi[static_cast<size_t>(k)];
    tangent = tangent.minus(one.plus(h).times(hom(xi_k, xi_k)));
  }
  return tangent;
}

std::string render_ascii(const ButterflyDiagram& bd) {
  std::ostringstream out;
  for (const Butterfly& bf : bd.butterflies) {
    out << "U" << bf.d5_ordinal << " butterfly";
    if (bf.empty()) {
      out << ": empty\n";
      continue;
    }
    out << " (segments X" << bf.lo << "..X" << bf.hi << ")\n";
    i64 row_min = 0, row_max = -1;
    for (int k = bf.lo; k <= bf.hi; ++k) {
      const i64 top = bf.top_row[static_cast<size_t>(k)];
      const i64 bottom = top + bf.count[static_cast<size_t>(k)] - 1;
      if (row_max < row_min) {
        row_min = top;
        row_max = bottom;
      } else {
        row_min = std::min(row_min, top);
        row_max = std::max(row_max, bottom);
      }
    }
    constexpr int width = 5;
    auto pad = [&out](const std::string& cell) {
      out << std::string(static_cast<size_t>(width > static_cast<int>(cell.size())
                                                 ? width - static_cast<int>(cell.size())
                                                 : 1),
                         ' ')
          << cell;
    };
    for (int k = bf.lo; k <= bf.hi; ++k) pad("X" + std::to_string(k));
    out << "\n";
    for (i64 row = row_min; row <= row_max; ++row) {
      for (int k = bf.lo; k <= bf.hi; ++k) {
        const i64 top = bf.top_row[static_cast<size_t>(k)];
        if (row >= top && row < top + bf.count[static_cast<size_t>(k)]) {
          pad(std::to_string(bf.height_at(k, static_cast<int>(row - top))));
        } else {
          pad(".");
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace bowvar
